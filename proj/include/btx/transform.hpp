#pragma once

#include <optional>
#include <string>
#include <vector>

#include "btx/polynomial.hpp"
#include "btx/rational.hpp"
#include "btx/sequence.hpp"

namespace btx {

/// Terms a_0, a_1, ... of a sequence, precomputed once.
using Terms = std::vector<Rational>;

/// sum_{k<=n} a_k C(n,k) (1-q)^k q^{n-k}.
Rational bernoulli_sum(const Terms& a, long n, const Rational& q);
/// S_0(q), ..., S_{count-1}(q).
std::vector<Rational> transform_row(const Terms& a, long count, const Rational& q);

enum class Provenance { direct_sum, basis_rep, gf_product, gf_composed };
std::string to_string(Provenance p);

struct TransformResult {
  long n = 0;
  Provenance provenance = Provenance::direct_sum;
  std::optional<Rational> value;
  std::optional<QPoly> poly;
};

/// S_n(q), or the conjugate S_n(1-q) summed with the roles of q and 1-q swapped.
Rational direct_transform(const SequenceSpec& spec, long n, const Rational& q, bool conjugate = false);
Rational direct_transform(const Terms& a, long n, const Rational& q, bool conjugate = false);

/// sum_j (-1)^j C(n,j) M(n,j) q^j, or with Mbar(j) for the conjugate.
QPoly basis_representation(const SequenceSpec& spec, long n, bool conjugate = false);
QPoly basis_representation(const Terms& a, long n, bool conjugate = false);
/// Basis representation from a supplied difference row (M(n,j) or Mbar(j), j = 0..n).
QPoly basis_from_differences(const std::vector<Rational>& differences);
/// (1 - q nabla)^n a_n, by applying the operator n times to the sequence.
QPoly operator_form(const Terms& a, long n);

enum class GfMode { product, composed };

/// [z^n] (1-q+qz)^n A(z), or [z^n] A((1-q)z/(1-qz))/(1-qz). `order` defaults
/// to n; an order below n is a ConfigError.
Rational gf_transform(const SequenceSpec& spec, long n, const Rational& q, GfMode mode, long order = -1);
Rational gf_transform(const Terms& a, long n, const Rational& q, GfMode mode, long order = -1);

/// The four evaluation routes for the same (spec, n, q).
std::vector<TransformResult> all_routes(const SequenceSpec& spec, long n, const Rational& q);

/// Both sides of an identity, computed independently.
struct Sides {
  Rational lhs;
  Rational rhs;
  bool equal() const { return lhs == rhs; }
};

/// sum_k S_k(x) C(n,k)(1-q)^k q^{n-k} against S_n(x+q-xq).
Sides compose_transform(const SequenceSpec& spec, long n, const Rational& x, const Rational& q);
Sides compose_transform(const Terms& a, long n, const Rational& x, const Rational& q);
/// sum_k S_k(1-x) C(n,k)(1-q)^{n-k} q^k against S_n(1-xq).
Sides compose_transform_bis(const Terms& a, long n, const Rational& x, const Rational& q);

/// (1-q)^m sum_k S_{k+m}(x) C(n,k)(1-q)^k q^{n-k} against
/// sum_j C(m,j)(-q)^{m-j} S_{j+n}(x+q-xq).
Sides shifted_transform(const SequenceSpec& spec, long n, long m, const Rational& x, const Rational& q);
Sides shifted_transform(const Terms& a, long n, long m, const Rational& x, const Rational& q);

/// [q]_m = (1 - q^m)/(1 - q); q != 1.
Rational q_bracket(const Rational& q, long m);

enum class PowerForm { shifted_argument, bracket_weights };
/// S_n(q^m) against the two expansions through [q]_m; q != 1, m >= 1.
Sides power_composition(const Terms& a, long n, long m, const Rational& q, PowerForm form);

enum class InverseForm { shifted_argument, alternating_weights };
/// a_n against sum_k S_k(-q/(1-q)) C(n,k)(1-q)^k q^{n-k}, or
/// (1-q)^{-n} sum_k S_k(q) C(n,k)(-q)^{n-k}; q != 1.
Sides inverse_composition(const Terms& a, long n, const Rational& q, InverseForm form);

enum class ScaledForm { shifted_argument, scaled_weights };
/// S_n((alpha+1)q) against its expansions through S_k(alpha q/(1-q)) or S_k(q); q != 1.
Sides scaled_composition(const Terms& a, long n, const Rational& alpha, const Rational& q, ScaledForm form);

/// S_n(1 - x_0 x_1...x_r) against sum_k S_k(1 - x_1...x_r) C(n,k)(1-x_0)^{n-k} x_0^k.
Sides chain_composition(const Terms& a, long n, const std::vector<Rational>& xs);
/// x_0^m sum_k S_{k+m}(1-P) C(n,k)(1-x_0)^{n-k} x_0^k against
/// sum_j (-1)^{m-j} C(m,j)(1-x_0)^{m-j} S_{j+n}(1 - x_0 P), P = x_1...x_r.
Sides chain_shifted(const Terms& a, long n, long m, const std::vector<Rational>& xs);

/// sum_k (-1)^k a_k C(n,k)(1-q)^k against q^n S_n(1/q); q != 0.
Sides alternating_transform(const Terms& a, long n, const Rational& q);
/// sum_k (-1)^{n-k} S_k(1-x) C(n,k)(1-q)^{n-k} against q^n S_n(1 - x/q); q != 0.
Sides alternating_transform_bis(const Terms& a, long n, const Rational& x, const Rational& q);

}  // namespace btx
