#pragma once

#include <string>
#include <vector>

#include "btx/appell_family.hpp"
#include "btx/sequence.hpp"
#include "btx/transform.hpp"

namespace btx {

/// Weighted sum sum_k C(n,k)(n!/k!) f_k(y)(1-q)^k q^{n-k} against the operator
/// (1 - q + qD)^n applied to f_n, evaluated at y.
Sides operator_identity(const AppellSpec& spec, long n, const Rational& q, const Rational& y);

/// sum_k f_{n-k}(x) C(n,k)(1-q)^k (lambda q)^{n-k} against
/// (lambda q)^n f_n(x - 1/lambda + 1/(lambda q)); lambda, q != 0.
Sides scaled_transform_identity(const AppellSpec& spec, long n, const Rational& lambda, const Rational& x,
                                const Rational& q);

enum class Umbral { u, ubis, v, o1, w, wbis, s2, f, fbis };
std::string to_string(Umbral which);
/// Throws ConfigError on an unknown name.
Umbral parse_umbral(const std::string& name);

/// Both sides of an umbral identity. `seq` supplies a_k; v and o1 need a
/// fibolike sequence, w and wbis a binomalt one. `b` is used by s2 only.
/// f and fbis ignore the Appell family.
Sides umbral_identity(const AppellSpec& spec, const SequenceSpec& seq, long n, const Rational& x,
                      const Rational& y, Umbral which, const Rational& b = 1);

/// n! [t^n] F(t) e^{yt} by series multiplication.
Rational appell_value_from_series(const AppellSpec& spec, long n, const Rational& y);

/// Moments c_0..c_order of a Bernoulli or Euler family by the power
/// recurrence G_k = (1/k) sum_{i=1}^k ((e+1)i - k) H_i G_{k-i} for G = H^e,
/// independent of the exp/log route.
std::vector<Rational> power_recurrence_moments(const AppellSpec& spec, std::size_t order);

/// f_n(y+1) - f_n(y) = n f_{n-1}^{(alpha-1)}(y) for Bernoulli families, and
/// f_n(y+1) + f_n(y) = 2 f_n^{(alpha-1)}(y) for Euler families.
Sides order_step_identity(const AppellSpec& spec, long n, const Rational& y);

}  // namespace btx
