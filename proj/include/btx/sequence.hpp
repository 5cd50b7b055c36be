#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "btx/appell_family.hpp"
#include "btx/rational.hpp"
#include "btx/special.hpp"

namespace btx {

class SequenceSpec;

namespace seq {

struct UserTable {
  std::vector<Rational> terms;
};
struct Harmonic {};
/// H_n^{(r)}(x).
struct GenHarmonic {
  long r = 1;
  Rational x;
};
/// a_n = F_{n+r} with F_0 = a, F_1 = b, F_{n+2} = c F_n + F_{n+1}.
struct FiboLike {
  Rational a, b, c;
  long r = 0;
};
/// a_n = (-1)^n C(alpha, n + r).
struct BinomAlt {
  Rational alpha;
  long r = 0;
};
/// a_n = A_m(s, n).
struct FussCatalan {
  long m = 0;
  long s = 0;
};
/// a_n = [n + r]_p.
struct QInt {
  Rational p;
  long r = 0;
};
/// a_n = (-1)^n x Bell_n(x).
struct BellAlt {
  Rational x;
};
/// a_n = (-1)^n x w_n(x).
struct GeomAlt {
  Rational x;
};
enum class LaguerreMode { degree, order };
/// degree mode: a_n = L_{n+r}^{(alpha)}(x); order mode: a_n = L_r^{(alpha+n)}(x).
struct Laguerre {
  Rational alpha, x;
  LaguerreMode mode = LaguerreMode::degree;
  long r = 0;
};
/// a_n = M_{n+r}(x; alpha, beta).
struct Meixner {
  Rational x, alpha, beta;
  long r = 0;
  MeixnerDefinition definition = MeixnerDefinition::pochhammer;
};
/// a_n = lambda^n f_n(x).
struct AppellScaled {
  AppellSpec family;
  Rational lambda, x;
};
/// a_n = S_n(at) of the inner sequence.
struct TransformOf {
  std::shared_ptr<const SequenceSpec> inner;
  Rational at;
};

/// F_i for any integer i; negative indices use F_i = (F_{i+2} - F_{i+1})/c.
Rational fibolike_value(const FiboLike& f, long index);

}  // namespace seq

/// Tagged description of a sequence family. Parameter domains are checked
/// at construction (ConfigError / DomainError).
class SequenceSpec {
 public:
  using Variant = std::variant<seq::UserTable, seq::Harmonic, seq::GenHarmonic, seq::FiboLike, seq::BinomAlt,
                               seq::FussCatalan, seq::QInt, seq::BellAlt, seq::GeomAlt, seq::Laguerre,
                               seq::Meixner, seq::AppellScaled, seq::TransformOf>;

  static constexpr int max_transform_depth = 3;

  explicit SequenceSpec(Variant v);

  /// Compact grammar, e.g. "harmonic", "fibolike:a=0,b=1,c=1,r=2",
  /// "usertable:0,1,4,9", "transformof:at=1/3,inner=[harmonic]".
  static SequenceSpec parse(std::string_view text);

  const Variant& variant() const { return v_; }
  std::string family() const;
  std::string str() const;
  /// Nesting depth of TransformOf wrappers.
  int depth() const;

  Rational term(long n) const;
  /// a_0 .. a_{count-1}.
  std::vector<Rational> terms(long count) const;

 private:
  Variant v_;
};

/// M(n, 0..n) with M(n, j) = sum_l (-1)^l C(j, l) a_{n-l}.
struct DiffTable {
  long n = 0;
  std::vector<Rational> values;
};

DiffTable diff_table(const SequenceSpec& spec, long n);
/// Same, from precomputed terms a_0..a_n (at least n + 1 of them).
DiffTable diff_table(const std::vector<Rational>& a, long n);
/// M(n, j) for a single j.
Rational backward_difference(const std::vector<Rational>& a, long n, long j);

/// Mbar(j) = sum_l (-1)^l C(j, l) a_l.
Rational dual_diff(const SequenceSpec& spec, long j);
Rational dual_diff(const std::vector<Rational>& a, long j);

/// The catalog of built-in families with representative parameters.
std::vector<SequenceSpec> sequence_catalog();

}  // namespace btx
