#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "btx/rational.hpp"
#include "btx/sequence.hpp"
#include "btx/transform.hpp"

namespace btx {

/// Exact law on {0, ..., n}: nonnegative masses summing to exactly 1.
class FinitePMF {
 public:
  explicit FinitePMF(std::vector<Rational> masses);

  long max_value() const { return static_cast<long>(p_.size()) - 1; }
  const std::vector<Rational>& masses() const { return p_; }
  const Rational& operator[](long k) const { return p_.at(static_cast<std::size_t>(k)); }
  friend bool operator==(const FinitePMF&, const FinitePMF&) = default;

 private:
  std::vector<Rational> p_;
};

/// Binomial(n, success); success in [0, 1].
FinitePMF binomial_pmf(long n, const Rational& success);
/// Law of T(J): J drawn from `inner`, T(j) ~ Binomial(j, outer_success).
FinitePMF compose_pmf(const Rational& outer_success, const FinitePMF& inner);
/// Law of m + J.
FinitePMF shift_pmf(const FinitePMF& law, long m);

/// E f(J) = sum_k f(k) P(J = k); `f` must cover the support.
Rational expect(const Terms& f, const FinitePMF& law);
Rational expect(const SequenceSpec& f, const FinitePMF& law);

enum class ExpectationIdentity { m2, o2, p2 };
std::string to_string(ExpectationIdentity which);

struct ExpectationCheck {
  /// (1-x)^m E f(T(m + Z(n))) against sum_j C(m,j)(-x)^{m-j} E f(T(Z(j+n))).
  Sides sides;
  /// The shifted transform with q = x and inner argument y, for the same f.
  Sides bridge;
  bool consistent() const { return sides.equal() && bridge.equal() && sides.lhs == bridge.lhs && sides.rhs == bridge.rhs; }
};

/// Z(n) ~ Binomial(n, 1-x), T(j) ~ Binomial(j, 1-y). o2 forces y = 0 and p2
/// forces n = y = 0. Requires x, y in [0, 1].
ExpectationCheck verify_expectation_identity(const SequenceSpec& f, long m, long n, const Rational& x,
                                             const Rational& y, ExpectationIdentity which);

struct MonteCarloReport {
  long n = 0;
  Rational x;
  Rational y;
  long trials = 0;
  std::uint64_t seed = 0;
  int shards = 1;
  std::vector<long> counts;
  FinitePMF exact{std::vector<Rational>{Rational(1)}};
  /// Bins whose empirical frequency is more than 5 standard errors from the exact mass.
  std::vector<long> flagged;
  double max_deviation_in_se = 0;
};

/// Simulates W(n) = T(Z(n)) by Bernoulli draws. Shard s uses seed + s;
/// counts are summed. Advisory only.
MonteCarloReport monte_carlo_check(long n, const Rational& x, const Rational& y, long trials, std::uint64_t seed,
                                   int shards = 1);

}  // namespace btx
