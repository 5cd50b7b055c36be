#include "btx/probability.hpp"

#include <cmath>
#include <random>

#include "btx/error.hpp"
#include "btx/special.hpp"

namespace btx {

namespace {

void require_unit(const Rational& v, const char* what) {
  if (v.sign() < 0 || v > Rational(1)) throw DomainError(std::string(what) + " must lie in [0, 1], got " + v.str());
}

}  // namespace

FinitePMF::FinitePMF(std::vector<Rational> masses) : p_(std::move(masses)) {
  if (p_.empty()) throw DomainError("a law needs at least one mass");
  Rational total;
  for (const auto& m : p_) {
    if (m.sign() < 0) throw DomainError("negative probability mass " + m.str());
    total += m;
  }
  if (total != Rational(1)) throw DomainError("probability masses sum to " + total.str());
}

FinitePMF binomial_pmf(long n, const Rational& success) {
  if (n < 0) throw DomainError("binomial law needs n >= 0");
  require_unit(success, "success probability");
  std::vector<Rational> p(static_cast<std::size_t>(n) + 1);
  const Rational fail = Rational(1) - success;
  for (long k = 0; k <= n; ++k) p[k] = binomial(n, k) * success.pow(k) * fail.pow(n - k);
  return FinitePMF(std::move(p));
}

FinitePMF compose_pmf(const Rational& outer_success, const FinitePMF& inner) {
  require_unit(outer_success, "outer success probability");
  const long n = inner.max_value();
  std::vector<Rational> p(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j) {
    if (inner[j].is_zero()) continue;
    const FinitePMF t = binomial_pmf(j, outer_success);
    for (long k = 0; k <= j; ++k) p[k] += t[k] * inner[j];
  }
  return FinitePMF(std::move(p));
}

FinitePMF shift_pmf(const FinitePMF& law, long m) {
  if (m < 0) throw DomainError("shift must be nonnegative");
  std::vector<Rational> p(static_cast<std::size_t>(m), Rational(0));
  p.insert(p.end(), law.masses().begin(), law.masses().end());
  return FinitePMF(std::move(p));
}

Rational expect(const Terms& f, const FinitePMF& law) {
  if (static_cast<long>(f.size()) <= law.max_value()) throw DomainError("function does not cover the support");
  Rational sum;
  for (long k = 0; k <= law.max_value(); ++k) sum += f[k] * law[k];
  return sum;
}

Rational expect(const SequenceSpec& f, const FinitePMF& law) { return expect(f.terms(law.max_value() + 1), law); }

std::string to_string(ExpectationIdentity which) {
  switch (which) {
    case ExpectationIdentity::m2: return "m2";
    case ExpectationIdentity::o2: return "o2";
    case ExpectationIdentity::p2: return "p2";
  }
  return "?";
}

ExpectationCheck verify_expectation_identity(const SequenceSpec& f, long m, long n, const Rational& x,
                                             const Rational& y, ExpectationIdentity which) {
  if (m < 0 || n < 0) throw DomainError("m and n must be nonnegative");
  require_unit(x, "x");
  require_unit(y, "y");
  const Rational yy = which == ExpectationIdentity::m2 ? y : Rational(0);
  const long nn = which == ExpectationIdentity::p2 ? 0 : n;
  const Terms a = f.terms(m + nn + 1);

  const FinitePMF inner = shift_pmf(binomial_pmf(nn, Rational(1) - x), m);
  const Rational lhs = (Rational(1) - x).pow(m) * expect(a, compose_pmf(Rational(1) - yy, inner));
  Rational rhs;
  for (long j = 0; j <= m; ++j) {
    const FinitePMF w = compose_pmf(Rational(1) - yy, binomial_pmf(j + nn, Rational(1) - x));
    rhs += binomial(m, j) * (-x).pow(m - j) * expect(a, w);
  }
  return {{lhs, rhs}, shifted_transform(a, nn, m, yy, x)};
}

MonteCarloReport monte_carlo_check(long n, const Rational& x, const Rational& y, long trials, std::uint64_t seed,
                                   int shards) {
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (shards < 1) throw ConfigError("shards must be at least 1");
  require_unit(x, "x");
  require_unit(y, "y");
  MonteCarloReport r;
  r.n = n;
  r.x = x;
  r.y = y;
  r.trials = trials;
  r.seed = seed;
  r.shards = shards;
  r.exact = compose_pmf(Rational(1) - y, binomial_pmf(n, Rational(1) - x));
  r.counts.assign(static_cast<std::size_t>(n) + 1, 0);

  const double px = (Rational(1) - x).to_double();
  const double py = (Rational(1) - y).to_double();
  for (int s = 0; s < shards; ++s) {
    const long share = trials / shards + (s < trials % shards ? 1 : 0);
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(s));
    std::bernoulli_distribution draw_x(px);
    std::bernoulli_distribution draw_y(py);
    for (long t = 0; t < share; ++t) {
      long z = 0;
      for (long i = 0; i < n; ++i) z += draw_x(rng) ? 1 : 0;
      long w = 0;
      for (long i = 0; i < z; ++i) w += draw_y(rng) ? 1 : 0;
      ++r.counts[static_cast<std::size_t>(w)];
    }
  }

  for (long k = 0; k <= n; ++k) {
    const double p = r.exact[k].to_double();
    const double freq = static_cast<double>(r.counts[k]) / static_cast<double>(trials);
    const double se = std::sqrt(p * (1 - p) / static_cast<double>(trials));
    const double dev = std::fabs(freq - p);
    if (se == 0) {
      if (dev > 0) r.flagged.push_back(k);
      continue;
    }
    r.max_deviation_in_se = std::max(r.max_deviation_in_se, dev / se);
    if (dev > 5 * se) r.flagged.push_back(k);
  }
  return r;
}

}  // namespace btx
