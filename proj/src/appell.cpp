#include "btx/appell.hpp"

#include "btx/error.hpp"
#include "btx/series.hpp"
#include "btx/special.hpp"

namespace btx {

namespace {

Rational f(const AppellSpec& spec, long n, const Rational& y) {
  if (n < 0) throw DomainError("Appell index must be nonnegative");
  return appell_value(spec, static_cast<std::size_t>(n), y);
}

const seq::FiboLike& need_fibolike(const SequenceSpec& s) {
  if (const auto* v = std::get_if<seq::FiboLike>(&s.variant())) return *v;
  throw ConfigError("this identity needs a fibolike sequence, got " + s.family());
}

const seq::BinomAlt& need_binomalt(const SequenceSpec& s) {
  if (const auto* v = std::get_if<seq::BinomAlt>(&s.variant())) return *v;
  throw ConfigError("this identity needs a binomalt sequence, got " + s.family());
}

}  // namespace

Sides operator_identity(const AppellSpec& spec, long n, const Rational& q, const Rational& y) {
  Rational lhs;
  for (long k = 0; k <= n; ++k) {
    lhs += binomial(n, k) * factorial(n) / factorial(k) * f(spec, k, y) * (Rational(1) - q).pow(k) * q.pow(n - k);
  }
  YPoly p = appell_poly(spec, static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) p = (Rational(1) - q) * p + q * p.derivative();
  return {lhs, p(y)};
}

Sides scaled_transform_identity(const AppellSpec& spec, long n, const Rational& lambda, const Rational& x,
                                const Rational& q) {
  if (lambda.is_zero()) throw DomainError("lambda must be nonzero");
  if (q.is_zero()) throw DomainError("q must be nonzero");
  Rational lhs;
  for (long k = 0; k <= n; ++k) {
    lhs += f(spec, n - k, x) * binomial(n, k) * (Rational(1) - q).pow(k) * (lambda * q).pow(n - k);
  }
  const Rational shift = x - Rational(1) / lambda + Rational(1) / (lambda * q);
  return {lhs, (lambda * q).pow(n) * f(spec, n, shift)};
}

std::string to_string(Umbral which) {
  switch (which) {
    case Umbral::u: return "u";
    case Umbral::ubis: return "ubis";
    case Umbral::v: return "v";
    case Umbral::o1: return "o1";
    case Umbral::w: return "w";
    case Umbral::wbis: return "wbis";
    case Umbral::s2: return "s2";
    case Umbral::f: return "f";
    case Umbral::fbis: return "fbis";
  }
  return "?";
}

Umbral parse_umbral(const std::string& name) {
  for (Umbral u : {Umbral::u, Umbral::ubis, Umbral::v, Umbral::o1, Umbral::w, Umbral::wbis, Umbral::s2, Umbral::f,
                   Umbral::fbis}) {
    if (to_string(u) == name) return u;
  }
  throw ConfigError("unknown umbral identity '" + name + "'");
}

Sides umbral_identity(const AppellSpec& spec, const SequenceSpec& seq, long n, const Rational& x,
                      const Rational& y, Umbral which, const Rational& b) {
  if (n < 0) throw DomainError("index must be nonnegative");
  const Rational xy = x + y;
  Rational lhs;
  Rational rhs;
  switch (which) {
    case Umbral::f:
    case Umbral::fbis:
    case Umbral::u:
    case Umbral::ubis: {
      const Terms a = seq.terms(n + 1);
      const bool appell = which == Umbral::u || which == Umbral::ubis;
      const bool dual = which == Umbral::fbis || which == Umbral::ubis;
      for (long k = 0; k <= n; ++k) {
        const Rational weight = a[k] * binomial(n, k);
        if (!dual) {
          lhs += weight * (appell ? f(spec, k, y) : y.pow(k)) * x.pow(n - k);
        } else {
          lhs += weight * (appell ? f(spec, n - k, y) : y.pow(n - k)) * x.pow(k);
        }
      }
      for (long j = 0; j <= n; ++j) {
        const Rational diff = dual ? dual_diff(a, j) : backward_difference(a, n, j);
        const Rational tail = appell ? f(spec, n - j, xy) : xy.pow(n - j);
        rhs += sign_power(j) * binomial(n, j) * diff * tail * x.pow(j);
      }
      break;
    }
    case Umbral::v: {
      const auto& fib = need_fibolike(seq);
      for (long k = 0; k <= n; ++k) {
        lhs += binomial(n, k) * seq::fibolike_value(fib, k + fib.r) * f(spec, k, y) * x.pow(n - k);
      }
      for (long j = 0; j <= n; ++j) {
        rhs += sign_power(j) * binomial(n, j) * fib.c.pow(j) * seq::fibolike_value(fib, n + fib.r - 2 * j) *
               f(spec, n - j, xy) * x.pow(j);
      }
      break;
    }
    case Umbral::o1: {
      const auto& fib = need_fibolike(seq);
      for (long k = 0; k <= n; ++k) {
        lhs += binomial(n, k) * seq::fibolike_value(fib, n + k) * f(spec, k, y) * x.pow(n - k);
      }
      for (long j = 0; j <= n; ++j) {
        rhs += sign_power(n - j) * binomial(n, j) * fib.c.pow(n - j) * seq::fibolike_value(fib, 2 * j) *
               f(spec, j, xy) * x.pow(n - j);
      }
      break;
    }
    case Umbral::w: {
      const auto& ba = need_binomalt(seq);
      for (long k = 0; k <= n; ++k) {
        lhs += sign_power(k) * binomial(ba.alpha, ba.r + k) * binomial(n, k) * f(spec, k, y) * x.pow(n - k);
      }
      for (long j = 0; j <= n; ++j) {
        rhs += sign_power(n - j) * binomial(n, j) * binomial(Rational(j) + ba.alpha, n + ba.r) *
               f(spec, n - j, xy) * x.pow(j);
      }
      break;
    }
    case Umbral::wbis: {
      const auto& ba = need_binomalt(seq);
      for (long k = 0; k <= n; ++k) {
        lhs += sign_power(k) * binomial(ba.alpha, ba.r + k) * binomial(n, k) * f(spec, n - k, y) * x.pow(k);
      }
      for (long j = 0; j <= n; ++j) {
        rhs += sign_power(j) * binomial(n, j) * binomial(Rational(j) + ba.alpha, j + ba.r) * f(spec, n - j, xy) *
               x.pow(j);
      }
      break;
    }
    case Umbral::s2: {
      const Terms a = seq.terms(n + 1);
      const Rational shifted = y + (Rational(1) - b) * x;
      for (long k = 0; k <= n; ++k) lhs += a[k] * binomial(n, k) * (b * x).pow(k) * f(spec, n - k, shifted);
      const auto row = transform_row(a, n + 1, Rational(1) - b);
      for (long k = 0; k <= n; ++k) rhs += row[k] * binomial(n, k) * x.pow(k) * f(spec, n - k, y);
      break;
    }
  }
  return {lhs, rhs};
}

Rational appell_value_from_series(const AppellSpec& spec, long n, const Rational& y) {
  if (n < 0) throw DomainError("Appell index must be nonnegative");
  const auto N = static_cast<std::size_t>(n);
  Series F(N);
  for (std::size_t k = 0; k <= N; ++k) F[k] = spec.moment(k) / factorial(static_cast<long>(k));
  return (F * Series::exponential(N, y))[N] * factorial(n);
}

std::vector<Rational> power_recurrence_moments(const AppellSpec& spec, std::size_t order) {
  std::vector<Rational> H(order + 1);
  switch (spec.kind()) {
    case AppellSpec::Kind::bernoulli:
      for (std::size_t k = 0; k <= order; ++k) H[k] = Rational(1) / factorial(static_cast<long>(k) + 1);
      break;
    case AppellSpec::Kind::euler:
      H[0] = Rational(1);
      for (std::size_t k = 1; k <= order; ++k) H[k] = Rational(1, 2) / factorial(static_cast<long>(k));
      break;
    case AppellSpec::Kind::generic:
      throw ConfigError("power recurrence applies to Bernoulli and Euler families only");
  }
  const Rational e = -spec.alpha();
  std::vector<Rational> G(order + 1);
  G[0] = Rational(1);
  for (std::size_t k = 1; k <= order; ++k) {
    Rational sum;
    for (std::size_t i = 1; i <= k; ++i) {
      sum += ((e + Rational(1)) * Rational(static_cast<long>(i)) - Rational(static_cast<long>(k))) * H[i] * G[k - i];
    }
    G[k] = sum / Rational(static_cast<long>(k));
  }
  for (std::size_t k = 0; k <= order; ++k) G[k] *= factorial(static_cast<long>(k));
  return G;
}

Sides order_step_identity(const AppellSpec& spec, long n, const Rational& y) {
  const AppellSpec lower = spec.with_alpha(spec.alpha() - Rational(1));
  if (spec.kind() == AppellSpec::Kind::bernoulli) {
    if (n < 1) throw DomainError("the Bernoulli step identity needs n >= 1");
    return {f(spec, n, y + Rational(1)) - f(spec, n, y), Rational(n) * f(lower, n - 1, y)};
  }
  return {f(spec, n, y + Rational(1)) + f(spec, n, y), Rational(2) * f(lower, n, y)};
}

}  // namespace btx
