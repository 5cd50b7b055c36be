#include "btx/special.hpp"

#include "btx/error.hpp"

namespace btx {

Rational factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  if (n >= 0) {
    if (k > n) return Rational(0);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(c));
  }
  return binomial(Rational(n), k);
}

Rational binomial(const Rational& alpha, long k) {
  if (k < 0) return Rational(0);
  return falling(alpha, k) / factorial(k);
}

Rational rising(const Rational& x, long j) {
  if (j < 0) throw DomainError("rising factorial with negative length");
  Rational r(1);
  for (long i = 0; i < j; ++i) r *= x + Rational(i);
  return r;
}

Rational falling(const Rational& x, long j) {
  if (j < 0) throw DomainError("falling factorial with negative length");
  Rational r(1);
  for (long i = 0; i < j; ++i) r *= x - Rational(i);
  return r;
}

std::vector<Rational> stirling2_row(long n) {
  if (n < 0) throw DomainError("Stirling row of a negative index");
  std::vector<Rational> row{Rational(1)};
  for (long i = 1; i <= n; ++i) {
    std::vector<Rational> next(static_cast<std::size_t>(i) + 1, Rational(0));
    for (long k = 1; k <= i; ++k) {
      Rational v = row.size() > static_cast<std::size_t>(k - 1) ? row[k - 1] : Rational(0);
      if (static_cast<std::size_t>(k) < row.size()) v += Rational(k) * row[k];
      next[k] = std::move(v);
    }
    row = std::move(next);
  }
  return row;
}

Rational stirling2(long n, long k) {
  if (k < 0 || k > n) throw DomainError("Stirling2 needs 0 <= k <= n");
  return stirling2_row(n)[k];
}

Rational bell_poly(long n, const Rational& x) {
  const auto row = stirling2_row(n);
  Rational sum;
  for (long j = n; j >= 0; --j) sum = sum * x + row[j];
  return sum;
}

Rational geometric_poly(long n, const Rational& x) {
  const auto row = stirling2_row(n);
  Rational sum;
  for (long j = n; j >= 0; --j) sum = sum * x + factorial(j) * row[j];
  return sum;
}

Rational laguerre(long n, const Rational& alpha, const Rational& x) {
  if (n < 0) return Rational(0);
  Rational sum;
  Rational xpow(1);
  for (long k = 0; k <= n; ++k) {
    sum += sign_power(k) * binomial(Rational(n) + alpha, n - k) * xpow / factorial(k);
    xpow *= x;
  }
  return sum;
}

Rational meixner(long n, const Rational& x, const Rational& alpha, const Rational& beta,
                 MeixnerDefinition definition) {
  if (beta.is_zero()) throw DomainError("Meixner beta must be nonzero");
  if (n < 0) return Rational(0);
  const Rational z = Rational(1) - Rational(1) / beta;
  Rational sum;
  Rational zpow(1);
  for (long k = 0; k <= n; ++k) {
    Rational term = rising(Rational(-n), k) * rising(-x, k) * zpow / factorial(k);
    if (definition == MeixnerDefinition::pochhammer) {
      term *= rising(alpha + Rational(k), n - k);
    } else {
      const Rational den = rising(alpha, k);
      if (den.is_zero()) throw DomainError("Meixner hypergeometric form has a vanishing (alpha)_k");
      term /= den;
    }
    sum += term;
    zpow *= z;
  }
  return sum;
}

Rational harmonic(long n) { return gen_harmonic(n, 1); }

Rational gen_harmonic(long n, long r, const Rational& x) {
  if (r < 1) throw DomainError("generalized harmonic order must be positive");
  Rational sum;
  for (long k = 1; k <= n; ++k) {
    const Rational base = Rational(k) + x;
    if (base.is_zero()) throw DomainError("generalized harmonic pole at x = " + x.str());
    sum += Rational(1) / base.pow(r);
  }
  return sum;
}

Rational qint(long n, const Rational& p) {
  Rational sum;
  Rational ppow(1);
  for (long i = 0; i < n; ++i) {
    sum += ppow;
    ppow *= p;
  }
  return sum;
}

Rational fuss_catalan(long m, long s, long n) {
  if (m < 0 || s < 0 || n < 0) throw DomainError("Fuss-Catalan needs nonnegative m, s, n");
  if (m == 0) return Rational(1);
  if (n == 0) return Rational(0);
  return Rational(n, s * m + n) * binomial(s * m + n, m);
}

Rational harmonic_d(long n, long r, long j) {
  Rational sum;
  for (long l = 0; l < j; ++l) {
    sum += sign_power(j - l - 1) * binomial(n - l - 1, n - j) * binomial(n, l) /
           Rational(n - l).pow(r - 1);
  }
  return sum;
}

}  // namespace btx
