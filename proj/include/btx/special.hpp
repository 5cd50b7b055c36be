#pragma once

#include <vector>

#include "btx/rational.hpp"

namespace btx {

Rational factorial(long n);
/// C(n, k) for integers; zero when k < 0 or k > n >= 0.
Rational binomial(long n, long k);
/// C(alpha, k) = alpha (alpha - 1) ... (alpha - k + 1) / k!; zero for k < 0.
Rational binomial(const Rational& alpha, long k);
/// Rising factorial (x)_j = x (x + 1) ... (x + j - 1).
Rational rising(const Rational& x, long j);
/// Falling factorial x (x - 1) ... (x - j + 1).
Rational falling(const Rational& x, long j);

/// Row n of the Stirling triangle of the second kind: S(n, 0..n).
std::vector<Rational> stirling2_row(long n);
/// Stirling number of the second kind; requires 0 <= k <= n.
Rational stirling2(long n, long k);
/// Single-variable Bell polynomial: sum_j S(n, j) x^j.
Rational bell_poly(long n, const Rational& x);
/// Geometric polynomial: sum_j j! S(n, j) x^j.
Rational geometric_poly(long n, const Rational& x);

/// Generalized Laguerre polynomial via sum_k (-1)^k C(n + alpha, n - k) x^k / k!.
/// Negative degree gives 0.
Rational laguerre(long n, const Rational& alpha, const Rational& x);

enum class MeixnerDefinition {
  /// (alpha)_n 2F1(-n, -x; alpha; 1 - 1/beta), evaluated without poles.
  pochhammer,
  /// 2F1(-n, -x; alpha; 1 - 1/beta); needs (alpha)_k != 0.
  hypergeometric,
};

/// Meixner polynomial M_n(x; alpha, beta); beta != 0. Negative degree gives 0.
Rational meixner(long n, const Rational& x, const Rational& alpha, const Rational& beta,
                 MeixnerDefinition definition = MeixnerDefinition::pochhammer);

/// H_n = sum_{k=1}^n 1/k.
Rational harmonic(long n);
/// H_n^{(r)}(x) = sum_{k=1}^n 1/(k + x)^r; DomainError at a pole.
Rational gen_harmonic(long n, long r, const Rational& x = 0);
/// [n]_p = 1 + p + ... + p^{n-1}.
Rational qint(long n, const Rational& p);
/// Fuss-Catalan A_m(s, n) = n/(sm + n) C(sm + n, m), with A_0(s, n) = 1 and
/// A_m(s, 0) = 0 for m >= 1.
Rational fuss_catalan(long m, long s, long n);
/// D_n(r, j) = sum_{l<j} (-1)^{j-l-1} C(n-l-1, n-j) C(n, l) / (n-l)^{r-1}.
Rational harmonic_d(long n, long r, long j);

}  // namespace btx
