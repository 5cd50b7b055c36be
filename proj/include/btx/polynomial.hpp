#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "btx/rational.hpp"

namespace btx {

/// Dense univariate polynomial over the rationals; index j holds the
/// coefficient of the j-th power. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(std::size_t degree, const Rational& c = 1);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t power) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational leading() const;

  Rational operator()(const Rational& at) const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Polynomials in the transform parameter q.
using QPoly = Polynomial;
/// Polynomials in the Appell variable y.
using YPoly = Polynomial;

}  // namespace btx
