#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "btx/polynomial.hpp"
#include "btx/rational.hpp"

namespace btx {

/// An Appell family f_n(y) = n! [t^n] F(t) e^{yt}, described by the moments
/// c_n = n! [t^n] F(t) with c_0 = 1. Moments are computed once, up to the
/// order bound, and shared between copies.
class AppellSpec {
 public:
  enum class Kind { generic, bernoulli, euler };

  static constexpr std::size_t default_order = 32;

  /// Generic family from explicit moments; c[0] must be 1, missing moments are 0.
  static AppellSpec generic(std::vector<Rational> c, std::size_t order = default_order);
  /// F(t) = 1, f_n(y) = y^n.
  static AppellSpec monomial(std::size_t order = default_order);
  /// F(t) = (t/(e^t - 1))^alpha.
  static AppellSpec bernoulli(const Rational& alpha, std::size_t order = default_order);
  /// F(t) = (2/(e^t + 1))^alpha.
  static AppellSpec euler(const Rational& alpha, std::size_t order = default_order);

  /// "monomial", "generic:1,0,1/3", "bernoulli:a=2", "euler:a=1/2,order=40".
  static AppellSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  const Rational& alpha() const { return alpha_; }
  std::size_t order() const { return order_; }
  std::string str() const;

  /// c_n; throws ConfigError past the order bound.
  const Rational& moment(std::size_t n) const;
  const std::vector<Rational>& moments() const { return *moments_; }

  /// The same family with order alpha + delta (Bernoulli and Euler only).
  AppellSpec with_alpha(const Rational& alpha) const;

 private:
  AppellSpec(Kind kind, Rational alpha, std::vector<Rational> explicit_moments, std::size_t order);

  Kind kind_;
  Rational alpha_;
  std::vector<Rational> explicit_;
  std::size_t order_;
  std::shared_ptr<const std::vector<Rational>> moments_;
};

/// f_n(y) = sum_k C(n, k) c_{n-k} y^k.
YPoly appell_poly(const AppellSpec& spec, std::size_t n);
/// f_n evaluated at y.
Rational appell_value(const AppellSpec& spec, std::size_t n, const Rational& y);

}  // namespace btx
