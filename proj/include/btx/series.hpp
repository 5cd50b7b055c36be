#pragma once

#include <cstddef>
#include <vector>

#include "btx/rational.hpp"

namespace btx {

/// Truncated formal power series: coefficients of z^0..z^N for a fixed
/// order N. Every operation truncates back to N, and binary operations
/// require both operands to share the same order.
class Series {
 public:
  explicit Series(std::size_t order);
  /// Pads with zeros or truncates `coeffs` to exactly order + 1 entries.
  Series(std::size_t order, std::vector<Rational> coeffs);

  /// 1/(1 - c z) truncated to the given order.
  static Series geometric(std::size_t order, const Rational& c = 1);
  /// Coefficients t^k/k! of e^{c t}.
  static Series exponential(std::size_t order, const Rational& c = 1);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  Rational& operator[](std::size_t k) { return coeffs_.at(k); }

  Series derivative() const;
  /// Antiderivative with zero constant term; the z^{N+1} term is dropped.
  Series integral() const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Rational& scalar);
  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
  friend Series operator*(Series lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Series operator*(const Rational& lhs, Series rhs) { return rhs *= lhs; }
  friend Series operator*(const Series& lhs, const Series& rhs);
  friend bool operator==(const Series& lhs, const Series& rhs) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// outer(inner(z)); requires inner[0] == 0 and equal orders.
Series compose(const Series& outer, const Series& inner);

/// Requires s[0] != 0.
Series reciprocal(const Series& s);
/// Requires s[0] == 0.
Series exp(const Series& s);
/// Requires s[0] == 1.
Series log(const Series& s);
/// s^e = exp(e log s); requires s[0] == 1.
Series pow(const Series& s, const Rational& e);

enum class AnalyticOp { reciprocal, exp, log, pow };

/// Dispatcher over the analytic operations; `exponent` is used by pow only.
Series series_analytic(const Series& s, AnalyticOp op, const Rational& exponent = 1);

}  // namespace btx
