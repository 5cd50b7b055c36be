#include "btx/series.hpp"

#include <string>

#include "btx/error.hpp"

namespace btx {

namespace {

void require_same_order(const Series& a, const Series& b) {
  if (a.order() != b.order()) {
    throw DomainError("series orders differ: " + std::to_string(a.order()) + " vs " +
                      std::to_string(b.order()));
  }
}

}  // namespace

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

Series Series::geometric(std::size_t order, const Rational& c) {
  Series s(order);
  Rational p = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    s.coeffs_[k] = p;
    p *= c;
  }
  return s;
}

Series Series::exponential(std::size_t order, const Rational& c) {
  Series s(order);
  Rational term = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    s.coeffs_[k] = term;
    term *= c / Rational(static_cast<long>(k + 1));
  }
  return s;
}

Series Series::derivative() const {
  Series d(order());
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.coeffs_[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return d;
}

Series Series::integral() const {
  Series s(order());
  for (std::size_t k = 1; k < coeffs_.size(); ++k) s.coeffs_[k] = coeffs_[k - 1] / Rational(static_cast<long>(k));
  return s;
}

Series& Series::operator+=(const Series& other) {
  require_same_order(*this, other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

Series& Series::operator-=(const Series& other) {
  require_same_order(*this, other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

Series& Series::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Series operator*(const Series& lhs, const Series& rhs) {
  require_same_order(lhs, rhs);
  const std::size_t n = lhs.order();
  Series out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return out;
}

Series compose(const Series& outer, const Series& inner) {
  require_same_order(outer, inner);
  if (!inner[0].is_zero()) throw DomainError("series composition needs an inner series without constant term");
  const std::size_t n = outer.order();
  // Horner in the inner series.
  Series acc(n);
  for (std::size_t k = n + 1; k-- > 0;) {
    acc = acc * inner;
    acc[0] += outer[k];
  }
  return acc;
}

Series reciprocal(const Series& s) {
  if (s[0].is_zero()) throw DomainError("series reciprocal needs a nonzero constant term");
  const std::size_t n = s.order();
  Series r(n);
  const Rational inv0 = Rational(1) / s[0];
  r[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k; ++i) acc += s[i] * r[k - i];
    r[k] = -acc * inv0;
  }
  return r;
}

Series exp(const Series& s) {
  if (!s[0].is_zero()) throw DomainError("series exp needs a zero constant term");
  const std::size_t n = s.order();
  // E' = s' E, so k E_k = sum_i i s_i E_{k-i}.
  Series e(n);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k; ++i) acc += Rational(static_cast<long>(i)) * s[i] * e[k - i];
    e[k] = acc / Rational(static_cast<long>(k));
  }
  return e;
}

Series log(const Series& s) {
  if (s[0] != Rational(1)) throw DomainError("series log needs constant term 1");
  return (s.derivative() * reciprocal(s)).integral();
}

Series pow(const Series& s, const Rational& e) {
  if (s[0] != Rational(1)) throw DomainError("series power needs constant term 1");
  return exp(log(s) * e);
}

Series series_analytic(const Series& s, AnalyticOp op, const Rational& exponent) {
  switch (op) {
    case AnalyticOp::reciprocal:
      if (s[0] != Rational(1)) throw DomainError("series reciprocal needs constant term 1");
      return reciprocal(s);
    case AnalyticOp::exp:
      return exp(s);
    case AnalyticOp::log:
      return log(s);
    case AnalyticOp::pow:
      return pow(s, exponent);
  }
  throw DomainError("unknown analytic operation");
}

}  // namespace btx
