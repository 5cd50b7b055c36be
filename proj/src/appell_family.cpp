#include "btx/appell_family.hpp"

#include "btx/error.hpp"
#include "btx/series.hpp"
#include "btx/special.hpp"
#include "btx/text.hpp"

namespace btx {

namespace {

// (e^t - 1)/t and (e^t + 1)/2 as ordinary power series in t.
Series bernoulli_base(std::size_t order) {
  Series s(order);
  for (std::size_t k = 0; k <= order; ++k) s[k] = Rational(1) / factorial(static_cast<long>(k) + 1);
  return s;
}

Series euler_base(std::size_t order) {
  Series s = Series::exponential(order);
  s[0] = Rational(2);
  return s * Rational(1, 2);
}

std::vector<Rational> egf_to_moments(const Series& s) {
  std::vector<Rational> c(s.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = s[k] * factorial(static_cast<long>(k));
  return c;
}

}  // namespace

AppellSpec::AppellSpec(Kind kind, Rational alpha, std::vector<Rational> explicit_moments, std::size_t order)
    : kind_(kind), alpha_(std::move(alpha)), explicit_(std::move(explicit_moments)), order_(order) {
  std::vector<Rational> c;
  switch (kind_) {
    case Kind::generic:
      if (explicit_.empty() || explicit_.front() != Rational(1)) {
        throw ConfigError("Appell moments must start with c_0 = 1");
      }
      c = explicit_;
      c.resize(order_ + 1);
      break;
    case Kind::bernoulli:
      c = egf_to_moments(pow(bernoulli_base(order_), -alpha_));
      break;
    case Kind::euler:
      c = egf_to_moments(pow(euler_base(order_), -alpha_));
      break;
  }
  moments_ = std::make_shared<const std::vector<Rational>>(std::move(c));
}

AppellSpec AppellSpec::generic(std::vector<Rational> c, std::size_t order) {
  return AppellSpec(Kind::generic, Rational(0), std::move(c), order);
}

AppellSpec AppellSpec::monomial(std::size_t order) { return generic({Rational(1)}, order); }

AppellSpec AppellSpec::bernoulli(const Rational& alpha, std::size_t order) {
  return AppellSpec(Kind::bernoulli, alpha, {}, order);
}

AppellSpec AppellSpec::euler(const Rational& alpha, std::size_t order) {
  return AppellSpec(Kind::euler, alpha, {}, order);
}

AppellSpec AppellSpec::parse(std::string_view text) {
  const std::string body = unbracket(text);
  const auto colon = body.find(':');
  const std::string family(trim(std::string_view(body).substr(0, colon)));
  const std::string rest = colon == std::string::npos ? std::string() : body.substr(colon + 1);
  if (family == "monomial") {
    Params p(family, rest);
    const long order = p.integer("order", default_order);
    p.finish();
    return monomial(static_cast<std::size_t>(order));
  }
  if (family == "generic") {
    std::vector<Rational> c;
    long order = default_order;
    for (const auto& piece : split_top_level(rest, ',')) {
      if (piece.rfind("order=", 0) == 0) {
        order = Rational::parse(piece.substr(6)).to_long();
      } else if (!piece.empty()) {
        c.push_back(Rational::parse(piece));
      }
    }
    return generic(std::move(c), static_cast<std::size_t>(order));
  }
  if (family == "bernoulli" || family == "euler") {
    Params p(family, rest);
    const Rational alpha = p.rational("a", Rational(1));
    const long order = p.integer("order", default_order);
    p.finish();
    if (order < 0) throw ConfigError("Appell order bound must be nonnegative");
    return family == "bernoulli" ? bernoulli(alpha, order) : euler(alpha, order);
  }
  throw ConfigError("unknown Appell family '" + family + "'");
}

std::string AppellSpec::str() const {
  std::string out;
  switch (kind_) {
    case Kind::generic: {
      if (explicit_.size() == 1) {
        out = "monomial";
        break;
      }
      out = "generic:";
      for (std::size_t i = 0; i < explicit_.size(); ++i) out += (i ? "," : "") + explicit_[i].str();
      break;
    }
    case Kind::bernoulli: out = "bernoulli:a=" + alpha_.str(); break;
    case Kind::euler: out = "euler:a=" + alpha_.str(); break;
  }
  if (order_ != default_order) out += (out.find(':') == std::string::npos ? ":" : ",") + std::string("order=") + std::to_string(order_);
  return out;
}

const Rational& AppellSpec::moment(std::size_t n) const {
  if (n > order_) {
    throw ConfigError("Appell index " + std::to_string(n) + " exceeds order bound " + std::to_string(order_));
  }
  return (*moments_)[n];
}

AppellSpec AppellSpec::with_alpha(const Rational& alpha) const {
  if (kind_ == Kind::generic) throw ConfigError("generic Appell families have no order parameter");
  return AppellSpec(kind_, alpha, {}, order_);
}

YPoly appell_poly(const AppellSpec& spec, std::size_t n) {
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    coeffs[k] = binomial(static_cast<long>(n), static_cast<long>(k)) * spec.moment(n - k);
  }
  return YPoly(std::move(coeffs));
}

Rational appell_value(const AppellSpec& spec, std::size_t n, const Rational& y) {
  Rational sum;
  for (std::size_t k = n + 1; k-- > 0;) {
    sum = sum * y + binomial(static_cast<long>(n), static_cast<long>(k)) * spec.moment(n - k);
  }
  return sum;
}

}  // namespace btx
