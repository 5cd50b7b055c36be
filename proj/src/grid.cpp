#include "btx/grid.hpp"

#include <algorithm>
#include <numeric>

#include "btx/error.hpp"

namespace btx {

const Rational& Point::operator[](std::string_view name) const {
  for (const auto& [key, value] : values_) {
    if (key == name) return value;
  }
  throw ConfigError("grid point has no variable '" + std::string(name) + "'");
}

std::string Point::str() const {
  std::string out;
  for (const auto& [key, value] : values_) {
    if (!out.empty()) out += ", ";
    out += key + "=" + value.str();
  }
  return out;
}

GridSpec::GridSpec(std::vector<GridVariable> variables) : variables_(std::move(variables)) {
  for (const auto& v : variables_) {
    if (v.degree_bound < 0) throw ConfigError("negative degree bound for '" + v.name + "'");
    if (v.points.size() < static_cast<std::size_t>(v.degree_bound) + 1) {
      throw ConfigError("variable '" + v.name + "' has " + std::to_string(v.points.size()) +
                        " points, degree bound " + std::to_string(v.degree_bound) + " needs " +
                        std::to_string(v.degree_bound + 1));
    }
    for (std::size_t i = 0; i < v.points.size(); ++i) {
      for (std::size_t j = i + 1; j < v.points.size(); ++j) {
        if (v.points[i] == v.points[j]) {
          throw ConfigError("variable '" + v.name + "' repeats point " + v.points[i].str());
        }
      }
      if (std::find(v.excluded.begin(), v.excluded.end(), v.points[i]) != v.excluded.end()) {
        throw ConfigError("variable '" + v.name + "' samples excluded value " + v.points[i].str());
      }
    }
  }
}

std::size_t GridSpec::size() const {
  std::size_t n = 1;
  for (const auto& v : variables_) n *= v.points.size();
  return n;
}

void GridSpec::for_each(const std::function<bool(const Point&)>& visit) const {
  std::vector<std::size_t> idx(variables_.size(), 0);
  std::vector<std::pair<std::string, Rational>> values;
  values.reserve(variables_.size());
  for (const auto& v : variables_) values.emplace_back(v.name, v.points.front());
  while (true) {
    for (std::size_t i = 0; i < variables_.size(); ++i) values[i].second = variables_[i].points[idx[i]];
    if (!visit(Point(values))) return;
    std::size_t k = variables_.size();
    while (k > 0) {
      --k;
      if (++idx[k] < variables_[k].points.size()) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (variables_.empty()) return;
  }
}

GridOutcome check_identity_on_grid(const Evaluator& lhs, const Evaluator& rhs, const GridSpec& grid) {
  GridOutcome out;
  grid.for_each([&](const Point& p) {
    try {
      Rational l = lhs(p);
      Rational r = rhs(p);
      ++out.points_evaluated;
      if (l != r) {
        out.kind = GridOutcome::Kind::fail;
        out.witness = GridWitness{p, std::move(l), std::move(r)};
        return false;
      }
    } catch (const DomainError& e) {
      out.kind = GridOutcome::Kind::config_error;
      out.message = std::string("evaluator domain error at ") + p.str() + ": " + e.what();
      out.witness = GridWitness{p, Rational(), Rational()};
      return false;
    }
    return true;
  });
  return out;
}

const std::vector<Rational>& default_grid_values() {
  static const std::vector<Rational> values = {Rational(0),     Rational(1, 5), Rational(1, 3), Rational(1, 2),
                                               Rational(2, 3),  Rational(4, 5), Rational(1),    Rational(3, 2),
                                               Rational(-1, 2), Rational(2)};
  return values;
}

namespace {

bool in_domain(const Rational& v, PointDomain domain) {
  return domain == PointDomain::any || (v.sign() >= 0 && v <= Rational(1));
}

// Extension stream. Unbounded: 3, -1, 5/2, -3/2, 4, -2, 7/2, -5/2, ...
// Unit interval: fractions num/den in (0,1) by increasing denominator.
class ExtensionStream {
 public:
  explicit ExtensionStream(PointDomain domain) : domain_(domain) {}

  Rational next() {
    if (domain_ == PointDomain::unit_interval) {
      while (true) {
        if (num_ >= den_) {
          ++den_;
          num_ = 1;
        }
        const long n = num_++;
        if (std::gcd(n, den_) == 1) return Rational(n, den_);
      }
    }
    const long k = k_;
    const int phase = phase_;
    phase_ = (phase_ + 1) % 4;
    if (phase_ == 0) ++k_;
    switch (phase) {
      case 0: return Rational(k + 2);
      case 1: return Rational(-k);
      case 2: return Rational(2 * k + 3, 2);
      default: return Rational(-(2 * k + 1), 2);
    }
  }

 private:
  PointDomain domain_;
  long k_ = 1;
  int phase_ = 0;
  long den_ = 4;
  long num_ = 1;
};

}  // namespace

std::vector<Rational> grid_points(std::size_t count, const std::vector<Rational>& base,
                                  const std::vector<Rational>& excluded, PointDomain domain) {
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      if (base[i] == base[j]) throw ConfigError("grid values repeat " + base[i].str());
    }
  }
  auto usable = [&](const Rational& v, const std::vector<Rational>& taken) {
    return in_domain(v, domain) && std::find(excluded.begin(), excluded.end(), v) == excluded.end() &&
           std::find(taken.begin(), taken.end(), v) == taken.end();
  };
  std::vector<Rational> out;
  for (const auto& v : base) {
    if (out.size() == count) return out;
    if (usable(v, out)) out.push_back(v);
  }
  ExtensionStream stream(domain);
  while (out.size() < count) {
    Rational v = stream.next();
    if (usable(v, out)) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace btx
