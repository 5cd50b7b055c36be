#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "btx/rational.hpp"

namespace btx {

/// One grid variable: its sample points and the degree bound they certify.
struct GridVariable {
  std::string name;
  std::vector<Rational> points;
  int degree_bound = 0;
  std::vector<Rational> excluded;
};

/// An assignment of values to the grid variables.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<std::pair<std::string, Rational>> values) : values_(std::move(values)) {}

  /// Throws ConfigError for an unknown variable name.
  const Rational& operator[](std::string_view name) const;
  const std::vector<std::pair<std::string, Rational>>& values() const { return values_; }
  std::string str() const;

 private:
  std::vector<std::pair<std::string, Rational>> values_;
};

/// Tensor grid over named variables. Construction enforces the certificate
/// conditions: distinct points, at least degree_bound + 1 of them, none
/// excluded. A grid without variables has exactly one (empty) point.
class GridSpec {
 public:
  GridSpec() = default;
  explicit GridSpec(std::vector<GridVariable> variables);

  const std::vector<GridVariable>& variables() const { return variables_; }
  std::size_t size() const;
  /// Calls `visit` on every grid point in odometer order (last variable fastest);
  /// stops early when `visit` returns false.
  void for_each(const std::function<bool(const Point&)>& visit) const;

 private:
  std::vector<GridVariable> variables_;
};

using Evaluator = std::function<Rational(const Point&)>;

struct GridWitness {
  Point point;
  Rational lhs;
  Rational rhs;
};

struct GridOutcome {
  enum class Kind { pass, fail, config_error };
  Kind kind = Kind::pass;
  std::optional<GridWitness> witness;
  std::string message;
  std::size_t points_evaluated = 0;

  bool passed() const { return kind == Kind::pass; }
};

/// Evaluates both sides at every grid point. A DomainError raised by an
/// evaluator is reported as config_error (the grid reached an excluded
/// value), never as an identity failure.
GridOutcome check_identity_on_grid(const Evaluator& lhs, const Evaluator& rhs, const GridSpec& grid);

enum class PointDomain { any, unit_interval };

/// Default sample values {0, 1/5, 1/3, 1/2, 2/3, 4/5, 1, 3/2, -1/2, 2}.
const std::vector<Rational>& default_grid_values();

/// First `count` usable points: `base` (minus exclusions and values outside
/// `domain`) followed by a deterministic stream of small-denominator
/// rationals. Throws ConfigError if `base` has repeated values.
std::vector<Rational> grid_points(std::size_t count, const std::vector<Rational>& base,
                                  const std::vector<Rational>& excluded = {},
                                  PointDomain domain = PointDomain::any);

}  // namespace btx
