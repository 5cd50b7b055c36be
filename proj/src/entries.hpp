#pragma once

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "btx/registry.hpp"
#include "btx/special.hpp"
#include "btx/transform.hpp"

namespace btx::entries {

void add_intro(std::vector<IdentityEntry>& out);
void add_basis(std::vector<IdentityEntry>& out);
void add_families(std::vector<IdentityEntry>& out);
void add_composition(std::vector<IdentityEntry>& out);
void add_probability(std::vector<IdentityEntry>& out);
void add_appell(std::vector<IdentityEntry>& out);

/// The Meixner single-step difference relation, checked for n <= 4 under the
/// configured definition. Shared by C.n and the q -> 1 limits.
std::optional<GateFailure> meixner_gate(const Context& ctx);

inline IdentityEntry make_entry(std::string id, std::string eq, std::string module, std::string summary,
                                std::vector<std::string> vars) {
  IdentityEntry e;
  e.id = std::move(id);
  e.paper_eq = std::move(eq);
  e.module = std::move(module);
  e.summary = std::move(summary);
  e.variables = std::move(vars);
  return e;
}

/// Univariate grids use at least this many points.
constexpr std::size_t univariate_points = 11;

/// "key=value key=value" case labels.
class Label {
 public:
  template <typename T>
  Label& operator()(const std::string& key, const T& value) {
    std::ostringstream os;
    os << value;
    if (!text_.empty()) text_ += ' ';
    text_ += key + "=" + os.str();
    return *this;
  }
  operator std::string() const { return text_; }  // NOLINT(google-explicit-constructor)

 private:
  std::string text_;
};

inline IdentityCase make_case(std::string label, std::vector<GridVariable> vars, Evaluator lhs, Evaluator rhs) {
  return IdentityCase{std::move(label), GridSpec(std::move(vars)), std::move(lhs), std::move(rhs)};
}

/// Zero-variable case comparing two precomputed values.
inline IdentityCase value_case(std::string label, Rational lhs, Rational rhs) {
  return make_case(std::move(label), {}, [lhs](const Point&) { return lhs; }, [rhs](const Point&) { return rhs; });
}

/// Case from a function computing both sides at once; the last point is cached
/// so each side is evaluated from one call.
template <typename F>
IdentityCase sides_case(std::string label, std::vector<GridVariable> vars, F fn) {
  struct Last {
    std::string key;
    Sides sides;
  };
  auto last = std::make_shared<Last>();
  auto get = [last, fn](const Point& p) -> const Sides& {
    std::string key = p.str();
    if (key != last->key || last->key.empty()) {
      last->sides = fn(p);
      last->key = std::move(key);
    }
    return last->sides;
  };
  return make_case(std::move(label), std::move(vars), [get](const Point& p) { return get(p).lhs; },
                   [get](const Point& p) { return get(p).rhs; });
}

/// Per-value cache for evaluators whose expensive part depends on one grid
/// variable only. Shared between the two sides of a case.
template <typename T>
class Memo {
 public:
  template <typename F>
  const T& get(const Rational& key, F&& compute) {
    const std::string k = key.str();
    auto it = cache_->find(k);
    if (it == cache_->end()) it = cache_->emplace(k, compute()).first;
    return it->second;
  }

 private:
  std::shared_ptr<std::map<std::string, T>> cache_ = std::make_shared<std::map<std::string, T>>();
};

/// sum_k w_k C(n,k) u^k v^{n-k}
inline Rational weighted(const std::vector<Rational>& w, long n, const Rational& u, const Rational& v) {
  Rational sum;
  Rational up(1);
  std::vector<Rational> vp(static_cast<std::size_t>(n) + 1);
  vp[0] = Rational(1);
  for (long i = 1; i <= n; ++i) vp[i] = vp[i - 1] * v;
  for (long k = 0; k <= n; ++k) {
    sum += w[k] * binomial(n, k) * up * vp[n - k];
    up *= u;
  }
  return sum;
}

/// Generic-sequence defaults.
inline const std::vector<std::string>& composition_sequences() {
  static const std::vector<std::string> s = {"harmonic", "fibolike:a=2,b=-1/3,c=3/2,r=1", "binomalt:alpha=7/2,r=1",
                                             "laguerre:alpha=1/2,x=2/3,mode=degree,r=1"};
  return s;
}

inline std::vector<std::string> catalog_sequences() {
  std::vector<std::string> out;
  for (const auto& s : sequence_catalog()) out.push_back(s.str());
  return out;
}

}  // namespace btx::entries
