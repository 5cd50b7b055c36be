#include "entries.hpp"
#include "btx/probability.hpp"

namespace btx::entries {

namespace {

/// sum_k p_k t^k
Rational pgf(const FinitePMF& law, const Rational& t) {
  Rational v;
  for (long k = law.max_value(); k >= 0; --k) v = v * t + law[k];
  return v;
}

IdentityCase expectation_case(std::string label, std::vector<GridVariable> vars, const SequenceSpec& f, long m, long n,
                              ExpectationIdentity which, bool bridge) {
  return sides_case(std::move(label), std::move(vars), [f, m, n, which, bridge](const Point& p) {
    const Rational y = which == ExpectationIdentity::m2 ? p["y"] : Rational(0);
    const ExpectationCheck c = verify_expectation_identity(f, m, n, p["x"], y, which);
    return bridge ? Sides{c.sides.lhs, c.bridge.lhs} : c.sides;
  });
}

}  // namespace

void add_probability(std::vector<IdentityEntry>& out) {
  auto k2 = make_entry("PR.k2", "k2", "probability", "T(Z(n)) is binomial with success (1-x)(1-y)", {"x", "y", "t"});
  k2.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    for (long n = 0; n <= std::max(12L, ctx.bounds().n_max); ++n) {
      const int d = static_cast<int>(n);
      auto cache = std::make_shared<std::map<std::string, FinitePMF>>();
      cases.push_back(make_case(
          Label()("n", n), {ctx.unit_var("x", d), ctx.unit_var("y", d), ctx.var("t", d)},
          [cache, n](const Point& p) {
            const std::string key = p["x"].str() + "," + p["y"].str();
            auto it = cache->find(key);
            if (it == cache->end()) {
              it = cache->emplace(key, compose_pmf(Rational(1) - p["y"], binomial_pmf(n, Rational(1) - p["x"]))).first;
            }
            return pgf(it->second, p["t"]);
          },
          [n](const Point& p) {
            const Rational s = (Rational(1) - p["x"]) * (Rational(1) - p["y"]);
            return (Rational(1) - s + s * p["t"]).pow(n);
          }));
    }
    return cases;
  };
  out.push_back(std::move(k2));

  auto m2 = make_entry("PR.m2", "m2", "probability", "expectation form of the shifted composition law", {"x", "y"});
  m2.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long M = std::min(ctx.bounds().m_max, 3L);
    const long N = std::min(ctx.bounds().n_max, 6L);
    for (const auto& f : ctx.sequences(composition_sequences())) {
      for (long m = 0; m <= M; ++m) {
        for (long n = 0; n <= N; ++n) {
          const int d = static_cast<int>(n + m);
          for (const bool bridge : {false, true}) {
            cases.push_back(expectation_case(Label()("seq", f.str())("m", m)("n", n)("form", bridge ? "bridge" : "sides"),
                                             {ctx.unit_var("x", d), ctx.unit_var("y", d)}, f, m, n,
                                             ExpectationIdentity::m2, bridge));
          }
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(m2));

  auto o2 = make_entry("PR.o2", "o2", "probability", "expectation law with y = 0", {"x"});
  o2.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long M = std::min(ctx.bounds().m_max, 3L);
    const long N = std::min(ctx.bounds().n_max, 6L);
    for (const auto& f : ctx.sequences(composition_sequences())) {
      for (long m = 0; m <= M; ++m) {
        for (long n = 0; n <= N; ++n) {
          for (const bool bridge : {false, true}) {
            cases.push_back(expectation_case(Label()("seq", f.str())("m", m)("n", n)("form", bridge ? "bridge" : "sides"),
                                             {ctx.unit_var("x", static_cast<int>(n + m))}, f, m, n,
                                             ExpectationIdentity::o2, bridge));
          }
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(o2));

  auto p2 = make_entry("PR.p2", "p2", "probability", "expectation law with n = y = 0", {"x"});
  p2.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long M = std::max(ctx.bounds().m_max, ctx.bounds().n_max);
    for (const auto& f : ctx.sequences(composition_sequences())) {
      for (long m = 0; m <= M; ++m) {
        for (const bool bridge : {false, true}) {
          cases.push_back(expectation_case(Label()("seq", f.str())("m", m)("form", bridge ? "bridge" : "sides"),
                                           {ctx.unit_var("x", static_cast<int>(m))}, f, m, 0, ExpectationIdentity::p2,
                                           bridge));
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(p2));
}

}  // namespace btx::entries
