#include "entries.hpp"

namespace btx::entries {

namespace {

const Rational one(1);

/// Sequences used by the composition laws, with enough terms for index n + m.
struct Prepared {
  std::string name;
  Terms a;
};

std::vector<Prepared> prepared(const Context& ctx, long count) {
  std::vector<Prepared> out;
  for (const auto& s : ctx.sequences(composition_sequences())) out.push_back({s.str(), s.terms(count)});
  return out;
}

/// (1-q)^m sum_k S_{k+m}(x) C(n,k)(1-q)^k q^{n-k} with explicit right-hand
/// sides for m = 0, 1, 2.
Rational shifted_rhs_explicit(const Terms& a, long n, long m, const Rational& x, const Rational& q) {
  const Rational z = x + q - x * q;
  const Terms s = transform_row(a, n + m + 1, z);
  switch (m) {
    case 0: return s[n];
    case 1: return s[n + 1] - q * s[n];
    default: return s[n + 2] - Rational(2) * q * s[n + 1] + q * q * s[n];
  }
}

Rational shifted_lhs(const Terms& a, long n, long m, const Rational& x, const Rational& q) {
  const Terms s = transform_row(a, n + m + 1, x);
  const Terms shifted(s.begin() + m, s.end());
  return (one - q).pow(m) * weighted(shifted, n, one - q, q);
}

void add_generating_function(std::vector<IdentityEntry>& out) {
  auto s = make_entry("P1.s", "s", "transform", "generating-function coefficient extraction, product and composed forms",
                      {"q"});
  s.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    for (const auto& spec : ctx.sequences(catalog_sequences())) {
      const Terms a = spec.terms(ctx.bounds().n_max + 1);
      for (long n = 0; n <= ctx.bounds().n_max; ++n) {
        const GridVariable q = ctx.var("q", static_cast<int>(n), {}, univariate_points);
        auto direct = [a, n](const Point& p) { return direct_transform(a, n, p["q"]); };
        cases.push_back(make_case(Label()("seq", spec.str())("n", n)("form", "product"), {q}, direct,
                                  [a, n](const Point& p) { return gf_transform(a, n, p["q"], GfMode::product); }));
        cases.push_back(make_case(Label()("seq", spec.str())("n", n)("form", "composed"), {q}, direct,
                                  [a, n](const Point& p) { return gf_transform(a, n, p["q"], GfMode::composed); }));
      }
    }
    return cases;
  };
  out.push_back(std::move(s));
}

void add_bernoulli_of_bernoulli(std::vector<IdentityEntry>& out) {
  auto d1 = make_entry("P2.d1", "d1", "transform", "S_n(x+q-xq) is the transform of S_n(x)", {"x", "q"});
  d1.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    for (const auto& [name, a] : prepared(ctx, N + 1)) {
      for (long n = 0; n <= N; ++n) {
        cases.push_back(sides_case(Label()("seq", name)("n", n),
                                   {ctx.var("x", static_cast<int>(n)), ctx.var("q", static_cast<int>(n))},
                                   [a, n](const Point& p) { return compose_transform(a, n, p["x"], p["q"]); }));
      }
    }
    return cases;
  };
  out.push_back(std::move(d1));

  auto d1bis = make_entry("P2.d1bis", "d1bis", "transform", "S_n(1-xq) as a transform of S_n(1-x)", {"x", "q"});
  d1bis.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    for (const auto& [name, a] : prepared(ctx, N + 1)) {
      for (long n = 0; n <= N; ++n) {
        cases.push_back(sides_case(Label()("seq", name)("n", n),
                                   {ctx.var("x", static_cast<int>(n)), ctx.var("q", static_cast<int>(n))},
                                   [a, n](const Point& p) { return compose_transform_bis(a, n, p["x"], p["q"]); }));
      }
    }
    return cases;
  };
  out.push_back(std::move(d1bis));

  for (const auto form : {PowerForm::shifted_argument, PowerForm::bracket_weights}) {
    const bool first = form == PowerForm::shifted_argument;
    auto e = make_entry(first ? "C1.e1" : "C1.f1", first ? "e1" : "f1", "transform",
                        first ? "S_n(q^m) through S_k(1-[q]_m)" : "S_n(q^m) through S_k(q) with [q]_m weights", {"q"});
    e.cases = [form](const Context& ctx) {
      std::vector<IdentityCase> cases;
      const long N = ctx.bounds().n_max;
      for (const auto& [name, a] : prepared(ctx, N + 1)) {
        for (long m = 1; m <= ctx.bounds().m_max; ++m) {
          for (long n = 0; n <= N; ++n) {
            cases.push_back(sides_case(
                Label()("seq", name)("m", m)("n", n), {ctx.var("q", static_cast<int>(n * m), {one}, univariate_points)},
                [a, n, m, form](const Point& p) { return power_composition(a, n, m, p["q"], form); }));
          }
        }
      }
      return cases;
    };
    out.push_back(std::move(e));
  }

  auto q2 = make_entry("C1.q2", "q2", "transform", "inverse relations recovering a_n", {"q"});
  q2.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    for (const auto& [name, a] : prepared(ctx, N + 1)) {
      for (long n = 0; n <= N; ++n) {
        for (const auto form : {InverseForm::shifted_argument, InverseForm::alternating_weights}) {
          const char* f = form == InverseForm::shifted_argument ? "shifted" : "alternating";
          cases.push_back(sides_case(
              Label()("seq", name)("n", n)("form", f), {ctx.var("q", static_cast<int>(2 * n), {one}, univariate_points)},
              [a, n, form](const Point& p) { return inverse_composition(a, n, p["q"], form); }));
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(q2));

  for (const auto form : {ScaledForm::shifted_argument, ScaledForm::scaled_weights}) {
    const bool first = form == ScaledForm::shifted_argument;
    auto g = make_entry(first ? "C1.g1" : "C1.h1", first ? "g1" : "h1", "transform",
                        first ? "S_n((alpha+1)q) through S_k(alpha q/(1-q))" : "S_n((alpha+1)q) through S_k(q)",
                        {"alpha", "q"});
    g.cases = [form, first](const Context& ctx) {
      std::vector<IdentityCase> cases;
      const long N = ctx.bounds().n_max;
      for (const auto& [name, a] : prepared(ctx, N + 1)) {
        for (long n = 0; n <= N; ++n) {
          const int qdeg = static_cast<int>(first ? n : 2 * n);
          cases.push_back(sides_case(
              Label()("seq", name)("n", n), {ctx.var("alpha", static_cast<int>(n)), ctx.var("q", qdeg, {one})},
              [a, n, form](const Point& p) { return scaled_composition(a, n, p["alpha"], p["q"], form); }));
        }
      }
      return cases;
    };
    out.push_back(std::move(g));
  }
}

void add_shifted(std::vector<IdentityEntry>& out) {
  auto q1 = make_entry("P3.q1", "q1", "transform", "transform of (1-q)^m S_{n+m}(x)", {"x", "q"});
  q1.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    const long M = ctx.bounds().m_max;
    for (const auto& [name, a] : prepared(ctx, N + M + 1)) {
      for (long m = 0; m <= M; ++m) {
        for (long n = 0; n <= N; ++n) {
          const int d = static_cast<int>(n + m);
          cases.push_back(sides_case(Label()("seq", name)("m", m)("n", n), {ctx.var("x", d), ctx.var("q", d)},
                                     [a, n, m](const Point& p) { return shifted_transform(a, n, m, p["x"], p["q"]); }));
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(q1));

  const std::pair<const char*, long> special[] = {{"r1", 0}, {"s1", 1}, {"t1", 2}};
  for (const auto& [eq, m] : special) {
    auto e = make_entry(std::string("P3.") + eq, eq, "transform", "shifted composition law for m = " + std::to_string(m),
                        {"x", "q"});
    e.cases = [m](const Context& ctx) {
      std::vector<IdentityCase> cases;
      const long N = ctx.bounds().n_max;
      for (const auto& [name, a] : prepared(ctx, N + m + 1)) {
        for (long n = 0; n <= N; ++n) {
          const int d = static_cast<int>(n + m);
          cases.push_back(make_case(
              Label()("seq", name)("n", n), {ctx.var("x", d), ctx.var("q", d)},
              [a, n, m](const Point& p) { return shifted_lhs(a, n, m, p["x"], p["q"]); },
              [a, n, m](const Point& p) { return shifted_rhs_explicit(a, n, m, p["x"], p["q"]); }));
        }
      }
      return cases;
    };
    out.push_back(std::move(e));
  }

  auto i2 = make_entry("P3.i2", "i2", "transform", "inverse of the composition law (n = 0)", {"x", "q"});
  i2.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long M = std::max(ctx.bounds().m_max, ctx.bounds().n_max);
    for (const auto& [name, a] : prepared(ctx, M + 1)) {
      for (long m = 0; m <= M; ++m) {
        const int d = static_cast<int>(m);
        cases.push_back(make_case(
            Label()("seq", name)("m", m), {ctx.var("x", d), ctx.var("q", d)},
            [a, m](const Point& p) { return (one - p["q"]).pow(m) * direct_transform(a, m, p["x"]); },
            [a, m](const Point& p) {
              const Rational q = p["q"];
              const Terms s = transform_row(a, m + 1, p["x"] + q - p["x"] * q);
              Rational v;
              for (long j = 0; j <= m; ++j) v += binomial(m, j) * (-q).pow(m - j) * s[j];
              return v;
            }));
      }
    }
    return cases;
  };
  out.push_back(std::move(i2));
}

/// (1-q)^m sum_k a_{k+m} C(n,k)(1-q)^k q^{n-k}.
Rational tail_lhs(const Terms& a, long n, long m, const Rational& q) {
  const Terms shifted(a.begin() + m, a.end());
  return (one - q).pow(m) * weighted(shifted, n, one - q, q);
}

/// sum_j C(m,j)(-q)^{m-j} S_{j+n}(q).
Rational tail_rhs(const Terms& a, long n, long m, const Rational& q) {
  const Terms s = transform_row(a, n + m + 1, q);
  Rational v;
  for (long j = 0; j <= m; ++j) v += binomial(m, j) * (-q).pow(m - j) * s[j + n];
  return v;
}

void add_at_zero(std::vector<IdentityEntry>& out) {
  auto u1 = make_entry("C2.u1", "u1", "transform", "transform of (1-q)^m a_{n+m}", {"q"});
  u1.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    const long M = ctx.bounds().m_max;
    for (const auto& [name, a] : prepared(ctx, N + M + 1)) {
      for (long m = 0; m <= M; ++m) {
        for (long n = 0; n <= N; ++n) {
          cases.push_back(make_case(Label()("seq", name)("m", m)("n", n),
                                    {ctx.var("q", static_cast<int>(n + m), {}, univariate_points)},
                                    [a, n, m](const Point& p) { return tail_lhs(a, n, m, p["q"]); },
                                    [a, n, m](const Point& p) { return tail_rhs(a, n, m, p["q"]); }));
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(u1));

  const std::pair<const char*, long> special[] = {{"v1", 0}, {"w1", 1}, {"x1", 2}};
  for (const auto& [eq, m] : special) {
    auto e = make_entry(std::string("C2.") + eq, eq, "transform", "transform of (1-q)^m a_{n+m} for m = " + std::to_string(m),
                        {"q"});
    e.cases = [m](const Context& ctx) {
      std::vector<IdentityCase> cases;
      const long N = ctx.bounds().n_max;
      for (const auto& [name, a] : prepared(ctx, N + m + 1)) {
        for (long n = 0; n <= N; ++n) {
          cases.push_back(make_case(
              Label()("seq", name)("n", n), {ctx.var("q", static_cast<int>(n + m), {}, univariate_points)},
              [a, n, m](const Point& p) { return tail_lhs(a, n, m, p["q"]); },
              [a, n, m](const Point& p) {
                const Rational q = p["q"];
                const Terms s = transform_row(a, n + m + 1, q);
                switch (m) {
                  case 0: return s[n];
                  case 1: return s[n + 1] - q * s[n];
                  default: return s[n + 2] - Rational(2) * q * s[n + 1] + q * q * s[n];
                }
              }));
        }
      }
      return cases;
    };
    out.push_back(std::move(e));
  }

  auto j2 = make_entry("C2.j2", "j2", "transform", "recurrence recovering a_m from S_0..S_m", {"q"});
  j2.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long M = std::max(ctx.bounds().m_max, ctx.bounds().n_max);
    for (const auto& [name, a] : prepared(ctx, M + 1)) {
      for (long m = 0; m <= M; ++m) {
        cases.push_back(make_case(Label()("seq", name)("m", m),
                                  {ctx.var("q", static_cast<int>(m), {}, univariate_points)},
                                  [a, m](const Point& p) { return (one - p["q"]).pow(m) * a[m]; },
                                  [a, m](const Point& p) { return tail_rhs(a, 0, m, p["q"]); }));
      }
    }
    return cases;
  };
  out.push_back(std::move(j2));
}

/// Chain grids are tensor products over r + 1 variables, so their sizes are capped.
constexpr long chain_n_max = 5;
constexpr long chain_m_max = 2;

std::vector<GridVariable> chain_vars(const Context& ctx, long r, int degree) {
  std::vector<GridVariable> vars;
  for (long i = 0; i <= r; ++i) vars.push_back(ctx.var("x" + std::to_string(i), degree));
  return vars;
}

std::vector<Rational> chain_point(const Point& p, long r) {
  std::vector<Rational> xs;
  for (long i = 0; i <= r; ++i) xs.push_back(p["x" + std::to_string(i)]);
  return xs;
}

void add_chains(std::vector<IdentityEntry>& out) {
  auto u2 = make_entry("R.u2", "u2", "transform", "composition along a product x_0 x_1 ... x_r", {"x0", "x1", "x2", "x3"});
  u2.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = std::min(ctx.bounds().n_max, chain_n_max);
    for (const auto& [name, a] : prepared(ctx, N + 1)) {
      for (long r = 1; r <= 3; ++r) {
        for (long n = 0; n <= N; ++n) {
          cases.push_back(sides_case(Label()("seq", name)("r", r)("n", n), chain_vars(ctx, r, static_cast<int>(n)),
                                     [a, n, r](const Point& p) { return chain_composition(a, n, chain_point(p, r)); }));
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(u2));

  auto t2 = make_entry("R.t2", "t2", "transform", "shifted composition along a product x_0 x_1 ... x_r",
                       {"x0", "x1", "x2", "x3"});
  t2.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = std::min(ctx.bounds().n_max, chain_n_max);
    const long M = std::min(ctx.bounds().m_max, chain_m_max);
    for (const auto& [name, a] : prepared(ctx, N + M + 1)) {
      for (long r = 1; r <= 3; ++r) {
        for (long m = 0; m <= M; ++m) {
          for (long n = 0; n + m <= N; ++n) {
            cases.push_back(sides_case(Label()("seq", name)("r", r)("m", m)("n", n),
                                       chain_vars(ctx, r, static_cast<int>(n + m)),
                                       [a, n, m, r](const Point& p) { return chain_shifted(a, n, m, chain_point(p, r)); }));
          }
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(t2));

  auto a3 = make_entry("R.a3", "a3", "transform", "alternating transforms from q -> 1/q", {"x", "q"});
  a3.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    for (const auto& [name, a] : prepared(ctx, N + 1)) {
      for (long n = 0; n <= N; ++n) {
        const int d = static_cast<int>(n);
        cases.push_back(sides_case(Label()("seq", name)("n", n)("form", 1),
                                   {ctx.var("q", d, {Rational(0)}, univariate_points)},
                                   [a, n](const Point& p) { return alternating_transform(a, n, p["q"]); }));
        cases.push_back(sides_case(Label()("seq", name)("n", n)("form", 2),
                                   {ctx.var("x", d), ctx.var("q", d, {Rational(0)})},
                                   [a, n](const Point& p) { return alternating_transform_bis(a, n, p["x"], p["q"]); }));
      }
    }
    return cases;
  };
  out.push_back(std::move(a3));
}

}  // namespace

void add_composition(std::vector<IdentityEntry>& out) {
  add_generating_function(out);
  add_bernoulli_of_bernoulli(out);
  add_shifted(out);
  add_at_zero(out);
  add_chains(out);
}

}  // namespace btx::entries
