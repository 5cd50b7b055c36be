#include "entries.hpp"
#include "btx/appell.hpp"

namespace btx::entries {

namespace {

const std::vector<Rational>& family_orders() {
  static const std::vector<Rational> v = {Rational(1), Rational(2), Rational(1, 2)};
  return v;
}

std::vector<AppellSpec> bernoulli_families() {
  std::vector<AppellSpec> out;
  for (const auto& a : family_orders()) out.push_back(AppellSpec::bernoulli(a));
  return out;
}

std::vector<AppellSpec> euler_families() {
  std::vector<AppellSpec> out;
  for (const auto& a : family_orders()) out.push_back(AppellSpec::euler(a));
  return out;
}

std::vector<AppellSpec> all_families() {
  std::vector<AppellSpec> out = {AppellSpec::parse("generic:1,1/2,-1/3,2"), AppellSpec::monomial()};
  for (auto& f : bernoulli_families()) out.push_back(std::move(f));
  for (auto& f : euler_families()) out.push_back(std::move(f));
  return out;
}

/// f_0 = 1, f_n = c_n + n * integral_0^y f_{n-1}.
std::vector<YPoly> integrated_family(const AppellSpec& spec, long n_max) {
  std::vector<YPoly> out = {YPoly::constant(Rational(1))};
  for (long n = 1; n <= n_max; ++n) {
    const auto& prev = out.back().coeffs();
    std::vector<Rational> c(prev.size() + 1);
    c[0] = spec.moment(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < prev.size(); ++k) c[k + 1] = Rational(n) * prev[k] / Rational(static_cast<long>(k) + 1);
    out.emplace_back(std::move(c));
  }
  return out;
}

void add_structure(std::vector<IdentityEntry>& out) {
  auto e2 = make_entry("AP.e2", "e2", "appell", "generating function against f_0 = 1, f_n' = n f_{n-1}", {"y"});
  e2.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = std::max(10L, ctx.bounds().n_max);
    for (const auto& spec : all_families()) {
      const auto integrated = integrated_family(spec, N);
      for (long n = 0; n <= N; ++n) {
        const GridVariable y = ctx.var("y", static_cast<int>(n), {}, univariate_points);
        const YPoly fn = appell_poly(spec, static_cast<std::size_t>(n));
        const YPoly lower = n > 0 ? appell_poly(spec, static_cast<std::size_t>(n - 1)) : YPoly();
        cases.push_back(make_case(Label()("family", spec.str())("n", n)("form", "derivative"), {y},
                                  [fn](const Point& p) { return fn.derivative()(p["y"]); },
                                  [lower, n](const Point& p) { return Rational(n) * lower(p["y"]); }));
        const YPoly in = integrated[n];
        cases.push_back(make_case(Label()("family", spec.str())("n", n)("form", "integration"), {y},
                                  [spec, n](const Point& p) { return appell_value_from_series(spec, n, p["y"]); },
                                  [in](const Point& p) { return in(p["y"]); }));
      }
    }
    return cases;
  };
  out.push_back(std::move(e2));

  auto t = make_entry("AP.t", "t", "appell", "umbral expansion f_n(y) = (C + y)^n", {"y"});
  t.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = std::max(10L, ctx.bounds().n_max);
    for (const auto& spec : all_families()) {
      for (long n = 0; n <= N; ++n) {
        cases.push_back(make_case(
            Label()("family", spec.str())("n", n), {ctx.var("y", static_cast<int>(n), {}, univariate_points)},
            [spec, n](const Point& p) {
              Rational v;
              for (long k = 0; k <= n; ++k) {
                v += binomial(n, k) * spec.moment(static_cast<std::size_t>(n - k)) * p["y"].pow(k);
              }
              return v;
            },
            [spec, n](const Point& p) { return appell_value_from_series(spec, n, p["y"]); }));
      }
    }
    return cases;
  };
  out.push_back(std::move(t));

  auto h2 = make_entry("AP.h2", "h2", "appell", "moments of F(t) by exp/log against the power recurrence", {});
  h2.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const std::size_t order = static_cast<std::size_t>(std::max(10L, ctx.bounds().n_max));
    std::vector<AppellSpec> families = bernoulli_families();
    for (auto& f : euler_families()) families.push_back(std::move(f));
    families.push_back(AppellSpec::bernoulli(Rational(-1, 3)));
    families.push_back(AppellSpec::euler(Rational(-3, 2)));
    for (const auto& spec : families) {
      const auto rec = power_recurrence_moments(spec, order);
      for (std::size_t k = 0; k <= order; ++k) {
        cases.push_back(value_case(Label()("family", spec.str())("k", k), spec.moment(k), rec[k]));
      }
    }
    return cases;
  };
  out.push_back(std::move(h2));

  auto g2 = make_entry("AP.g2", "g2", "appell", "Bernoulli and Euler families of order alpha: order-lowering steps", {"y"});
  g2.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = std::max(10L, ctx.bounds().n_max);
    std::vector<AppellSpec> families = bernoulli_families();
    for (auto& f : euler_families()) families.push_back(std::move(f));
    for (const auto& spec : families) {
      const long first = spec.kind() == AppellSpec::Kind::bernoulli ? 1 : 0;
      for (long n = first; n <= N; ++n) {
        cases.push_back(sides_case(Label()("family", spec.str())("n", n),
                                   {ctx.var("y", static_cast<int>(n), {}, univariate_points)},
                                   [spec, n](const Point& p) { return order_step_identity(spec, n, p["y"]); }));
      }
    }
    return cases;
  };
  out.push_back(std::move(g2));

  auto f2 = make_entry("AP.f2", "f2", "appell", "weighted transform equals (1 - q + qD)^n f_n", {"q", "y"});
  f2.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    for (const auto& spec : all_families()) {
      for (long n = 0; n <= ctx.bounds().n_max; ++n) {
        const int d = static_cast<int>(n);
        cases.push_back(sides_case(Label()("family", spec.str())("n", n), {ctx.var("q", d), ctx.var("y", d)},
                                   [spec, n](const Point& p) { return operator_identity(spec, n, p["q"], p["y"]); }));
      }
    }
    return cases;
  };
  out.push_back(std::move(f2));
}

void add_scaled(std::vector<IdentityEntry>& out) {
  struct Variant {
    const char* id;
    const char* eq;
    const char* summary;
    std::vector<AppellSpec> (*families)();
  };
  const Variant variants[] = {
      {"AP.k1", "k1", "scaled transform of an Appell family", &all_families},
      {"AP.m1", "m1", "scaled transform of higher-order Bernoulli polynomials", &bernoulli_families},
      {"AP.n1", "n1", "scaled transform of higher-order Euler polynomials", &euler_families},
  };
  for (const auto& v : variants) {
    auto e = make_entry(v.id, v.eq, "appell", v.summary, {"x", "q"});
    e.cases = [families = v.families](const Context& ctx) {
      std::vector<IdentityCase> cases;
      const std::vector<Rational> lambdas = {Rational(1), Rational(2), Rational(-3, 2)};
      for (const auto& spec : families()) {
        for (const auto& lambda : lambdas) {
          for (long n = 0; n <= ctx.bounds().n_max; ++n) {
            const int d = static_cast<int>(n);
            cases.push_back(sides_case(
                Label()("family", spec.str())("lambda", lambda)("n", n),
                {ctx.var("x", d), ctx.var("q", d, {Rational(0)})},
                [spec, lambda, n](const Point& p) { return scaled_transform_identity(spec, n, lambda, p["x"], p["q"]); }));
          }
        }
      }
      return cases;
    };
    out.push_back(std::move(e));
  }
}

IdentityCase umbral_case(const Context& ctx, std::string label, const AppellSpec& spec, const SequenceSpec& s, long n,
                         Umbral which, const Rational& b = 1) {
  const int d = static_cast<int>(n);
  return sides_case(std::move(label), {ctx.var("x", d), ctx.var("y", d)}, [spec, s, n, which, b](const Point& p) {
    return umbral_identity(spec, s, n, p["x"], p["y"], which, b);
  });
}

void add_umbral(std::vector<IdentityEntry>& out) {
  for (const auto which : {Umbral::f, Umbral::fbis}) {
    const bool dual = which == Umbral::fbis;
    auto e = make_entry(dual ? "AP.fbis" : "AP.f", dual ? "fbis" : "f", "appell",
                        dual ? "homogeneous form of the conjugate basis representation"
                             : "homogeneous form of the basis representation",
                        {"x", "y"});
    e.cases = [which](const Context& ctx) {
      std::vector<IdentityCase> cases;
      const AppellSpec mono = AppellSpec::monomial();
      for (const auto& s : ctx.sequences(composition_sequences())) {
        for (long n = 0; n <= ctx.bounds().n_max; ++n) {
          cases.push_back(umbral_case(ctx, Label()("seq", s.str())("n", n), mono, s, n, which));
        }
      }
      return cases;
    };
    out.push_back(std::move(e));
  }

  for (const auto which : {Umbral::u, Umbral::ubis}) {
    const bool dual = which == Umbral::ubis;
    auto e = make_entry(dual ? "AP.ubis" : "AP.u", dual ? "ubis" : "u", "appell",
                        dual ? "Appell form of the conjugate basis representation"
                             : "Appell form of the basis representation",
                        {"x", "y"});
    e.cases = [which](const Context& ctx) {
      std::vector<IdentityCase> cases;
      for (const auto& spec : all_families()) {
        for (const auto& s : ctx.sequences(composition_sequences())) {
          for (long n = 0; n <= ctx.bounds().n_max; ++n) {
            cases.push_back(umbral_case(ctx, Label()("family", spec.str())("seq", s.str())("n", n), spec, s, n, which));
          }
        }
      }
      return cases;
    };
    out.push_back(std::move(e));
  }

  auto s2 = make_entry("AP.s2", "s2", "appell", "Appell form of S_n(1 - bq)", {"x", "y"});
  s2.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const std::vector<Rational> bs = {Rational(1), Rational(1, 3), Rational(-2)};
    for (const auto& spec : all_families()) {
      for (const auto& s : ctx.sequences(composition_sequences())) {
        for (const auto& b : bs) {
          for (long n = 0; n <= ctx.bounds().n_max; ++n) {
            cases.push_back(umbral_case(ctx, Label()("family", spec.str())("seq", s.str())("b", b)("n", n), spec, s, n,
                                        Umbral::s2, b));
          }
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(s2));

  const std::vector<std::string> fibos = {"fibonacci", "lucas", "fibolike:a=2,b=-1/3,c=3/2"};
  auto v = make_entry("AP.v", "v", "appell", "Appell form for Fibonacci-like sequences", {"x", "y"});
  v.cases = [fibos](const Context& ctx) {
    std::vector<IdentityCase> cases;
    for (const auto& spec : all_families()) {
      for (const auto& base : fibos) {
        for (long r = 0; r <= ctx.bounds().r_max; ++r) {
          const auto f = std::get<seq::FiboLike>(SequenceSpec::parse(base).variant());
          const SequenceSpec s(seq::FiboLike{f.a, f.b, f.c, r});
          for (long n = 0; n <= ctx.bounds().n_max; ++n) {
            cases.push_back(umbral_case(ctx, Label()("family", spec.str())("seq", s.str())("n", n), spec, s, n, Umbral::v));
          }
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(v));

  auto o1 = make_entry("AP.o1", "o1", "appell", "Appell form for Fibonacci-like sequences at r = n", {"x", "y"});
  o1.cases = [fibos](const Context& ctx) {
    std::vector<IdentityCase> cases;
    for (const auto& spec : all_families()) {
      for (const auto& base : fibos) {
        const SequenceSpec s = SequenceSpec::parse(base);
        for (long n = 0; n <= ctx.bounds().n_max; ++n) {
          cases.push_back(umbral_case(ctx, Label()("family", spec.str())("seq", s.str())("n", n), spec, s, n, Umbral::o1));
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(o1));

  for (const auto which : {Umbral::w, Umbral::wbis}) {
    const bool dual = which == Umbral::wbis;
    auto e = make_entry(dual ? "AP.wbis" : "AP.w", dual ? "wbis" : "w", "appell",
                        dual ? "Appell form for alternating binomial coefficients, conjugate side"
                             : "Appell form for alternating binomial coefficients",
                        {"x", "y"});
    e.cases = [which](const Context& ctx) {
      std::vector<IdentityCase> cases;
      const std::vector<Rational> alphas = {Rational(5, 2), Rational(-1, 3), Rational(4)};
      for (const auto& spec : all_families()) {
        for (const auto& alpha : alphas) {
          for (long r = 0; r <= ctx.bounds().r_max; ++r) {
            const SequenceSpec s(seq::BinomAlt{alpha, r});
            for (long n = 0; n <= ctx.bounds().n_max; ++n) {
              cases.push_back(umbral_case(ctx, Label()("family", spec.str())("seq", s.str())("n", n), spec, s, n, which));
            }
          }
        }
      }
      return cases;
    };
    out.push_back(std::move(e));
  }
}

}  // namespace

void add_appell(std::vector<IdentityEntry>& out) {
  add_structure(out);
  add_scaled(out);
  add_umbral(out);
}

}  // namespace btx::entries
