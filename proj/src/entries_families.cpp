#include "entries.hpp"
#include "btx/transform.hpp"

namespace btx::entries {

namespace {

const std::vector<Rational>& fibo_c_values() {
  static const std::vector<Rational> v = {Rational(1), Rational(3, 2), Rational(-2), Rational(1, 3)};
  return v;
}

const std::vector<Rational>& laguerre_alphas() {
  static const std::vector<Rational> v = {Rational(1, 2), Rational(-3, 2), Rational(2)};
  return v;
}

struct MeixnerParams {
  Rational x, alpha, beta;
};

const std::vector<MeixnerParams>& meixner_params() {
  static const std::vector<MeixnerParams> v = {{Rational(1, 2), Rational(5, 2), Rational(1, 3)},
                                               {Rational(2), Rational(7, 2), Rational(3)},
                                               {Rational(-1, 3), Rational(1, 2), Rational(2, 3)}};
  return v;
}

/// (beta-1)^j (x+1)_j / ((alpha-j-1)_j beta^j)
Rational meixner_factor(const MeixnerParams& p, long j) {
  return (p.beta - Rational(1)).pow(j) * rising(p.x + Rational(1), j) / (rising(p.alpha - Rational(j + 1), j) * p.beta.pow(j));
}

Rational fibo(const Point& p, const Rational& c, long index) {
  return seq::fibolike_value(seq::FiboLike{p["a"], p["b"], c, 0}, index);
}

/// sum_k F_{k+r} C(n,k)(1-q)^k q^{n-k} against sum_j (-1)^j C(n,j) F_{n+r-2j} (cq)^j.
IdentityCase fibo_case(const Context& ctx, std::string label, const Rational& c, long n, long r,
                       std::vector<GridVariable> params) {
  params.push_back(ctx.var("q", static_cast<int>(n), {}, univariate_points));
  return make_case(
      std::move(label), std::move(params),
      [c, n, r](const Point& p) {
        Terms a;
        for (long k = 0; k <= n; ++k) a.push_back(fibo(p, c, k + r));
        return bernoulli_sum(a, n, p["q"]);
      },
      [c, n, r](const Point& p) {
        Rational v;
        for (long j = 0; j <= n; ++j) v += sign_power(j) * binomial(n, j) * fibo(p, c, n + r - 2 * j) * (c * p["q"]).pow(j);
        return v;
      });
}

/// A point-valued evaluator fixing a and b.
GridVariable fixed(const std::string& name, const Rational& value) { return GridVariable{name, {value}, 0, {}}; }

void add_fibonacci(std::vector<IdentityEntry>& out) {
  auto e = make_entry("C.e", "e", "sequences", "Fibonacci-like transform through c^j F_{n+r-2j}", {"a", "b", "q"});
  e.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    for (const auto& c : fibo_c_values()) {
      for (long r = 0; r <= ctx.bounds().r_max; ++r) {
        for (long n = 0; n <= ctx.bounds().n_max; ++n) {
          cases.push_back(fibo_case(ctx, Label()("c", c)("r", r)("n", n), c, n, r, {ctx.var("a", 1), ctx.var("b", 1)}));
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(e));

  const std::pair<const char*, std::pair<Rational, Rational>> named[] = {{"d", {Rational(0), Rational(1)}},
                                                                         {"dbis", {Rational(2), Rational(1)}}};
  for (const auto& [eq, ab] : named) {
    const std::string what = std::string(eq) == "d" ? "Fibonacci" : "Lucas";
    auto d = make_entry(std::string("C.") + eq, eq, "sequences", what + " numbers transform", {"q"});
    d.cases = [ab](const Context& ctx) {
      std::vector<IdentityCase> cases;
      for (long r = 0; r <= ctx.bounds().r_max; ++r) {
        for (long n = 0; n <= ctx.bounds().n_max; ++n) {
          cases.push_back(fibo_case(ctx, Label()("r", r)("n", n), Rational(1), n, r,
                                    {fixed("a", ab.first), fixed("b", ab.second)}));
        }
      }
      return cases;
    };
    out.push_back(std::move(d));
  }
}

void add_orthogonal(std::vector<IdentityEntry>& out) {
  auto l = make_entry("C.l", "l", "sequences", "Laguerre degree-shift transform", {"x", "q"});
  l.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    for (const auto& alpha : laguerre_alphas()) {
      for (long r = 0; r <= ctx.bounds().r_max; ++r) {
        for (long n = 0; n <= ctx.bounds().n_max; ++n) {
          Memo<std::pair<Terms, Terms>> memo;
          auto tables = [memo, alpha, n, r](const Rational& x) mutable -> const std::pair<Terms, Terms>& {
            return memo.get(x, [&] {
              std::pair<Terms, Terms> t;
              for (long k = 0; k <= n; ++k) t.first.push_back(laguerre(k + r, alpha, x));
              for (long j = 0; j <= n; ++j) t.second.push_back(laguerre(n + r, alpha - Rational(j), x));
              return t;
            });
          };
          cases.push_back(make_case(
              Label()("alpha", alpha)("r", r)("n", n),
              {ctx.var("x", static_cast<int>(n + r)), ctx.var("q", static_cast<int>(n))},
              [tables, n](const Point& p) mutable { return bernoulli_sum(tables(p["x"]).first, n, p["q"]); },
              [tables, n](const Point& p) mutable {
                const Terms& m = tables(p["x"]).second;
                Rational v;
                for (long j = 0; j <= n; ++j) v += sign_power(j) * binomial(n, j) * m[j] * p["q"].pow(j);
                return v;
              }));
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(l));

  auto m = make_entry("C.m", "m", "sequences", "Laguerre order-shift transform", {"x", "q"});
  m.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    for (const auto& alpha : laguerre_alphas()) {
      for (long r = 0; r <= ctx.bounds().r_max; ++r) {
        for (long n = 0; n <= ctx.bounds().n_max; ++n) {
          cases.push_back(make_case(
              Label()("alpha", alpha)("r", r)("n", n),
              {ctx.var("x", static_cast<int>(r)), ctx.var("q", static_cast<int>(n))},
              [alpha, n, r](const Point& p) {
                Terms a;
                for (long k = 0; k <= n; ++k) a.push_back(laguerre(r, alpha + Rational(k), p["x"]));
                return bernoulli_sum(a, n, p["q"]);
              },
              [alpha, n, r](const Point& p) {
                Rational v;
                for (long j = 0; j <= n; ++j) {
                  v += sign_power(j) * binomial(n, j) * laguerre(r - j, alpha + Rational(n), p["x"]) * p["q"].pow(j);
                }
                return v;
              }));
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(m));

  auto mx = make_entry("C.n", "n", "sequences", "Meixner transform through the difference relation", {"q"});
  mx.gate = meixner_gate;
  mx.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const auto def = ctx.config().meixner;
    for (const auto& mp : meixner_params()) {
      for (long r = 0; r <= ctx.bounds().r_max; ++r) {
        for (long n = 0; n <= ctx.bounds().n_max; ++n) {
          Terms a;
          for (long k = 0; k <= n; ++k) a.push_back(meixner(k + r, mp.x, mp.alpha, mp.beta, def));
          Terms coeff;
          for (long j = 0; j <= n; ++j) {
            coeff.push_back(sign_power(j) * binomial(n, j) * meixner_factor(mp, j) *
                            meixner(n + r - j, mp.x, mp.alpha + Rational(j), mp.beta, def));
          }
          const QPoly rhs(coeff);
          cases.push_back(make_case(Label()("x", mp.x)("alpha", mp.alpha)("beta", mp.beta)("r", r)("n", n),
                                    {ctx.var("q", static_cast<int>(n), {}, univariate_points)},
                                    [a, n](const Point& p) { return bernoulli_sum(a, n, p["q"]); },
                                    [rhs](const Point& p) { return rhs(p["q"]); }));
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(mx));
}

void add_binomial(std::vector<IdentityEntry>& out) {
  auto p = make_entry("C.p", "p", "sequences", "alternating binomial coefficient transform", {"alpha", "q"});
  p.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    for (long r = 0; r <= ctx.bounds().r_max; ++r) {
      for (long n = 0; n <= ctx.bounds().n_max; ++n) {
        cases.push_back(make_case(
            Label()("r", r)("n", n), {ctx.var("alpha", static_cast<int>(n + r)), ctx.var("q", static_cast<int>(n))},
            [n, r](const Point& pt) {
              Terms a;
              for (long k = 0; k <= n; ++k) a.push_back(sign_power(k) * binomial(pt["alpha"], k + r));
              return bernoulli_sum(a, n, pt["q"]);
            },
            [n, r](const Point& pt) {
              Rational v;
              for (long j = 0; j <= n; ++j) {
                v += sign_power(n - j) * binomial(n, j) * binomial(pt["alpha"] + Rational(j), n + r) * pt["q"].pow(j);
              }
              return v;
            }));
      }
    }
    return cases;
  };
  out.push_back(std::move(p));

  auto pbis = make_entry("C.pbis", "pbis", "sequences", "conjugate alternating binomial coefficient transform",
                         {"alpha", "q"});
  pbis.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    for (long r = 0; r <= ctx.bounds().r_max; ++r) {
      for (long n = 0; n <= ctx.bounds().n_max; ++n) {
        cases.push_back(make_case(
            Label()("r", r)("n", n), {ctx.var("alpha", static_cast<int>(n + r)), ctx.var("q", static_cast<int>(n))},
            [n, r](const Point& pt) {
              Terms a;
              for (long k = 0; k <= n; ++k) a.push_back(sign_power(k) * binomial(pt["alpha"], k + r));
              return bernoulli_sum(a, n, Rational(1) - pt["q"]);
            },
            [n, r](const Point& pt) {
              Rational v;
              for (long j = 0; j <= n; ++j) {
                v += sign_power(j) * binomial(n, j) * binomial(pt["alpha"] + Rational(j), j + r) * pt["q"].pow(j);
              }
              return v;
            }));
      }
    }
    return cases;
  };
  out.push_back(std::move(pbis));

  for (const bool conj : {false, true}) {
    auto q = make_entry(conj ? "C.qbis" : "C.q", conj ? "qbis" : "q", "sequences",
                        "squared binomial coefficient transform", {"q"});
    q.cases = [conj](const Context& ctx) {
      std::vector<IdentityCase> cases;
      for (long n = 0; n <= ctx.bounds().n_max; ++n) {
        cases.push_back(make_case(
            Label()("n", n), {ctx.var("q", static_cast<int>(n), {}, univariate_points)},
            [n, conj](const Point& pt) {
              const Rational q = pt["q"];
              Rational v;
              for (long k = 0; k <= n; ++k) {
                const Rational b = binomial(n, k);
                const Rational w = conj ? (Rational(1) - q).pow(n - k) * q.pow(k) : (Rational(1) - q).pow(k) * q.pow(n - k);
                v += sign_power(k) * b * b * w;
              }
              return v;
            },
            [n, conj](const Point& pt) {
              Rational v;
              for (long j = 0; j <= n; ++j) {
                v += sign_power(conj ? j : n - j) * binomial(n, j) * binomial(j + n, n) * pt["q"].pow(j);
              }
              return v;
            }));
      }
      return cases;
    };
    out.push_back(std::move(q));
  }

  auto j1 = make_entry("C.j1", "j1", "sequences", "alternating sums of shifted binomial coefficients", {"alpha"});
  j1.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    for (long r = 0; r <= ctx.bounds().r_max; ++r) {
      for (long n = 0; n <= ctx.bounds().n_max; ++n) {
        for (long k = 0; k <= 4; ++k) {
          const GridVariable alpha = ctx.var("alpha", static_cast<int>(n + k + r));
          cases.push_back(make_case(
              Label()("r", r)("n", n)("k", k)("form", 1), {alpha},
              [n, k, r](const Point& p) {
                Rational v;
                for (long j = 0; j <= n; ++j) {
                  v += sign_power(n - j) * binomial(n, j) * binomial(p["alpha"] + Rational(j + k), n + k + r);
                }
                return v;
              },
              [k, r](const Point& p) { return binomial(p["alpha"] + Rational(k), k + r); }));
          cases.push_back(make_case(
              Label()("r", r)("n", n)("k", k)("form", 2), {alpha},
              [n, k, r](const Point& p) {
                Rational v;
                for (long j = 0; j <= n; ++j) {
                  v += sign_power(n - j) * binomial(n, j) * binomial(p["alpha"] + Rational(j + k), j + k + r);
                }
                return v;
              },
              [n, k, r](const Point& p) { return binomial(p["alpha"] + Rational(k), n + k + r); }));
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(j1));
}

void add_combinatorial(std::vector<IdentityEntry>& out) {
  auto b3 = make_entry("C.b3", "b3", "sequences", "Fuss-Catalan transform, m >= n", {"q"});
  b3.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    for (long s = 0; s <= 3; ++s) {
      for (long n = 0; n <= N; ++n) {
        for (long m = n; m <= std::max(8L, n); ++m) {
          Terms a;
          for (long k = 0; k <= n; ++k) a.push_back(fuss_catalan(m, s, k));
          Terms coeff;
          for (long j = 0; j <= n; ++j) {
            coeff.push_back(sign_power(j) * binomial(n, j) * fuss_catalan(m - j, s, j * (s - 1) + n));
          }
          const QPoly rhs(coeff);
          cases.push_back(make_case(Label()("s", s)("n", n)("m", m),
                                    {ctx.var("q", static_cast<int>(n), {}, univariate_points)},
                                    [a, n](const Point& p) { return bernoulli_sum(a, n, p["q"]); },
                                    [rhs](const Point& p) { return rhs(p["q"]); }));
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(b3));

  auto r = make_entry("C.r", "r", "sequences", "q-integer transform in closed form", {"p", "q"});
  r.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    for (long rr = 0; rr <= ctx.bounds().r_max; ++rr) {
      for (long n = 0; n <= ctx.bounds().n_max; ++n) {
        cases.push_back(make_case(
            Label()("r", rr)("n", n),
            {ctx.var("p", static_cast<int>(n + rr), {Rational(1)}), ctx.var("q", static_cast<int>(n))},
            [n, rr](const Point& pt) {
              Terms a;
              for (long k = 0; k <= n; ++k) a.push_back(qint(k + rr, pt["p"]));
              return bernoulli_sum(a, n, pt["q"]);
            },
            [n, rr](const Point& pt) {
              const Rational p = pt["p"];
              const Rational one(1);
              return (one - p.pow(rr) * (p + pt["q"] * (one - p)).pow(n)) / (one - p);
            }));
      }
    }
    return cases;
  };
  out.push_back(std::move(r));

  auto l1 = make_entry("C.l1", "l1", "sequences", "Bell polynomial conjugate transform", {"x", "q"});
  l1.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    for (long n = 0; n <= ctx.bounds().n_max; ++n) {
      Memo<Terms> memo;
      auto bell = [memo, n](const Rational& x) mutable -> const Terms& {
        return memo.get(x, [&] {
          Terms t;
          for (long k = 0; k <= n + 1; ++k) t.push_back(bell_poly(k, x));
          return t;
        });
      };
      cases.push_back(make_case(
          Label()("n", n), {ctx.var("x", static_cast<int>(n + 1)), ctx.var("q", static_cast<int>(n))},
          [bell, n](const Point& p) mutable {
            const Terms& b = bell(p["x"]);
            Terms w;
            for (long k = 0; k <= n; ++k) w.push_back(sign_power(k) * b[k]);
            return p["x"] * weighted(w, n, p["q"], Rational(1) - p["q"]);
          },
          [bell, n](const Point& p) mutable {
            const Terms& b = bell(p["x"]);
            Rational v;
            for (long j = 0; j <= n; ++j) v += sign_power(j) * binomial(n, j) * b[j + 1] * p["q"].pow(j);
            return v;
          }));
    }
    return cases;
  };
  out.push_back(std::move(l1));

  auto p1 = make_entry("C.p1", "p1", "sequences", "geometric polynomial conjugate transform", {"x", "q"});
  p1.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    for (long n = 0; n <= ctx.bounds().n_max; ++n) {
      Memo<Terms> memo;
      auto geo = [memo, n](const Rational& x) mutable -> const Terms& {
        return memo.get(x, [&] {
          Terms t;
          for (long k = 0; k <= n; ++k) t.push_back(geometric_poly(k, x));
          return t;
        });
      };
      cases.push_back(make_case(
          Label()("n", n), {ctx.var("x", static_cast<int>(n + 1)), ctx.var("q", static_cast<int>(n))},
          [geo, n](const Point& p) mutable {
            const Terms& g = geo(p["x"]);
            Terms w;
            for (long k = 0; k <= n; ++k) w.push_back(sign_power(k) * g[k]);
            return p["x"] * weighted(w, n, p["q"], Rational(1) - p["q"]);
          },
          [geo, n](const Point& p) mutable {
            const Terms& g = geo(p["x"]);
            Rational v;
            for (long j = 0; j <= n; ++j) v += binomial(n, j) * g[j] * (-p["q"]).pow(j);
            return (p["x"] + Rational(1)) * v - Rational(1);
          }));
    }
    return cases;
  };
  out.push_back(std::move(p1));
}

/// Basis representation at q = 1 (conjugate and signed where noted) against a value.
IdentityCase limit_basis_case(std::string label, const SequenceSpec& s, long n, bool conjugate, Rational expected) {
  const Terms a = s.terms(n + 1);
  Rational at1 = basis_representation(a, n, conjugate)(Rational(1));
  if (conjugate) at1 *= sign_power(n);
  return value_case(std::move(label), at1, std::move(expected));
}

std::vector<IdentityCase> limit_cases(const Context& ctx, bool meixner_closed_form) {
  std::vector<IdentityCase> cases;
  const long N = ctx.bounds().n_max;
  const long R = ctx.bounds().r_max;
  const auto def = ctx.config().meixner;

  for (long n = 0; n <= N; ++n) {
    for (long r = 0; r <= R; ++r) {
      for (const auto& c : fibo_c_values()) {
        const seq::FiboLike f{Rational(2), Rational(-1, 3), c, r};
        cases.push_back(limit_basis_case(Label()("line", "fibolike")("form", "basis")("c", c)("r", r)("n", n),
                                         SequenceSpec(f), n, false, seq::fibolike_value(f, r)));
        cases.push_back(make_case(
            Label()("line", "fibolike")("form", "closed")("c", c)("r", r)("n", n), {ctx.var("a", 1), ctx.var("b", 1)},
            [c, n, r](const Point& p) {
              Rational v;
              for (long j = 0; j <= n; ++j) v += sign_power(j) * binomial(n, j) * fibo(p, c, n + r - 2 * j) * c.pow(j);
              return v;
            },
            [c, r](const Point& p) { return fibo(p, c, r); }));
      }

      const Rational alpha(7, 2);
      cases.push_back(limit_basis_case(Label()("line", "binomalt")("form", "basis")("r", r)("n", n),
                                       SequenceSpec(seq::BinomAlt{alpha, r}), n, false, binomial(alpha, r)));
      cases.push_back(make_case(
          Label()("line", "binomalt")("form", "closed")("r", r)("n", n), {ctx.var("alpha", static_cast<int>(n + r))},
          [n, r](const Point& p) {
            Rational v;
            for (long j = 0; j <= n; ++j) {
              v += sign_power(n - j) * binomial(n, j) * binomial(p["alpha"] + Rational(j), r + n);
            }
            return v;
          },
          [r](const Point& p) { return binomial(p["alpha"], r); }));

      for (const auto& la : laguerre_alphas()) {
        const Rational x(2, 3);
        cases.push_back(limit_basis_case(
            Label()("line", "laguerre-degree")("form", "basis")("alpha", la)("r", r)("n", n),
            SequenceSpec(seq::Laguerre{la, x, seq::LaguerreMode::degree, r}), n, false, laguerre(r, la, x)));
        cases.push_back(limit_basis_case(
            Label()("line", "laguerre-order")("form", "basis")("alpha", la)("r", r)("n", n),
            SequenceSpec(seq::Laguerre{la, x, seq::LaguerreMode::order, r}), n, false, laguerre(r, la, x)));
        cases.push_back(make_case(
            Label()("line", "laguerre-degree")("form", "closed")("alpha", la)("r", r)("n", n),
            {ctx.var("x", static_cast<int>(n + r))},
            [la, n, r](const Point& p) {
              Rational v;
              for (long j = 0; j <= n; ++j) v += sign_power(j) * binomial(n, j) * laguerre(n + r, la - Rational(j), p["x"]);
              return v;
            },
            [la, r](const Point& p) { return laguerre(r, la, p["x"]); }));
        cases.push_back(make_case(
            Label()("line", "laguerre-order")("form", "closed")("alpha", la)("r", r)("n", n),
            {ctx.var("x", static_cast<int>(r))},
            [la, n, r](const Point& p) {
              Rational v;
              for (long j = 0; j <= n; ++j) v += sign_power(j) * binomial(n, j) * laguerre(r - j, la + Rational(n), p["x"]);
              return v;
            },
            [la, r](const Point& p) { return laguerre(r, la, p["x"]); }));
      }

      for (const auto& mp : meixner_params()) {
        cases.push_back(limit_basis_case(
            Label()("line", "meixner")("form", "basis")("x", mp.x)("alpha", mp.alpha)("beta", mp.beta)("r", r)("n", n),
            SequenceSpec(seq::Meixner{mp.x, mp.alpha, mp.beta, r, def}), n, false,
            meixner(r, mp.x, mp.alpha, mp.beta, def)));
        if (meixner_closed_form) {
          Rational v;
          for (long j = 0; j <= n; ++j) {
            v += sign_power(j) * binomial(n, j) * meixner_factor(mp, j) *
                 meixner(n + r - j, mp.x, mp.alpha + Rational(j), mp.beta, def);
          }
          cases.push_back(value_case(
              Label()("line", "meixner")("form", "closed")("x", mp.x)("alpha", mp.alpha)("beta", mp.beta)("r", r)("n", n),
              v, meixner(r, mp.x, mp.alpha, mp.beta, def)));
        }
      }
    }

    for (long s = 0; s <= 3; ++s) {
      for (long m = std::max(n, 1L); m <= std::max(8L, n); ++m) {
        cases.push_back(limit_basis_case(Label()("line", "fusscatalan")("form", "basis")("s", s)("m", m)("n", n),
                                         SequenceSpec(seq::FussCatalan{m, s}), n, false, fuss_catalan(m, s, 0)));
        Rational v;
        for (long j = 0; j <= n; ++j) v += sign_power(j) * binomial(n, j) * fuss_catalan(m - j, s, j * (s - 1) + n);
        cases.push_back(value_case(Label()("line", "fusscatalan")("form", "closed")("s", s)("m", m)("n", n), v, Rational(0)));
      }
    }

    for (const auto& x : {Rational(3, 2), Rational(-1, 3), Rational(2)}) {
      cases.push_back(limit_basis_case(Label()("line", "bell")("form", "basis")("x", x)("n", n),
                                       SequenceSpec(seq::BellAlt{x}), n, true, x * bell_poly(n, x)));
      cases.push_back(limit_basis_case(Label()("line", "geometric")("form", "basis")("x", x)("n", n),
                                       SequenceSpec(seq::GeomAlt{x}), n, true, x * geometric_poly(n, x)));
    }
    const GridVariable x = ctx.var("x", static_cast<int>(n + 1));
    cases.push_back(make_case(
        Label()("line", "bell")("form", "closed")("n", n), {x},
        [n](const Point& p) {
          Rational v;
          for (long j = 0; j <= n; ++j) v += sign_power(n - j) * binomial(n, j) * bell_poly(j + 1, p["x"]);
          return v;
        },
        [n](const Point& p) { return p["x"] * bell_poly(n, p["x"]); }));
    cases.push_back(make_case(
        Label()("line", "geometric")("form", "closed")("n", n), {x},
        [n](const Point& p) {
          Rational v;
          for (long j = 0; j <= n; ++j) v += sign_power(n - j) * binomial(n, j) * geometric_poly(j, p["x"]);
          return (p["x"] + Rational(1)) * v;
        },
        [n](const Point& p) { return p["x"] * geometric_poly(n, p["x"]) + sign_power(n); }));
  }
  return cases;
}

}  // namespace

std::optional<GateFailure> meixner_gate(const Context& ctx) {
  const auto def = ctx.config().meixner;
  for (const auto& mp : meixner_params()) {
    for (long n = 1; n <= 4; ++n) {
      const Rational lhs = meixner(n, mp.x, mp.alpha, mp.beta, def) - meixner(n - 1, mp.x, mp.alpha, mp.beta, def);
      const Rational rhs = meixner_factor(mp, 1) * meixner(n - 1, mp.x, mp.alpha + Rational(1), mp.beta, def);
      if (lhs != rhs) {
        const Point at({{"x", mp.x}, {"alpha", mp.alpha}, {"beta", mp.beta}, {"n", Rational(n)}});
        return GateFailure{"single-step Meixner difference relation fails for the configured definition at " + at.str(),
                           GridWitness{at, lhs, rhs}};
      }
    }
  }
  return std::nullopt;
}

void add_families(std::vector<IdentityEntry>& out) {
  add_fibonacci(out);
  add_orthogonal(out);
  add_binomial(out);
  add_combinatorial(out);

  auto q1 = make_entry("R.qto1", "qto1", "sequences", "limits of the family identities at q = 1", {});
  q1.cases = [](const Context& ctx) { return limit_cases(ctx, !meixner_gate(ctx).has_value()); };
  q1.note = [](const Context& ctx) -> std::string {
    if (meixner_gate(ctx)) return "meixner closed-form line not run: difference-relation gate failed";
    return "";
  };
  out.push_back(std::move(q1));
}

}  // namespace btx::entries
