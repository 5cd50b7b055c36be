#include "entries.hpp"
#include "btx/probability.hpp"
#include "btx/transform.hpp"

namespace btx::entries {

void add_intro(std::vector<IdentityEntry>& out) {
  auto a = make_entry("BT.a", "a", "transform", "harmonic transform equals H_n minus sum q^j/j", {"q"});
  a.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    const Terms h = SequenceSpec(seq::Harmonic{}).terms(N + 1);
    for (long n = 0; n <= N; ++n) {
      cases.push_back(make_case(
          Label()("n", n), {ctx.var("q", static_cast<int>(n), {}, univariate_points)},
          [h, n](const Point& p) { return bernoulli_sum(h, n, p["q"]); },
          [n](const Point& p) {
            Rational v = harmonic(n);
            for (long j = 1; j <= n; ++j) v -= p["q"].pow(j) / Rational(j);
            return v;
          }));
    }
    return cases;
  };
  out.push_back(std::move(a));

  auto b = make_entry("BT.b", "b", "transform", "bivariate harmonic identity in x and y", {"x", "y"});
  b.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    const Terms h = SequenceSpec(seq::Harmonic{}).terms(N + 1);
    for (long n = 0; n <= N; ++n) {
      const int d = static_cast<int>(n);
      cases.push_back(make_case(
          Label()("n", n), {ctx.var("x", d), ctx.var("y", d)},
          [h, n](const Point& p) { return weighted(h, n, p["x"], p["y"]); },
          [n](const Point& p) {
            const Rational s = p["x"] + p["y"];
            Rational v = s.pow(n) * harmonic(n);
            for (long j = 1; j <= n; ++j) v -= p["y"].pow(j) / Rational(j) * s.pow(n - j);
            return v;
          }));
    }
    return cases;
  };
  out.push_back(std::move(b));

  auto kom = make_entry("BT.kom", "kom", "transform", "order-r harmonic transform through D_n(r,j)", {"q"});
  kom.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    for (long r = 1; r <= std::max(1L, ctx.bounds().r_max); ++r) {
      const Terms h = SequenceSpec(seq::GenHarmonic{r, 0}).terms(N + 1);
      for (long n = 0; n <= N; ++n) {
        std::vector<Rational> d(static_cast<std::size_t>(n) + 1);
        for (long j = 1; j <= n; ++j) d[j] = harmonic_d(n, r, j);
        cases.push_back(make_case(
            Label()("r", r)("n", n), {ctx.var("q", static_cast<int>(n), {}, univariate_points)},
            [h, n](const Point& p) { return bernoulli_sum(h, n, p["q"]); },
            [h, d, n](const Point& p) {
              Rational v = h[n];
              for (long j = 1; j <= n; ++j) v -= d[j] * p["q"].pow(j) / Rational(j);
              return v;
            }));
      }
    }
    return cases;
  };
  out.push_back(std::move(kom));
}

void add_basis(std::vector<IdentityEntry>& out) {
  auto g = make_entry("P1.g", "g", "transform", "S_n(q) is the mean of a_{Z(n)} for Z(n) ~ Binomial(n, 1-q)", {"q"});
  g.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    for (const auto& s : ctx.sequences(catalog_sequences())) {
      const Terms a = s.terms(N + 1);
      for (long n = 0; n <= N; ++n) {
        const Terms head(a.begin(), a.begin() + n + 1);
        cases.push_back(make_case(
            Label()("seq", s.str())("n", n), {ctx.unit_var("q", static_cast<int>(n))},
            [a, n](const Point& p) { return direct_transform(a, n, p["q"]); },
            [head, n](const Point& p) { return expect(head, binomial_pmf(n, Rational(1) - p["q"])); }));
      }
    }
    return cases;
  };
  out.push_back(std::move(g));

  auto c = make_entry("P1.c", "c", "transform", "S_n(q) in the basis q^j through M(n,j), and (1-q nabla)^n a_n", {"q"});
  c.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    for (const auto& s : ctx.sequences(catalog_sequences())) {
      const Terms a = s.terms(N + 1);
      for (long n = 0; n <= N; ++n) {
        std::vector<Rational> diffs;
        for (long j = 0; j <= n; ++j) diffs.push_back(ctx.diff(a, n, j));
        const QPoly basis = basis_from_differences(diffs);
        const QPoly op = operator_form(a, n);
        auto direct = [a, n](const Point& p) { return direct_transform(a, n, p["q"]); };
        const GridVariable q = ctx.var("q", static_cast<int>(n), {}, univariate_points);
        cases.push_back(make_case(Label()("seq", s.str())("n", n)("form", "basis"), {q}, direct,
                                  [basis](const Point& p) { return basis(p["q"]); }));
        cases.push_back(make_case(Label()("seq", s.str())("n", n)("form", "operator"), {q}, direct,
                                  [op](const Point& p) { return op(p["q"]); }));
      }
    }
    return cases;
  };
  out.push_back(std::move(c));

  auto cbis = make_entry("P1.cbis", "cbis", "transform", "conjugate transform in the basis q^j through Mbar(j)", {"q"});
  cbis.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    for (const auto& s : ctx.sequences(catalog_sequences())) {
      const Terms a = s.terms(N + 1);
      for (long n = 0; n <= N; ++n) {
        const QPoly basis = basis_representation(a, n, true);
        cases.push_back(make_case(
            Label()("seq", s.str())("n", n), {ctx.var("q", static_cast<int>(n), {}, univariate_points)},
            [a, n](const Point& p) { return direct_transform(a, n, p["q"], true); },
            [basis](const Point& p) { return basis(p["q"]); }));
      }
    }
    return cases;
  };
  out.push_back(std::move(cbis));

  auto n2 = make_entry("P1.n2", "n2", "transform", "conjugate transform equals S_n(1-q)", {"q"});
  n2.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    for (const auto& s : ctx.sequences(catalog_sequences())) {
      const Terms a = s.terms(N + 1);
      for (long n = 0; n <= N; ++n) {
        cases.push_back(make_case(
            Label()("seq", s.str())("n", n), {ctx.var("q", static_cast<int>(n), {}, univariate_points)},
            [a, n](const Point& p) { return direct_transform(a, n, p["q"], true); },
            [a, n](const Point& p) { return bernoulli_sum(a, n, Rational(1) - p["q"]); }));
      }
    }
    return cases;
  };
  out.push_back(std::move(n2));

  auto h = make_entry("P1.h", "h", "sequences", "M(n,j) and Mbar(j) sums equal iterated differences", {});
  h.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    for (const auto& s : ctx.sequences(catalog_sequences())) {
      const Terms a = s.terms(N + 1);
      std::vector<Rational> back = a;
      std::vector<Rational> fwd = a;
      for (long j = 0; j <= N; ++j) {
        // back[k] now holds nabla^j a_k for k >= j; fwd[k] holds Delta^j a_k.
        for (long n = j; n <= N; ++n) {
          cases.push_back(value_case(Label()("seq", s.str())("n", n)("j", j), ctx.diff(a, n, j), back[n]));
        }
        cases.push_back(value_case(Label()("seq", s.str())("dual", j), dual_diff(a, j), sign_power(j) * fwd[0]));
        for (long k = N; k > j; --k) back[k] -= back[k - 1];
        for (long k = 0; k + j < N; ++k) fwd[k] = fwd[k + 1] - fwd[k];
      }
    }
    return cases;
  };
  out.push_back(std::move(h));

  auto ri = make_entry("R.i", "i", "sequences", "nabla M(n,k) = M(n,k+1)", {});
  ri.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    for (const auto& s : ctx.sequences(catalog_sequences())) {
      const Terms a = s.terms(N + 1);
      for (long n = 1; n <= N; ++n) {
        for (long k = 0; k < n; ++k) {
          cases.push_back(value_case(Label()("seq", s.str())("n", n)("k", k),
                                     ctx.diff(a, n, k) - ctx.diff(a, n - 1, k), ctx.diff(a, n, k + 1)));
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(ri));

  auto rj = make_entry("R.j", "j", "sequences", "nabla^j M(n,k) = M(n,k+j)", {});
  rj.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    for (const auto& s : ctx.sequences(catalog_sequences())) {
      const Terms a = s.terms(N + 1);
      for (long n = 1; n <= N; ++n) {
        for (long k = 0; k <= n; ++k) {
          for (long j = 0; j + k <= n; ++j) {
            Rational lhs;
            for (long l = 0; l <= j; ++l) lhs += sign_power(l) * binomial(j, l) * ctx.diff(a, n - l, k);
            cases.push_back(
                value_case(Label()("seq", s.str())("n", n)("k", k)("j", j), lhs, ctx.diff(a, n, k + j)));
          }
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(rj));

  auto k = make_entry("P1.k", "k", "transform", "shifted higher-order harmonic numbers in the basis q^j", {"q"});
  k.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long N = ctx.bounds().n_max;
    const std::vector<Rational> xs = {Rational(0), Rational(1, 3), Rational(1, 2), Rational(3, 2)};
    for (long r = 1; r <= std::max(1L, ctx.bounds().r_max); ++r) {
      for (const auto& x : xs) {
        const Terms a = SequenceSpec(seq::GenHarmonic{r, x}).terms(N + 1);
        for (long n = 0; n <= N; ++n) {
          std::vector<Rational> m(static_cast<std::size_t>(n) + 1);
          m[0] = a[n];
          for (long j = 1; j <= n; ++j) {
            for (long l = 0; l < j; ++l) {
              m[j] += sign_power(l) * binomial(j - 1, l) / (Rational(n - l) + x).pow(r);
            }
          }
          const QPoly basis = basis_from_differences(m);
          cases.push_back(make_case(
              Label()("r", r)("x", x)("n", n), {ctx.var("q", static_cast<int>(n), {}, univariate_points)},
              [a, n](const Point& p) { return direct_transform(a, n, p["q"]); },
              [basis](const Point& p) { return basis(p["q"]); }));
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(k));

  auto i1 = make_entry("R.i1", "i1", "sequences", "M and Mbar related by alternating binomial sums", {});
  i1.cases = [](const Context& ctx) {
    std::vector<IdentityCase> cases;
    const long K = 6;
    for (const auto& s : ctx.sequences(catalog_sequences())) {
      const Terms a = s.terms(2 * K + 1);
      for (long n = 0; n <= K; ++n) {
        for (long k = 0; k <= K; ++k) {
          Rational first;
          Rational second;
          for (long j = 0; j <= n; ++j) {
            first += sign_power(k - j) * binomial(n, j) * ctx.diff(a, n + k, j + k);
            second += sign_power(k - j) * binomial(n, j) * dual_diff(a, j + k);
          }
          cases.push_back(value_case(Label()("seq", s.str())("n", n)("k", k)("form", 1), first, dual_diff(a, k)));
          cases.push_back(
              value_case(Label()("seq", s.str())("n", n)("k", k)("form", 2), second, ctx.diff(a, n + k, k)));
        }
      }
    }
    return cases;
  };
  out.push_back(std::move(i1));
}

}  // namespace btx::entries
