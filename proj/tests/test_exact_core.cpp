#include <catch_amalgamated.hpp>

#include "btx/error.hpp"
#include "btx/grid.hpp"
#include "btx/polynomial.hpp"
#include "btx/series.hpp"
#include "support.hpp"

using namespace btx;
using btx::test::R;
using btx::test::RationalGen;

TEST_CASE("rational arithmetic and canonical form", "[exact-core]") {
  CHECK(R("1/2") + R("1/3") == R("5/6"));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(R(" -10/4 ").str() == "-5/2");
  CHECK_THROWS_AS(R("3/7") / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(R("1/2x"), ConfigError);
  CHECK_THROWS_AS(R(""), ConfigError);
  CHECK(R("7").is_integer());
  CHECK(R("-7/3").to_double() == Catch::Approx(-7.0 / 3));
  CHECK_THROWS_AS(R("1/3").to_long(), DomainError);
  CHECK(R("2/3").pow(-2) == R("9/4"));
  CHECK_THROWS_AS(Rational(0).pow(-1), DomainError);
}

TEST_CASE("rational ring axioms on random inputs", "[exact-core]") {
  RationalGen gen(11);
  for (int i = 0; i < 500; ++i) {
    const Rational a = gen(), b = gen(), c = gen();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    CHECK(Rational::parse(a.str()) == a);
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("rational stays canonical", "[exact-core]") {
  RationalGen gen(12, 40);
  for (int i = 0; i < 300; ++i) {
    const Rational v = gen() * gen() + gen();
    const mpz_class num = v.raw().get_num(), den = v.raw().get_den();
    CHECK(den > 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    CHECK(g == 1);
  }
}

TEST_CASE("polynomial evaluation", "[exact-core]") {
  const Polynomial p{0, -1, 1};
  CHECK(p(R("1/2")) == R("-1/4"));
  CHECK(p(0) == Rational(0));
  const Polynomial correction{0, 1, R("1/2")};
  CHECK(correction(R("1/2")) == R("5/8"));
  CHECK(Polynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(Polynomial{0, 0}.is_zero());
  CHECK(Polynomial{0, 0}.degree() == -1);
  CHECK(Polynomial{1, 0, 3}.derivative() == Polynomial{0, 6});
}

TEST_CASE("polynomial evaluation is a ring homomorphism", "[exact-core]") {
  RationalGen gen(13);
  for (int i = 0; i < 200; ++i) {
    const Polynomial p(gen.vector(static_cast<std::size_t>(gen.integer(0, 6))));
    const Polynomial r(gen.vector(static_cast<std::size_t>(gen.integer(0, 6))));
    const Rational q = gen();
    CHECK((p + r)(q) == p(q) + r(q));
    CHECK((p * r)(q) == p(q) * r(q));
    CHECK((p - p).is_zero());
    if (!p.is_zero()) CHECK(p.coeffs().back() != Rational(0));
  }
}

TEST_CASE("series composition", "[exact-core]") {
  const Series geo = Series::geometric(5);
  CHECK(compose(geo, Series(5, {0, 1})) == geo);
  CHECK(compose(Series::geometric(3), Series(3, {0, 2})).coeffs() == std::vector<Rational>{1, 2, 4, 8});

  const Rational q = R("1/3");
  const Series inner = Series(2, {0, 1 - q}) * Series::geometric(2, q);
  CHECK(compose(Series::geometric(2), inner).coeffs() == std::vector<Rational>{1, R("2/3"), R("2/3")});

  CHECK_THROWS_AS(compose(geo, Series(5, {1, 1})), DomainError);
  CHECK_THROWS(compose(geo, Series(4, {0, 1})));
}

TEST_CASE("series analytic operations", "[exact-core]") {
  CHECK(reciprocal(Series(2, {1, 1, R("1/2")})).coeffs() == std::vector<Rational>{1, -1, R("1/2")});
  CHECK(log(Series(3, {1, 1})).coeffs() == std::vector<Rational>{0, 1, R("-1/2"), R("1/3")});
  const Series shifted_exp(2, {1, R("1/2"), R("1/6")});
  CHECK(pow(shifted_exp, -1).coeffs() == std::vector<Rational>{1, R("-1/2"), R("1/12")});
  CHECK(series_analytic(shifted_exp, AnalyticOp::pow, -1) == pow(shifted_exp, -1));
  CHECK(exp(Series(4, {0, 1})) == Series::exponential(4));
  CHECK_THROWS_AS(log(Series(3, {2, 1})), DomainError);
  CHECK_THROWS_AS(exp(Series(3, {1, 1})), DomainError);
  CHECK_THROWS_AS(reciprocal(Series(3, {0, 1})), DomainError);
}

TEST_CASE("series exp/log inverses and power laws", "[exact-core]") {
  RationalGen gen(14, 5);
  for (int i = 0; i < 40; ++i) {
    const std::size_t order = static_cast<std::size_t>(gen.integer(1, 7));
    std::vector<Rational> c = gen.vector(order + 1);
    c[0] = 1;
    const Series s(order, c);
    c[0] = 0;
    const Series u(order, c);
    CHECK(exp(log(s)) == s);
    CHECK(log(exp(u)) == u);
    const Rational e1 = gen(), e2 = gen();
    CHECK(pow(s, e1 + e2) == pow(s, e1) * pow(s, e2));
    CHECK(s * reciprocal(s) == Series(order, {1}));
    CHECK(s.derivative().integral() + Series(order, {s[0]}) == s);
  }
}

TEST_CASE("grid construction enforces the certificate", "[exact-core]") {
  CHECK_THROWS_AS(GridSpec({GridVariable{"q", {0, 1}, 2, {}}}), ConfigError);
  CHECK_THROWS_AS(GridSpec({GridVariable{"q", {0, 1, 1}, 1, {}}}), ConfigError);
  CHECK_THROWS_AS(GridSpec({GridVariable{"q", {0, 1, 2}, 1, {1}}}), ConfigError);
  CHECK(GridSpec().size() == 1);
  CHECK(GridSpec({GridVariable{"x", {0, 1}, 1, {}}, GridVariable{"q", {0, 1, 2}, 2, {}}}).size() == 6);

  const auto pts = grid_points(12, default_grid_values(), {1});
  CHECK(pts.size() == 12);
  CHECK(std::find(pts.begin(), pts.end(), Rational(1)) == pts.end());
  const auto unit = grid_points(12, default_grid_values(), {}, PointDomain::unit_interval);
  for (const auto& p : unit) CHECK((p >= 0 && p <= 1));
  CHECK_THROWS_AS(grid_points(3, {0, 1, 0}), ConfigError);
}

TEST_CASE("grid identity check", "[exact-core]") {
  const auto sq = [](const Point& p) { return p["q"] * p["q"]; };
  const auto id = [](const Point& p) { return p["q"]; };
  CHECK(check_identity_on_grid(sq, sq, GridSpec({GridVariable{"q", {0, 1, 2}, 2, {}}})).passed());

  const auto out = check_identity_on_grid(sq, id, GridSpec({GridVariable{"q", {0, 1, 2}, 2, {}}}));
  REQUIRE(out.kind == GridOutcome::Kind::fail);
  CHECK(out.witness->point["q"] == Rational(2));
  CHECK(out.witness->lhs == Rational(4));
  CHECK(out.witness->rhs == Rational(2));

  const auto pole = [](const Point& p) { return Rational(1) / p["q"]; };
  const auto bad = check_identity_on_grid(pole, pole, GridSpec({GridVariable{"q", {0, 1}, 1, {}}}));
  CHECK(bad.kind == GridOutcome::Kind::config_error);
}

TEST_CASE("grid check is sound against constructed counterexamples", "[exact-core]") {
  // A nonzero product of linear factors vanishing on d of the d+1 points per variable.
  RationalGen gen(15);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = static_cast<int>(gen.integer(1, 4));
    const auto xs = grid_points(static_cast<std::size_t>(d) + 1, default_grid_values());
    const auto ys = grid_points(static_cast<std::size_t>(d) + 1, {R("1/7"), R("-2/7"), R("3/7"), R("5/7"), R("9/7")});
    const auto rx = std::vector<Rational>(xs.begin(), xs.begin() + d);
    const auto ry = std::vector<Rational>(ys.begin(), ys.begin() + d);
    const Rational scale = gen.nonzero();
    const auto lhs = [&](const Point& p) {
      Rational v = scale;
      for (const auto& r : rx) v *= p["x"] - r;
      for (const auto& r : ry) v *= p["y"] - r;
      return v;
    };
    const auto zero = [](const Point&) { return Rational(0); };
    const GridSpec grid({GridVariable{"x", xs, d, {}}, GridVariable{"y", ys, d, {}}});
    const auto out = check_identity_on_grid(lhs, zero, grid);
    REQUIRE(out.kind == GridOutcome::Kind::fail);
    CHECK(out.witness->point["x"] == xs.back());
    CHECK(out.witness->point["y"] == ys.back());
    CHECK(out.points_evaluated == grid.size());
  }
}
