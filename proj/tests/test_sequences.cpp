#include <catch_amalgamated.hpp>

#include "btx/appell_family.hpp"
#include "btx/error.hpp"
#include "btx/grid.hpp"
#include "btx/sequence.hpp"
#include "btx/special.hpp"
#include "btx/transform.hpp"
#include "support.hpp"

using namespace btx;
using btx::test::R;

namespace {

SequenceSpec parse(const char* text) { return SequenceSpec::parse(text); }

std::vector<Rational> sample(std::size_t count) { return grid_points(count, default_grid_values()); }

}  // namespace

TEST_CASE("special functions", "[sequences]") {
  CHECK(stirling2(4, 2) == Rational(7));
  CHECK(stirling2_row(3) == std::vector<Rational>{0, 1, 3, 1});
  for (const auto& x : sample(6)) {
    CHECK(bell_poly(3, x) == x + 3 * x * x + x * x * x);
    CHECK(geometric_poly(2, x) == x + 2 * x * x);
    CHECK(laguerre(1, R("3/4"), x) == R("3/4") + 1 - x);
    CHECK(laguerre(-1, R("3/4"), x) == Rational(0));
  }
  CHECK(rising(R("1/2"), 3) == R("15/8"));
  CHECK(falling(R("1/2"), 3) == R("3/8"));
  CHECK(binomial(R("-1/2"), 2) == R("3/8"));
  CHECK(binomial(5, 7) == Rational(0));
  CHECK(binomial(R("7/2"), -1) == Rational(0));
  CHECK(factorial(6) == Rational(720));
  CHECK(harmonic(3) == R("11/6"));
  CHECK(gen_harmonic(2, 2) == R("5/4"));
  CHECK(gen_harmonic(2, 1, R("1/2")) == R("2/3") + R("2/5"));
  CHECK_THROWS_AS(gen_harmonic(3, 1, -2), DomainError);
  CHECK(qint(2, 2) == Rational(3));
  CHECK(qint(0, R("1/2")) == Rational(0));
  CHECK(fuss_catalan(1, 1, 1) == Rational(1));
  CHECK(fuss_catalan(3, 2, 1) == Rational(5));
  CHECK(fuss_catalan(0, 2, 0) == Rational(1));
  CHECK(fuss_catalan(2, 3, 0) == Rational(0));
  CHECK(fuss_catalan(2, 0, 5) == binomial(5, 2));
  CHECK(harmonic_d(2, 1, 1) == Rational(1));
  CHECK_THROWS_AS(meixner(2, R("1/2"), R("5/2"), 0), DomainError);
}

TEST_CASE("Bell and geometric polynomial relations", "[sequences]") {
  for (const auto& x : sample(10)) {
    for (long j = 0; j <= 8; ++j) {
      Rational s;
      for (long l = 0; l <= j; ++l) s += binomial(j, l) * bell_poly(l, x);
      CHECK(bell_poly(j + 1, x) == x * s);
    }
    for (long n = 1; n <= 8; ++n) {
      Rational s;
      for (long k = 0; k <= n; ++k) s += binomial(n, k) * geometric_poly(k, x);
      CHECK((x + 1) * geometric_poly(n, x) == x * s);
    }
  }
}

TEST_CASE("D coefficients against differences of generalized harmonic numbers", "[sequences]") {
  for (long r = 1; r <= 3; ++r) {
    std::vector<Rational> a;
    for (long k = 0; k <= 8; ++k) a.push_back(gen_harmonic(k, r));
    for (long n = 1; n <= 8; ++n) {
      for (long j = 1; j <= n; ++j) {
        CHECK(harmonic_d(n, r, j) == sign_power(j + 1) * j * binomial(n, j) * backward_difference(a, n, j));
      }
    }
  }
}

TEST_CASE("sequence terms", "[sequences]") {
  CHECK(parse("harmonic").term(2) == R("3/2"));
  CHECK(parse("fusscatalan:m=1,s=1").term(1) == Rational(1));
  CHECK(parse("qint:p=2").term(2) == Rational(3));
  CHECK(seq::fibolike_value(seq::FiboLike{0, 1, 1, 0}, -1) == Rational(1));
  CHECK(parse("fibonacci").terms(7) == std::vector<Rational>{0, 1, 1, 2, 3, 5, 8});
  CHECK(parse("lucas").terms(4) == std::vector<Rational>{2, 1, 3, 4});
  CHECK(parse("binomalt:alpha=5").terms(3) == std::vector<Rational>{1, -5, 10});
  CHECK(parse("usertable:0,1,4,9").term(3) == Rational(9));
  CHECK(parse("genharmonic:r=2,x=1/2").term(1) == R("4/9"));
  CHECK(parse("bellalt:x=1").term(3) == Rational(-5));
  CHECK(parse("geomalt:x=1").term(2) == Rational(3));
  CHECK(parse("laguerre:alpha=1/2,x=2/3,mode=order,r=1").term(2) == R("7/2") - R("2/3"));

  const auto scaled = parse("appellscaled:lambda=2,x=1/3,family=[bernoulli:a=1]");
  CHECK(scaled.term(2) == Rational(4) * appell_value(AppellSpec::bernoulli(1), 2, R("1/3")));
  const auto nested = parse("transformof:at=1/3,inner=[harmonic]");
  for (long n = 0; n <= 5; ++n) CHECK(nested.term(n) == direct_transform(parse("harmonic"), n, R("1/3")));
}

TEST_CASE("sequence specs round-trip and reject bad parameters", "[sequences]") {
  for (const auto& s : sequence_catalog()) {
    const auto again = SequenceSpec::parse(s.str());
    CHECK(again.str() == s.str());
    CHECK(again.terms(8) == s.terms(8));
  }
  CHECK(sequence_catalog().size() == 13);
  CHECK_THROWS_AS(parse("nosuch"), ConfigError);
  CHECK_THROWS_AS(parse("qint:p=2,bogus=1"), ConfigError);
  CHECK_THROWS_AS(parse("fibolike:a=0,b=1,c=0"), DomainError);
  CHECK_THROWS_AS(parse("qint:p=1"), DomainError);
  CHECK_THROWS_AS(parse("genharmonic:r=1,x=-2"), DomainError);
  CHECK_THROWS_AS(parse("laguerre:alpha=1,x=1,mode=sideways"), ConfigError);
  CHECK_THROWS_AS(parse("meixner:x=1,alpha=2,beta=0"), DomainError);
  CHECK_THROWS_AS(parse("transformof:at=1/2,inner=[transformof:at=1/2,inner=[transformof:at=1/2,inner=[transformof:"
                        "at=1/2,inner=[harmonic]]]]"),
                  ConfigError);
  CHECK(parse("transformof:at=1/2,inner=[transformof:at=1/2,inner=[harmonic]]").depth() == 2);
  CHECK_THROWS_AS(parse("harmonic").term(-1), DomainError);
  CHECK_THROWS_AS(parse("usertable:1,2").term(2), ConfigError);
}

TEST_CASE("difference table examples", "[sequences]") {
  CHECK(diff_table(parse("usertable:0,1,4,9"), 3).values == std::vector<Rational>{9, 5, 2, 0});
  CHECK(diff_table(parse("fibolike:a=0,b=1,c=1,r=2"), 2).values == std::vector<Rational>{3, 1, 0});
  CHECK(diff_table(parse("harmonic"), 3).values[1] == R("1/3"));
  CHECK(dual_diff(parse("bellalt:x=1"), 2) == Rational(5));
  for (long j = 1; j <= 5; ++j) CHECK(dual_diff(parse("usertable:1,1,1,1,1,1"), j) == Rational(0));
  CHECK(dual_diff(parse("binomalt:alpha=5"), 2) == Rational(21));
  CHECK_THROWS_AS(backward_difference({1, 2}, 1, 2), DomainError);
}

TEST_CASE("difference table recurrence in n", "[sequences]") {
  for (const auto& spec : sequence_catalog()) {
    INFO(spec.str());
    const auto a = spec.terms(11);
    for (long n = 1; n <= 10; ++n) {
      const auto row = diff_table(a, n).values;
      const auto prev = diff_table(a, n - 1).values;
      CHECK(row[0] == a[static_cast<std::size_t>(n)]);
      for (long k = 0; k < n; ++k) CHECK(row[k + 1] == row[k] - prev[k]);
      for (long k = 0; k <= n; ++k) {
        for (long j = 0; j + k <= n && j <= 3; ++j) {
          // j-fold difference in n of M(., k) lands on M(n, k + j).
          Rational v;
          for (long l = 0; l <= j; ++l) v += sign_power(l) * binomial(j, l) * backward_difference(a, n - l, k);
          CHECK(v == row[k + j]);
        }
      }
    }
  }
}

TEST_CASE("closed-form difference tables", "[sequences]") {
  const auto pts = sample(10);
  for (long r = 0; r <= 2; ++r) {
    for (const auto& c : {R("1"), R("3/2"), R("-1/3")}) {
      const seq::FiboLike f{R("2"), R("-1/3"), c, r};
      const auto a = SequenceSpec(f).terms(9);
      for (long n = 0; n <= 8; ++n) {
        for (long j = 0; j <= n; ++j) CHECK(backward_difference(a, n, j) == c.pow(j) * seq::fibolike_value(f, n + r - 2 * j));
      }
    }
    for (const auto& alpha : pts) {
      const auto a = SequenceSpec(seq::BinomAlt{alpha, r}).terms(9);
      for (long n = 0; n <= 8; ++n) {
        for (long j = 0; j <= n; ++j) CHECK(backward_difference(a, n, j) == sign_power(n) * binomial(alpha + j, n + r));
      }
      CHECK(dual_diff(a, 3) == binomial(alpha + 3, 3 + r));
    }
    for (const auto& p : pts) {
      if (p == Rational(1)) continue;
      const auto a = SequenceSpec(seq::QInt{p, r}).terms(9);
      for (long n = 1; n <= 8; ++n) {
        for (long j = 1; j <= n; ++j) {
          CHECK(backward_difference(a, n, j) == p.pow(n + r - j) * (p - 1).pow(j - 1));
        }
      }
    }
  }
  for (long s = 0; s <= 3; ++s) {
    for (long m = 0; m <= 8; ++m) {
      const auto a = SequenceSpec(seq::FussCatalan{m, s}).terms(9);
      for (long n = 0; n <= 8; ++n) {
        for (long j = 0; j <= std::min(m, n); ++j) {
          CHECK(backward_difference(a, n, j) == fuss_catalan(m - j, s, j * (s - 1) + n));
        }
      }
    }
  }
}

TEST_CASE("Laguerre difference relations in both modes", "[sequences]") {
  const auto pts = sample(6);
  for (const auto& alpha : pts) {
    for (const auto& x : pts) {
      for (long r = 0; r <= 3; ++r) {
        const auto deg = SequenceSpec(seq::Laguerre{alpha, x, seq::LaguerreMode::degree, r}).terms(9);
        const auto ord = SequenceSpec(seq::Laguerre{alpha, x, seq::LaguerreMode::order, r}).terms(9);
        for (long n = 0; n <= 8; ++n) {
          for (long j = 0; j <= n; ++j) {
            CHECK(backward_difference(deg, n, j) == laguerre(n + r, alpha - j, x));
            CHECK(backward_difference(ord, n, j) == laguerre(r - j, alpha + n, x));
          }
        }
      }
    }
  }
}

TEST_CASE("Meixner definitions agree where both are defined", "[sequences]") {
  for (long n = 0; n <= 6; ++n) {
    for (const auto& x : sample(6)) {
      const Rational alpha = R("5/2"), beta = R("1/3");
      CHECK(meixner(n, x, alpha, beta) ==
            rising(alpha, n) * meixner(n, x, alpha, beta, MeixnerDefinition::hypergeometric));
    }
  }
  CHECK(meixner(0, R("1/2"), R("5/2"), R("1/3")) == Rational(1));
  CHECK(meixner(1, R("1/2"), R("5/2"), R("1/3")) == R("5/2") + R("1/2") * (1 - Rational(3)));
}
