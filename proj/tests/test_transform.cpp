#include <catch_amalgamated.hpp>

#include "btx/error.hpp"
#include "btx/sequence.hpp"
#include "btx/special.hpp"
#include "btx/transform.hpp"
#include "support.hpp"

using namespace btx;
using btx::test::R;
using btx::test::RationalGen;

namespace {

const SequenceSpec& harmonic_spec() {
  static const SequenceSpec s = SequenceSpec::parse("harmonic");
  return s;
}

const Terms& harmonic_terms() {
  static const Terms t = harmonic_spec().terms(40);
  return t;
}

}  // namespace

TEST_CASE("direct transform examples", "[transform]") {
  CHECK(direct_transform(harmonic_spec(), 2, R("1/2")) == R("7/8"));
  CHECK(R("3/2") - (R("1/2") + R("1/8")) == R("7/8"));
  CHECK(direct_transform(Terms{1, -2, 1}, 2, R("1/2")) == R("-1/2"));
  CHECK(direct_transform(Terms{1, -1, 1}, 2, R("1/2")) == Rational(0));
  for (const auto& spec : sequence_catalog()) {
    for (long n = 0; n <= 6; ++n) {
      CHECK(direct_transform(spec, n, 0) == spec.term(n));
      CHECK(direct_transform(spec, n, 1) == spec.term(0));
    }
  }
  CHECK_THROWS_AS(direct_transform(harmonic_spec(), -1, R("1/2")), DomainError);
}

TEST_CASE("basis representation examples", "[transform]") {
  CHECK(basis_representation(harmonic_spec(), 2).coeffs() == std::vector<Rational>{R("3/2"), -1, R("-1/2")});
  CHECK(basis_representation(Terms{R("5/3"), R("5/3"), R("5/3"), R("5/3")}, 3) == Polynomial{R("5/3")});
  CHECK(basis_representation(SequenceSpec::parse("qint:p=2"), 2) == Polynomial{3, -4, 1});
  const Rational p = 2;
  for (const auto& q : {R("0"), R("1/3"), R("-2"), R("5/2")}) {
    const Rational rhs = (1 - (p + q * (1 - p)).pow(2)) / (1 - p);
    CHECK(basis_representation(SequenceSpec::parse("qint:p=2"), 2)(q) == rhs);
  }
}

TEST_CASE("harmonic transform closed form", "[transform]") {
  RationalGen gen(21);
  for (long n = 0; n <= 20; ++n) {
    const Rational q = gen();
    Rational rhs = harmonic(n);
    for (long j = 1; j <= n; ++j) rhs -= q.pow(j) / j;
    CHECK(bernoulli_sum(harmonic_terms(), n, q) == rhs);
  }
}

TEST_CASE("generating-function extraction", "[transform]") {
  CHECK(gf_transform(harmonic_spec(), 2, R("1/2"), GfMode::product) == R("7/8"));
  CHECK(gf_transform(harmonic_spec(), 2, R("1/2"), GfMode::composed) == R("7/8"));
  const Terms ones(12, Rational(1));
  for (long n = 0; n <= 10; ++n) {
    for (const auto& q : {R("1/3"), R("-3/2"), R("2")}) {
      CHECK(gf_transform(ones, n, q, GfMode::product) == Rational(1));
      CHECK(gf_transform(ones, n, q, GfMode::composed) == Rational(1));
    }
  }
  CHECK(gf_transform(harmonic_spec(), 3, R("1/3"), GfMode::product, 7) ==
        gf_transform(harmonic_spec(), 3, R("1/3"), GfMode::product));
  CHECK_THROWS_AS(gf_transform(harmonic_spec(), 3, R("1/3"), GfMode::product, 2), ConfigError);
}

TEST_CASE("all evaluation routes agree", "[transform]") {
  RationalGen gen(22);
  for (const auto& spec : sequence_catalog()) {
    INFO(spec.str());
    for (long n = 0; n <= 6; ++n) {
      const Rational q = gen();
      const auto routes = all_routes(spec, n, q);
      REQUIRE(routes.size() == 4);
      CHECK(routes[0].provenance == Provenance::direct_sum);
      for (const auto& r : routes) {
        REQUIRE(r.value);
        CHECK(*r.value == *routes[0].value);
      }
      CHECK(routes[1].poly.has_value());
    }
  }
}

TEST_CASE("conjugate transform and operator form", "[transform]") {
  RationalGen gen(23);
  for (const auto& spec : sequence_catalog()) {
    INFO(spec.str());
    const Terms a = spec.terms(11);
    for (long n = 0; n <= 10; ++n) {
      const Rational q = gen();
      CHECK(direct_transform(a, n, q, true) == direct_transform(a, n, 1 - q));
      CHECK(basis_representation(a, n, true)(q) == direct_transform(a, n, 1 - q));
      CHECK(operator_form(a, n) == basis_representation(a, n));
      if (n <= 6) CHECK(transform_row(a, n + 1, q).back() == bernoulli_sum(a, n, q));
    }
  }
}

TEST_CASE("composition of transforms", "[transform]") {
  const auto s = compose_transform(harmonic_spec(), 2, R("1/2"), R("1/2"));
  CHECK(s.lhs == R("15/32"));
  CHECK(s.rhs == R("15/32"));
  RationalGen gen(24);
  for (long n = 0; n <= 8; ++n) {
    const Rational x = gen(), q = gen();
    CHECK(compose_transform(harmonic_terms(), n, 0, q).lhs == bernoulli_sum(harmonic_terms(), n, q));
    CHECK(compose_transform(harmonic_terms(), n, x, 0).lhs == bernoulli_sum(harmonic_terms(), n, x));
    CHECK(compose_transform(harmonic_terms(), n, x, q).equal());
    CHECK(compose_transform_bis(harmonic_terms(), n, x, q).equal());
    CHECK(shifted_transform(harmonic_terms(), n, 0, x, q).lhs == compose_transform(harmonic_terms(), n, x, q).lhs);
  }
}

TEST_CASE("inverse substitution recovers the sequence", "[transform]") {
  RationalGen gen(25);
  for (const auto& spec : sequence_catalog()) {
    const Terms a = spec.terms(9);
    for (long n = 0; n <= 8; ++n) {
      Rational q = gen();
      if (q == Rational(1)) q = R("1/7");
      const Rational x = -q / (1 - q);
      const auto s = compose_transform(a, n, x, q);
      CHECK(s.lhs == a[static_cast<std::size_t>(n)]);
      CHECK(s.rhs == a[static_cast<std::size_t>(n)]);
      CHECK(inverse_composition(a, n, q, InverseForm::shifted_argument).equal());
      CHECK(inverse_composition(a, n, q, InverseForm::alternating_weights).equal());
    }
  }
  CHECK_THROWS_AS(inverse_composition(harmonic_terms(), 2, 1, InverseForm::shifted_argument), DomainError);
}

TEST_CASE("shifted and special compositions", "[transform]") {
  const auto j2 = shifted_transform(harmonic_terms(), 0, 2, 0, R("1/2"));
  CHECK(j2.lhs == R("3/8"));
  CHECK(j2.rhs == R("3/8"));

  CHECK(q_bracket(R("1/2"), 2) == R("3/2"));
  CHECK_THROWS_AS(q_bracket(1, 2), DomainError);
  for (const auto form : {PowerForm::shifted_argument, PowerForm::bracket_weights}) {
    const auto s = power_composition(harmonic_terms(), 2, 2, R("1/2"), form);
    CHECK(s.lhs == R("39/32"));
    CHECK(s.rhs == R("39/32"));
  }

  const Terms a{R("2/3"), R("-5/4")};
  const Rational q = R("2/7");
  const auto alt = alternating_transform(a, 1, q);
  CHECK(alt.lhs == a[0] - a[1] * (1 - q));
  CHECK(alt.rhs == a[0] - a[1] * (1 - q));

  const auto sc = scaled_composition(harmonic_terms(), 1, 1, R("1/3"), ScaledForm::shifted_argument);
  CHECK(sc.lhs == bernoulli_sum(harmonic_terms(), 1, R("2/3")));
  CHECK(sc.equal());
  CHECK(scaled_composition(harmonic_terms(), 1, 1, R("1/3"), ScaledForm::scaled_weights).equal());
}

TEST_CASE("composition identities hold on random inputs", "[transform]") {
  RationalGen gen(26);
  const auto catalog = sequence_catalog();
  for (int trial = 0; trial < 60; ++trial) {
    const auto& spec = catalog[static_cast<std::size_t>(trial) % catalog.size()];
    INFO(spec.str());
    const Terms a = spec.terms(14);
    const long n = gen.integer(0, 5), m = gen.integer(0, 4);
    const Rational x = gen(), alpha = gen();
    Rational q = gen.nonzero();
    if (q == Rational(1)) q = R("-1/5");
    CHECK(shifted_transform(a, n, m, x, q).equal());
    CHECK(power_composition(a, n, m + 1, q, PowerForm::shifted_argument).equal());
    CHECK(power_composition(a, n, m + 1, q, PowerForm::bracket_weights).equal());
    CHECK(scaled_composition(a, n, alpha, q, ScaledForm::shifted_argument).equal());
    CHECK(scaled_composition(a, n, alpha, q, ScaledForm::scaled_weights).equal());
    CHECK(alternating_transform(a, n, q).equal());
    CHECK(alternating_transform_bis(a, n, x, q).equal());
    const std::vector<Rational> xs{gen(), gen(), gen()};
    CHECK(chain_composition(a, n, xs).equal());
    CHECK(chain_shifted(a, n, m, xs).equal());
  }
}
