#pragma once

#include <random>
#include <vector>

#include "btx/rational.hpp"

namespace btx::test {

/// Small random rationals with numerator in [-span, span] and denominator in [1, span].
class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed, long span = 9) : rng_(seed), span_(span) {}

  Rational operator()() {
    std::uniform_int_distribution<long> num(-span_, span_);
    std::uniform_int_distribution<long> den(1, span_);
    return Rational(num(rng_), den(rng_));
  }

  Rational nonzero() {
    for (;;) {
      Rational r = (*this)();
      if (!r.is_zero()) return r;
    }
  }

  /// A value in [0, 1].
  Rational unit() {
    std::uniform_int_distribution<long> den(1, span_);
    const long d = den(rng_);
    std::uniform_int_distribution<long> num(0, d);
    return Rational(num(rng_), d);
  }

  std::vector<Rational> vector(std::size_t size) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < size; ++i) out.push_back((*this)());
    return out;
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
  long span_;
};

inline Rational R(const char* text) { return Rational::parse(text); }

}  // namespace btx::test
