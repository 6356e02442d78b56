#include <complex>
#include <random>

#include "doctest.h"
#include "lieosc/error.hpp"
#include "lieosc/sampling.hpp"
#include "lieosc/scalar.hpp"

using namespace lieosc;

namespace {

Surd random_surd(std::mt19937_64& rng, int terms, std::int64_t mag) {
  static const std::int64_t radicands[] = {1, 2, 3, 5, 6, 7, 10, 12, 18};
  std::vector<Surd::RawTerm> raw;
  for (int t = 0; t < terms; ++t) {
    auto pick = [&](std::int64_t m) { return static_cast<std::int64_t>(rng() % (2 * m + 1)) - m; };
    raw.push_back({radicands[rng() % 9], Rational(pick(mag), 1 + static_cast<std::int64_t>(rng() % 7)),
                   Rational(pick(mag), 1 + static_cast<std::int64_t>(rng() % 7))});
  }
  return Surd::normalize(raw);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational(-3, 2).to_string() == "-3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
}

TEST_CASE("rational overflow promotes to big integers") {
  Rational big(std::numeric_limits<std::int64_t>::max());
  Rational sq = big * big;
  CHECK_FALSE(sq.fits_int64());
  CHECK(sq / big == big);
  CHECK((sq - sq).is_zero());
  CHECK(Rational::parse(sq.to_string()) == sq);
}

TEST_CASE("normalize reduces radicands") {
  CHECK(Surd::normalize({{8, 1, 0}}) == Surd::sqrt(2) * Rational(2));
  CHECK(Surd::normalize({{8, 1, 0}}).to_string() == "2*sqrt(2)");
  CHECK(Surd::normalize({{2, 1, 0}, {2, -1, 0}}).is_zero());
  CHECK(Surd::normalize({{1, Rational(3, 2), 0}, {4, 1, 0}}) == Surd(Rational(7, 2)));
  CHECK_THROWS_AS(Surd::normalize({{0, 1, 0}}), Error);
  CHECK_THROWS_AS(Surd::normalize({{-3, 1, 0}}), Error);
}

TEST_CASE("products of surds") {
  Surd r2 = Surd::sqrt(2);
  CHECK(r2 * r2 == Surd(2));
  CHECK((Surd(1) + r2) * (Surd(1) - r2) == Surd(-1));
  // gcd oracle: sqrt(6) sqrt(10) = sqrt(60) = 2 sqrt(15)
  CHECK(Surd::sqrt(6) * Surd::sqrt(10) == Surd::sqrt(15) * Rational(2));
  CHECK(Surd::sqrt(Rational(1, 2)) == r2 / Rational(2));
  CHECK(Surd::i() * Surd::i() == Surd(-1));
}

TEST_CASE("float evaluation") {
  CHECK(Surd::sqrt(2).to_complex().real() == doctest::Approx(1.4142135623730951));
  CHECK(Surd().to_complex() == std::complex<double>(0, 0));
  Surd s = Surd(Rational(3, 2)) + Surd::i() * Surd::sqrt(3);
  CHECK(s.to_complex().real() == doctest::Approx(1.5));
  CHECK(s.to_complex().imag() == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Surd a = random_surd(rng, 4, 20), b = random_surd(rng, 4, 20), c = random_surd(rng, 4, 20);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(Surd::normalize({}) .is_zero());
  }
}

TEST_CASE("to_complex is a homomorphism up to rounding") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    Surd a = random_surd(rng, 8, 1000), b = random_surd(rng, 8, 1000);
    auto lhs = (a * b).to_complex();
    auto rhs = a.to_complex() * b.to_complex();
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("surd text round trip") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    Surd a = random_surd(rng, 5, 50);
    CHECK(Surd::parse(a.to_string()) == a);
  }
  CHECK(Surd::parse("0").is_zero());
  CHECK(Surd::parse("-i").to_string() == "-i");
}

TEST_CASE("sampler is deterministic") {
  RationalSampler a(42), b(42);
  for (int k = 0; k < 20; ++k) CHECK(a.next() == b.next());
}
