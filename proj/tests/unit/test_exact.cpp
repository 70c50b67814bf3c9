#include <doctest.h>

#include "cfrenorm/exact.hpp"
#include "support.hpp"

using namespace cfr;

TEST_CASE("rationals reduce and compare") {
  ExactNumber a = ExactNumber::rational(6, 15);
  CHECK(a == ExactNumber::parse("2/5"));
  CHECK(a.str() == "2/5");
  CHECK(ExactNumber::rational(3, -6).str() == "-1/2");
  CHECK(ExactNumber::parse("0.2") == ExactNumber::rational(1, 5));
  CHECK(ExactNumber::parse("1.25") == ExactNumber::rational(5, 4));
  CHECK(ExactNumber::rational(1, 3) < ExactNumber::rational(1, 2));
  CHECK(ExactNumber::rational(7, 2).floor() == 3);
  CHECK(ExactNumber::rational(-7, 2).floor() == -4);
  CHECK(ExactNumber::rational(2, 5).reciprocal() == ExactNumber::rational(5, 2));
}

TEST_CASE("quadratic numbers close under field operations") {
  ExactNumber phi = golden_mean();
  CHECK(phi == ExactNumber::parse("(sqrt(5)-1)/2"));
  CHECK(phi * phi + phi == ExactNumber(1));
  CHECK(phi.reciprocal() == phi + ExactNumber(1));
  CHECK(phi.conjugate() == ExactNumber::parse("(-1-sqrt(5))/2"));
  CHECK(ExactNumber::sqrt(8) == ExactNumber::parse("2*sqrt(2)"));
  CHECK(ExactNumber::sqrt(49) == ExactNumber(7));
  CHECK(ExactNumber::sqrt(2) * ExactNumber::sqrt(2) == ExactNumber(2));
  CHECK(phi.floor() == 0);
  CHECK((ExactNumber(1) / phi).floor() == 1);
  CHECK(ExactNumber::parse("sqrt(1000001)").floor() == 1000);
  CHECK(ExactNumber::parse("1000-sqrt(1000001)").floor() == -1);
  CHECK(phi.to_double() == doctest::Approx(0.6180339887498949));
}

TEST_CASE("string form parses back") {
  for (const char* text : {"2/5", "(3-sqrt(5))/2", "-7", "(1+3*sqrt(7))/4", "sqrt(2)-1"}) {
    ExactNumber v = ExactNumber::parse(text);
    CHECK(ExactNumber::parse(v.str()) == v);
  }
}

TEST_CASE("comparisons of surds agree with floating point away from ties") {
  std::mt19937_64 rng = testing::rng_for(3);
  std::uniform_int_distribution<int> small(-50, 50), rad(2, 40), den(1, 30);
  for (int t = 0; t < 2000; ++t) {
    ExactNumber x = ExactNumber::quadratic(small(rng), small(rng), rad(rng), den(rng));
    ExactNumber y = ExactNumber::rational(small(rng), den(rng));
    double dx = x.to_double(), dy = y.to_double();
    if (std::abs(dx - dy) < 1e-9) continue;
    CHECK((x < y) == (dx < dy));
    CHECK(x.floor() == static_cast<long>(std::floor(dx)));
  }
}

TEST_CASE("mixing quadratic fields is rejected") {
  CHECK_THROWS_AS(ExactNumber::sqrt(2) + ExactNumber::sqrt(3), std::domain_error);
  CHECK_THROWS_AS(ExactNumber::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(ExactNumber::parse("2/"), std::invalid_argument);
  CHECK_THROWS_AS(ExactNumber::parse("sqrt(-2)"), std::invalid_argument);
}

TEST_CASE("sided points canonicalize 0 and 1") {
  CHECK(SidedPoint(ExactNumber(0), Side::left) == SidedPoint(ExactNumber(1), Side::left));
  CHECK(SidedPoint(ExactNumber(1), Side::right) == SidedPoint(ExactNumber(0), Side::right));
  CHECK(SidedPoint(ExactNumber(1)).side() == Side::left);
  CHECK(SidedPoint(ExactNumber(0)).side() == Side::right);
  CHECK(SidedPoint(ExactNumber::rational(1, 3), Side::left) < SidedPoint(ExactNumber::rational(1, 3), Side::right));
  CHECK_THROWS_AS(SidedPoint(ExactNumber(2)), std::domain_error);
}

TEST_CASE("sided rotation wraps at 1 according to the tag") {
  ExactNumber half = ExactNumber::rational(1, 2);
  CHECK(SidedPoint(half, Side::right).rotated(half) == SidedPoint(ExactNumber(0), Side::right));
  CHECK(SidedPoint(half, Side::left).rotated(half) == SidedPoint(ExactNumber(1), Side::left));
  CHECK(SidedPoint(ExactNumber::rational(3, 4)).rotated(half).value() == ExactNumber::rational(1, 4));
}

TEST_CASE("interval membership reads endpoints through their sides") {
  ExactNumber lo = ExactNumber::rational(1, 3), hi = ExactNumber::rational(2, 3);
  CHECK(in_interval(SidedPoint(lo, Side::right), lo, hi));
  CHECK_FALSE(in_interval(SidedPoint(lo, Side::left), lo, hi));
  CHECK(in_interval(SidedPoint(hi, Side::left), lo, hi));
  CHECK_FALSE(in_interval(SidedPoint(hi, Side::right), lo, hi));
}

TEST_CASE("regular digits match Euclid") {
  std::mt19937_64 rng = testing::rng_for(5);
  for (int t = 0; t < 300; ++t) {
    mpq_class v = testing::random_fraction(rng, 1000000);
    std::vector<BigInt> d = regular_cf_digits(testing::to_exact(v), 1000);
    CHECK(d == testing::euclid_digits(v));
    CHECK(evaluate_regular_cf(d) == testing::to_exact(v));
  }
}

TEST_CASE("gauss step on the golden mean is a fixed point") {
  GaussStep g = gauss_step(golden_mean());
  CHECK(g.digit == 1);
  CHECK(g.remainder == golden_mean());
  CHECK_THROWS(gauss_step(ExactNumber(0)));
}

TEST_CASE("periodic values") {
  std::vector<BigInt> none, one{1}, two{2}, pre{3};
  CHECK(periodic_cf_value(none, one) == golden_mean());
  CHECK(periodic_cf_value(none, two) == ExactNumber::parse("sqrt(2)-1"));
  ExactNumber v = periodic_cf_value(pre, one);
  CHECK(v == ExactNumber(1) / (ExactNumber(3) + golden_mean()));
  CHECK(regular_cf_digits(ExactNumber::parse("sqrt(7)-2"), 8) == std::vector<BigInt>{1, 1, 1, 4, 1, 1, 1, 4});
}

TEST_CASE("complement digits describe 1 - x") {
  std::mt19937_64 rng = testing::rng_for(6);
  for (int t = 0; t < 200; ++t) {
    mpq_class v = testing::random_fraction(rng, 100000);
    std::vector<BigInt> d = testing::euclid_digits(v);
    std::vector<BigInt> c = complement_digits(d);
    CHECK(evaluate_regular_cf(c) == ExactNumber(1) - testing::to_exact(v));
  }
  std::vector<BigInt> tail{3, 1};
  normalize_terminating(tail);
  CHECK(tail == std::vector<BigInt>{4});
}
