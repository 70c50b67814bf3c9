#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cfr {

using BigInt = mpz_class;

inline constexpr std::uint64_t kDefaultSquarefreeBound = 1'000'000;

// (a + b*sqrt(d)) / c in lowest terms. Rationals have b == 0 and d == 1.
class ExactNumber {
 public:
  ExactNumber() : a_(0), b_(0), d_(1), c_(1) {}
  ExactNumber(long value) : a_(value), b_(0), d_(1), c_(1) {}
  explicit ExactNumber(const BigInt& value) : a_(value), b_(0), d_(1), c_(1) {}

  static ExactNumber rational(const BigInt& num, const BigInt& den);
  // Reduces the radicand to its squarefree part; a square radicand yields a rational.
  static ExactNumber quadratic(const BigInt& a, const BigInt& b, const BigInt& radicand,
                               const BigInt& c,
                               std::uint64_t squarefree_bound = kDefaultSquarefreeBound);
  static ExactNumber sqrt(const BigInt& radicand,
                          std::uint64_t squarefree_bound = kDefaultSquarefreeBound);
  // Accepts integers, + - * /, parentheses and sqrt(n).
  static ExactNumber parse(std::string_view text);

  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return b_ == 0 && c_ == 1; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& radicand() const { return d_; }
  const BigInt& c() const { return c_; }
  // Only meaningful for rationals.
  const BigInt& numerator() const { return a_; }
  const BigInt& denominator() const { return c_; }

  int sign() const;
  BigInt floor() const;
  ExactNumber reciprocal() const;
  ExactNumber conjugate() const;
  double to_double() const;
  std::string str() const;

  ExactNumber operator-() const;
  friend ExactNumber operator+(const ExactNumber& x, const ExactNumber& y);
  friend ExactNumber operator-(const ExactNumber& x, const ExactNumber& y);
  friend ExactNumber operator*(const ExactNumber& x, const ExactNumber& y);
  friend ExactNumber operator/(const ExactNumber& x, const ExactNumber& y);
  ExactNumber& operator+=(const ExactNumber& y) { return *this = *this + y; }
  ExactNumber& operator-=(const ExactNumber& y) { return *this = *this - y; }
  ExactNumber& operator*=(const ExactNumber& y) { return *this = *this * y; }
  ExactNumber& operator/=(const ExactNumber& y) { return *this = *this / y; }

  friend bool operator==(const ExactNumber& x, const ExactNumber& y);
  friend std::strong_ordering operator<=>(const ExactNumber& x, const ExactNumber& y);

 private:
  ExactNumber(BigInt a, BigInt b, BigInt d, BigInt c);
  void normalize();

  BigInt a_;
  BigInt b_;
  BigInt d_;
  BigInt c_;
};

std::ostream& operator<<(std::ostream& os, const ExactNumber& x);

// Sign of a + b*sqrt(d) for nonsquare d.
int sign_of_surd(const BigInt& a, const BigInt& b, const BigInt& d);

enum class Side : std::uint8_t { left, right };

inline Side flip(Side s) { return s == Side::left ? Side::right : Side::left; }

// A point of [0,1] carrying a left/right tag; 0 from the left is 1 from the left
// and 1 from the right is 0 from the right, so values always sit in [0+, 1-].
class SidedPoint {
 public:
  SidedPoint() : value_(0), side_(Side::right) {}
  explicit SidedPoint(ExactNumber value);
  SidedPoint(ExactNumber value, Side side);

  const ExactNumber& value() const { return value_; }
  Side side() const { return side_; }
  // value + t mod 1, for 0 <= t < 1.
  SidedPoint rotated(const ExactNumber& t) const;
  std::string str() const;

  friend bool operator==(const SidedPoint& p, const SidedPoint& q) = default;
  friend std::strong_ordering operator<=>(const SidedPoint& p, const SidedPoint& q);

 private:
  ExactNumber value_;
  Side side_;
};

// Membership in [lo, hi] read as (lo, right) <= y <= (hi, left).
bool in_interval(const SidedPoint& y, const ExactNumber& lo, const ExactNumber& hi);

struct GaussStep {
  BigInt digit;
  ExactNumber remainder;
};

GaussStep gauss_step(const ExactNumber& x);
std::vector<BigInt> regular_cf_digits(const ExactNumber& x, std::size_t k);
// Terminal digit normal form: a lone trailing 1 is folded into its predecessor.
void normalize_terminating(std::vector<BigInt>& digits);
std::vector<BigInt> complement_digits(std::span<const BigInt> digits);
// 1/(a1 + 1/(a2 + ...)); the empty list evaluates to 0.
ExactNumber evaluate_regular_cf(std::span<const BigInt> digits);

// The root in (0,1) of x = [pre..., period, period, ...].
ExactNumber periodic_cf_value(std::span<const BigInt> preperiod, std::span<const BigInt> period);
ExactNumber golden_mean();

}  // namespace cfr
