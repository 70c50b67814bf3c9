#pragma once

// Shared helpers for the test binaries. The reference computations here use plain
// mpz/mpq arithmetic so they do not share code paths with the library.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cfrenorm/exact.hpp"

namespace testing {

inline std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed * 0x9E3779B97F4A7C15ull + 17); }

inline mpq_class random_fraction(std::mt19937_64& rng, std::uint64_t max_den) {
  std::uniform_int_distribution<std::uint64_t> den(2, max_den);
  std::uint64_t q = den(rng);
  std::uniform_int_distribution<std::uint64_t> num(1, q - 1);
  mpq_class r(mpz_class(std::to_string(num(rng))), mpz_class(std::to_string(q)));
  r.canonicalize();
  return r;
}

inline cfr::ExactNumber to_exact(const mpq_class& v) {
  return cfr::ExactNumber::rational(v.get_num(), v.get_den());
}

// Euclid on p/q in (0,1): the regular digits a1, a2, ... with a last digit >= 2.
inline std::vector<mpz_class> euclid_digits(mpq_class v) {
  std::vector<mpz_class> out;
  mpz_class p = v.get_num(), q = v.get_den();
  while (p != 0) {
    mpz_class a = q / p;
    mpz_class r = q % p;
    out.push_back(a);
    q = p;
    p = r;
  }
  return out;
}

// q_n of [0; a1, a2, ...] for n = 0..digits.size().
inline std::vector<mpz_class> denominators(const std::vector<mpz_class>& digits) {
  std::vector<mpz_class> q{1};
  mpz_class prev = 0;
  for (const mpz_class& a : digits) {
    mpz_class next = a * q.back() + prev;
    prev = q.back();
    q.push_back(next);
  }
  return q;
}

inline std::vector<mpz_class> fibonacci(std::size_t count) {
  std::vector<mpz_class> f{0, 1};
  while (f.size() < count) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  f.resize(count);
  return f;
}

// Fibonacci word by iterating A -> AB, B -> A.
inline std::string fibonacci_word(std::size_t length) {
  std::string w = "A";
  while (w.size() < length) {
    std::string next;
    for (char c : w) next += c == 'A' ? "AB" : "A";
    w = next;
  }
  return w.substr(0, length);
}

// Rotation coding for rational data with a side tag: letter j is A iff the sided point
// y + j x (mod 1) lies in [1-x, 1] under (1-x, right) <= . <= (1, left).
inline std::string rotation_word(const mpq_class& x, const mpq_class& y, bool y_left, std::size_t length) {
  std::string w;
  mpq_class v = y;
  bool left = y_left;
  if (v == 0 && left) v = 1;
  if (v == 1 && !left) v = 0;
  for (std::size_t j = 0; j < length; ++j) {
    bool in = (v > 1 - x || (v == 1 - x && !left)) && (v < 1 || (v == 1 && left));
    w += in ? 'A' : 'B';
    v += x;
    if (v > 1 || (v == 1 && !left)) v -= 1;
  }
  return w;
}

// Digits that keep slow orbits long while denominators stay small.
inline cfr::ExactNumber random_large_digit_rational(std::mt19937_64& rng, std::size_t count, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<cfr::BigInt> digits;
  for (std::size_t j = 0; j < count; ++j) digits.emplace_back(d(rng));
  return cfr::evaluate_regular_cf(digits);
}

}  // namespace testing
