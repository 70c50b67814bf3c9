#pragma once

#include <cstddef>

#include "cfrenorm/exact.hpp"

namespace cfr {

// Endpoints are -left_index*x and -right_index*x mod 1. Index 0 stands for 0 on the
// left and for 1 on the right.
struct NestedInterval {
  BigInt left_index = 0;
  BigInt right_index = 0;
  std::size_t k = 0;
  ExactNumber left = 0;
  ExactNumber right = 1;

  ExactNumber length() const { return right - left; }
};

// -n x mod 1, as a value in [0, 1).
ExactNumber backward_point(const ExactNumber& x, const BigInt& n);
NestedInterval make_interval(const ExactNumber& x, const BigInt& left_index,
                             const BigInt& right_index, std::size_t k);

}  // namespace cfr
