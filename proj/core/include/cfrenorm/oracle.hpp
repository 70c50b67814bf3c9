#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cfrenorm/exact.hpp"
#include "cfrenorm/interval.hpp"
#include "cfrenorm/words.hpp"

// Brute-force rotation oracle. Depends only on exact arithmetic and words.
namespace cfr::oracle {

inline constexpr std::uint64_t kDefaultSearchBound = 1'000'000;

class BoundedSearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Letter j is A iff y + j x mod 1 lies in [1-x, 1].
Word omega(const ExactNumber& x, const SidedPoint& y, std::uint64_t length);

struct NestedIntervals {
  std::vector<NestedInterval> intervals;  // intervals[k] is I(k)
  bool exhausted = false;                 // rational x: no further backward-orbit point exists
};

NestedIntervals nested_intervals(const ExactNumber& x, const SidedPoint& y, std::size_t k,
                                 std::uint64_t bound = kDefaultSearchBound);

struct ApproxSearch {
  std::vector<std::uint64_t> n;  // n[0] = 0, then one new index per refinement
  bool exhausted = false;
};

// Closeness search: the next n is the least one whose rotate lands strictly closer to
// 0 or 1 than the images of the current endpoints.
ApproxSearch slow_approx_bruteforce(const ExactNumber& x, const SidedPoint& y, std::size_t k,
                                    std::uint64_t bound = kDefaultSearchBound);

// Least n >= 1 with y + n x mod 1 in [1-x, 1].
std::uint64_t first_return_time(const ExactNumber& x, const SidedPoint& y,
                                std::uint64_t bound = kDefaultSearchBound);

}  // namespace cfr::oracle
