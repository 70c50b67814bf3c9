#include "cfrenorm/oracle.hpp"

#include <optional>
#include <string>

namespace cfr::oracle {

namespace {

SidedPoint boundary(const ExactNumber& x) { return SidedPoint(ExactNumber(1) - x, Side::right); }

void check_x(const ExactNumber& x) {
  if (x.sign() <= 0 || x >= ExactNumber(1))
    throw std::domain_error("rotation needs 0 < x < 1, got " + x.str());
}

// For rational x = p/q the backward orbit of 0 has period q.
std::optional<BigInt> period(const ExactNumber& x) {
  if (x.is_rational()) return x.denominator();
  return std::nullopt;
}

[[noreturn]] void out_of_budget(std::uint64_t bound) {
  throw BoundedSearchFailure("rotation search exceeded " + std::to_string(bound) + " steps");
}

}  // namespace

Word omega(const ExactNumber& x, const SidedPoint& y, std::uint64_t length) {
  check_x(x);
  const SidedPoint edge = boundary(x);
  Word w;
  SidedPoint u = y;
  for (std::uint64_t j = 0; j < length; ++j) {
    w.append(u >= edge ? Letter::A : Letter::B);
    u = u.rotated(x);
  }
  return w;
}

NestedIntervals nested_intervals(const ExactNumber& x, const SidedPoint& y, std::size_t k,
                                 std::uint64_t bound) {
  check_x(x);
  NestedIntervals out;
  out.intervals.push_back(make_interval(x, 0, 0, 0));
  const std::optional<BigInt> q = period(x);
  std::uint64_t m = 0;
  ExactNumber point(0);  // -m x mod 1
  while (out.intervals.size() <= k) {
    const NestedInterval& cur = out.intervals.back();
    bool split = false;
    while (!split) {
      if (q && BigInt(static_cast<unsigned long>(m + 1)) >= *q) {
        out.exhausted = true;
        return out;
      }
      if (++m > bound) out_of_budget(bound);
      point -= x;
      if (point.sign() < 0) point += ExactNumber(1);
      split = cur.left < point && point < cur.right;
    }
    NestedInterval next = cur;
    next.k = cur.k + 1;
    BigInt index(static_cast<unsigned long>(m));
    if (y < SidedPoint(point, Side::right)) {
      next.right_index = index;
      next.right = point;
    } else {
      next.left_index = index;
      next.left = point;
    }
    out.intervals.push_back(std::move(next));
  }
  return out;
}

ApproxSearch slow_approx_bruteforce(const ExactNumber& x, const SidedPoint& y, std::size_t k,
                                    std::uint64_t bound) {
  check_x(x);
  ApproxSearch out;
  out.n.push_back(0);
  const std::optional<BigInt> q = period(x);
  // Images of the left and right endpoints under y + n x: distances above 0 and below 1.
  ExactNumber lo = y.value();
  ExactNumber hi = y.value();
  SidedPoint u = y;
  std::uint64_t n = 0;
  while (out.n.size() <= k) {
    if (q && BigInt(static_cast<unsigned long>(n + 1)) >= *q) {
      out.exhausted = true;
      break;
    }
    if (++n > bound) out_of_budget(bound);
    u = u.rotated(x);
    if (u.value() < lo) {
      lo = u.value();
      out.n.push_back(n);
    } else if (u.value() > hi) {
      hi = u.value();
      out.n.push_back(n);
    }
  }
  return out;
}

std::uint64_t first_return_time(const ExactNumber& x, const SidedPoint& y, std::uint64_t bound) {
  check_x(x);
  const SidedPoint edge = boundary(x);
  SidedPoint u = y;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    u = u.rotated(x);
    if (u >= edge) return n;
  }
  out_of_budget(bound);
}

}  // namespace cfr::oracle
