#include "cfrenorm/interval.hpp"

namespace cfr {

ExactNumber backward_point(const ExactNumber& x, const BigInt& n) {
  ExactNumber v = -(ExactNumber(n) * x);
  return v - ExactNumber(v.floor());
}

NestedInterval make_interval(const ExactNumber& x, const BigInt& left_index,
                             const BigInt& right_index, std::size_t k) {
  NestedInterval iv;
  iv.left_index = left_index;
  iv.right_index = right_index;
  iv.k = k;
  iv.left = left_index == 0 ? ExactNumber(0) : backward_point(x, left_index);
  iv.right = right_index == 0 ? ExactNumber(1) : backward_point(x, right_index);
  return iv;
}

}  // namespace cfr
