#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cfrenorm/interval.hpp"
#include "cfrenorm/renorm.hpp"
#include "cfrenorm/words.hpp"

namespace cfr {

// x = d0 + e0/(d1 + e1/(d2 + ...)); signs[n] is the numerator in front of digits[n].
struct SemiRegularCF {
  BigInt integer_part = 0;
  std::vector<BigInt> digits;
  std::vector<int> signs;

  std::size_t size() const { return digits.size(); }
  friend bool operator==(const SemiRegularCF&, const SemiRegularCF&) = default;
};

struct Validity {
  bool well_formed = true;           // digits >= 1, signs +-1, sizes agree
  std::size_t sum_violations = 0;    // positions with d_n + e_n < 1
  std::size_t sum_at_least_two = 0;  // positions with d_n + e_n >= 2
};

Validity validate(const SemiRegularCF& cf);
ExactNumber evaluate(const SemiRegularCF& cf);

class ConvergentTable {
 public:
  ConvergentTable() = default;
  explicit ConvergentTable(const SemiRegularCF& cf);

  // n ranges over -1 .. size()
  const BigInt& p(long n) const { return p_.at(static_cast<std::size_t>(n + 1)); }
  const BigInt& q(long n) const { return q_.at(static_cast<std::size_t>(n + 1)); }
  std::size_t size() const { return p_.size() - 2; }
  ExactNumber value(long n) const { return ExactNumber::rational(p(n), q(n)); }

 private:
  std::vector<BigInt> p_{1, 0};
  std::vector<BigInt> q_{0, 1};
};

class Strategy {
 public:
  enum class Kind { regular, backward, alpha, nearest_integer, counter_alpha, lehner, from_y, from_stream };

  static Strategy regular() { return Strategy(Kind::regular); }
  static Strategy backward() { return Strategy(Kind::backward); }
  static Strategy alpha(ExactNumber a);
  static Strategy nearest_integer() { return Strategy(Kind::nearest_integer); }
  static Strategy counter_alpha(ExactNumber a);
  static Strategy lehner() { return Strategy(Kind::lehner); }
  static Strategy from_y(SidedPoint y);
  static Strategy from_stream(std::vector<Edge> decisions);

  Kind kind() const { return kind_; }
  const ExactNumber& alpha_value() const { return alpha_; }
  const SidedPoint& y() const { return y_; }
  const std::vector<Edge>& stream() const { return stream_; }
  std::string name() const;

 private:
  explicit Strategy(Kind k) : kind_(k) {}

  Kind kind_;
  ExactNumber alpha_;
  SidedPoint y_;
  std::vector<Edge> stream_;
};

// Runs the slow map on x alone, with branch choices supplied by a strategy.
class StrategyWalker {
 public:
  StrategyWalker(ExactNumber x, Strategy strategy);

  // nullopt once x reaches 0 or an explicit stream runs out.
  std::optional<Move> next();
  std::optional<Edge> peek_edge() const;
  const ExactNumber& x() const { return x_; }
  std::size_t steps() const { return steps_; }
  bool terminal() const { return x_.is_zero(); }

 private:
  ExactNumber x_;
  SidedPoint y_;
  Strategy strategy_;
  std::size_t steps_ = 0;
};

struct Expansion {
  SemiRegularCF cf;
  ConvergentTable convergents;
  std::vector<Move> trace;
  bool terminal = false;          // orbit reached x = 0; cf evaluates to x
  bool last_digit_final = true;   // false when the next decision was unavailable
};

Expansion expand(const ExactNumber& x, const Strategy& strategy, std::size_t k);

// Digit/sign stream produced by a move sequence. A red move bumps the previous digit.
SemiRegularCF cf_from_moves(std::span<const Move> moves, std::optional<Edge> following);

// n indexes d_n; requires d_{n+1} = 1 followed by a + sign (or nothing).
SemiRegularCF singularize(const SemiRegularCF& cf, std::size_t n);
// Requires d_{n+1} >= 2 preceded by a + sign.
SemiRegularCF insert(const SemiRegularCF& cf, std::size_t n);

SubMatrix mobius_matrix(const Move& move);
// M_0 .. M_k; M_{n+1} = M_n * A_n.
std::vector<SubMatrix> mobius_accumulate(std::span<const Move> moves);
std::vector<SubMatrix> mobius_accumulate(const ExactNumber& x, const SidedPoint& y, std::size_t k);
// True when this move ends a fast step (anything but a red move with return time 1).
bool ends_fast_step(const Move& move);

std::vector<Move> strategy_moves(const ExactNumber& x, const Strategy& strategy, std::size_t k);
NestedInterval y_for_strategy(const ExactNumber& x, const Strategy& strategy, std::size_t k);

}  // namespace cfr
