#include "cfrenorm/cf.hpp"

#include <stdexcept>

#include "cfrenorm/coder.hpp"

namespace cfr {

Validity validate(const SemiRegularCF& cf) {
  Validity v;
  if (cf.digits.size() != cf.signs.size()) v.well_formed = false;
  for (int s : cf.signs)
    if (s != 1 && s != -1) v.well_formed = false;
  for (const BigInt& d : cf.digits)
    if (d < 1) v.well_formed = false;
  // e_n follows d_n for n >= 1
  for (std::size_t n = 1; n < cf.signs.size() && n <= cf.digits.size(); ++n) {
    BigInt s = cf.digits[n - 1] + cf.signs[n];
    if (s < 1) ++v.sum_violations;
    if (s >= 2) ++v.sum_at_least_two;
  }
  return v;
}

ExactNumber evaluate(const SemiRegularCF& cf) {
  if (cf.digits.empty()) return ExactNumber(cf.integer_part);
  // tail = num/den, built from the last digit outwards
  BigInt num = cf.digits.back();
  BigInt den = 1;
  for (std::size_t j = cf.digits.size() - 1; j-- > 0;) {
    // d + e/(num/den) = (d num + e den) / num
    BigInt next = cf.digits[j] * num + cf.signs[j + 1] * den;
    den = std::move(num);
    num = std::move(next);
  }
  if (num == 0) throw std::domain_error("continued fraction has a zero denominator");
  return ExactNumber(cf.integer_part) + ExactNumber::rational(cf.signs[0] * den, num);
}

ConvergentTable::ConvergentTable(const SemiRegularCF& cf) {
  p_[1] = cf.integer_part;
  for (std::size_t n = 0; n < cf.digits.size(); ++n) {
    const BigInt& d = cf.digits[n];
    int e = cf.signs[n];
    std::size_t last = p_.size() - 1;
    p_.push_back(d * p_[last] + e * p_[last - 1]);
    q_.push_back(d * q_[last] + e * q_[last - 1]);
  }
}

Strategy Strategy::alpha(ExactNumber a) {
  if (a.sign() < 0 || a > ExactNumber(1)) throw std::domain_error("alpha must lie in [0,1]");
  Strategy s(Kind::alpha);
  s.alpha_ = std::move(a);
  return s;
}

Strategy Strategy::counter_alpha(ExactNumber a) {
  if (a.sign() < 0 || a > ExactNumber(1)) throw std::domain_error("alpha must lie in [0,1]");
  Strategy s(Kind::counter_alpha);
  s.alpha_ = std::move(a);
  return s;
}

Strategy Strategy::from_y(SidedPoint y) {
  Strategy s(Kind::from_y);
  s.y_ = std::move(y);
  return s;
}

Strategy Strategy::from_stream(std::vector<Edge> decisions) {
  Strategy s(Kind::from_stream);
  s.stream_ = std::move(decisions);
  return s;
}

std::string Strategy::name() const {
  switch (kind_) {
    case Kind::regular: return "regular";
    case Kind::backward: return "backward";
    case Kind::alpha: return "alpha(" + alpha_.str() + ")";
    case Kind::nearest_integer: return "nearest-integer";
    case Kind::counter_alpha: return "counter-alpha(" + alpha_.str() + ")";
    case Kind::lehner: return "lehner";
    case Kind::from_y: return "from-y(" + y_.str() + ")";
    case Kind::from_stream: return "from-stream";
  }
  return "unknown";
}

StrategyWalker::StrategyWalker(ExactNumber x, Strategy strategy)
    : x_(std::move(x)), y_(strategy.y()), strategy_(std::move(strategy)) {
  if (x_.sign() < 0 || x_ >= ExactNumber(1)) throw std::domain_error("x must lie in [0,1)");
}

std::optional<Edge> StrategyWalker::peek_edge() const {
  if (x_.is_zero()) return std::nullopt;
  static const ExactNumber half = ExactNumber::rational(1, 2);
  switch (strategy_.kind()) {
    case Strategy::Kind::regular: return Edge::green;
    case Strategy::Kind::backward: return Edge::red;
    case Strategy::Kind::alpha: return x_ <= strategy_.alpha_value() ? Edge::green : Edge::red;
    case Strategy::Kind::nearest_integer: return x_ <= half ? Edge::green : Edge::red;
    case Strategy::Kind::counter_alpha:
      return x_ <= strategy_.alpha_value() ? Edge::red : Edge::green;
    case Strategy::Kind::lehner: return x_ < half ? Edge::red : Edge::green;
    case Strategy::Kind::from_y: return slow_edge(x_, y_);
    case Strategy::Kind::from_stream:
      if (steps_ >= strategy_.stream().size()) return std::nullopt;
      return strategy_.stream()[steps_];
  }
  return std::nullopt;
}

std::optional<Move> StrategyWalker::next() {
  if (strategy_.kind() == Strategy::Kind::from_y) {
    std::optional<SlowStep> step = t_slow(x_, y_);
    if (!step) return std::nullopt;
    x_ = std::move(step->next_x);
    y_ = std::move(step->next_y);
    ++steps_;
    return step->move();
  }
  std::optional<Edge> edge = peek_edge();
  if (!edge) return std::nullopt;
  GaussStep g = gauss_step(*edge == Edge::green ? x_ : ExactNumber(1) - x_);
  x_ = std::move(g.remainder);
  ++steps_;
  return Move{*edge, std::move(g.digit)};
}

SemiRegularCF cf_from_moves(std::span<const Move> moves, std::optional<Edge> following) {
  SemiRegularCF cf;
  auto bump = [&cf] {
    if (cf.digits.empty()) cf.integer_part += 1;
    else cf.digits.back() += 1;
  };
  for (const Move& m : moves) {
    if (m.edge == Edge::red) bump();
    cf.signs.push_back(m.edge == Edge::green ? 1 : -1);
    cf.digits.push_back(m.a_hat);
  }
  if (following == Edge::red && !moves.empty()) bump();
  return cf;
}

Expansion expand(const ExactNumber& x, const Strategy& strategy, std::size_t k) {
  if (x.sign() <= 0 || x >= ExactNumber(1)) throw std::domain_error("expand needs 0 < x < 1");
  StrategyWalker walker(x, strategy);
  Expansion out;
  while (out.trace.size() < k) {
    std::optional<Move> m = walker.next();
    if (!m) break;
    out.trace.push_back(std::move(*m));
  }
  out.terminal = walker.terminal();
  std::optional<Edge> following;
  if (!out.terminal) {
    following = walker.peek_edge();
    out.last_digit_final = following.has_value();
  }
  out.cf = cf_from_moves(out.trace, following);
  out.convergents = ConvergentTable(out.cf);
  return out;
}

namespace {

BigInt& digit_before(SemiRegularCF& cf, std::size_t n) {
  return n == 0 ? cf.integer_part : cf.digits.at(n - 1);
}

}  // namespace

SemiRegularCF singularize(const SemiRegularCF& cf, std::size_t n) {
  if (n >= cf.digits.size() || cf.digits[n] != 1)
    throw std::invalid_argument("singularize: d_{n+1} must equal 1");
  bool last = n + 1 == cf.digits.size();
  if (!last && cf.signs[n + 1] != 1)
    throw std::invalid_argument("singularize: the sign after the 1 must be +1");
  SemiRegularCF out = cf;
  int e = cf.signs[n];
  digit_before(out, n) += e;
  if (!last) {
    out.digits[n + 1] += 1;
    out.signs[n + 1] = -e;
  }
  out.digits.erase(out.digits.begin() + static_cast<long>(n));
  out.signs.erase(out.signs.begin() + static_cast<long>(n));
  return out;
}

SemiRegularCF insert(const SemiRegularCF& cf, std::size_t n) {
  if (n >= cf.digits.size() || cf.digits[n] < 2)
    throw std::invalid_argument("insert: d_{n+1} must be at least 2");
  if (cf.signs[n] != 1) throw std::invalid_argument("insert: the sign before d_{n+1} must be +1");
  SemiRegularCF out = cf;
  digit_before(out, n) += 1;
  out.digits[n] -= 1;
  out.digits.insert(out.digits.begin() + static_cast<long>(n), BigInt(1));
  out.signs.insert(out.signs.begin() + static_cast<long>(n), -1);
  return out;
}

SubMatrix mobius_matrix(const Move& move) {
  const BigInt& a = move.a_hat;
  if (move.edge == Edge::green) return SubMatrix(0, 1, 1, a);
  return SubMatrix(1, a - 1, 1, a);
}

std::vector<SubMatrix> mobius_accumulate(std::span<const Move> moves) {
  std::vector<SubMatrix> out{SubMatrix::identity()};
  out.reserve(moves.size() + 1);
  for (const Move& m : moves) out.push_back(out.back() * mobius_matrix(m));
  return out;
}

std::vector<SubMatrix> mobius_accumulate(const ExactNumber& x, const SidedPoint& y, std::size_t k) {
  SlowOrbit orbit = slow_orbit(x, y, k);
  std::vector<Move> moves;
  for (const SlowStep& s : orbit.steps) moves.push_back(s.move());
  return mobius_accumulate(moves);
}

bool ends_fast_step(const Move& move) { return !(move.edge == Edge::red && move.a_hat == 1); }

std::vector<Move> strategy_moves(const ExactNumber& x, const Strategy& strategy, std::size_t k) {
  StrategyWalker walker(x, strategy);
  std::vector<Move> moves;
  while (moves.size() < k) {
    std::optional<Move> m = walker.next();
    if (!m) break;
    moves.push_back(std::move(*m));
  }
  return moves;
}

NestedInterval y_for_strategy(const ExactNumber& x, const Strategy& strategy, std::size_t k) {
  std::vector<Move> moves = strategy_moves(x, strategy, k);
  ApproxTrace t = approx_trace(moves);
  const EndpointLengths& s = t.states.back();
  return make_interval(x, s.rho0, s.rho1, moves.size());
}

}  // namespace cfr
