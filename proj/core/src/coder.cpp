#include "cfrenorm/coder.hpp"

#include <stdexcept>

namespace cfr {

namespace {

std::uint64_t to_count(const BigInt& v) {
  if (v < 0 || !v.fits_ulong_p()) throw std::length_error("exponent too large: " + v.get_str());
  return v.get_ui();
}

Word axb(const BigInt& a) {
  Word w = Word::power(Letter::A, 1);
  return w.append(Letter::B, to_count(a));
}

}  // namespace

const char* speed_name(Speed s) { return s == Speed::slow ? "slow" : "fast"; }

Substitution sigma_x(const BigInt& a) {
  if (a < 1) throw std::domain_error("sigma_x needs a >= 1");
  return Substitution(axb(a), axb(a - 1));
}

Substitution tau() {
  return Substitution(Word::power(Letter::B, 1), Word::power(Letter::A, 1));
}

Substitution sigma_slow(const Move& move) {
  Substitution s = sigma_x(move.a_hat);
  return move.edge == Edge::green ? s : s.swapped_letters();
}

Substitution sigma_slow(const ExactNumber& x, const SidedPoint& y) {
  std::optional<SlowStep> step = t_slow(x, y);
  if (!step) throw std::domain_error("sigma_slow at the terminal state");
  return sigma_slow(step->move());
}

SubMatrix slow_matrix(const Move& move) {
  const BigInt& a = move.a_hat;
  if (move.edge == Edge::green) return SubMatrix(1, 1, a, a - 1);
  return SubMatrix(a, a - 1, 1, 1);
}

std::optional<FastSubstitution> sigma_fast(const ExactNumber& x, const SidedPoint& y) {
  std::optional<PartitionCell> cell = classify_fast(x, y);
  if (!cell) return std::nullopt;
  BigInt remaining = slow_length(*cell);
  FastSubstitution out{Substitution::identity(), *cell, {}, false};
  ExactNumber cx = x;
  SidedPoint cy = y;
  for (; remaining > 0; --remaining) {
    std::optional<SlowStep> step = t_slow(cx, cy);
    if (!step) {
      out.terminal = true;
      break;
    }
    out.sigma = out.sigma.compose(sigma_slow(step->move()));
    out.moves.push_back(step->move());
    cx = std::move(step->next_x);
    cy = std::move(step->next_y);
  }
  return out;
}

std::vector<Move> fast_moves(const PartitionCell& cell) {
  std::vector<Move> moves;
  const BigInt& i = cell.i;
  const BigInt& n = cell.n;
  if (cell.kind == CellKind::PG) {
    for (BigInt j = 0; j < i; ++j) moves.push_back({Edge::red, 1});
    moves.push_back({Edge::green, n - i});
  } else {
    for (BigInt j = 1; j < n; ++j) moves.push_back({Edge::red, 1});
    moves.push_back({Edge::red, i + 1});
  }
  return moves;
}

Substitution fast_substitution(const PartitionCell& cell) {
  std::uint64_t i = to_count(cell.i);
  std::uint64_t n = to_count(cell.n);
  if (cell.kind == CellKind::PG) {
    Word a = Word::power(Letter::B, i);
    a.append(Letter::A).append(Letter::B, n - i);
    Word b = Word::power(Letter::B, i);
    b.append(Letter::A).append(Letter::B, n - i - 1);
    return Substitution(std::move(a), std::move(b));
  }
  Word block = Word::power(Letter::B, n - 1);
  block.append(Letter::A);
  Word a = Word::power(Letter::B, 1);
  a.append_power(block, BigInt(static_cast<unsigned long>(i + 1)));
  Word b = Word::power(Letter::B, 1);
  b.append_power(block, cell.i);
  return Substitution(std::move(a), std::move(b));
}

SubMatrix fast_matrix(const PartitionCell& cell) {
  const BigInt& i = cell.i;
  const BigInt& n = cell.n;
  if (cell.kind == CellKind::PG) return SubMatrix(1, 1, n, n - 1);
  return SubMatrix(i + 1, i, n * i + n - i, n * i - i + 1);
}

SubMatrix fast_matrix_reversed(const PartitionCell& cell) {
  const BigInt& i = cell.i;
  const BigInt& n = cell.n;
  if (cell.kind == CellKind::PG) return SubMatrix(i + 1, 1, (n - i) * (i + 1) - i, n - i - 1);
  return SubMatrix(n * i + 1, i, n, 1);
}

std::pair<ExactNumber, ExactNumber> eigenvalues(const SubMatrix& m) {
  BigInt t = m.trace();
  BigInt disc = t * t - 4 * m.det();
  if (disc < 0) throw std::domain_error("complex eigenvalues");
  return {ExactNumber::quadratic(t, 1, disc, 2), ExactNumber::quadratic(t, -1, disc, 2)};
}

std::pair<ExactNumber, ExactNumber> eigenvalues(const PartitionCell& cell) {
  return eigenvalues(fast_matrix(cell));
}

Cocycle compose_cocycle(const ExactNumber& x, const SidedPoint& y, std::size_t k, Speed speed,
                        std::uint64_t limit) {
  Cocycle c{Substitution::identity(), SubMatrix::identity(), 0, false, x, y};
  for (; c.steps < k; ++c.steps) {
    if (speed == Speed::slow) {
      std::optional<SlowStep> step = t_slow(c.x, c.y);
      if (!step) {
        c.terminal = true;
        break;
      }
      c.sigma = c.sigma.compose(sigma_slow(step->move()), limit);
      c.matrix = c.matrix * slow_matrix(step->move());
      c.x = std::move(step->next_x);
      c.y = std::move(step->next_y);
    } else {
      std::optional<FastSubstitution> sub = sigma_fast(c.x, c.y);
      if (!sub) {
        c.terminal = true;
        break;
      }
      c.sigma = c.sigma.compose(sub->sigma, limit);
      if (sub->terminal) {
        for (const Move& m : sub->moves) c.matrix = c.matrix * slow_matrix(m);
        c.x = 0;
        c.y = SidedPoint();
        continue;
      }
      std::optional<FastStep> step = t_fast(c.x, c.y);
      c.matrix = c.matrix * fast_matrix(sub->cell);
      c.x = std::move(step->next_x);
      c.y = std::move(step->next_y);
    }
  }
  return c;
}

EndpointWords rho_step_slow(const EndpointWords& s, const Substitution& cumulative, Edge edge) {
  EndpointWords r = s;
  r.k = s.k + 1;
  bool forward = s.eps == 1;
  if (edge == Edge::red) {
    Word& target = forward ? r.rho1 : r.rho0;
    target = cumulative.image(Letter::B) + target;
  } else {
    Word& target = forward ? r.rho0 : r.rho1;
    target = cumulative.image(Letter::A) + target;
    r.eps = -s.eps;
  }
  return r;
}

EndpointLengths rho_step_slow(const EndpointLengths& s, const SubMatrix& cumulative, Edge edge) {
  EndpointLengths r = s;
  r.k = s.k + 1;
  bool forward = s.eps == 1;
  if (edge == Edge::red) {
    (forward ? r.rho1 : r.rho0) += cumulative.column_sum(1);
  } else {
    (forward ? r.rho0 : r.rho1) += cumulative.column_sum(0);
    r.eps = -s.eps;
  }
  return r;
}

EndpointWords rho_step_fast(const EndpointWords& s, const Substitution& cumulative,
                            const PartitionCell& cell) {
  EndpointWords r = s;
  r.k = s.k + 1;
  bool forward = s.eps == 1;
  if (cell.kind == CellKind::PR) {
    Word& target = forward ? r.rho1 : r.rho0;
    target = cumulative.apply(Word::power(Letter::B, to_count(cell.n))) + target;
    return r;
  }
  Word bi = Word::power(Letter::B, to_count(cell.i));
  Word bia = bi;
  bia.append(Letter::A);
  Word& long_end = forward ? r.rho0 : r.rho1;
  Word& short_end = forward ? r.rho1 : r.rho0;
  long_end = cumulative.apply(bia) + long_end;
  short_end = cumulative.apply(bi) + short_end;
  r.eps = -s.eps;
  return r;
}

EndpointLengths rho_step_fast(const EndpointLengths& s, const SubMatrix& cumulative,
                              const PartitionCell& cell) {
  EndpointLengths r = s;
  r.k = s.k + 1;
  bool forward = s.eps == 1;
  BigInt len_a = cumulative.column_sum(0);
  BigInt len_b = cumulative.column_sum(1);
  if (cell.kind == CellKind::PR) {
    (forward ? r.rho1 : r.rho0) += cell.n * len_b;
    return r;
  }
  (forward ? r.rho0 : r.rho1) += cell.i * len_b + len_a;
  (forward ? r.rho1 : r.rho0) += cell.i * len_b;
  r.eps = -s.eps;
  return r;
}

ApproxTrace approx_trace(const ExactNumber& x, const SidedPoint& y, std::size_t k, Speed speed) {
  ApproxTrace t;
  t.states.push_back({});
  t.cocycle.push_back(SubMatrix::identity());
  ExactNumber cx = x;
  SidedPoint cy = y;
  while (t.steps() < k) {
    if (speed == Speed::slow) {
      std::optional<SlowStep> step = t_slow(cx, cy);
      if (!step) {
        t.terminal = true;
        break;
      }
      t.states.push_back(rho_step_slow(t.states.back(), t.cocycle.back(), step->edge));
      t.cocycle.push_back(t.cocycle.back() * slow_matrix(step->move()));
      cx = std::move(step->next_x);
      cy = std::move(step->next_y);
    } else {
      std::optional<FastStep> step = t_fast(cx, cy);
      if (!step) {
        t.terminal = true;
        break;
      }
      if (step->next_x.is_zero()) {
        // The last fast step may end early on a cell boundary; finish it slowly.
        std::optional<FastSubstitution> sub = sigma_fast(cx, cy);
        if (sub->terminal) {
          EndpointLengths st = t.states.back();
          SubMatrix m = t.cocycle.back();
          for (const Move& mv : sub->moves) {
            st = rho_step_slow(st, m, mv.edge);
            m = m * slow_matrix(mv);
          }
          st.k = t.states.back().k + 1;
          t.states.push_back(st);
          t.cocycle.push_back(m);
          t.terminal = true;
          break;
        }
      }
      t.states.push_back(rho_step_fast(t.states.back(), t.cocycle.back(), step->cell));
      t.cocycle.push_back(t.cocycle.back() * fast_matrix(step->cell));
      cx = std::move(step->next_x);
      cy = std::move(step->next_y);
    }
  }
  return t;
}

ApproxTrace approx_trace(std::span<const Move> moves) {
  ApproxTrace t;
  t.states.push_back({});
  t.cocycle.push_back(SubMatrix::identity());
  for (const Move& m : moves) {
    t.states.push_back(rho_step_slow(t.states.back(), t.cocycle.back(), m.edge));
    t.cocycle.push_back(t.cocycle.back() * slow_matrix(m));
  }
  return t;
}

std::vector<BigInt> approx_sequence(const ExactNumber& x, const SidedPoint& y, std::size_t k,
                                    Speed speed) {
  ApproxTrace t = approx_trace(x, y, k, speed);
  std::vector<BigInt> out;
  out.reserve(t.states.size());
  for (const EndpointLengths& s : t.states) out.push_back(s.max());
  return out;
}

Word substitution_coding(const ExactNumber& x, const SidedPoint& y, std::uint64_t length,
                         Speed speed) {
  Substitution cumulative;
  ExactNumber cx = x;
  SidedPoint cy = y;
  for (;;) {
    if (cx.is_zero()) return cumulative.apply(Word::power(Letter::B, length), length);
    Letter first = slow_edge(cx, cy) == Edge::green ? Letter::A : Letter::B;
    const Word& image = cumulative.image(first);
    if (image.size() >= length) return image.prefix(length);
    if (speed == Speed::slow) {
      std::optional<SlowStep> step = t_slow(cx, cy);
      cumulative = cumulative.compose(sigma_slow(step->move()), length);
      cx = std::move(step->next_x);
      cy = std::move(step->next_y);
    } else {
      std::optional<FastSubstitution> sub = sigma_fast(cx, cy);
      cumulative = cumulative.compose(sub->sigma, length);
      if (sub->terminal) {
        cx = 0;
        continue;
      }
      std::optional<FastStep> step = t_fast(cx, cy);
      cx = std::move(step->next_x);
      cy = std::move(step->next_y);
    }
  }
}

}  // namespace cfr
