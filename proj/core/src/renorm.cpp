#include "cfrenorm/renorm.hpp"

#include <stdexcept>

namespace cfr {

namespace {

void check_state(const ExactNumber& x) {
  if (x.sign() < 0 || x >= ExactNumber(1))
    throw std::domain_error("slow map needs 0 <= x < 1, got " + x.str());
}

}  // namespace

const char* edge_name(Edge e) { return e == Edge::green ? "green" : "red"; }

std::string PartitionCell::str() const {
  return std::string(kind == CellKind::PG ? "PG(" : "PR(") + i.get_str() + "," + n.get_str() + ")";
}

Edge slow_edge(const ExactNumber& x, const SidedPoint& y) {
  return y >= SidedPoint(ExactNumber(1) - x, Side::right) ? Edge::green : Edge::red;
}

BigInt return_time(const ExactNumber& x, Edge edge) {
  return edge == Edge::green ? x.reciprocal().floor() : (ExactNumber(1) - x).reciprocal().floor();
}

std::optional<SlowStep> t_slow(const ExactNumber& x, const SidedPoint& y) {
  check_state(x);
  if (x.is_zero()) return std::nullopt;
  Edge edge = slow_edge(x, y);
  if (edge == Edge::green) {
    GaussStep g = gauss_step(x);
    ExactNumber ny = (ExactNumber(1) - y.value()) / x;
    return SlowStep{edge, std::move(g.digit), std::move(g.remainder),
                    SidedPoint(std::move(ny), flip(y.side()))};
  }
  ExactNumber comp = ExactNumber(1) - x;
  GaussStep g = gauss_step(comp);
  ExactNumber ny = y.value() / comp;
  return SlowStep{edge, std::move(g.digit), std::move(g.remainder),
                  SidedPoint(std::move(ny), y.side())};
}

std::optional<PartitionCell> classify_fast(const ExactNumber& x, const SidedPoint& y) {
  check_state(x);
  if (x.is_zero()) return std::nullopt;
  GaussStep g = gauss_step(x);
  const BigInt& n = g.digit;
  // y sits in PG(m, n) when 1 - (m+1)x <= y <= 1 - mx, i.e. m = floor((1-y)/x) up to sides.
  ExactNumber r = (ExactNumber(1) - y.value()) / x;
  BigInt m = r.floor();
  if (r.is_integer() && y.side() == Side::right) m -= 1;
  if (m < n) return PartitionCell{CellKind::PG, m, n};
  // PR cells need the second partial quotient; T(x) > 0 here because y <= 1 - nx.
  BigInt i = gauss_step(g.remainder).digit;
  return PartitionCell{CellKind::PR, std::move(i), n};
}

std::optional<FastStep> t_fast(const ExactNumber& x, const SidedPoint& y) {
  std::optional<PartitionCell> cell = classify_fast(x, y);
  if (!cell) return std::nullopt;
  const ExactNumber n(cell->n);
  const ExactNumber i(cell->i);
  if (cell->kind == CellKind::PG) {
    ExactNumber nx = x.reciprocal() - n;
    ExactNumber ny = (ExactNumber(1) - y.value()) / x - i;
    return FastStep{*cell, std::move(nx), SidedPoint(std::move(ny), flip(y.side()))};
  }
  ExactNumber den = ExactNumber(1) - n * x;
  ExactNumber nx = (x * (n * i + ExactNumber(1)) - i) / den;
  ExactNumber ny = y.value() / den;
  return FastStep{*cell, std::move(nx), SidedPoint(std::move(ny), y.side())};
}

SlowOrbit slow_orbit(const ExactNumber& x, const SidedPoint& y, std::size_t k) {
  SlowOrbit orbit;
  ExactNumber cx = x;
  SidedPoint cy = y;
  while (orbit.steps.size() < k) {
    std::optional<SlowStep> s = t_slow(cx, cy);
    if (!s) {
      orbit.terminal = true;
      break;
    }
    cx = s->next_x;
    cy = s->next_y;
    orbit.steps.push_back(std::move(*s));
  }
  return orbit;
}

FastOrbit fast_orbit(const ExactNumber& x, const SidedPoint& y, std::size_t k) {
  FastOrbit orbit;
  ExactNumber cx = x;
  SidedPoint cy = y;
  while (orbit.steps.size() < k) {
    std::optional<FastStep> s = t_fast(cx, cy);
    if (!s) {
      orbit.terminal = true;
      break;
    }
    cx = s->next_x;
    cy = s->next_y;
    orbit.steps.push_back(std::move(*s));
  }
  return orbit;
}

BigInt slow_length(const PartitionCell& cell) {
  return cell.kind == CellKind::PG ? BigInt(cell.i + 1) : cell.n;
}

}  // namespace cfr
