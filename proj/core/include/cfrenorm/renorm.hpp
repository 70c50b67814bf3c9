#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfrenorm/exact.hpp"

namespace cfr {

enum class Edge : std::uint8_t { green, red };

const char* edge_name(Edge e);

// The combinatorial content of one slow step.
struct Move {
  Edge edge;
  BigInt a_hat;
  friend bool operator==(const Move&, const Move&) = default;
};

struct SlowStep {
  Edge edge;
  BigInt a_hat;
  ExactNumber next_x;
  SidedPoint next_y;

  Move move() const { return {edge, a_hat}; }
};

enum class CellKind : std::uint8_t { PG, PR };

struct PartitionCell {
  CellKind kind;
  BigInt i;
  BigInt n;

  std::string str() const;
  friend bool operator==(const PartitionCell&, const PartitionCell&) = default;
};

struct FastStep {
  PartitionCell cell;
  ExactNumber next_x;
  SidedPoint next_y;
};

// Which branch of the slow map applies at (x, y); no arithmetic beyond 1 - x.
Edge slow_edge(const ExactNumber& x, const SidedPoint& y);
// The return time of the chosen branch: floor(1/x) or floor(1/(1-x)).
BigInt return_time(const ExactNumber& x, Edge edge);

// std::nullopt marks the terminal state x = 0. Inputs outside 0 <= x < 1 throw.
std::optional<SlowStep> t_slow(const ExactNumber& x, const SidedPoint& y);
std::optional<PartitionCell> classify_fast(const ExactNumber& x, const SidedPoint& y);
std::optional<FastStep> t_fast(const ExactNumber& x, const SidedPoint& y);

struct SlowOrbit {
  std::vector<SlowStep> steps;
  bool terminal = false;
};

struct FastOrbit {
  std::vector<FastStep> steps;
  bool terminal = false;
};

SlowOrbit slow_orbit(const ExactNumber& x, const SidedPoint& y, std::size_t k);
FastOrbit fast_orbit(const ExactNumber& x, const SidedPoint& y, std::size_t k);

// Number of slow steps making up one fast step from this cell.
BigInt slow_length(const PartitionCell& cell);

}  // namespace cfr
