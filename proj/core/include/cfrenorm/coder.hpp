#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cfrenorm/renorm.hpp"
#include "cfrenorm/words.hpp"

namespace cfr {

enum class Speed : std::uint8_t { slow, fast };

const char* speed_name(Speed s);

// A -> AB^a, B -> AB^(a-1)
Substitution sigma_x(const BigInt& a);
// A <-> B
Substitution tau();
Substitution sigma_slow(const Move& move);
// Throws std::domain_error at the terminal state.
Substitution sigma_slow(const ExactNumber& x, const SidedPoint& y);
SubMatrix slow_matrix(const Move& move);

struct FastSubstitution {
  Substitution sigma;
  PartitionCell cell;
  std::vector<Move> moves;  // the slow moves actually taken
  // The slow orbit hit x = 0 before the cell's slow length ran out. This happens only on
  // cell boundaries with rational x; sigma then covers the moves taken.
  bool terminal = false;
};

// Composes the slow substitutions met along one fast step.
std::optional<FastSubstitution> sigma_fast(const ExactNumber& x, const SidedPoint& y);
// Closed forms of the same composition, keyed by cell.
Substitution fast_substitution(const PartitionCell& cell);
SubMatrix fast_matrix(const PartitionCell& cell);
// The same slow step matrices multiplied in the opposite order; conjugate to fast_matrix.
SubMatrix fast_matrix_reversed(const PartitionCell& cell);
// The slow moves making up one fast step from this cell.
std::vector<Move> fast_moves(const PartitionCell& cell);

// Roots of the characteristic polynomial, larger first.
std::pair<ExactNumber, ExactNumber> eigenvalues(const SubMatrix& m);
std::pair<ExactNumber, ExactNumber> eigenvalues(const PartitionCell& cell);

struct Cocycle {
  Substitution sigma;
  SubMatrix matrix;
  std::size_t steps = 0;
  bool terminal = false;
  ExactNumber x;
  SidedPoint y;
};

// sigma(x,y,k) = sigma(x,y,k-1) o sigma(T^(k-1)(x,y)); images truncated to `limit` letters
// while the matrix stays exact.
Cocycle compose_cocycle(const ExactNumber& x, const SidedPoint& y, std::size_t k, Speed speed,
                        std::uint64_t limit = kNoLimit);

struct EndpointWords {
  Word rho0;
  Word rho1;
  int eps = 1;
  std::size_t k = 0;
};

struct EndpointLengths {
  BigInt rho0 = 0;
  BigInt rho1 = 0;
  int eps = 1;
  std::size_t k = 0;

  const BigInt& max() const { return rho0 < rho1 ? rho1 : rho0; }
  friend bool operator==(const EndpointLengths&, const EndpointLengths&) = default;
};

// `cumulative` is sigma(x,y,k), the composition before the current step.
EndpointWords rho_step_slow(const EndpointWords& s, const Substitution& cumulative, Edge edge);
EndpointLengths rho_step_slow(const EndpointLengths& s, const SubMatrix& cumulative, Edge edge);
EndpointWords rho_step_fast(const EndpointWords& s, const Substitution& cumulative,
                            const PartitionCell& cell);
EndpointLengths rho_step_fast(const EndpointLengths& s, const SubMatrix& cumulative,
                              const PartitionCell& cell);

struct ApproxTrace {
  std::vector<EndpointLengths> states;  // states[j] after j steps
  std::vector<SubMatrix> cocycle;       // cocycle[j] is the matrix of sigma(x,y,j)
  bool terminal = false;

  std::size_t steps() const { return states.size() - 1; }
};

ApproxTrace approx_trace(const ExactNumber& x, const SidedPoint& y, std::size_t k, Speed speed);
// Slow trace driven by an explicit move list; y is not needed.
ApproxTrace approx_trace(std::span<const Move> moves);
// N(x,y,j) = max(|rho0|, |rho1|) for j = 0..k (fewer entries if the orbit dies).
std::vector<BigInt> approx_sequence(const ExactNumber& x, const SidedPoint& y, std::size_t k,
                                    Speed speed);

// Prefix of length L of the coding of (x, y), assembled from the substitution cocycle.
Word substitution_coding(const ExactNumber& x, const SidedPoint& y, std::uint64_t length,
                         Speed speed);

}  // namespace cfr
