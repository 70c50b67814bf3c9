#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cfrenorm/cf.hpp"

namespace cfr {

enum class MagnitudeSource : std::uint8_t { q_slow, q_fast, word_n_slow, word_n_fast };

const char* source_name(MagnitudeSource s);
std::optional<MagnitudeSource> parse_source(std::string_view name);
bool is_fast(MagnitudeSource s);

// Natural log of a positive big integer.
double log_magnitude(const BigInt& v);

inline constexpr double kLevyConstant = 1.1865691104156254;  // pi^2 / (12 ln 2)

struct GrowthPoint {
  std::size_t k;
  double value;  // (1/k) ln(magnitude)
};

struct GrowthSeries {
  MagnitudeSource source;
  std::vector<GrowthPoint> points;
  bool terminal = false;
  std::size_t slow_steps = 0;

  std::optional<double> at(std::size_t k) const;
};

// depth counts slow steps for slow sources and fast steps for fast ones. With stride s only
// every s-th index (and the last one) is recorded.
GrowthSeries growth_series(const ExactNumber& x, const Strategy& strategy, std::size_t depth,
                           MagnitudeSource source, std::size_t stride = 1);

// Exact magnitudes behind a growth series, one per index 1..depth.
std::vector<BigInt> growth_magnitudes(const ExactNumber& x, const Strategy& strategy,
                                      std::size_t depth, MagnitudeSource source);

// Per-trial generator: mt19937_64 seeded from splitmix64 over (seed, trial).
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);
// p / 2^bits with p odd and uniform in (0, 2^bits).
ExactNumber random_dyadic(std::mt19937_64& rng, std::size_t bits);
// Digits drawn independently from the Gauss-Kuzmin law.
std::vector<BigInt> random_gauss_kuzmin_digits(std::mt19937_64& rng, std::size_t count);

enum class Sampler : std::uint8_t { dyadic, digits };

const char* sampler_name(Sampler s);

struct MonteCarloConfig {
  std::size_t trials = 200;
  std::vector<std::size_t> depths{5000};
  Strategy strategy = Strategy::regular();
  bool random_y = false;  // use FromY with an independent random y per trial
  MagnitudeSource source = MagnitudeSource::q_slow;
  std::uint64_t seed = 1;
  Sampler sampler = Sampler::dyadic;
  unsigned threads = 0;  // 0 picks hardware concurrency
};

struct TrialValue {
  std::size_t trial;
  std::size_t depth;
  double value;
  bool terminal;
};

struct DepthSummary {
  std::size_t depth;
  double mean;
  double stddev;
  double stderr_of_mean;
  std::size_t terminated;
};

struct MonteCarloResult {
  MonteCarloConfig config;
  std::vector<TrialValue> values;  // ordered by trial then depth
  std::vector<DepthSummary> summaries;

  const DepthSummary& summary(std::size_t depth) const;
};

// The x (and y) a Monte Carlo trial uses; exposed so single trials can be replayed.
struct TrialInput {
  ExactNumber x;
  std::optional<SidedPoint> y;
};

TrialInput trial_input(const MonteCarloConfig& config, std::size_t trial);
MonteCarloResult monte_carlo_levy(const MonteCarloConfig& config);

struct Contrast {
  GrowthSeries slow;
  GrowthSeries fast;
  std::vector<std::size_t> fast_boundaries;  // slow step count at the end of each fast step
};

Contrast slow_vs_fast_contrast(const ExactNumber& x, const SidedPoint& y, std::size_t depth);

// Mean of ln(max entry) of the fast step matrix over random (x, y).
double mean_log_fast_norm(std::size_t samples, std::uint64_t seed);

}  // namespace cfr
