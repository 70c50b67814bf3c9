#include "cfrenorm/growth.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "cfrenorm/coder.hpp"

namespace cfr {

const char* source_name(MagnitudeSource s) {
  switch (s) {
    case MagnitudeSource::q_slow: return "q-slow";
    case MagnitudeSource::q_fast: return "q-fast";
    case MagnitudeSource::word_n_slow: return "word-slow";
    case MagnitudeSource::word_n_fast: return "word-fast";
  }
  return "unknown";
}

std::optional<MagnitudeSource> parse_source(std::string_view name) {
  for (MagnitudeSource s : {MagnitudeSource::q_slow, MagnitudeSource::q_fast,
                            MagnitudeSource::word_n_slow, MagnitudeSource::word_n_fast})
    if (name == source_name(s)) return s;
  return std::nullopt;
}

bool is_fast(MagnitudeSource s) {
  return s == MagnitudeSource::q_fast || s == MagnitudeSource::word_n_fast;
}

double log_magnitude(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log of a nonpositive magnitude");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

std::optional<double> GrowthSeries::at(std::size_t k) const {
  auto it = std::lower_bound(points.begin(), points.end(), k,
                             [](const GrowthPoint& p, std::size_t v) { return p.k < v; });
  if (it == points.end() || it->k != k) return std::nullopt;
  return it->value;
}

namespace {

struct WalkEnd {
  bool terminal;
  std::size_t slow_steps;
};

// Calls emit(k, magnitude) for k = 1..depth (or until the walk ends).
template <class Emit>
WalkEnd walk(const ExactNumber& x, const Strategy& strategy, std::size_t depth,
             MagnitudeSource source, Emit&& emit) {
  StrategyWalker walker(x, strategy);
  const bool fast = is_fast(source);
  const bool words = source == MagnitudeSource::word_n_slow ||
                     source == MagnitudeSource::word_n_fast;
  SubMatrix mobius;
  SubMatrix cumulative;
  EndpointLengths ends;
  std::size_t k = 0;
  while (k < depth) {
    std::optional<Move> m = walker.next();
    if (!m) break;
    if (words) {
      ends = rho_step_slow(ends, cumulative, m->edge);
      cumulative = cumulative * slow_matrix(*m);
    } else {
      mobius = mobius * mobius_matrix(*m);
    }
    if (fast && !ends_fast_step(*m)) continue;
    ++k;
    emit(k, words ? ends.max() : mobius(1, 1));
  }
  return {walker.terminal(), walker.steps()};
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

GrowthSeries growth_series(const ExactNumber& x, const Strategy& strategy, std::size_t depth,
                           MagnitudeSource source, std::size_t stride) {
  if (stride == 0) stride = 1;
  GrowthSeries g{source, {}, false, 0};
  std::size_t last = 0;
  BigInt last_value;
  WalkEnd end = walk(x, strategy, depth, source, [&](std::size_t k, const BigInt& v) {
    last = k;
    last_value = v;
    if (k % stride == 0) g.points.push_back({k, log_magnitude(v) / static_cast<double>(k)});
  });
  if (last > 0 && (g.points.empty() || g.points.back().k != last))
    g.points.push_back({last, log_magnitude(last_value) / static_cast<double>(last)});
  g.terminal = end.terminal;
  g.slow_steps = end.slow_steps;
  return g;
}

std::vector<BigInt> growth_magnitudes(const ExactNumber& x, const Strategy& strategy,
                                      std::size_t depth, MagnitudeSource source) {
  std::vector<BigInt> out;
  walk(x, strategy, depth, source, [&](std::size_t, const BigInt& v) { out.push_back(v); });
  return out;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t state = seed;
  std::uint64_t a = splitmix64(state);
  state ^= trial * 0xD1B54A32D192ED03ull;
  std::uint64_t b = splitmix64(state);
  return std::mt19937_64(a ^ (b << 1));
}

ExactNumber random_dyadic(std::mt19937_64& rng, std::size_t bits) {
  if (bits == 0) throw std::invalid_argument("random_dyadic needs bits >= 1");
  std::size_t words = (bits + 63) / 64;
  std::vector<std::uint64_t> raw(words);
  for (auto& w : raw) w = rng();
  BigInt p;
  mpz_import(p.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, raw.data());
  mpz_fdiv_r_2exp(p.get_mpz_t(), p.get_mpz_t(), bits);
  mpz_setbit(p.get_mpz_t(), 0);
  BigInt q;
  mpz_ui_pow_ui(q.get_mpz_t(), 2, bits);
  return ExactNumber::rational(p, q);
}

std::vector<BigInt> random_gauss_kuzmin_digits(std::mt19937_64& rng, std::size_t count) {
  std::vector<BigInt> digits;
  digits.reserve(count);
  while (digits.size() < count) {
    // u uniform in (0,1]; 2^u - 1 follows the Gauss measure
    double u = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
    double t = std::exp2(u) - 1.0;
    double a = std::floor(1.0 / t);
    if (!(a >= 1.0) || a > 1e18) continue;
    digits.emplace_back(static_cast<unsigned long>(a));
  }
  return digits;
}

const char* sampler_name(Sampler s) { return s == Sampler::dyadic ? "dyadic" : "digits"; }

const DepthSummary& MonteCarloResult::summary(std::size_t depth) const {
  for (const DepthSummary& s : summaries)
    if (s.depth == depth) return s;
  throw std::out_of_range("no summary for depth " + std::to_string(depth));
}

TrialInput trial_input(const MonteCarloConfig& config, std::size_t trial) {
  std::size_t depth = config.depths.empty()
                          ? 1
                          : *std::max_element(config.depths.begin(), config.depths.end());
  bool fast = is_fast(config.source);
  std::mt19937_64 rng = trial_rng(config.seed, trial);
  TrialInput in;
  if (config.sampler == Sampler::dyadic) {
    in.x = random_dyadic(rng, (fast ? 8 : 4) * depth + 256);
  } else {
    std::vector<BigInt> digits = random_gauss_kuzmin_digits(rng, (fast ? 3 : 2) * depth + 16);
    in.x = evaluate_regular_cf(digits);
  }
  if (config.random_y) in.y = SidedPoint(random_dyadic(rng, 128));
  return in;
}

MonteCarloResult monte_carlo_levy(const MonteCarloConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("monte_carlo_levy needs trials >= 1");
  if (config.depths.empty()) throw std::invalid_argument("monte_carlo_levy needs a depth");
  std::vector<std::size_t> depths = config.depths;
  std::sort(depths.begin(), depths.end());
  depths.erase(std::unique(depths.begin(), depths.end()), depths.end());
  const std::size_t max_depth = depths.back();

  std::vector<std::vector<TrialValue>> per_trial(config.trials);
  auto run_trial = [&](std::size_t t) {
    TrialInput in = trial_input(config, t);
    Strategy s = in.y ? Strategy::from_y(*in.y) : config.strategy;
    std::vector<TrialValue> vals;
    double last_value = 0;
    std::size_t last_k = 0;
    std::size_t next = 0;
    walk(in.x, s, max_depth, config.source, [&](std::size_t k, const BigInt& v) {
      if (next < depths.size() && k == depths[next]) {
        last_value = log_magnitude(v) / static_cast<double>(k);
        vals.push_back({t, k, last_value, false});
        ++next;
      }
      last_k = k;
      if (next >= depths.size()) return;
      if (k == depths[next] - 1) last_value = log_magnitude(v) / static_cast<double>(k);
    });
    (void)last_k;
    // A trial that stops early reports its last available value at the missing depths.
    for (; next < depths.size(); ++next) vals.push_back({t, depths[next], last_value, true});
    per_trial[t] = std::move(vals);
  };

  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, config.trials));
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t t; (t = cursor.fetch_add(1)) < config.trials;) run_trial(t);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  MonteCarloResult result;
  result.config = config;
  for (auto& v : per_trial) result.values.insert(result.values.end(), v.begin(), v.end());
  for (std::size_t d : depths) {
    double sum = 0, sum_sq = 0;
    std::size_t n = 0, terminated = 0;
    for (const TrialValue& v : result.values) {
      if (v.depth != d) continue;
      sum += v.value;
      ++n;
      if (v.terminal) ++terminated;
    }
    double mean = sum / static_cast<double>(n);
    for (const TrialValue& v : result.values)
      if (v.depth == d) sum_sq += (v.value - mean) * (v.value - mean);
    double sd = n > 1 ? std::sqrt(sum_sq / static_cast<double>(n - 1)) : 0.0;
    result.summaries.push_back({d, mean, sd, sd / std::sqrt(static_cast<double>(n)), terminated});
  }
  return result;
}

Contrast slow_vs_fast_contrast(const ExactNumber& x, const SidedPoint& y, std::size_t depth) {
  Contrast c;
  Strategy s = Strategy::from_y(y);
  c.slow = growth_series(x, s, depth, MagnitudeSource::word_n_slow);
  c.fast.source = MagnitudeSource::word_n_fast;
  std::vector<Move> moves = strategy_moves(x, s, depth);
  ApproxTrace t = approx_trace(moves);
  for (std::size_t j = 0; j < moves.size(); ++j) {
    if (!ends_fast_step(moves[j])) continue;
    c.fast_boundaries.push_back(j + 1);
    std::size_t k = c.fast_boundaries.size();
    c.fast.points.push_back({k, log_magnitude(t.states[j + 1].max()) / static_cast<double>(k)});
  }
  c.fast.terminal = c.slow.terminal;
  c.fast.slow_steps = moves.size();
  return c;
}

double mean_log_fast_norm(std::size_t samples, std::uint64_t seed) {
  double sum = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::mt19937_64 rng = trial_rng(seed, s);
    ExactNumber x = random_dyadic(rng, 128);
    SidedPoint y(random_dyadic(rng, 64));
    std::optional<PartitionCell> cell = classify_fast(x, y);
    SubMatrix m = fast_matrix(*cell);
    BigInt top = m(0, 0);
    for (int r = 0; r < 2; ++r)
      for (int col = 0; col < 2; ++col)
        if (m(r, col) > top) top = m(r, col);
    sum += log_magnitude(top);
  }
  return sum / static_cast<double>(samples);
}

}  // namespace cfr
