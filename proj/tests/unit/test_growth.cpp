#include <doctest.h>

#include <cmath>

#include "cfrenorm/coder.hpp"
#include "cfrenorm/growth.hpp"
#include "support.hpp"

using namespace cfr;

TEST_CASE("log magnitude of big integers") {
  CHECK(log_magnitude(BigInt(1)) == doctest::Approx(0.0));
  CHECK(log_magnitude(BigInt(1000)) == doctest::Approx(std::log(1000.0)));
  BigInt huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 3, 5000);
  CHECK(log_magnitude(huge) == doctest::Approx(5000 * std::log(3.0)));
  CHECK_THROWS(log_magnitude(BigInt(0)));
}

TEST_CASE("golden mean grows at log phi for every source") {
  ExactNumber phi = golden_mean();
  double lphi = std::log((1 + std::sqrt(5.0)) / 2);
  GrowthSeries q = growth_series(phi, Strategy::regular(), 2000, MagnitudeSource::q_slow, 500);
  CHECK(q.points.size() == 4);
  CHECK(q.points.back().k == 2000);
  CHECK(q.points.back().value == doctest::Approx(lphi).epsilon(1e-3));
  SidedPoint yg(ExactNumber(1) / (ExactNumber(1) + phi));
  GrowthSeries w = growth_series(phi, Strategy::from_y(yg), 2000, MagnitudeSource::word_n_fast, 2000);
  CHECK(w.points.back().value == doctest::Approx(lphi).epsilon(1e-3));
}

TEST_CASE("magnitudes are the convergent denominators and approximating indices") {
  std::mt19937_64 rng = testing::rng_for(61);
  for (int t = 0; t < 30; ++t) {
    mpq_class v = testing::random_fraction(rng, 1000000000);
    ExactNumber x = testing::to_exact(v);
    std::vector<mpz_class> q = testing::denominators(testing::euclid_digits(v));
    std::vector<BigInt> m = growth_magnitudes(x, Strategy::regular(), 100, MagnitudeSource::q_slow);
    // the last regular step is already final, earlier ones are too
    for (std::size_t k = 0; k < m.size(); ++k) CHECK(m[k] == q[k + 1]);
    SidedPoint y(testing::to_exact(testing::random_fraction(rng, 1000000)));
    std::vector<BigInt> n = growth_magnitudes(x, Strategy::from_y(y), 100, MagnitudeSource::word_n_slow);
    std::vector<BigInt> ref = approx_sequence(x, y, 100, Speed::slow);
    REQUIRE(n.size() + 1 == ref.size());
    for (std::size_t k = 0; k < n.size(); ++k) CHECK(n[k] == ref[k + 1]);
    std::vector<BigInt> nf = growth_magnitudes(x, Strategy::from_y(y), 100, MagnitudeSource::word_n_fast);
    std::vector<BigInt> reff = approx_sequence(x, y, 100, Speed::fast);
    REQUIRE(nf.size() + 1 == reff.size());
    for (std::size_t k = 0; k < nf.size(); ++k) CHECK(nf[k] == reff[k + 1]);
  }
}

TEST_CASE("random inputs are reproducible") {
  std::mt19937_64 a = trial_rng(1, 5), b = trial_rng(1, 5), c = trial_rng(1, 6);
  CHECK(a() == b());
  CHECK(trial_rng(1, 5)() != c());
  std::mt19937_64 r = trial_rng(9, 0);
  ExactNumber x = random_dyadic(r, 100);
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, 100);
  CHECK(x.denominator() == den);
  CHECK(x.sign() > 0);
  CHECK(x < ExactNumber(1));
  std::vector<BigInt> d = random_gauss_kuzmin_digits(r, 20000);
  std::size_t ones = 0;
  for (const BigInt& v : d) ones += v == 1;
  // P(a = 1) = log2(4/3)
  CHECK(static_cast<double>(ones) / 20000 == doctest::Approx(std::log2(4.0 / 3.0)).epsilon(0.05));
}

TEST_CASE("Monte Carlo is deterministic and independent of thread count") {
  MonteCarloConfig c;
  c.trials = 12;
  c.depths = {300, 100};
  c.threads = 1;
  MonteCarloResult one = monte_carlo_levy(c);
  c.threads = 4;
  MonteCarloResult four = monte_carlo_levy(c);
  REQUIRE(one.values.size() == 24);
  for (std::size_t j = 0; j < one.values.size(); ++j) {
    CHECK(one.values[j].trial == four.values[j].trial);
    CHECK(one.values[j].value == four.values[j].value);
  }
  CHECK(one.summaries[0].depth == 100);
  CHECK(one.summary(300).mean == four.summary(300).mean);
  double sum = 0;
  for (const TrialValue& v : one.values)
    if (v.depth == 300) sum += v.value;
  CHECK(one.summary(300).mean == doctest::Approx(sum / 12));
  CHECK_THROWS(one.summary(7));
}

TEST_CASE("trial inputs replay single trials") {
  MonteCarloConfig c;
  c.trials = 3;
  c.depths = {200};
  c.threads = 1;
  MonteCarloResult r = monte_carlo_levy(c);
  TrialInput in = trial_input(c, 2);
  GrowthSeries g = growth_series(in.x, c.strategy, 200, c.source, 200);
  CHECK(g.points.back().value == r.values[2].value);
}

TEST_CASE("alpha zero and backward give the same trials") {
  MonteCarloConfig a;
  a.trials = 5;
  a.depths = {200};
  a.threads = 1;
  a.strategy = Strategy::alpha(0);
  MonteCarloConfig b = a;
  b.strategy = Strategy::backward();
  MonteCarloResult ra = monte_carlo_levy(a), rb = monte_carlo_levy(b);
  for (std::size_t j = 0; j < ra.values.size(); ++j) CHECK(ra.values[j].value == rb.values[j].value);
}

TEST_CASE("terminating trials are flagged") {
  // the digits sampler draws 2*depth+16 digits, so the orbit cannot end before depth
  MonteCarloResult r = monte_carlo_levy(MonteCarloConfig{4, {50}, Strategy::regular(), false,
                                                         MagnitudeSource::q_slow, 1, Sampler::digits, 1});
  CHECK(r.summaries[0].terminated == 0);
  GrowthSeries short_orbit = growth_series(ExactNumber::parse("2/5"), Strategy::regular(), 10, MagnitudeSource::q_slow);
  CHECK(short_orbit.terminal);
  CHECK(short_orbit.points.size() == 2);
}

TEST_CASE("slow and fast contrast report") {
  ExactNumber x = ExactNumber::parse("sqrt(3)-1");
  SidedPoint y(ExactNumber::parse("1/3"));
  Contrast c = slow_vs_fast_contrast(x, y, 200);
  CHECK(c.slow.points.size() == 200);
  CHECK(c.fast.points.size() == c.fast_boundaries.size());
  CHECK(c.fast_boundaries.size() < 200);
  std::vector<BigInt> fast = approx_sequence(x, y, c.fast_boundaries.size(), Speed::fast);
  for (std::size_t k = 0; k < c.fast.points.size(); ++k)
    CHECK(c.fast.points[k].value ==
          doctest::Approx(log_magnitude(fast[k + 1]) / static_cast<double>(k + 1)));
}

TEST_CASE("mean log fast-step norm is finite and positive") {
  double m = mean_log_fast_norm(2000, 1);
  CHECK(m > 0.0);
  CHECK(m < 5.0);
}
