#include "eur/game.hpp"

#include <algorithm>
#include <cmath>
#include <omp.h>

#include "eur/entropies.hpp"
#include "eur/errors.hpp"

namespace eur {

namespace {

std::vector<double> to_cdf(std::vector<double> w) {
  double total = 0.0;
  for (double& x : w) total += (x = std::max(x, 0.0));
  double acc = 0.0;
  for (double& x : w) x = (acc += x / total);
  if (!w.empty()) w.back() = 1.0;
  return w;
}

int draw(const std::vector<double>& cdf, double u) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return static_cast<int>(std::min<std::ptrdiff_t>(it - cdf.begin(), cdf.size() - 1));
}

struct Tally {
  std::vector<long> trials;
  std::vector<long> wins;
  explicit Tally(std::size_t n) : trials(n, 0), wins(n, 0) {}
};

void play(const GameTables& t, std::uint64_t trial, CounterRng& rng, Tally& tally) {
  rng.seek(3 * trial);
  const int s = draw(t.setting_cdf, rng.uniform());
  const int k = draw(t.alice_cdf[s], rng.uniform());
  const int j = draw(t.bob_cdf[s][k], rng.uniform());
  ++tally.trials[s];
  if (j == k) ++tally.wins[s];
}

GameResult finish(const GameTables& t, long trials, const Tally& tally) {
  GameResult r;
  r.trials = trials;
  r.analytic_rate = t.analytic;
  for (std::size_t s = 0; s < tally.trials.size(); ++s) {
    SettingTally st;
    st.trials = tally.trials[s];
    st.wins = tally.wins[s];
    st.empirical_rate = st.trials > 0 ? static_cast<double>(st.wins) / st.trials : 0.0;
    st.analytic_rate = t.analytic_per_setting[s];
    r.wins += st.wins;
    r.per_setting.push_back(st);
  }
  r.empirical_rate = static_cast<double>(r.wins) / trials;
  const double p = std::clamp(t.analytic, 0.0, 1.0);
  r.std_error = std::sqrt(p * (1.0 - p) / trials);
  return r;
}

void check_trials(long trials) {
  if (trials < 1) throw ParameterError("simulate_game: trials must be >= 1");
}

}  // namespace

bool GameResult::within(double sigmas) const {
  // the analytic rate itself carries ~1e-15 rounding, which matters when std_error is 0
  return std::abs(empirical_rate - analytic_rate) <= sigmas * std_error + 1e-12;
}

GameTables build_game_tables(const DensityMatrix& rho, const MeasurementFamily& family,
                             double rank_tol) {
  const CqEnsemble cq = measure_family(rho, family);
  GameTables t;
  t.setting_cdf = to_cdf(cq.weights);
  for (std::size_t s = 0; s < cq.per_setting.size(); ++s) {
    const auto& conds = cq.per_setting[s];
    const auto pgm = pgm_effects(conds, rank_tol);
    std::vector<double> alice;
    std::vector<std::vector<double>> bob;
    double success = 0.0;
    for (std::size_t k = 0; k < conds.size(); ++k) {
      const double pk = conds[k].trace().real();
      alice.push_back(pk);
      std::vector<double> q;
      for (std::size_t j = 0; j < pgm.size(); ++j) {
        const double joint = (pgm[j] * conds[k]).trace().real();
        q.push_back(joint);
        if (j == k) success += joint;
      }
      // Outcomes Alice never produces keep a valid (unused) distribution.
      if (pk <= 0.0) std::fill(q.begin(), q.end(), 1.0);
      bob.push_back(to_cdf(std::move(q)));
    }
    t.alice_cdf.push_back(to_cdf(std::move(alice)));
    t.bob_cdf.push_back(std::move(bob));
    t.analytic_per_setting.push_back(success);
    t.analytic += cq.weights[s] * success;
  }
  return t;
}

GameResult simulate_game_serial(const DensityMatrix& rho, const MeasurementFamily& family,
                                long trials, SeedSpec seed) {
  check_trials(trials);
  const GameTables t = build_game_tables(rho, family);
  Tally tally(t.alice_cdf.size());
  CounterRng rng(seed);
  for (long i = 0; i < trials; ++i) play(t, static_cast<std::uint64_t>(i), rng, tally);
  return finish(t, trials, tally);
}

GameResult simulate_game(const DensityMatrix& rho, const MeasurementFamily& family, long trials,
                         SeedSpec seed, int threads) {
  check_trials(trials);
  const GameTables t = build_game_tables(rho, family);
  const std::size_t ns = t.alice_cdf.size();
  Tally total(ns);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel num_threads(nthreads)
  {
    Tally local(ns);
    CounterRng rng(seed);
#pragma omp for schedule(static)
    for (long i = 0; i < trials; ++i) play(t, static_cast<std::uint64_t>(i), rng, local);
#pragma omp critical
    for (std::size_t s = 0; s < ns; ++s) {
      total.trials[s] += local.trials[s];
      total.wins[s] += local.wins[s];
    }
  }
  return finish(t, trials, total);
}

}  // namespace eur
