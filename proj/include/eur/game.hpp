#pragma once

#include <vector>

#include "eur/designs.hpp"
#include "eur/rng.hpp"
#include "eur/states.hpp"

namespace eur {

struct SettingTally {
  long trials = 0;
  long wins = 0;
  double empirical_rate = 0.0;
  double analytic_rate = 0.0;
};

struct GameResult {
  long trials = 0;
  long wins = 0;
  double empirical_rate = 0.0;
  double analytic_rate = 0.0;
  double std_error = 0.0;  // sqrt(p(1-p)/trials) with the analytic p
  std::vector<SettingTally> per_setting;

  /// |empirical - analytic| <= sigmas * std_error
  bool within(double sigmas) const;
};

/// Precomputed categorical tables: setting choice, Alice's Born-rule outcome
/// per setting, and Bob's PGM outcome conditioned on (setting, Alice outcome).
struct GameTables {
  std::vector<double> setting_cdf;
  std::vector<std::vector<double>> alice_cdf;              // [setting][k]
  std::vector<std::vector<std::vector<double>>> bob_cdf;   // [setting][k][j]
  std::vector<double> analytic_per_setting;
  double analytic = 0.0;
};

GameTables build_game_tables(const DensityMatrix& rho, const MeasurementFamily& family,
                             double rank_tol = kDefaultRankTol);

/// Monte Carlo uncertainty game. Trial t draws its three uniforms from
/// counters 3t+1..3t+3 of CounterRng(seed), so the result does not depend on
/// how trials are split across threads. threads <= 0 uses the OpenMP default.
GameResult simulate_game(const DensityMatrix& rho, const MeasurementFamily& family, long trials,
                         SeedSpec seed, int threads = 0);

/// Single-threaded reference implementation.
GameResult simulate_game_serial(const DensityMatrix& rho, const MeasurementFamily& family,
                                long trials, SeedSpec seed);

}  // namespace eur
