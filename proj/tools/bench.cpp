// Serial reference vs OpenMP kernels: Monte Carlo game and batched equality checks.
#include <chrono>
#include <cstdio>
#include <omp.h>

#include "eur/batch.hpp"
#include "eur/game.hpp"

namespace {

template <class Fn>
double seconds(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  using namespace eur;
  std::printf("threads: %d\n", omp_get_max_threads());

  const auto family = mub_family(5);
  const auto rho = random_density(5, 3, 15, {42, 0});
  const long trials = 2'000'000;
  GameResult serial, parallel;
  const double ts = seconds([&] { serial = simulate_game_serial(rho, family, trials, {7, 1}); });
  const double tp = seconds([&] { parallel = simulate_game(rho, family, trials, {7, 1}); });
  std::printf("game  d=5 trials=%ld  serial %.3fs  parallel %.3fs  speedup %.2fx  identical=%s\n",
              trials, ts, tp, ts / tp, serial.wins == parallel.wins ? "yes" : "no");

  const auto mub7 = mub_family(7);
  std::vector<RelationReport> a, b;
  const double es = seconds([&] { a = equality_batch(7, 4, mub7, 0.5, 200, 3, Execution::Serial); });
  const double ep = seconds([&] { b = equality_batch(7, 4, mub7, 0.5, 200, 3, Execution::Parallel); });
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].lhs == b[i].lhs && a[i].rhs == b[i].rhs;
  std::printf("equality d=(7,4) samples=200  serial %.3fs  parallel %.3fs  speedup %.2fx  identical=%s\n",
              es, ep, es / ep, same ? "yes" : "no");
  return same && serial.wins == parallel.wins ? 0 : 1;
}
