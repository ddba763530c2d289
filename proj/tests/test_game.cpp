#include <cmath>

#include "doctest.h"
#include "eur/entropies.hpp"
#include "eur/game.hpp"
#include "support.hpp"

using namespace eur;

namespace {

DensityMatrix phi(int d) { return DensityMatrix::from_pure(max_entangled(d), {d, d}); }

bool same(const GameResult& a, const GameResult& b) {
  if (a.trials != b.trials || a.wins != b.wins || a.per_setting.size() != b.per_setting.size()) return false;
  for (std::size_t s = 0; s < a.per_setting.size(); ++s) {
    if (a.per_setting[s].trials != b.per_setting[s].trials) return false;
    if (a.per_setting[s].wins != b.per_setting[s].wins) return false;
  }
  return a.empirical_rate == b.empirical_rate;
}

}  // namespace

TEST_CASE("tables") {
  const auto rho = random_density(3, 2, 4, {201, 0});
  const auto fam = mub_family(3);
  const auto t = build_game_tables(rho, fam);
  CHECK(t.setting_cdf.size() == 4);
  CHECK(t.setting_cdf.back() == doctest::Approx(1.0));
  for (const auto& c : t.alice_cdf) CHECK(c.back() == doctest::Approx(1.0));
  CHECK(t.analytic == doctest::Approx(family_guess_prob(rho, fam).average).epsilon(1e-12));
}

TEST_CASE("maximally entangled states always win") {
  for (int d : {2, 3}) {
    const auto g = simulate_game(phi(d), mub_family(d), 10000, {3, 1});
    CHECK(g.wins == g.trials);
    CHECK(g.empirical_rate == 1.0);
    CHECK(g.within(4.0));
  }
}

TEST_CASE("maximally mixed qubits win half the time") {
  const auto g = simulate_game(maximally_mixed({2, 2}), mub_family(2), 100000, {5, 1});
  CHECK(g.analytic_rate == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(g.within(4.0));
}

TEST_CASE("random states track the analytic rate") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto rho = random_density(3, 3, 1 + static_cast<int>(s), {207, s});
    const auto g = simulate_game(rho, mub_family(3), 50000, {209, s});
    CHECK(g.within(4.0));
    long total = 0;
    for (const auto& t : g.per_setting) {
      total += t.trials;
      const double se = std::sqrt(t.analytic_rate * (1 - t.analytic_rate) / t.trials);
      CHECK(std::abs(t.empirical_rate - t.analytic_rate) <= 5 * se + 1e-12);
    }
    CHECK(total == g.trials);
  }
}

TEST_CASE("parallel and serial kernels agree exactly") {
  const auto rho = random_density(5, 2, 3, {211, 0});
  const auto fam = mub_family(5);
  const auto serial = simulate_game_serial(rho, fam, 30001, {213, 1});
  for (int threads : {1, 2, 3, 0}) CHECK(same(serial, simulate_game(rho, fam, 30001, {213, 1}, threads)));
  CHECK(same(simulate_game(rho, fam, 30001, {213, 1}), simulate_game(rho, fam, 30001, {213, 1})));
  CHECK(!same(serial, simulate_game_serial(rho, fam, 30001, {213, 2})));
}

TEST_CASE("SIC game") {
  const auto rho = random_density(2, 2, 2, {217, 0});
  const auto g = simulate_game(rho, sic_povm(2), 50000, {219, 1});
  CHECK(g.within(4.0));
}
