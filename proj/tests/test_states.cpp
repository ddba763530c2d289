#include <numeric>

#include "doctest.h"
#include "eur/entropies.hpp"
#include "eur/errors.hpp"
#include "eur/states.hpp"
#include "support.hpp"

using namespace eur;

namespace {

void check_density_invariants(const DensityMatrix& rho) {
  CHECK(hermiticity_defect(rho.matrix()) <= 1e-11);
  CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-11);
  CHECK(eigh(rho.matrix()).eigenvalues.minCoeff() >= -1e-10);
}

}  // namespace

TEST_CASE("DensityMatrix validation") {
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::Identity(4, 4) / 4.0, {2, 3}), DimensionError);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::Identity(2, 2), {2}), NotPositiveError);
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(neg, {2}), NotPositiveError);
  ComplexMatrix nonherm = ComplexMatrix::Identity(2, 2) / 2.0;
  nonherm(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix(nonherm, {2}), NotPositiveError);
}

TEST_CASE("random_pure") {
  for (int d : {1, 2, 7}) {
    CHECK(std::abs(random_pure(d, {3, 4}).norm() - 1.0) < 1e-12);
  }
  CHECK((random_pure(5, {9, 1}) - random_pure(5, {9, 1})).norm() == 0.0);
  CHECK((random_pure(5, {9, 1}) - random_pure(5, {9, 2})).norm() > 0.1);

  // Haar first moment: E|psi><psi| = 1/d.
  ComplexMatrix mean = ComplexMatrix::Zero(2, 2);
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) mean += projector(random_pure(2, {11, static_cast<std::uint64_t>(i)}));
  mean /= samples;
  CHECK((mean - ComplexMatrix::Identity(2, 2) / 2.0).norm() < 0.02);
}

TEST_CASE("random_density") {
  CHECK(random_density(4, 1, {1, 0}).purity() == doctest::Approx(1.0).epsilon(1e-11));
  const auto full = random_density(3, 3, {2, 0});
  CHECK(eigh(full.matrix()).eigenvalues.minCoeff() > 0.0);
  CHECK((random_density(3, 2, {5, 5}).matrix() - random_density(3, 2, {5, 5}).matrix()).norm() == 0.0);
  for (int rank = 1; rank <= 6; ++rank) {
    const auto rho = random_density(2, 3, rank, {8, static_cast<std::uint64_t>(rank)});
    check_density_invariants(rho);
    CHECK(numerical_rank(rho.matrix()) == rank);
  }
  CHECK_THROWS_AS(random_density(3, 0, {1, 0}), ParameterError);
  CHECK_THROWS_AS(random_density(3, 4, {1, 0}), ParameterError);
}

TEST_CASE("random_separable") {
  SUBCASE("construction audit") {
    const auto s = random_separable_with_terms(2, 3, 4, {5, 0});
    double wsum = 0.0;
    ComplexMatrix rebuilt = ComplexMatrix::Zero(6, 6);
    for (const auto& t : s.terms) {
      CHECK(t.weight >= 0.0);
      wsum += t.weight;
      CHECK(std::abs(t.rho_a.trace().real() - 1.0) < 1e-12);
      CHECK(std::abs(t.rho_b.trace().real() - 1.0) < 1e-12);
      rebuilt += t.weight * tensor(t.rho_a, t.rho_b);
    }
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((rebuilt - s.state.matrix()).norm() < 1e-12);
  }
  SUBCASE("nonnegative conditional 2-entropy") {
    // Samples cover a full-measure subset of separable states only.
    for (int d : {2, 3}) {
      for (std::uint64_t i = 0; i < 200; ++i) {
        const auto rho = random_separable(d, d, 1 + static_cast<int>(i % 5), {17, i});
        check_density_invariants(rho);
        CHECK(h2(rho) >= -1e-9);
      }
    }
  }
  CHECK_THROWS_AS(random_separable(2, 2, 0, {1, 0}), ParameterError);
}

TEST_CASE("purify") {
  SUBCASE("pure input keeps a one-dimensional purifier") {
    const StateVector psi = random_pure(4, {3, 3});
    const auto rho = DensityMatrix::from_pure(psi, {2, 2});
    const StateVector p = purify(rho);
    CHECK(p.size() == 4);
    CHECK(std::abs(std::abs(p.dot(psi)) - 1.0) < 1e-10);
  }
  SUBCASE("round trip for random states") {
    for (std::uint64_t i = 0; i < 50; ++i) {
      const int rank = 1 + static_cast<int>(i % 4);
      const auto rho = random_density(4, rank, {21, i});
      const StateVector p = purify(rho);
      CHECK(p.size() == 4 * rank);
      const ComplexMatrix back = partial_trace(projector(p), 4, rank, Keep::A);
      CHECK((back - rho.matrix()).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("schmidt_values") {
  for (int d : {2, 3, 4}) {
    const RealVector s = schmidt_values(max_entangled(d), d, d);
    for (int i = 0; i < d; ++i) CHECK(s(i) == doctest::Approx(1.0 / d).epsilon(1e-12));
  }
  const StateVector prod = tensor(random_pure(2, {1, 1}), random_pure(3, {1, 2}));
  const RealVector sp = schmidt_values(prod, 2, 3);
  CHECK(sp(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(sp(1)) < 1e-12);

  for (std::uint64_t i = 0; i < 20; ++i) {
    const int da = 2 + static_cast<int>(i % 3), db = 2 + static_cast<int>((i / 3) % 3);
    const StateVector psi = random_pure(da * db, {33, i});
    const RealVector s = schmidt_values(psi, da, db);
    CHECK(s.sum() == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 1; k < s.size(); ++k) CHECK(s(k) <= s(k - 1) + 1e-15);
    // against the eigenvalues of the reduced state
    const RealVector ev = eigh(partial_trace(projector(psi), da, db, Keep::A)).eigenvalues;
    for (int k = 0; k < std::min(da, db); ++k) CHECK(std::abs(s(k) - ev(da - 1 - k)) < 1e-11);
    // H_2(A|B) of a pure state is -2 log sum sqrt(lambda)
    double root_sum = 0.0;
    for (int k = 0; k < s.size(); ++k) root_sum += std::sqrt(std::max(s(k), 0.0));
    const auto rho = DensityMatrix::from_pure(psi, {da, db});
    CHECK(std::abs(h2(rho) - (-2.0 * std::log2(root_sum))) < 1e-10);
  }
  CHECK_THROWS_AS(schmidt_values(random_pure(5, {1, 0}), 2, 3), DimensionError);
}
