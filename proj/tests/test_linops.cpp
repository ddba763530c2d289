#include "doctest.h"
#include "eur/errors.hpp"
#include "eur/linops.hpp"
#include "support.hpp"

using namespace eur;
using namespace eur::test;

TEST_CASE("tensor") {
  SUBCASE("identity") {
    CHECK((tensor(ComplexMatrix(ComplexMatrix::Identity(2, 2)), ComplexMatrix(ComplexMatrix::Identity(3, 3))) -
           ComplexMatrix::Identity(6, 6)).norm() == 0.0);
  }
  SUBCASE("basis projector lands on index 1") {
    ComplexMatrix e0 = ComplexMatrix::Zero(2, 2), e1 = ComplexMatrix::Zero(2, 2);
    e0(0, 0) = 1.0;
    e1(1, 1) = 1.0;
    ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
    expect(1, 1) = 1.0;
    CHECK((tensor(e0, e1) - expect).norm() == 0.0);
  }
  SUBCASE("matches elementwise oracle and trace factorizes") {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const ComplexMatrix a = random_matrix(2, 2, s), b = random_matrix(2, 2, s + 100);
      const ComplexMatrix k = tensor(a, b);
      CHECK((k - kron_oracle(a, b)).norm() < 1e-14);
      CHECK(std::abs(k.trace() - a.trace() * b.trace()) < 1e-12);
    }
  }
  SUBCASE("associative") {
    const ComplexMatrix a = random_matrix(2, 3, 1), b = random_matrix(3, 2, 2), c = random_matrix(2, 2, 3);
    CHECK((tensor(tensor(a, b), c) - tensor(a, tensor(b, c))).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("partial_trace") {
  for (int d : {2, 3}) {
    const StateVector phi = max_entangled(d);
    const ComplexMatrix rho = projector(phi);
    const ComplexMatrix id = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
    CHECK((partial_trace(rho, d, d, Keep::A) - id).norm() < 1e-14);
    CHECK((partial_trace(rho, d, d, Keep::B) - id).norm() < 1e-14);
  }
  SUBCASE("product state") {
    const ComplexMatrix ra = random_psd(2, 2, 4), sb = random_psd(3, 3, 5);
    CHECK((partial_trace(tensor(ra, sb), 2, 3, Keep::B) - ra.trace() * sb).norm() < 1e-12);
  }
  SUBCASE("index-sum oracle, dims (2,3)") {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const ComplexMatrix m = random_matrix(6, 6, s);
      CHECK((partial_trace(m, 2, 3, Keep::A) - trace_out_b_oracle(m, 2, 3)).cwiseAbs().maxCoeff() < 1e-13);
      CHECK((partial_trace(m, 2, 3, Keep::B) - trace_out_a_oracle(m, 2, 3)).cwiseAbs().maxCoeff() < 1e-13);
      CHECK(std::abs(partial_trace(m, 2, 3, Keep::A).trace() - m.trace()) < 1e-12);
    }
  }
  SUBCASE("general form agrees with bipartite form") {
    const ComplexMatrix m = random_matrix(12, 12, 9);
    const int dims[] = {2, 3, 2};
    const int keep_ab[] = {0, 1};
    const int keep_c[] = {2};
    CHECK((partial_trace(m, dims, keep_ab) - partial_trace(m, 6, 2, Keep::A)).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((partial_trace(m, dims, keep_c) - partial_trace(m, 6, 2, Keep::B)).cwiseAbs().maxCoeff() < 1e-13);
  }
  SUBCASE("tripartite composition in any order") {
    const ComplexMatrix m = random_psd(24, 24, 11);
    const int dims[] = {2, 3, 4};
    const int keep_a[] = {0}, keep_ac[] = {0, 2}, keep_ab[] = {0, 1};
    const int dims_ac[] = {2, 4}, dims_ab[] = {2, 3};
    const ComplexMatrix direct = partial_trace(m, dims, keep_a);
    const ComplexMatrix via_ac = partial_trace(partial_trace(m, dims, keep_ac), dims_ac, keep_a);
    const ComplexMatrix via_ab = partial_trace(partial_trace(m, dims, keep_ab), dims_ab, keep_a);
    CHECK((direct - via_ac).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((direct - via_ab).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::Identity(5, 5), 2, 3, Keep::A), DimensionError);
    const int dims[] = {2, 2};
    const int keep[] = {0};
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::Identity(5, 5), dims, keep), DimensionError);
  }
}

TEST_CASE("eigh reconstructs and is unitary") {
  for (int d : {2, 5, 9}) {
    const ComplexMatrix h = random_hermitian(d, d);
    const auto [ev, u] = eigh(h);
    CHECK((u * ev.asDiagonal() * u.adjoint() - h).norm() < 1e-10);
    CHECK((u.adjoint() * u - ComplexMatrix::Identity(d, d)).norm() < 1e-10);
    for (int i = 1; i < d; ++i) CHECK(ev(i) >= ev(i - 1));
  }
}

TEST_CASE("func_on_support") {
  CHECK((func_on_support(ComplexMatrix::Identity(3, 3), -0.5) - ComplexMatrix::Identity(3, 3)).norm() < 1e-14);

  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 4.0;
  ComplexMatrix expect = ComplexMatrix::Zero(2, 2);
  expect(0, 0) = 0.5;
  CHECK((func_on_support(m, -0.5) - expect).norm() < 1e-14);

  for (std::uint64_t s = 0; s < 10; ++s) {
    const ComplexMatrix p = random_psd(4, 2, s);
    const ComplexMatrix r = func_on_support(p, 0.5);
    CHECK((r * r - p).norm() < 1e-10);
    CHECK((func_on_support(p, 1.0) - p).norm() < 1e-11);
    CHECK((func_on_support(p, 0.0) - support_projector(p)).norm() < 1e-11);
    CHECK(numerical_rank(p) == 2);
  }

  ComplexMatrix neg = ComplexMatrix::Identity(2, 2);
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(func_on_support(neg, 0.5), NotPositiveError);
}

TEST_CASE("swap operator") {
  const ComplexMatrix f2 = swap_operator(2);
  StateVector v01 = StateVector::Zero(4), v10 = StateVector::Zero(4);
  v01(1) = 1.0;
  v10(2) = 1.0;
  CHECK((f2 * v01 - v10).norm() == 0.0);

  const ComplexMatrix f3 = swap_operator(3);
  CHECK((f3 * f3 - ComplexMatrix::Identity(9, 9)).norm() == 0.0);

  const ComplexMatrix m = random_matrix(3, 3, 1), n = random_matrix(3, 3, 2);
  CHECK(std::abs((tensor(m, n) * f3).trace() - (m * n).trace()) < 1e-12);

  // swap trick over random Hermitian pairs
  std::uint64_t seed = 0;
  for (int d = 2; d <= 5; ++d) {
    const ComplexMatrix f = swap_operator(d);
    for (int s = 0; s < 25; ++s, seed += 2) {
      const ComplexMatrix a = random_hermitian(d, seed), b = random_hermitian(d, seed + 1);
      CHECK(std::abs((tensor(a, b) * f).trace() - (a * b).trace()) < 1e-11);
    }
  }
}

TEST_CASE("support_projector") {
  const ComplexMatrix full = random_psd(3, 3, 7);
  CHECK((support_projector(full) - ComplexMatrix::Identity(3, 3)).norm() < 1e-12);

  ComplexMatrix diag = ComplexMatrix::Zero(3, 3);
  diag(0, 0) = 0.7;
  diag(1, 1) = 0.3;
  ComplexMatrix expect = ComplexMatrix::Zero(3, 3);
  expect(0, 0) = expect(1, 1) = 1.0;
  CHECK((support_projector(diag) - expect).norm() < 1e-14);

  for (std::uint64_t s = 0; s < 10; ++s) {
    const ComplexMatrix p = random_psd(5, 2, s + 30);
    const ComplexMatrix pi = support_projector(p);
    CHECK((pi * p * pi - p).norm() < 1e-11);
    CHECK((pi * pi - pi).norm() < 1e-12);
  }
}

TEST_CASE("pure_target_fidelity") {
  for (int d : {2, 3, 4}) {
    StateVector psi = random_matrix(d, 1, d).col(0);
    psi /= psi.norm();
    CHECK(pure_target_fidelity(psi, projector(psi)) == doctest::Approx(1.0).epsilon(1e-14));
  }
  for (int d : {2, 3}) {
    const double f = pure_target_fidelity(max_entangled(d), ComplexMatrix::Identity(d * d, d * d) / double(d * d));
    CHECK(f == doctest::Approx(1.0 / (d * d)).epsilon(1e-14));
  }
  for (std::uint64_t s = 0; s < 10; ++s) {
    StateVector psi = random_matrix(4, 1, s).col(0);
    psi /= psi.norm();
    ComplexMatrix sigma = random_psd(4, 3, s + 50);
    sigma /= sigma.trace().real();
    const double f = pure_target_fidelity(psi, sigma);
    CHECK(std::abs(f - general_fidelity(projector(psi), sigma)) < 1e-10);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0 + 1e-12);
  }
}

TEST_CASE("max_entangled") {
  const StateVector phi = max_entangled(2);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(phi(0) - r) < 1e-15);
  CHECK(std::abs(phi(1)) == 0.0);
  CHECK(std::abs(phi(2)) == 0.0);
  CHECK(std::abs(phi(3) - r) < 1e-15);

  const ComplexMatrix marg = partial_trace(projector(max_entangled(5)), 5, 5, Keep::A);
  CHECK((marg - ComplexMatrix::Identity(5, 5) / 5.0).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(pure_target_fidelity(max_entangled(4), projector(max_entangled(4))) ==
        doctest::Approx(1.0).epsilon(1e-14));
}
