#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// library routines the oracles are used to check.

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "eur/linops.hpp"
#include "eur/rng.hpp"

namespace eur::test {

inline ComplexMatrix random_matrix(int rows, int cols, std::uint64_t seed) {
  CounterRng rng({seed, 977});
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
  return m;
}

inline ComplexMatrix random_hermitian(int d, std::uint64_t seed) {
  const ComplexMatrix g = random_matrix(d, d, seed);
  return 0.5 * (g + g.adjoint());
}

inline ComplexMatrix random_psd(int d, int rank, std::uint64_t seed) {
  const ComplexMatrix g = random_matrix(d, rank, seed);
  ComplexMatrix m = g * g.adjoint();
  return 0.5 * (m + m.adjoint());
}

// Elementwise Kronecker product.
inline ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja)
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb)
          out(ia * b.rows() + ib, ja * b.cols() + jb) = a(ia, ja) * b(ib, jb);
  return out;
}

// Index-sum partial traces on A (x) B.
inline ComplexMatrix trace_out_b_oracle(const ComplexMatrix& m, int da, int db) {
  ComplexMatrix out = ComplexMatrix::Zero(da, da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int b = 0; b < db; ++b) out(i, j) += m(i * db + b, j * db + b);
  return out;
}

inline ComplexMatrix trace_out_a_oracle(const ComplexMatrix& m, int da, int db) {
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      for (int a = 0; a < da; ++a) out(i, j) += m(a * db + i, a * db + j);
  return out;
}

// Matrix square root of a PSD matrix via Eigen's own operatorSqrt.
inline ComplexMatrix sqrt_oracle(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()));
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

// (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2
inline double general_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  const ComplexMatrix s = sqrt_oracle(rho);
  const ComplexMatrix inner = s * sigma * s;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (inner + inner.adjoint()));
  const double top = es.eigenvalues().maxCoeff();
  double tr = 0.0;
  for (int i = 0; i < inner.rows(); ++i) {
    if (es.eigenvalues()(i) > 1e-12 * top) tr += std::sqrt(es.eigenvalues()(i));
  }
  return tr * tr;
}

// Inverse square root on the support by explicit eigen-sum, with a fixed cutoff.
inline ComplexMatrix inv_sqrt_oracle(const ComplexMatrix& m, double cutoff = 1e-12) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()));
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    const double l = es.eigenvalues()(i);
    if (l > cutoff) out += (1.0 / std::sqrt(l)) * es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  }
  return out;
}

}  // namespace eur::test
