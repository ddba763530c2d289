#include "eur/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eur/errors.hpp"

namespace eur {

namespace {

constexpr double kHermTol = 1e-11;
constexpr double kPosTol = 1e-10;
constexpr double kTraceTol = 1e-11;

ComplexMatrix ginibre(int rows, int cols, CounterRng& rng) {
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const auto [re, im] = rng.normal_pair();
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix normalized_gram(const ComplexMatrix& g) {
  ComplexMatrix m = g * g.adjoint();
  m = 0.5 * (m + m.adjoint());
  return m / m.trace().real();
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<int> dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  long prod = 1;
  for (int d : dims_) {
    if (d < 1) throw DimensionError("DensityMatrix: subsystem dimension < 1");
    prod *= d;
  }
  if (dims_.empty() || matrix_.rows() != matrix_.cols() || matrix_.rows() != prod) {
    throw DimensionError("DensityMatrix: size " + std::to_string(matrix_.rows()) +
                         " does not match product of dims " + std::to_string(prod));
  }
  if (hermiticity_defect(matrix_) > kHermTol) {
    throw NotPositiveError("DensityMatrix: operator is not Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex(1.0, 0.0)) > kTraceTol) {
    throw NotPositiveError("DensityMatrix: trace differs from 1");
  }
  const auto ev = eigh(matrix_).eigenvalues;
  if (ev.minCoeff() < -kPosTol) {
    throw NotPositiveError("DensityMatrix: negative eigenvalue " + std::to_string(ev.minCoeff()));
  }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi, std::vector<int> dims) {
  const double n = psi.norm();
  if (std::abs(n - 1.0) > 1e-10) throw ParameterError("from_pure: state is not normalized");
  ComplexMatrix p = projector(psi / n);
  p = 0.5 * (p + p.adjoint());
  return DensityMatrix(std::move(p), std::move(dims));
}

DensityMatrix DensityMatrix::marginal(std::vector<int> keep) const {
  std::vector<int> new_dims;
  for (int k : keep) {
    if (k < 0 || k >= static_cast<int>(dims_.size())) {
      throw DimensionError("marginal: subsystem index out of range");
    }
    new_dims.push_back(dims_[k]);
  }
  ComplexMatrix m = partial_trace(matrix_, dims_, keep);
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(m), std::move(new_dims));
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

DensityMatrix maximally_mixed(std::vector<int> dims) {
  long n = 1;
  for (int d : dims) n *= d;
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(n), std::move(dims));
}

StateVector random_pure(int d, SeedSpec seed) {
  if (d < 1) throw ParameterError("random_pure: d must be >= 1");
  CounterRng rng(seed);
  StateVector v = ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

DensityMatrix random_density(int d, int rank, SeedSpec seed) {
  return random_density(d, 1, rank, seed).marginal({0});
}

DensityMatrix random_density(int d_a, int d_b, int rank, SeedSpec seed) {
  const int d = d_a * d_b;
  if (d_a < 1 || d_b < 1) throw ParameterError("random_density: dimensions must be >= 1");
  if (rank < 1 || rank > d) {
    throw ParameterError("random_density: rank " + std::to_string(rank) + " outside [1, " +
                         std::to_string(d) + "]");
  }
  CounterRng rng(seed);
  return DensityMatrix(normalized_gram(ginibre(d, rank, rng)), {d_a, d_b});
}

ComplexMatrix random_unitary(int d, SeedSpec seed) {
  CounterRng rng(seed);
  const ComplexMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rj = r(j, j);
    if (std::abs(rj) > 0) q.col(j) *= rj / std::abs(rj);
  }
  return q;
}

SeparableSample random_separable_with_terms(int d_a, int d_b, int terms, SeedSpec seed) {
  if (terms < 1) throw ParameterError("random_separable: terms must be >= 1");
  if (d_a < 1 || d_b < 1) throw ParameterError("random_separable: dimensions must be >= 1");
  CounterRng rng(seed);
  std::vector<double> w(terms);
  double total = 0.0;
  for (auto& x : w) total += (x = rng.exponential());

  std::vector<ProductTerm> parts;
  ComplexMatrix sum = ComplexMatrix::Zero(d_a * d_b, d_a * d_b);
  for (int j = 0; j < terms; ++j) {
    ProductTerm t{w[j] / total, normalized_gram(ginibre(d_a, d_a, rng)),
                  normalized_gram(ginibre(d_b, d_b, rng))};
    sum += t.weight * tensor(t.rho_a, t.rho_b);
    parts.push_back(std::move(t));
  }
  sum = 0.5 * (sum + sum.adjoint());
  sum /= sum.trace().real();
  return {DensityMatrix(std::move(sum), {d_a, d_b}), std::move(parts)};
}

DensityMatrix random_separable(int d_a, int d_b, int terms, SeedSpec seed) {
  return random_separable_with_terms(d_a, d_b, terms, seed).state;
}

StateVector purify(const DensityMatrix& rho, double rank_tol) {
  const auto [ev, vecs] = eigh(rho.matrix());
  const double cutoff = rank_tol * std::max(ev.maxCoeff(), 0.0);
  std::vector<int> support;
  for (Eigen::Index i = ev.size() - 1; i >= 0; --i) {
    if (ev(i) > cutoff && ev(i) > 0.0) support.push_back(static_cast<int>(i));
  }
  const int r = static_cast<int>(support.size());
  const int n = rho.dim();
  StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(n) * r);
  for (int e = 0; e < r; ++e) {
    const int i = support[e];
    const double amp = std::sqrt(ev(i));
    for (int s = 0; s < n; ++s) psi(static_cast<Eigen::Index>(s) * r + e) = amp * vecs(s, i);
  }
  return psi / psi.norm();
}

RealVector schmidt_values(const StateVector& psi, int d_a, int d_b) {
  if (d_a < 1 || d_b < 1 || psi.size() != static_cast<Eigen::Index>(d_a) * d_b) {
    throw DimensionError("schmidt_values: vector length does not equal d_a * d_b");
  }
  ComplexMatrix c(d_a, d_b);
  for (int i = 0; i < d_a; ++i) {
    for (int j = 0; j < d_b; ++j) c(i, j) = psi(static_cast<Eigen::Index>(i) * d_b + j);
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(c);
  RealVector s = svd.singularValues().array().square();  // already descending
  return s;
}

}  // namespace eur
