#pragma once

#include <vector>

#include "eur/linops.hpp"
#include "eur/rng.hpp"

namespace eur {

/// A trace-one positive operator on a composite space with declared factors.
/// Construction validates hermiticity (1e-11), positivity (eigenvalues
/// >= -1e-10), unit trace (1e-11) and that prod(dims) matches the size.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, std::vector<int> dims);

  static DensityMatrix from_pure(const StateVector& psi, std::vector<int> dims);

  const ComplexMatrix& matrix() const { return matrix_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  int dim_a() const { return dims_.at(0); }
  int dim_b() const { return dims_.at(1); }
  bool is_bipartite() const { return dims_.size() == 2; }

  /// Marginal on the listed subsystems (ascending indices).
  DensityMatrix marginal(std::vector<int> keep) const;

  double purity() const;

 private:
  ComplexMatrix matrix_;
  std::vector<int> dims_;
};

DensityMatrix maximally_mixed(std::vector<int> dims);

/// Haar-random unit vector: normalized complex Gaussian.
StateVector random_pure(int d, SeedSpec seed);

/// G G^dag / Tr(G G^dag) with G a d x rank complex Gaussian (Ginibre) matrix.
DensityMatrix random_density(int d, int rank, SeedSpec seed);
/// Bipartite variant with dims {d_a, d_b}.
DensityMatrix random_density(int d_a, int d_b, int rank, SeedSpec seed);

/// Haar-random unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix random_unitary(int d, SeedSpec seed);

/// Component of a separable mixture, kept for construction audits.
struct ProductTerm {
  double weight;
  ComplexMatrix rho_a;
  ComplexMatrix rho_b;
};

struct SeparableSample {
  DensityMatrix state;
  std::vector<ProductTerm> terms;
};

/// sum_j p_j rho_A^j (x) rho_B^j with p drawn flat on the simplex and
/// full-rank Ginibre factors. This reaches a full-measure subset of the
/// separable states, not every one of them.
SeparableSample random_separable_with_terms(int d_a, int d_b, int terms, SeedSpec seed);
DensityMatrix random_separable(int d_a, int d_b, int terms, SeedSpec seed);

/// Purification sum_i sqrt(l_i) |v_i> (x) |i>_E over the numerical support;
/// the purifying factor is last and has dimension rank(rho).
StateVector purify(const DensityMatrix& rho, double rank_tol = kDefaultRankTol);

/// Squared Schmidt coefficients, descending.
RealVector schmidt_values(const StateVector& psi, int d_a, int d_b);

}  // namespace eur
