#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace eur {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultRankTol = 1e-10;

// Composite-system index convention, used everywhere in this library:
// for A (x) B the basis index is i_a * dim_b + i_b (A major, B minor).
// Tripartite A (x) B (x) E extends this left to right.

enum class Keep { A, B };

struct EigenDecomposition {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // columns, unitary
};

/// Kronecker product a (x) b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector tensor(const StateVector& a, const StateVector& b);

/// Partial trace of a (dim_a*dim_b)-square operator, keeping one factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b, Keep keep);

/// Partial trace over an arbitrary list of subsystems. `keep` lists the
/// indices (ascending) of the factors retained, in their original order.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            std::span<const int> keep);

/// Hermitian eigendecomposition; the input is symmetrized first.
EigenDecomposition eigh(const ComplexMatrix& m);

/// Applies t -> t^exponent to eigenvalues above rank_tol * lambda_max and
/// sends the rest to zero (negative powers become pseudo-inverse powers).
/// Throws NotPositiveError on an eigenvalue below -rank_tol * lambda_max.
ComplexMatrix func_on_support(const ComplexMatrix& m, double exponent,
                              double rank_tol = kDefaultRankTol);

/// Projector onto the eigenspaces with eigenvalue above rank_tol * lambda_max.
ComplexMatrix support_projector(const ComplexMatrix& m, double rank_tol = kDefaultRankTol);

/// Number of eigenvalues above rank_tol * lambda_max.
int numerical_rank(const ComplexMatrix& m, double rank_tol = kDefaultRankTol);

/// F |i>|j> = |j>|i> on C^d (x) C^d.
ComplexMatrix swap_operator(int d);

/// <psi| sigma |psi>, the fidelity of sigma with a pure target.
double pure_target_fidelity(const StateVector& psi, const ComplexMatrix& sigma);

/// (1/sqrt d) sum_j |j>|j>.
StateVector max_entangled(int d);

ComplexMatrix projector(const StateVector& psi);

double hermiticity_defect(const ComplexMatrix& m);

}  // namespace eur
