#pragma once

#include <vector>

#include "eur/designs.hpp"
#include "eur/linops.hpp"
#include "eur/states.hpp"

// Entropic functionals of bipartite states and of their measured
// (classical-quantum) versions. Logarithms are base 2 throughout.
//
// Quantities that require an optimization over channels or measurements are
// not computed here. For reference, they relate to what is computed as
//   H_min(A|B) <= H_2'(A|B) <= H_min^eps(A|B) + log(2 / eps^2),
//   F(A|B)^2   <= F_pg(A|B)  <= F(A|B),
//   P_guess(K|B)^2 <= P_pg(K|B) <= P_guess(K|B),
// where H_min(A|B) = -log(d_A F(A|B)) and F(A|B) is the optimal recovery
// fidelity to the maximally entangled state.

namespace eur {

/// Unnormalized conditional states rho_B^k, one per outcome k.
using ConditionalStates = std::vector<ComplexMatrix>;

/// Conditional states of every setting of a family, plus the setting weights.
struct CqEnsemble {
  std::vector<double> weights;
  std::vector<ConditionalStates> per_setting;
};

/// One d_A x d_B table p(k, l) for a labeled setting pair.
struct JointTable {
  int theta = 0;  // index of Alice's basis in the complete MUB set
  Eigen::MatrixXd table;
};

struct JointDistribution {
  int d_a = 0;
  int d_b = 0;
  std::vector<JointTable> settings;
};

/// Throws FormatError unless every table is d_a x d_b, nonnegative, and
/// sums to 1 within 1e-9.
void validate_joint(const JointDistribution& joint);

/// H_{2,nu}(A|B) = -log Tr[X^dag X],
/// X = (1 (x) rho_B^{-(1-nu)/4}) rho_AB (1 (x) rho_B^{-(1+nu)/4}),
/// powers taken on the support of rho_B.
double h2nu(const DensityMatrix& rho, double nu, double rank_tol = kDefaultRankTol);
/// Same functional on a raw bipartite operator (used for cq embeddings).
double h2nu(const ComplexMatrix& rho_ab, int dim_a, int dim_b, double nu,
            double rank_tol = kDefaultRankTol);

inline double h2(const DensityMatrix& rho) { return h2nu(rho, 0.0); }

/// rho_B^k = Tr_A[(E_k (x) 1) rho_AB] for each rank-1 effect of the setting.
ConditionalStates measure_setting(const DensityMatrix& rho, const Setting& setting);
/// Projective measurement of A in an orthonormal basis.
ConditionalStates measure_in_basis(const DensityMatrix& rho, const Setting& basis);

CqEnsemble measure_family(const DensityMatrix& rho, const MeasurementFamily& family);

/// sum_k Tr[rho_k rho_B^{-(1-nu)/2} rho_k rho_B^{-(1+nu)/2}], rho_B = sum_k rho_k.
/// At nu = 0 this is the pretty-good-measurement success probability.
double cq_collision(const ConditionalStates& conds, double nu, double rank_tol = kDefaultRankTol);

/// sum_k Tr[Pi^k rho_k] with Pi^k = rho_B^{-1/2} rho_k rho_B^{-1/2}.
double pgm_guess_prob(const ConditionalStates& conds, double rank_tol = kDefaultRankTol);

/// PGM effects Pi^k.
std::vector<ComplexMatrix> pgm_effects(const ConditionalStates& conds,
                                       double rank_tol = kDefaultRankTol);

struct FamilyGuess {
  std::vector<double> per_setting;
  double average = 0.0;
};

FamilyGuess family_guess_prob(const DensityMatrix& rho, const MeasurementFamily& family,
                              double rank_tol = kDefaultRankTol);

/// H_{2,nu}(K|B Theta) of the measured state, from the classical structure
/// of Theta: -log sum_theta w_theta cq_collision(theta, nu).
double h2nu_measured(const DensityMatrix& rho, const MeasurementFamily& family, double nu,
                     double rank_tol = kDefaultRankTol);

/// Explicit rho_{K B Theta} = sum w_theta |k><k| (x) rho_B^{theta,k} (x) |theta><theta|,
/// dims {K, B * Theta}; K has as many levels as the largest setting.
DensityMatrix cq_state(const DensityMatrix& rho, const MeasurementFamily& family);

/// F_pg(A|B) = 2^{-H_2(A|B)} / d_A.
double pg_recovery_fidelity(const DensityMatrix& rho, double rank_tol = kDefaultRankTol);

/// (id (x) Lambda_pg)(rho_AB) on A (x) A', where
/// Lambda_pg(X) = (Tr_B[(1 (x) rho_B^{-1/2} X rho_B^{-1/2}) rho_AB])^T.
ComplexMatrix apply_pg_recovery(const DensityMatrix& rho, double rank_tol = kDefaultRankTol);

/// <Phi| (id (x) Lambda_pg)(rho_AB) |Phi>, the explicit-channel route to F_pg.
double pg_recovery_fidelity_explicit(const DensityMatrix& rho, double rank_tol = kDefaultRankTol);

/// -log sum_l sum_k p(k,l)^2 / p(l); zero columns skipped.
double classical_h2_cond(const Eigen::MatrixXd& table);

/// p(k, l) = <a_k b_l| rho |a_k b_l> for basis settings on A and on B.
Eigen::MatrixXd joint_table(const DensityMatrix& rho, const Setting& alice, const Setting& bob);

/// D_0(rho || sigma) = -log Tr[rho^0 sigma]. Throws InfiniteDivergence when
/// the trace is <= rank_tol.
double d0_relative(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                   double rank_tol = kDefaultRankTol);

}  // namespace eur
