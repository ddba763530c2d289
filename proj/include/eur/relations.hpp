#pragma once

#include <array>
#include <string>
#include <utility>

#include "eur/designs.hpp"
#include "eur/entropies.hpp"
#include "eur/states.hpp"

namespace eur {

inline constexpr double kEqualityTol = 1e-9;
inline constexpr double kMonogamyTol = 1e-8;
inline constexpr double kWitnessTol = 1e-9;
inline constexpr double kCertifiedDesignDefect = 1e-9;

enum class Verdict { Holds, Violated };
enum class Sense { Equality, AtMost, AtLeast };

/// Outcome of evaluating one relation. For Sense::AtMost the relation is
/// lhs <= rhs and defect = max(0, lhs - rhs); for AtLeast, lhs >= rhs and
/// defect = max(0, rhs - lhs); for Equality, defect = |lhs - rhs|.
struct RelationReport {
  std::string relation;
  Sense sense = Sense::Equality;
  double lhs = 0.0;
  double rhs = 0.0;
  double defect = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::Holds;
  // metadata
  std::string family_kind;
  int d = 0;
  double nu = 0.0;
  int n = 0;
  bool rank_sensitive = false;

  bool holds() const { return verdict == Verdict::Holds; }
};

RelationReport make_report(std::string relation, Sense sense, double lhs, double rhs,
                           double tolerance);

/// H_{2,nu}(K|B Theta) against log c - log(2^{-H_{2,nu}(A|B)} + 1), where c
/// is the family's equality constant. lhs and rhs come from separate code
/// paths (measured cq collisions vs. the state's conditional entropy).
/// Throws DesignDefectError if design_defect(family) >= 1e-9.
RelationReport equality_report(const DensityMatrix& rho, const MeasurementFamily& family,
                               double nu, double tolerance = kEqualityTol);

enum class Regime { Heisenberg, Epr };
enum class Bound { Upper, Lower };

struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
};

/// Allowed range of the n-basis PGM guessing probability at recovery
/// fidelity f. For n = d+1 both bounds collapse to (d f + 1)/(d + 1).
BoundPair nbasis_bound_values(int d, int n, double fidelity);

inline Regime regime_of(int d, double fidelity) {
  return fidelity <= 1.0 / d ? Regime::Heisenberg : Regime::Epr;
}

/// Average PGM guessing probability over the first n settings.
double guess_prob_first_n(const DensityMatrix& rho, const MeasurementFamily& mubs, int n,
                          double rank_tol = kDefaultRankTol);

/// {lower report (lhs = P(n) >= rhs = lower), upper report (P(n) <= upper)}.
std::pair<RelationReport, RelationReport> nbasis_bounds(const DensityMatrix& rho,
                                                        const MeasurementFamily& mubs, int n,
                                                        double tolerance = kEqualityTol);

/// State whose (F_pg, P_pg(n)) lies on the requested bound curve, with
/// `mix` in [0, 1] sweeping the fidelity across the regime:
///   EPR: pure state with Schmidt values (1-mix) e_0 + mix/d, Schmidt basis
///        on A is setting 0 (upper) or setting d (lower, excluded from n);
///   Heisenberg: rho_A (x) 1/d with rho_A diagonal in setting 0 (upper) or
///        setting d (lower), spectrum (1-mix) e_0 + mix/d.
/// Lower-bound constructions require n < d+1.
DensityMatrix achiever_state(int d, Regime regime, Bound which, const MeasurementFamily& mubs,
                             int n, double mix);

/// Fidelity of achiever_state(..., mix) in closed form.
double achiever_fidelity(int d, Regime regime, double mix);

/// Finds mix with achiever_fidelity(d, regime, mix) = target by bisection.
double achiever_mix_for_fidelity(int d, Regime regime, double target);

/// (d (2 p2 - 1) + 1) / (d + 1).
double two_to_full_bound(double p2, int d);

/// P(d+1) >= two_to_full_bound(P(2), d).
RelationReport two_to_full_report(const DensityMatrix& rho, const MeasurementFamily& mubs,
                                  double tolerance = kEqualityTol);

/// Separability inequality sum_theta 2^{-H_2(K_theta|L_theta)} <= 1 + (n-1)/d_a.
/// A Violated verdict certifies entanglement.
RelationReport witness(const JointDistribution& joint, int d_a, double tolerance = kWitnessTol);

/// Ideal statistics of a state for the first n MUB settings on A, with Bob
/// measuring in the given bases (one per setting).
JointDistribution joint_statistics(const DensityMatrix& rho, const MeasurementFamily& mubs,
                                   const std::vector<Setting>& bob_bases, int n);

/// D_0(rho_AE || 1/d_a (x) rho_E) against log d_a - log((d_a+1) 2^{-H_2'(K|B Theta)} - 1).
RelationReport monogamy_report(const StateVector& psi_abe, std::array<int, 3> dims,
                               const MeasurementFamily& mubs, double tolerance = kMonogamyTol,
                               double rank_tol = kDefaultRankTol);

std::string to_string(Verdict v);
std::string to_string(Sense s);
std::string to_string(Regime r);

}  // namespace eur
