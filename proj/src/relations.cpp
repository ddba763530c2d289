#include "eur/relations.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "eur/errors.hpp"

namespace eur {

namespace {

void require_complete_mubs(const MeasurementFamily& mubs, int d, const char* who) {
  if (mubs.kind != FamilyKind::MubComplete || mubs.d != d || mubs.num_settings() != d + 1) {
    throw ParameterError(std::string(who) + ": requires a complete MUB family on d = " +
                         std::to_string(d));
  }
}

void require_certified(const MeasurementFamily& family, const char* who) {
  const double defect = design_defect(family);
  if (!(defect < kCertifiedDesignDefect)) {
    throw DesignDefectError(std::string(who) + ": family " + to_string(family.kind, family.subset_size) +
                            " has 2-design defect " + std::to_string(defect));
  }
}

std::vector<double> schmidt_profile(int d, double mix) {
  std::vector<double> p(d, mix / d);
  p[0] += 1.0 - mix;
  return p;
}

}  // namespace

RelationReport make_report(std::string relation, Sense sense, double lhs, double rhs,
                           double tolerance) {
  RelationReport r;
  r.relation = std::move(relation);
  r.sense = sense;
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tolerance;
  switch (sense) {
    case Sense::Equality: r.defect = std::abs(lhs - rhs); break;
    case Sense::AtMost: r.defect = std::max(0.0, lhs - rhs); break;
    case Sense::AtLeast: r.defect = std::max(0.0, rhs - lhs); break;
  }
  // NaN defects never hold.
  r.verdict = (r.defect <= tolerance) ? Verdict::Holds : Verdict::Violated;
  return r;
}

RelationReport equality_report(const DensityMatrix& rho, const MeasurementFamily& family,
                               double nu, double tolerance) {
  if (family.d != rho.dim_a()) {
    throw DimensionError("equality_report: family dimension " + std::to_string(family.d) +
                         " differs from d_A = " + std::to_string(rho.dim_a()));
  }
  require_certified(family, "equality_report");
  const double lhs = h2nu_measured(rho, family, nu);
  const double rhs =
      std::log2(family.equality_constant) - std::log2(std::exp2(-h2nu(rho, nu)) + 1.0);
  RelationReport r = make_report("main", Sense::Equality, lhs, rhs, tolerance);
  r.family_kind = to_string(family.kind, family.subset_size);
  r.d = family.d;
  r.nu = nu;
  r.n = family.num_settings();
  return r;
}

BoundPair nbasis_bound_values(int d, int n, double f) {
  if (d < 2) throw ParameterError("nbasis bounds: d must be >= 2");
  if (n < 1 || n > d + 1) {
    throw ParameterError("nbasis bounds: n = " + std::to_string(n) + " outside [1, d+1]");
  }
  if (n == d + 1) {
    const double v = (d * f + 1.0) / (d + 1.0);
    return {v, v};
  }
  if (regime_of(d, f) == Regime::Heisenberg) {
    return {1.0 / d, (static_cast<double>(d) / n) * f + (n - 1.0) / (static_cast<double>(n) * d)};
  }
  return {f, ((n - 1.0) / n) * f + 1.0 / n};
}

double guess_prob_first_n(const DensityMatrix& rho, const MeasurementFamily& mubs, int n,
                          double rank_tol) {
  if (n < 1 || n > mubs.num_settings()) {
    throw ParameterError("guess_prob_first_n: n = " + std::to_string(n) + " out of range");
  }
  if (mubs.d != rho.dim_a()) throw DimensionError("guess_prob_first_n: family dimension mismatch");
  double total = 0.0;
  for (int s = 0; s < n; ++s) {
    total += pgm_guess_prob(measure_setting(rho, mubs.settings[s]), rank_tol);
  }
  return total / n;
}

std::pair<RelationReport, RelationReport> nbasis_bounds(const DensityMatrix& rho,
                                                        const MeasurementFamily& mubs, int n,
                                                        double tolerance) {
  const int d = rho.dim_a();
  require_complete_mubs(mubs, d, "nbasis_bounds");
  const BoundPair b = nbasis_bound_values(d, n, pg_recovery_fidelity(rho));
  const double p = guess_prob_first_n(rho, mubs, n);
  auto lower = make_report("nbasis-lower", Sense::AtLeast, p, b.lower, tolerance);
  auto upper = make_report("nbasis-upper", Sense::AtMost, p, b.upper, tolerance);
  for (auto* r : {&lower, &upper}) {
    r->family_kind = to_string(mubs.kind);
    r->d = d;
    r->n = n;
  }
  return {lower, upper};
}

double achiever_fidelity(int d, Regime regime, double mix) {
  const auto p = schmidt_profile(d, mix);
  if (regime == Regime::Epr) {
    double s = 0.0;
    for (double x : p) s += std::sqrt(x);
    return s * s / d;
  }
  double c = 0.0;
  for (double x : p) c += x * x;
  return c / d;
}

double achiever_mix_for_fidelity(int d, Regime regime, double target) {
  const double f0 = achiever_fidelity(d, regime, 0.0);
  const double f1 = achiever_fidelity(d, regime, 1.0);
  if (target < std::min(f0, f1) - 1e-14 || target > std::max(f0, f1) + 1e-14) {
    throw ParameterError("achiever: target fidelity " + std::to_string(target) +
                         " is outside the regime's range");
  }
  const bool increasing = f1 > f0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    const bool below = achiever_fidelity(d, regime, mid) < target;
    if (below == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

DensityMatrix achiever_state(int d, Regime regime, Bound which, const MeasurementFamily& mubs,
                             int n, double mix) {
  require_complete_mubs(mubs, d, "achiever_state");
  if (n < 1 || n > d + 1) throw ParameterError("achiever_state: n outside [1, d+1]");
  if (which == Bound::Lower && n == d + 1) {
    throw ParameterError("achiever_state: lower-bound constructions need an excluded basis (n < d+1)");
  }
  if (!(mix >= 0.0 && mix <= 1.0)) throw ParameterError("achiever_state: mix outside [0, 1]");

  const Setting& basis = mubs.settings[which == Bound::Upper ? 0 : d];
  const auto p = schmidt_profile(d, mix);
  if (regime == Regime::Epr) {
    StateVector psi = StateVector::Zero(d * d);
    for (int k = 0; k < d; ++k) {
      StateVector e = StateVector::Zero(d);
      e(k) = 1.0;
      psi += std::sqrt(p[k]) * tensor(basis.effects[k].vector, e);
    }
    return DensityMatrix::from_pure(psi / psi.norm(), {d, d});
  }
  ComplexMatrix rho_a = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) rho_a += p[k] * projector(basis.effects[k].vector);
  rho_a = 0.5 * (rho_a + rho_a.adjoint());
  rho_a /= rho_a.trace().real();
  ComplexMatrix m = tensor(rho_a, ComplexMatrix::Identity(d, d) / static_cast<double>(d));
  return DensityMatrix(0.5 * (m + m.adjoint()), {d, d});
}

double two_to_full_bound(double p2, int d) {
  if (d < 2) throw ParameterError("two_to_full_bound: d must be >= 2");
  if (!(p2 >= 1.0 / d - 1e-9 && p2 <= 1.0 + 1e-9)) {
    throw ParameterError("two_to_full_bound: p2 = " + std::to_string(p2) + " outside [1/d, 1]");
  }
  return (d * (2.0 * p2 - 1.0) + 1.0) / (d + 1.0);
}

RelationReport two_to_full_report(const DensityMatrix& rho, const MeasurementFamily& mubs,
                                  double tolerance) {
  const int d = rho.dim_a();
  require_complete_mubs(mubs, d, "two_to_full_report");
  const double p2 = guess_prob_first_n(rho, mubs, 2);
  const double pall = guess_prob_first_n(rho, mubs, d + 1);
  auto r = make_report("two-to-all", Sense::AtLeast, pall, two_to_full_bound(p2, d), tolerance);
  r.family_kind = to_string(mubs.kind);
  r.d = d;
  r.n = d + 1;
  return r;
}

RelationReport witness(const JointDistribution& joint, int d_a, double tolerance) {
  validate_joint(joint);
  if (joint.d_a != d_a) throw FormatError("witness: table rows do not match d_a");
  const int n = static_cast<int>(joint.settings.size());
  if (n > d_a + 1) {
    throw FormatError("witness: " + std::to_string(n) + " settings exceed the d_a + 1 available MUBs");
  }
  std::set<int> labels;
  double lhs = 0.0;
  for (std::size_t s = 0; s < joint.settings.size(); ++s) {
    const int theta = joint.settings[s].theta;
    if (theta < 0 || theta > d_a) {
      throw FormatError("settings[" + std::to_string(s) + "].theta: label " +
                        std::to_string(theta) + " outside [0, d_a]");
    }
    if (!labels.insert(theta).second) {
      throw FormatError("settings[" + std::to_string(s) + "].theta: duplicate MUB label");
    }
    lhs += std::exp2(-classical_h2_cond(joint.settings[s].table));
  }
  const double rhs = 1.0 + (n - 1.0) / d_a;
  auto r = make_report("witness", Sense::AtMost, lhs, rhs, tolerance);
  r.family_kind = "MUB-subset(" + std::to_string(n) + ")";
  r.d = d_a;
  r.n = n;
  return r;
}

JointDistribution joint_statistics(const DensityMatrix& rho, const MeasurementFamily& mubs,
                                   const std::vector<Setting>& bob_bases, int n) {
  if (n < 1 || n > mubs.num_settings() || static_cast<int>(bob_bases.size()) < n) {
    throw ParameterError("joint_statistics: need n <= settings and n Bob bases");
  }
  JointDistribution j{rho.dim_a(), rho.dim_b(), {}};
  for (int s = 0; s < n; ++s) {
    Eigen::MatrixXd t = joint_table(rho, mubs.settings[s], bob_bases[s]);
    j.settings.push_back({s, t / t.sum()});
  }
  return j;
}

RelationReport monogamy_report(const StateVector& psi_abe, std::array<int, 3> dims,
                               const MeasurementFamily& mubs, double tolerance, double rank_tol) {
  const auto [da, db, de] = dims;
  if (mubs.d != da || std::abs(mubs.equality_constant - (da + 1.0)) > 1e-12) {
    throw ParameterError("monogamy_report: requires a basis 2-design family on A");
  }
  require_certified(mubs, "monogamy_report");
  const DensityMatrix rho = DensityMatrix::from_pure(psi_abe, {da, db, de});
  const DensityMatrix rho_ab = rho.marginal({0, 1});
  const DensityMatrix rho_ae = rho.marginal({0, 2});
  const DensityMatrix rho_e = rho.marginal({2});

  const ComplexMatrix sigma =
      tensor(ComplexMatrix::Identity(da, da) / static_cast<double>(da), rho_e.matrix());
  const double lhs = d0_relative(rho_ae.matrix(), sigma, rank_tol);
  const double h2prime = h2nu_measured(rho_ab, mubs, 1.0, rank_tol);
  const double rhs = std::log2(static_cast<double>(da)) -
                     std::log2((da + 1.0) * std::exp2(-h2prime) - 1.0);

  auto r = make_report("monogamy", Sense::Equality, lhs, rhs, tolerance);
  const auto ev = eigh(rho_ae.matrix()).eigenvalues;
  const double cutoff = rank_tol * ev.maxCoeff();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) >= cutoff / 10.0 && ev(i) <= cutoff * 10.0) r.rank_sensitive = true;
  }
  r.family_kind = to_string(mubs.kind, mubs.subset_size);
  r.d = da;
  r.nu = 1.0;
  r.n = mubs.num_settings();
  return r;
}

std::string to_string(Verdict v) { return v == Verdict::Holds ? "holds" : "violated"; }

std::string to_string(Sense s) {
  switch (s) {
    case Sense::Equality: return "equality";
    case Sense::AtMost: return "at-most";
    case Sense::AtLeast: return "at-least";
  }
  return "equality";
}

std::string to_string(Regime r) { return r == Regime::Heisenberg ? "heisenberg" : "epr"; }

}  // namespace eur
