#include "eur/entropies.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eur/errors.hpp"

namespace eur {

namespace {

void require_bipartite(const DensityMatrix& rho, const char* who) {
  if (!rho.is_bipartite()) {
    throw DimensionError(std::string(who) + ": state must be bipartite, got " +
                         std::to_string(rho.dims().size()) + " factors");
  }
}

ComplexMatrix conditional_marginal(const ConditionalStates& conds) {
  if (conds.empty()) throw ParameterError("conditional states list is empty");
  ComplexMatrix sum = ComplexMatrix::Zero(conds.front().rows(), conds.front().cols());
  for (const auto& c : conds) sum += c;
  return 0.5 * (sum + sum.adjoint());
}

}  // namespace

void validate_joint(const JointDistribution& joint) {
  if (joint.d_a < 1 || joint.d_b < 1) throw FormatError("joint: d_a and d_b must be >= 1");
  if (joint.settings.empty()) throw FormatError("joint.settings: empty");
  for (std::size_t s = 0; s < joint.settings.size(); ++s) {
    const auto& t = joint.settings[s].table;
    const std::string where = "settings[" + std::to_string(s) + "].table";
    if (t.rows() != joint.d_a || t.cols() != joint.d_b) {
      throw FormatError(where + ": expected " + std::to_string(joint.d_a) + "x" +
                        std::to_string(joint.d_b) + " table");
    }
    if (!t.allFinite() || t.minCoeff() < 0.0) {
      throw FormatError(where + ": entries must be finite and nonnegative");
    }
    if (std::abs(t.sum() - 1.0) > 1e-9) {
      throw FormatError(where + ": probabilities sum to " + std::to_string(t.sum()) +
                        ", not 1 (normalization error)");
    }
  }
}

double h2nu(const ComplexMatrix& rho_ab, int dim_a, int dim_b, double nu, double rank_tol) {
  if (nu < 0.0 || nu > 1.0) throw ParameterError("h2nu: nu must lie in [0, 1]");
  const ComplexMatrix rho_b = partial_trace(rho_ab, dim_a, dim_b, Keep::B);
  const ComplexMatrix left = func_on_support(rho_b, -(1.0 - nu) / 4.0, rank_tol);
  const ComplexMatrix right = func_on_support(rho_b, -(1.0 + nu) / 4.0, rank_tol);
  double collision = 0.0;
  for (int a = 0; a < dim_a; ++a) {
    for (int a2 = 0; a2 < dim_a; ++a2) {
      collision +=
          (left * rho_ab.block(a * dim_b, a2 * dim_b, dim_b, dim_b) * right).squaredNorm();
    }
  }
  return -std::log2(collision);
}

double h2nu(const DensityMatrix& rho, double nu, double rank_tol) {
  require_bipartite(rho, "h2nu");
  return h2nu(rho.matrix(), rho.dim_a(), rho.dim_b(), nu, rank_tol);
}

ConditionalStates measure_setting(const DensityMatrix& rho, const Setting& setting) {
  require_bipartite(rho, "measure_setting");
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  ConditionalStates out;
  out.reserve(setting.effects.size());
  for (const auto& e : setting.effects) {
    if (e.vector.size() != da) {
      throw DimensionError("measure_setting: effect dimension " + std::to_string(e.vector.size()) +
                           " does not match d_A = " + std::to_string(da));
    }
    // (<v| (x) 1_B) as a db x (da*db) map
    ComplexMatrix bra = ComplexMatrix::Zero(db, da * db);
    for (int i = 0; i < da; ++i) {
      bra.block(0, i * db, db, db) = std::conj(e.vector(i)) * ComplexMatrix::Identity(db, db);
    }
    ComplexMatrix c = e.weight * (bra * rho.matrix() * bra.adjoint());
    out.push_back(0.5 * (c + c.adjoint()));
  }
  return out;
}

ConditionalStates measure_in_basis(const DensityMatrix& rho, const Setting& basis) {
  require_bipartite(rho, "measure_in_basis");
  const int da = rho.dim_a();
  if (static_cast<int>(basis.effects.size()) != da) {
    throw DimensionError("measure_in_basis: basis has " + std::to_string(basis.effects.size()) +
                         " vectors, d_A = " + std::to_string(da));
  }
  ComplexMatrix u(da, da);
  for (int k = 0; k < da; ++k) {
    if (basis.effects[k].vector.size() != da) {
      throw DimensionError("measure_in_basis: basis vector length differs from d_A");
    }
    u.col(k) = basis.effects[k].vector;
  }
  if ((u.adjoint() * u - ComplexMatrix::Identity(da, da)).cwiseAbs().maxCoeff() > 1e-10) {
    throw ParameterError("measure_in_basis: vectors are not orthonormal");
  }
  Setting projective = basis;
  for (auto& e : projective.effects) e.weight = 1.0;
  return measure_setting(rho, projective);
}

CqEnsemble measure_family(const DensityMatrix& rho, const MeasurementFamily& family) {
  require_bipartite(rho, "measure_family");
  if (family.d != rho.dim_a()) {
    throw DimensionError("measure_family: family acts on d = " + std::to_string(family.d) +
                         " but d_A = " + std::to_string(rho.dim_a()));
  }
  CqEnsemble cq;
  for (const auto& s : family.settings) {
    cq.weights.push_back(s.weight);
    cq.per_setting.push_back(measure_setting(rho, s));
  }
  return cq;
}

double cq_collision(const ConditionalStates& conds, double nu, double rank_tol) {
  const ComplexMatrix rho_b = conditional_marginal(conds);
  const ComplexMatrix left = func_on_support(rho_b, -(1.0 - nu) / 2.0, rank_tol);
  const ComplexMatrix right = func_on_support(rho_b, -(1.0 + nu) / 2.0, rank_tol);
  double total = 0.0;
  for (const auto& c : conds) total += (c * left * c * right).trace().real();
  return total;
}

double pgm_guess_prob(const ConditionalStates& conds, double rank_tol) {
  return cq_collision(conds, 0.0, rank_tol);
}

std::vector<ComplexMatrix> pgm_effects(const ConditionalStates& conds, double rank_tol) {
  const ComplexMatrix s = func_on_support(conditional_marginal(conds), -0.5, rank_tol);
  std::vector<ComplexMatrix> out;
  out.reserve(conds.size());
  for (const auto& c : conds) out.push_back(s * c * s);
  return out;
}

FamilyGuess family_guess_prob(const DensityMatrix& rho, const MeasurementFamily& family,
                              double rank_tol) {
  const CqEnsemble cq = measure_family(rho, family);
  FamilyGuess g;
  for (std::size_t s = 0; s < cq.per_setting.size(); ++s) {
    g.per_setting.push_back(pgm_guess_prob(cq.per_setting[s], rank_tol));
    g.average += cq.weights[s] * g.per_setting.back();
  }
  return g;
}

double h2nu_measured(const DensityMatrix& rho, const MeasurementFamily& family, double nu,
                     double rank_tol) {
  if (nu < 0.0 || nu > 1.0) throw ParameterError("h2nu_measured: nu must lie in [0, 1]");
  const CqEnsemble cq = measure_family(rho, family);
  double total = 0.0;
  for (std::size_t s = 0; s < cq.per_setting.size(); ++s) {
    total += cq.weights[s] * cq_collision(cq.per_setting[s], nu, rank_tol);
  }
  return -std::log2(total);
}

DensityMatrix cq_state(const DensityMatrix& rho, const MeasurementFamily& family) {
  const CqEnsemble cq = measure_family(rho, family);
  const int db = rho.dim_b();
  const int t = static_cast<int>(cq.per_setting.size());
  int k_dim = 0;
  for (const auto& s : cq.per_setting) k_dim = std::max(k_dim, static_cast<int>(s.size()));
  const int cond = db * t;
  ComplexMatrix m = ComplexMatrix::Zero(k_dim * cond, k_dim * cond);
  for (int th = 0; th < t; ++th) {
    for (std::size_t k = 0; k < cq.per_setting[th].size(); ++k) {
      const ComplexMatrix& c = cq.per_setting[th][k];
      for (int b = 0; b < db; ++b) {
        for (int b2 = 0; b2 < db; ++b2) {
          m(k * cond + b * t + th, k * cond + b2 * t + th) = cq.weights[th] * c(b, b2);
        }
      }
    }
  }
  return DensityMatrix(std::move(m), {k_dim, cond});
}

double pg_recovery_fidelity(const DensityMatrix& rho, double rank_tol) {
  require_bipartite(rho, "pg_recovery_fidelity");
  return std::exp2(-h2nu(rho, 0.0, rank_tol)) / rho.dim_a();
}

ComplexMatrix apply_pg_recovery(const DensityMatrix& rho, double rank_tol) {
  require_bipartite(rho, "apply_pg_recovery");
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  const ComplexMatrix& m = rho.matrix();
  const ComplexMatrix s =
      func_on_support(partial_trace(m, da, db, Keep::B), -0.5, rank_tol);
  auto block = [&](int i, int j) { return m.block(i * db, j * db, db, db); };

  // Lambda(X)_{ij} = Tr[S X S rho_{ji}], applied to each block rho_{a a'}.
  ComplexMatrix sigma(da * da, da * da);
  for (int a = 0; a < da; ++a) {
    for (int a2 = 0; a2 < da; ++a2) {
      const ComplexMatrix sxs = s * block(a, a2) * s;
      for (int i = 0; i < da; ++i) {
        for (int j = 0; j < da; ++j) sigma(a * da + i, a2 * da + j) = (sxs * block(j, i)).trace();
      }
    }
  }
  return sigma;
}

double pg_recovery_fidelity_explicit(const DensityMatrix& rho, double rank_tol) {
  return pure_target_fidelity(max_entangled(rho.dim_a()), apply_pg_recovery(rho, rank_tol));
}

double classical_h2_cond(const Eigen::MatrixXd& table) {
  double collision = 0.0;
  for (Eigen::Index l = 0; l < table.cols(); ++l) {
    const double pl = table.col(l).sum();
    if (pl <= 0.0) continue;
    collision += table.col(l).squaredNorm() / pl;
  }
  return -std::log2(collision);
}

Eigen::MatrixXd joint_table(const DensityMatrix& rho, const Setting& alice, const Setting& bob) {
  require_bipartite(rho, "joint_table");
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  Eigen::MatrixXd p(alice.effects.size(), bob.effects.size());
  for (std::size_t k = 0; k < alice.effects.size(); ++k) {
    for (std::size_t l = 0; l < bob.effects.size(); ++l) {
      if (alice.effects[k].vector.size() != da || bob.effects[l].vector.size() != db) {
        throw DimensionError("joint_table: basis dimension mismatch");
      }
      const StateVector v = tensor(alice.effects[k].vector, bob.effects[l].vector);
      p(k, l) = std::max(0.0, v.dot(rho.matrix() * v).real());
    }
  }
  return p;
}

double d0_relative(const ComplexMatrix& rho, const ComplexMatrix& sigma, double rank_tol) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw DimensionError("d0_relative: operators differ in dimension");
  }
  const double overlap = (support_projector(rho, rank_tol) * sigma).trace().real();
  if (overlap <= rank_tol) {
    throw InfiniteDivergence("d0_relative: Tr[rho^0 sigma] = " + std::to_string(overlap) +
                             " vanishes; divergence is infinite");
  }
  return -std::log2(overlap);
}

}  // namespace eur
