#include "eur/designs.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eur/errors.hpp"

namespace eur {

namespace {

Complex root_of_unity(long power, int d) {
  const long p = ((power % d) + d) % d;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(p) / d;
  return {std::cos(angle), std::sin(angle)};
}

Setting basis_setting(const ComplexMatrix& columns, double weight) {
  Setting s{weight, {}};
  for (Eigen::Index k = 0; k < columns.cols(); ++k) s.effects.push_back({1.0, columns.col(k)});
  return s;
}

// X^a Z^b on C^d.
ComplexMatrix displacement(int d, int a, int b) {
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) out((j + a) % d, j) = root_of_unity(static_cast<long>(b) * j, d);
  return out;
}

}  // namespace

ComplexMatrix MeasurementFamily::effect_operator(int s, int k) const {
  const Effect& e = settings.at(s).effects.at(k);
  return e.weight * projector(e.vector);
}

bool MeasurementFamily::is_basis_family(double tol) const {
  for (const auto& s : settings) {
    if (static_cast<int>(s.effects.size()) != d) return false;
    for (const auto& e : s.effects) {
      if (std::abs(e.weight - 1.0) > tol) return false;
    }
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        if (std::abs(s.effects[i].vector.dot(s.effects[j].vector)) > tol) return false;
      }
    }
  }
  return true;
}

std::string to_string(FamilyKind kind, int subset_size) {
  switch (kind) {
    case FamilyKind::MubComplete: return "MUB-complete";
    case FamilyKind::MubSubset: return "MUB-subset(" + std::to_string(subset_size) + ")";
    case FamilyKind::Sic: return "SIC";
    case FamilyKind::CliffordOrbit: return "CliffordOrbit";
    case FamilyKind::Custom: return "Custom";
  }
  return "Custom";
}

void validate_family(const MeasurementFamily& f) {
  if (f.d < 1) throw FormatError("family: d must be >= 1");
  if (f.settings.empty()) throw FormatError("family: no settings");
  double wsum = 0.0;
  const ComplexMatrix id = ComplexMatrix::Identity(f.d, f.d);
  for (std::size_t s = 0; s < f.settings.size(); ++s) {
    const auto& setting = f.settings[s];
    const std::string where = "family.settings[" + std::to_string(s) + "]";
    if (setting.weight < 0.0) throw FormatError(where + ": negative setting weight");
    wsum += setting.weight;
    if (setting.effects.empty()) throw FormatError(where + ": no effects");
    ComplexMatrix sum = ComplexMatrix::Zero(f.d, f.d);
    for (std::size_t k = 0; k < setting.effects.size(); ++k) {
      const auto& e = setting.effects[k];
      if (e.vector.size() != f.d) {
        throw FormatError(where + ".effects[" + std::to_string(k) + "]: wrong vector length");
      }
      if (std::abs(e.vector.norm() - 1.0) > 1e-11) {
        throw FormatError(where + ".effects[" + std::to_string(k) + "]: vector not normalized");
      }
      if (e.weight < 0.0) {
        throw FormatError(where + ".effects[" + std::to_string(k) + "]: negative weight");
      }
      sum += e.weight * projector(e.vector);
    }
    if ((sum - id).cwiseAbs().maxCoeff() > 1e-10) {
      throw FormatError(where + ": effects do not sum to the identity");
    }
  }
  if (std::abs(wsum - 1.0) > 1e-10) throw FormatError("family: setting weights do not sum to 1");

  const double basis_c = f.d + 1.0;
  const double sic_c = f.d * (f.d + 1.0);
  switch (f.kind) {
    case FamilyKind::MubComplete:
    case FamilyKind::MubSubset:
    case FamilyKind::CliffordOrbit:
      if (std::abs(f.equality_constant - basis_c) > 1e-12) {
        throw FormatError("family: basis families require equality_constant d+1");
      }
      break;
    case FamilyKind::Sic:
      if (std::abs(f.equality_constant - sic_c) > 1e-12) {
        throw FormatError("family: SIC requires equality_constant d(d+1)");
      }
      break;
    case FamilyKind::Custom:
      if (!(f.equality_constant > 0.0)) throw FormatError("family: equality_constant must be > 0");
      break;
  }
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

MeasurementFamily mub_family(int d) {
  if (!is_prime(d)) {
    throw UnsupportedDimensionError("mub_family: d = " + std::to_string(d) +
                                    " is not prime; complete MUB sets are built for prime d only");
  }
  MeasurementFamily f;
  f.d = d;
  f.kind = FamilyKind::MubComplete;
  f.equality_constant = d + 1.0;
  const double w = 1.0 / (d + 1.0);
  const double r = 1.0 / std::sqrt(static_cast<double>(d));

  f.settings.push_back(basis_setting(ComplexMatrix::Identity(d, d), w));
  if (d == 2) {
    ComplexMatrix x(2, 2), y(2, 2);
    x << r, r, r, -r;
    y << r, r, Complex(0, r), Complex(0, -r);
    f.settings.push_back(basis_setting(x, w));
    f.settings.push_back(basis_setting(y, w));
    return f;
  }
  // |v^(a)_k> = d^{-1/2} sum_j w^{a j^2 + k j} |j>
  for (int a = 0; a < d; ++a) {
    ComplexMatrix basis(d, d);
    for (int k = 0; k < d; ++k) {
      for (int j = 0; j < d; ++j) {
        basis(j, k) = r * root_of_unity(static_cast<long>(a) * j * j + static_cast<long>(k) * j, d);
      }
    }
    f.settings.push_back(basis_setting(basis, w));
  }
  return f;
}

MeasurementFamily mub_subset(int d, int n) {
  MeasurementFamily f = mub_family(d);
  if (n < 1 || n > d + 1) {
    throw ParameterError("mub_subset: n = " + std::to_string(n) + " outside [1, d+1]");
  }
  f.settings.resize(n);
  for (auto& s : f.settings) s.weight = 1.0 / n;
  if (n < d + 1) {
    f.kind = FamilyKind::MubSubset;
    f.subset_size = n;
  }
  return f;
}

MeasurementFamily sic_povm(int d) {
  StateVector fiducial(d);
  if (d == 2) {
    // Bloch vector (1,1,1)/sqrt3: one vertex of the tetrahedron.
    const double theta = std::acos(1.0 / std::sqrt(3.0));
    fiducial << std::cos(theta / 2.0),
        std::polar(std::sin(theta / 2.0), std::numbers::pi / 4.0);
  } else if (d == 3) {
    const double r = 1.0 / std::sqrt(2.0);
    fiducial << 0.0, r, -r;
  } else {
    throw UnsupportedDimensionError("sic_povm: only d = 2 and d = 3 are provided");
  }
  MeasurementFamily f;
  f.d = d;
  f.kind = FamilyKind::Sic;
  f.equality_constant = d * (d + 1.0);
  Setting s{1.0, {}};
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      StateVector v = displacement(d, a, b) * fiducial;
      s.effects.push_back({1.0 / d, v / v.norm()});
    }
  }
  f.settings.push_back(std::move(s));
  return f;
}

ComplexMatrix canonical_phase(const ComplexMatrix& u, double eps) {
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      const Complex z = u(i, j);
      if (std::abs(z) > eps) return u * (std::abs(z) / z);
    }
  }
  return u;
}

std::vector<ComplexMatrix> clifford_group() {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix h(2, 2), s(2, 2);
  h << r, r, r, -r;
  s << 1.0, 0.0, 0.0, Complex(0.0, 1.0);
  const std::vector<ComplexMatrix> gens{h, s};

  auto contains = [](const std::vector<ComplexMatrix>& set, const ComplexMatrix& m) {
    for (const auto& x : set) {
      if ((x - m).cwiseAbs().maxCoeff() < 1e-9) return true;
    }
    return false;
  };

  std::vector<ComplexMatrix> group{ComplexMatrix::Identity(2, 2)};
  for (std::size_t frontier = 0; frontier < group.size(); ++frontier) {
    for (const auto& g : gens) {
      ComplexMatrix next = canonical_phase(g * group[frontier]);
      if (!contains(group, next)) group.push_back(std::move(next));
    }
  }
  return group;
}

MeasurementFamily clifford_orbit_family() {
  const auto group = clifford_group();
  MeasurementFamily f;
  f.d = 2;
  f.kind = FamilyKind::CliffordOrbit;
  f.equality_constant = 3.0;
  const double w = 1.0 / static_cast<double>(group.size());
  for (const auto& u : group) f.settings.push_back(basis_setting(u, w));
  return f;
}

double design_defect(const MeasurementFamily& f) {
  const int d = f.d;
  ComplexMatrix avg = ComplexMatrix::Zero(d * d, d * d);
  long count = 0;
  for (const auto& s : f.settings) {
    for (const auto& e : s.effects) {
      const StateVector vv = tensor(e.vector, e.vector);
      avg += vv * vv.adjoint();
      ++count;
    }
  }
  if (count == 0) throw FormatError("design_defect: family has no vectors");
  avg /= static_cast<double>(count);
  const ComplexMatrix target =
      (ComplexMatrix::Identity(d * d, d * d) + swap_operator(d)) / (d * (d + 1.0));
  return (avg - target).norm();
}

double unbiasedness_defect(const MeasurementFamily& f) {
  if (!f.is_basis_family()) {
    throw UnsupportedFamilyError("unbiasedness_defect: family settings are not orthonormal bases");
  }
  const double target = 1.0 / f.d;
  double worst = 0.0;
  for (std::size_t s = 0; s < f.settings.size(); ++s) {
    for (std::size_t t = s + 1; t < f.settings.size(); ++t) {
      for (const auto& x : f.settings[s].effects) {
        for (const auto& y : f.settings[t].effects) {
          worst = std::max(worst, std::abs(std::norm(x.vector.dot(y.vector)) - target));
        }
      }
    }
  }
  return worst;
}

}  // namespace eur
