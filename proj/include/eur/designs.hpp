#pragma once

#include <string>
#include <vector>

#include "eur/linops.hpp"

namespace eur {

/// One POVM element weight * |vector><vector|.
struct Effect {
  double weight = 1.0;
  StateVector vector;
};

/// A measurement setting; `weight` is the probability the setting is chosen.
struct Setting {
  double weight = 1.0;
  std::vector<Effect> effects;
};

enum class FamilyKind { MubComplete, MubSubset, Sic, CliffordOrbit, Custom };

/// A weighted collection of rank-1 measurements on a d-dimensional system,
/// tagged with the constant c of the identity
///   sum_theta w_theta sum_k E_{theta,k} (x) E_{theta,k} = (1 + F) / c
/// (d+1 for basis families that form a 2-design, d(d+1) for a SIC).
struct MeasurementFamily {
  int d = 0;
  FamilyKind kind = FamilyKind::Custom;
  int subset_size = 0;  // n for MubSubset
  std::vector<Setting> settings;
  double equality_constant = 0.0;

  int num_settings() const { return static_cast<int>(settings.size()); }
  /// Operator of effect k in setting s.
  ComplexMatrix effect_operator(int s, int k) const;
  /// True when every setting is an orthonormal basis with unit effect weights.
  bool is_basis_family(double tol = 1e-10) const;
};

std::string to_string(FamilyKind kind, int subset_size = 0);

/// Checks completeness, normalization, weights and the kind/constant
/// pairing; throws FormatError describing the first violation.
void validate_family(const MeasurementFamily& family);

bool is_prime(int n);

/// Complete set of d+1 mutually unbiased bases for prime d. Order: the
/// computational basis first, then the quadratic-phase bases a = 0..d-1
/// (for d = 2: Z, X, Y eigenbases).
MeasurementFamily mub_family(int d);

/// The first n bases of mub_family(d), weighted uniformly.
MeasurementFamily mub_subset(int d, int n);

/// Weyl-Heisenberg covariant SIC-POVM for d in {2, 3}.
MeasurementFamily sic_povm(int d);

/// Single-qubit Clifford group modulo global phase (24 elements), generated
/// from H and S by closure.
std::vector<ComplexMatrix> clifford_group();

/// Bases U|k> for every U in the qubit Clifford group, uniform weights.
MeasurementFamily clifford_orbit_family();

/// Rewrites a unitary so its first entry of modulus > eps is real positive.
ComplexMatrix canonical_phase(const ComplexMatrix& u, double eps = 1e-9);

/// Frobenius distance between the uniform average of |v><v|^(x)2 over all
/// pooled effect vectors and (1 + F) / (d(d+1)).
double design_defect(const MeasurementFamily& family);

/// max over vector pairs from distinct settings of | |<x|y>|^2 - 1/d |.
/// Throws UnsupportedFamilyError unless every setting is a basis.
double unbiasedness_defect(const MeasurementFamily& family);

}  // namespace eur
