#include "eur/batch.hpp"

#include "eur/errors.hpp"

namespace eur {

DensityMatrix sample_state(SampleKind kind, int d_a, int d_b, std::uint64_t seed,
                           std::uint64_t index) {
  const SeedSpec spec{seed, index};
  switch (kind) {
    case SampleKind::Mixed:
      return random_density(d_a, d_b, 1 + static_cast<int>(index % (d_a * d_b)), spec);
    case SampleKind::Pure:
      return DensityMatrix::from_pure(random_pure(d_a * d_b, spec), {d_a, d_b});
    case SampleKind::Separable:
      return random_separable(d_a, d_b, 1 + static_cast<int>(index % 4), spec);
  }
  throw ParameterError("sample_state: unknown kind");
}

std::vector<RelationReport> equality_batch(int d_a, int d_b, const MeasurementFamily& family,
                                           double nu, long samples, std::uint64_t seed,
                                           Execution exec, SampleKind kind, double tolerance) {
  if (samples < 0) throw ParameterError("equality_batch: negative sample count");
  // Certify once up front so worker threads never throw.
  if (!(design_defect(family) < kCertifiedDesignDefect)) {
    throw DesignDefectError("equality_batch: family is not a certified 2-design");
  }
  if (family.d != d_a) throw DimensionError("equality_batch: family dimension differs from d_a");
  return map_samples(samples, exec, [&](long i) {
    return equality_report(sample_state(kind, d_a, d_b, seed, i), family, nu, tolerance);
  });
}

std::vector<RelationReport> monogamy_batch(std::array<int, 3> dims, const MeasurementFamily& mubs,
                                           long samples, std::uint64_t seed, Execution exec,
                                           double tolerance) {
  if (samples < 0) throw ParameterError("monogamy_batch: negative sample count");
  if (!(design_defect(mubs) < kCertifiedDesignDefect) || mubs.d != dims[0]) {
    throw DesignDefectError("monogamy_batch: family is not a certified 2-design on A");
  }
  const int total = dims[0] * dims[1] * dims[2];
  return map_samples(samples, exec, [&](long i) {
    return monogamy_report(random_pure(total, {seed, static_cast<std::uint64_t>(i)}), dims, mubs,
                           tolerance);
  });
}

}  // namespace eur
