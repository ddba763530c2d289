#pragma once

#include <array>
#include <exception>
#include <string>
#include <vector>

#include "eur/designs.hpp"
#include "eur/relations.hpp"
#include "eur/rng.hpp"
#include "eur/states.hpp"

namespace eur {

// Batch evaluation over seeded sample states. Sample i always uses
// SeedSpec{seed, i}, so the OpenMP kernels return exactly what the serial
// reference returns, element for element.

enum class Execution { Serial, Parallel };

enum class SampleKind {
  Mixed,      // Ginibre state of rank 1 + (i mod d_a d_b)
  Pure,       // Haar-random pure state
  Separable,  // mixture of 1 + (i mod 4) random product states
};

DensityMatrix sample_state(SampleKind kind, int d_a, int d_b, std::uint64_t seed, std::uint64_t index);

template <class Fn>
auto map_samples(long count, Execution exec, Fn&& fn) -> std::vector<decltype(fn(0L))> {
  std::vector<decltype(fn(0L))> out(count);
  if (exec == Execution::Serial) {
    for (long i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  // Exceptions may not cross the parallel region; the first one is rethrown.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      out[i] = fn(i);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<RelationReport> equality_batch(int d_a, int d_b, const MeasurementFamily& family,
                                           double nu, long samples, std::uint64_t seed,
                                           Execution exec = Execution::Parallel,
                                           SampleKind kind = SampleKind::Mixed,
                                           double tolerance = kEqualityTol);

std::vector<RelationReport> monogamy_batch(std::array<int, 3> dims, const MeasurementFamily& mubs,
                                           long samples, std::uint64_t seed,
                                           Execution exec = Execution::Parallel,
                                           double tolerance = kMonogamyTol);

}  // namespace eur
