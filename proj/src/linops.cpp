#include "eur/linops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "eur/errors.hpp"

namespace eur {

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index rb = b.rows();
  const Eigen::Index cb = b.cols();
  ComplexMatrix out(a.rows() * rb, a.cols() * cb);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  }
  return out;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  StateVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b, Keep keep) {
  if (dim_a < 1 || dim_b < 1 || m.rows() != m.cols() ||
      m.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw DimensionError("partial_trace: operator of size " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " does not match dims (" +
                         std::to_string(dim_a) + "," + std::to_string(dim_b) + ")");
  }
  if (keep == Keep::B) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
    for (int a = 0; a < dim_a; ++a) {
      out += m.block(a * dim_b, a * dim_b, dim_b, dim_b);
    }
    return out;
  }
  ComplexMatrix out(dim_a, dim_a);
  for (int a = 0; a < dim_a; ++a) {
    for (int a2 = 0; a2 < dim_a; ++a2) {
      out(a, a2) = m.block(a * dim_b, a2 * dim_b, dim_b, dim_b).trace();
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            std::span<const int> keep) {
  const int n = static_cast<int>(dims.size());
  long total = 1;
  for (int d : dims) {
    if (d < 1) throw DimensionError("partial_trace: subsystem dimension < 1");
    total *= d;
  }
  if (m.rows() != m.cols() || m.rows() != total) {
    throw DimensionError("partial_trace: operator size does not match product of dims");
  }
  std::vector<bool> kept(n, false);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n || (i > 0 && keep[i] <= keep[i - 1])) {
      throw DimensionError("partial_trace: keep indices must be ascending and in range");
    }
    kept[keep[i]] = true;
  }

  // Row-major strides of the full space.
  std::vector<long> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

  long kept_dim = 1, traced_dim = 1;
  std::vector<int> kept_dims, traced_dims;
  std::vector<long> kept_stride, traced_stride;
  for (int s = 0; s < n; ++s) {
    if (kept[s]) {
      kept_dim *= dims[s];
      kept_dims.push_back(dims[s]);
      kept_stride.push_back(stride[s]);
    } else {
      traced_dim *= dims[s];
      traced_dims.push_back(dims[s]);
      traced_stride.push_back(stride[s]);
    }
  }

  // Offset in the full space contributed by a multi-index over a subset.
  auto offsets = [](long count, const std::vector<int>& ds, const std::vector<long>& st) {
    std::vector<long> off(count, 0);
    for (long idx = 0; idx < count; ++idx) {
      long rem = idx, o = 0;
      for (int s = static_cast<int>(ds.size()) - 1; s >= 0; --s) {
        o += (rem % ds[s]) * st[s];
        rem /= ds[s];
      }
      off[idx] = o;
    }
    return off;
  };
  const auto koff = offsets(kept_dim, kept_dims, kept_stride);
  const auto toff = offsets(traced_dim, traced_dims, traced_stride);

  ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
  for (long i = 0; i < kept_dim; ++i) {
    for (long j = 0; j < kept_dim; ++j) {
      Complex acc{0.0, 0.0};
      for (long t = 0; t < traced_dim; ++t) acc += m(koff[i] + toff[t], koff[j] + toff[t]);
      out(i, j) = acc;
    }
  }
  return out;
}

EigenDecomposition eigh(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("eigh: matrix is not square");
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw NotPositiveError("eigh: decomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

// Returns the cutoff below which eigenvalues count as zero; validates positivity.
double support_cutoff(const RealVector& ev, double rank_tol, const char* who) {
  if (ev.size() == 0) return 0.0;
  const double lmax = ev.maxCoeff();
  const double cutoff = rank_tol * std::max(lmax, 0.0);
  if (ev.minCoeff() < -cutoff && ev.minCoeff() < 0.0) {
    throw NotPositiveError(std::string(who) + ": eigenvalue " + std::to_string(ev.minCoeff()) +
                           " is below -rank_tol * lambda_max");
  }
  return cutoff;
}

}  // namespace

ComplexMatrix func_on_support(const ComplexMatrix& m, double exponent, double rank_tol) {
  const auto [ev, vecs] = eigh(m);
  const double cutoff = support_cutoff(ev, rank_tol, "func_on_support");
  RealVector mapped(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    mapped(i) = (ev(i) > cutoff && ev(i) > 0.0) ? std::pow(ev(i), exponent) : 0.0;
  }
  return vecs * mapped.asDiagonal() * vecs.adjoint();
}

ComplexMatrix support_projector(const ComplexMatrix& m, double rank_tol) {
  return func_on_support(m, 0.0, rank_tol);
}

int numerical_rank(const ComplexMatrix& m, double rank_tol) {
  const auto ev = eigh(m).eigenvalues;
  const double cutoff = support_cutoff(ev, rank_tol, "numerical_rank");
  return static_cast<int>(std::count_if(ev.begin(), ev.end(),
                                        [&](double l) { return l > cutoff && l > 0.0; }));
}

ComplexMatrix swap_operator(int d) {
  if (d < 1) throw ParameterError("swap_operator: d must be >= 1");
  ComplexMatrix f = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) f(j * d + i, i * d + j) = 1.0;
  }
  return f;
}

double pure_target_fidelity(const StateVector& psi, const ComplexMatrix& sigma) {
  if (sigma.rows() != psi.size() || sigma.cols() != psi.size()) {
    throw DimensionError("pure_target_fidelity: dimension mismatch");
  }
  return psi.dot(sigma * psi).real();
}

StateVector max_entangled(int d) {
  if (d < 1) throw ParameterError("max_entangled: d must be >= 1");
  StateVector v = StateVector::Zero(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) v(j * d + j) = amp;
  return v;
}

ComplexMatrix projector(const StateVector& psi) { return psi * psi.adjoint(); }

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace eur
