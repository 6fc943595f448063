#pragma once
// Independent reference computations for the tests. Nothing here calls the
// library's solvers: ranks come from full-pivot LU, products from dense
// block-diagonal embeddings, traces from explicit sums.
#include <vector>

#include <Eigen/LU>

#include "derlab/opalg.hpp"

namespace oracle {

using derlab::CMatrix;
using derlab::Complex;
using derlab::CVector;

/// Block-diagonal N x N embedding of an operator.
inline CMatrix dense(const derlab::ModuleSpec& spec, const derlab::Operator& a) {
  const int n = spec.module_dim();
  CMatrix out = CMatrix::Zero(n, n);
  int off = 0;
  for (int t = 0; t < spec.k(); ++t) {
    const int d = spec.fiber_dim(t);
    out.block(off, off, d, d) = a.block(t);
    off += d;
  }
  return out;
}

/// Column vector of the module element, fibers stacked.
inline CVector dense(const derlab::ModuleSpec& spec, const derlab::ModuleElement& x) {
  CVector out(spec.module_dim());
  int off = 0;
  for (int t = 0; t < spec.k(); ++t) {
    out.segment(off, spec.fiber_dim(t)) = x.fiber(t);
    off += spec.fiber_dim(t);
  }
  return out;
}

inline CMatrix matrix_unit(const derlab::ModuleSpec& spec, int t, int p, int q) {
  CMatrix out = CMatrix::Zero(spec.module_dim(), spec.module_dim());
  int off = 0;
  for (int s = 0; s < t; ++s) off += spec.fiber_dim(s);
  out(off + p, off + q) = 1.0;
  return out;
}

/// Dense matrix units in canonical order.
inline std::vector<CMatrix> dense_basis(const derlab::ModuleSpec& spec) {
  std::vector<CMatrix> out;
  for (int t = 0; t < spec.k(); ++t)
    for (int p = 0; p < spec.fiber_dim(t); ++p)
      for (int q = 0; q < spec.fiber_dim(t); ++q) out.push_back(matrix_unit(spec, t, p, q));
  return out;
}

/// Coordinates of a dense block-diagonal matrix in the canonical basis.
inline CVector dense_coords(const derlab::ModuleSpec& spec, const CMatrix& m) {
  CVector out(spec.algebra_dim());
  int idx = 0, off = 0;
  for (int t = 0; t < spec.k(); ++t) {
    const int d = spec.fiber_dim(t);
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) out(idx++) = m(off + p, off + q);
    off += d;
  }
  return out;
}

inline int lu_rank(const CMatrix& m, double threshold = 1e-9) {
  Eigen::FullPivLU<CMatrix> lu(m);
  lu.setThreshold(threshold);
  return static_cast<int>(lu.rank());
}

/// dim of {ad_m : m in End} = rank of the D^2 x D matrix with columns vec(ad_{e_m}).
inline int inner_derivation_dim(const derlab::ModuleSpec& spec) {
  const auto basis = dense_basis(spec);
  const int dim = static_cast<int>(basis.size());
  CMatrix cols(dim * dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int j = 0; j < dim; ++j) {
      CMatrix ad = basis[m] * basis[j] - basis[j] * basis[m];
      cols.block(j * dim, m, dim, 1) = dense_coords(spec, ad);
    }
  }
  return lu_rank(cols);
}

/// dim of the center: elements commuting with every matrix unit.
inline int center_dim(const derlab::ModuleSpec& spec) {
  return spec.algebra_dim() - inner_derivation_dim(spec);
}

inline Complex brute_trace(const derlab::ModuleSpec& spec, const derlab::Operator& a, int t) {
  Complex s = 0.0;
  for (int i = 0; i < spec.fiber_dim(t); ++i) s += a.block(t)(i, i);
  return s;
}

/// Applies a linear map given on coordinates to a dense operator.
inline CMatrix apply_dense(const derlab::ModuleSpec& spec, const CMatrix& map, const CMatrix& x) {
  CVector image = map * dense_coords(spec, x);
  CMatrix out = CMatrix::Zero(spec.module_dim(), spec.module_dim());
  const auto basis = dense_basis(spec);
  for (int i = 0; i < image.size(); ++i) out += image(i) * basis[i];
  return out;
}

}  // namespace oracle
