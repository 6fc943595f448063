#include "derlab/kernels.hpp"

#ifdef DERLAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace derlab::kernels {

namespace {

// Writes the Leibniz block for (i, j) straight from the structure constants.
void leibniz_block(const ConcreteAlgebra& alg, int i, int j, CMatrix& out) {
  const int n = alg.dim();
  const Eigen::Index row0 = static_cast<Eigen::Index>(i * n + j) * n;
  for (int m = 0; m < n; ++m) {
    const Complex c = alg.structure(i, j, m);
    if (c == Complex(0.0)) continue;
    for (int r = 0; r < n; ++r) out(row0 + r, m * n + r) += c;
  }
  // -d(e_i) e_j: coefficient of d(s, i) in row r is -c_{s j r}.
  // -e_i d(e_j): coefficient of d(s, j) in row r is -c_{i s r}.
  for (int s = 0; s < n; ++s) {
    for (int r = 0; r < n; ++r) {
      const Complex cr = alg.structure(s, j, r);
      if (cr != Complex(0.0)) out(row0 + r, i * n + s) -= cr;
      const Complex cl = alg.structure(i, s, r);
      if (cl != Complex(0.0)) out(row0 + r, j * n + s) -= cl;
    }
  }
}

void jordan_block(const ConcreteAlgebra& alg, int i, int j, Eigen::Index row0, CMatrix& out) {
  const int n = alg.dim();
  for (int m = 0; m < n; ++m) {
    const Complex c = alg.structure(i, j, m) + alg.structure(j, i, m);
    if (c == Complex(0.0)) continue;
    for (int r = 0; r < n; ++r) out(row0 + r, m * n + r) += c;
  }
  for (int s = 0; s < n; ++s) {
    for (int r = 0; r < n; ++r) {
      out(row0 + r, i * n + s) -= alg.structure(s, j, r) + alg.structure(j, s, r);
      out(row0 + r, j * n + s) -= alg.structure(i, s, r) + alg.structure(s, i, r);
    }
  }
}

Eigen::Index jordan_row0(int i, int j, int n) {
  // Pairs (i, j), i <= j, enumerated row-major.
  const Eigen::Index before = static_cast<Eigen::Index>(i) * n - static_cast<Eigen::Index>(i) * (i - 1) / 2;
  return (before + (j - i)) * n;
}

}  // namespace

int max_threads() {
#ifdef DERLAB_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

CMatrix leibniz_constraints(const ConcreteAlgebra& alg) {
  const int n = alg.dim();
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(n) * n * n, static_cast<Eigen::Index>(n) * n);
  const int pairs = n * n;
#pragma omp parallel for schedule(static)
  for (int p = 0; p < pairs; ++p) leibniz_block(alg, p / n, p % n, out);
  return out;
}

CMatrix leibniz_constraints_serial(const ConcreteAlgebra& alg) {
  const int n = alg.dim();
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(n) * n * n, static_cast<Eigen::Index>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto rows = out.middleRows(static_cast<Eigen::Index>(i * n + j) * n, n);
      const CVector prod = alg.left_basis(i).col(j);
      for (int m = 0; m < n; ++m) rows.middleCols(m * n, n) += prod(m) * CMatrix::Identity(n, n);
      rows.middleCols(i * n, n) -= alg.right_mult(alg.basis(j));
      rows.middleCols(j * n, n) -= alg.left_basis(i);
    }
  }
  return out;
}

CMatrix jordan_constraints(const ConcreteAlgebra& alg) {
  const int n = alg.dim();
  const Eigen::Index pairs = static_cast<Eigen::Index>(n) * (n + 1) / 2;
  CMatrix out = CMatrix::Zero(pairs * n, static_cast<Eigen::Index>(n) * n);
  const int all = n * n;
#pragma omp parallel for schedule(static)
  for (int p = 0; p < all; ++p) {
    const int i = p / n;
    const int j = p % n;
    if (i <= j) jordan_block(alg, i, j, jordan_row0(i, j, n), out);
  }
  return out;
}

CMatrix jordan_constraints_serial(const ConcreteAlgebra& alg) {
  const int n = alg.dim();
  const Eigen::Index pairs = static_cast<Eigen::Index>(n) * (n + 1) / 2;
  CMatrix out = CMatrix::Zero(pairs * n, static_cast<Eigen::Index>(n) * n);
  Eigen::Index block = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j, ++block) {
      auto rows = out.middleRows(block * n, n);
      const CVector sym = alg.left_basis(i).col(j) + alg.left_basis(j).col(i);
      for (int m = 0; m < n; ++m) rows.middleCols(m * n, n) += sym(m) * CMatrix::Identity(n, n);
      rows.middleCols(i * n, n) -= alg.right_mult(alg.basis(j)) + alg.left_basis(j);
      rows.middleCols(j * n, n) -= alg.left_basis(i) + alg.right_mult(alg.basis(i));
    }
  }
  return out;
}

CMatrix commutant_constraints(const ConcreteAlgebra& alg) {
  const int n = alg.dim();
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(n) * n, n);
#pragma omp parallel for schedule(static)
  for (int b = 0; b < n; ++b) {
    const Eigen::Index row0 = static_cast<Eigen::Index>(b) * n;
    // (z e_b)_r = sum_s z_s c_{s b r};  (e_b z)_r = sum_s c_{b s r} z_s.
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) out(row0 + r, s) = alg.structure(s, b, r) - alg.structure(b, s, r);
    }
  }
  return out;
}

CMatrix commutant_constraints_serial(const ConcreteAlgebra& alg) {
  const int n = alg.dim();
  CMatrix out(static_cast<Eigen::Index>(n) * n, n);
  for (int b = 0; b < n; ++b) {
    const CVector e = alg.basis(b);
    out.middleRows(static_cast<Eigen::Index>(b) * n, n) = alg.right_mult(e) - alg.left_mult(e);
  }
  return out;
}

}  // namespace derlab::kernels
