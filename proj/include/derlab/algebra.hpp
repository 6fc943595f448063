#pragma once

// Finite-dimensional unital associative algebras given by structure
// constants, and linear self-maps of them in coordinates. This is the
// common ground on which End_A(M) and other small algebras are handled.

#include <vector>

#include "derlab/types.hpp"

namespace derlab {

class ConcreteAlgebra {
 public:
  /// `structure` holds c_{ijm} at index (i*dim + j)*dim + m, meaning
  /// e_i e_j = sum_m c_{ijm} e_m.
  ConcreteAlgebra(int dim, std::vector<Complex> structure, CVector unit_coords);

  int dim() const { return dim_; }
  Complex structure(int i, int j, int m) const { return structure_[(i * dim_ + j) * dim_ + m]; }
  const CVector& unit_coords() const { return unit_; }

  CVector basis(int i) const;
  CVector multiply(const CVector& x, const CVector& y) const;

  /// Matrix of y -> e_i y.
  const CMatrix& left_basis(int i) const { return left_[i]; }
  /// Matrix of y -> x y.
  CMatrix left_mult(const CVector& x) const;
  /// Matrix of y -> y x.
  CMatrix right_mult(const CVector& x) const;

  /// max over basis triples of |(e_i e_j) e_l - e_i (e_j e_l)|.
  double associativity_defect() const;
  /// max over basis elements of |u e_i - e_i| and |e_i u - e_i|.
  double unit_defect() const;
  /// Throws ConfigError if either defect exceeds tol.
  void validate(double tol = 1e-10) const;

 private:
  int dim_;
  std::vector<Complex> structure_;
  CVector unit_;
  std::vector<CMatrix> left_;
  std::vector<CMatrix> right_;
};

class LinearMapOnAlgebra {
 public:
  LinearMapOnAlgebra() = default;
  explicit LinearMapOnAlgebra(CMatrix matrix);

  static LinearMapOnAlgebra zero(int dim) { return LinearMapOnAlgebra(CMatrix::Zero(dim, dim)); }
  static LinearMapOnAlgebra identity(int dim) {
    return LinearMapOnAlgebra(CMatrix::Identity(dim, dim));
  }

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const CMatrix& matrix() const { return matrix_; }
  CVector operator()(const CVector& x) const { return matrix_ * x; }

 private:
  CMatrix matrix_;
};

/// Upper-triangular complex 2x2 matrices on the basis (E11, E12, E22).
ConcreteAlgebra upper_triangular_2x2();

}  // namespace derlab
