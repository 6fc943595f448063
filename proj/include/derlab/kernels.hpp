#pragma once

// Constraint-matrix assembly for the nullspace solvers. Each routine has an
// OpenMP-parallel version (one thread per block of constraint rows) and a
// serial reference written with dense block algebra; tests check that they
// agree and bench/ compares their speed.
//
// Unknown linear maps d are vectorized column-major: entry d(r, c) is
// unknown number c * dim + r.

#include "derlab/algebra.hpp"

namespace derlab::kernels {

/// Rows of d(e_i e_j) - d(e_i) e_j - e_i d(e_j) = 0 for all ordered pairs
/// (i, j); block (i, j) starts at row (i * dim + j) * dim. Shape dim^3 x dim^2.
CMatrix leibniz_constraints(const ConcreteAlgebra& alg);
CMatrix leibniz_constraints_serial(const ConcreteAlgebra& alg);

/// Rows of the polarized Jordan identity
/// d(e_i e_j + e_j e_i) = d(e_i) e_j + e_i d(e_j) + d(e_j) e_i + e_j d(e_i)
/// for i <= j, pairs enumerated row-major. Shape (dim(dim+1)/2 * dim) x dim^2.
CMatrix jordan_constraints(const ConcreteAlgebra& alg);
CMatrix jordan_constraints_serial(const ConcreteAlgebra& alg);

/// Rows of z e_b - e_b z = 0 for every basis element b. Shape dim^2 x dim.
CMatrix commutant_constraints(const ConcreteAlgebra& alg);
CMatrix commutant_constraints_serial(const ConcreteAlgebra& alg);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace derlab::kernels
