#pragma once

#include <vector>

#include "derlab/types.hpp"

namespace derlab {

inline constexpr double kDefaultRankTol = 1e-9;
inline constexpr double kMinGapRatio = 10.0;

struct Nullspace {
  /// Orthonormal, sign-fixed basis (largest-magnitude coordinate real positive).
  std::vector<CVector> basis;
  /// Singular values of the constraint matrix, descending.
  Eigen::VectorXd singular_values;
  int rank = 0;
  /// sigma[rank-1] / sigma[rank]; +inf when either side of the cut is empty
  /// or the first discarded value is exactly zero.
  double gap_ratio = 0.0;
};

/// Nullspace of `constraints` by SVD. Singular values below tol * sigma_max
/// count as zero. Throws RankAmbiguous when the gap ratio at the cut is
/// below kMinGapRatio, or when tol * sigma_max lies below the rounding floor
/// eps * max(rows, cols) * sigma_max so the cut itself is noise.
Nullspace nullspace(const CMatrix& constraints, double tol = kDefaultRankTol);

/// Rotate v by a unit phase so its largest-magnitude entry is real positive.
void fix_phase(CVector& v);

/// Residual norm of the least-squares solution of system * x = rhs.
struct LeastSquares {
  CVector solution;
  double residual = 0.0;
};
LeastSquares least_squares(const CMatrix& system, const CVector& rhs);

}  // namespace derlab
