#include "derlab/nullspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace derlab {

void fix_phase(CVector& v) {
  if (v.size() == 0) return;
  Eigen::Index best = 0;
  v.cwiseAbs().maxCoeff(&best);
  const double mag = std::abs(v(best));
  if (mag == 0.0) return;
  v *= std::conj(v(best)) / mag;
  v(best) = Complex(v(best).real(), 0.0);
}

Nullspace nullspace(const CMatrix& constraints, double tol) {
  const Eigen::Index cols = constraints.cols();
  Nullspace out;
  if (cols == 0) return out;

  Eigen::BDCSVD<CMatrix> svd(constraints, Eigen::ComputeFullV);
  out.singular_values = svd.singularValues();
  const Eigen::VectorXd& sigma = out.singular_values;
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;

  // Fewer rows than columns: the missing singular values are exact zeros.
  Eigen::VectorXd padded = Eigen::VectorXd::Zero(cols);
  padded.head(sigma.size()) = sigma;

  const double inf = std::numeric_limits<double>::infinity();
  if (sigma_max == 0.0) {
    out.rank = 0;
    out.gap_ratio = inf;
  } else {
    const double floor = std::numeric_limits<double>::epsilon() *
                         static_cast<double>(std::max(constraints.rows(), cols));
    if (tol < floor) {
      std::ostringstream msg;
      msg << "rank threshold " << tol << " is below the rounding floor " << floor
          << " of a " << constraints.rows() << "x" << cols << " constraint system";
      throw RankAmbiguous(msg.str(), 0.0);
    }
    const double cut = tol * sigma_max;
    int rank = 0;
    while (rank < cols && padded(rank) >= cut) ++rank;
    out.rank = rank;
    if (rank == cols || padded(rank) == 0.0) {
      out.gap_ratio = inf;
    } else {
      out.gap_ratio = padded(rank - 1) / padded(rank);
    }
    if (out.gap_ratio < kMinGapRatio) {
      std::ostringstream msg;
      msg << "singular value gap " << out.gap_ratio << " at rank " << rank
          << " is below " << kMinGapRatio;
      throw RankAmbiguous(msg.str(), out.gap_ratio);
    }
  }

  const CMatrix& v = svd.matrixV();
  for (Eigen::Index c = out.rank; c < cols; ++c) {
    CVector b = v.col(c);
    fix_phase(b);
    out.basis.push_back(std::move(b));
  }
  return out;
}

LeastSquares least_squares(const CMatrix& system, const CVector& rhs) {
  LeastSquares out;
  Eigen::CompleteOrthogonalDecomposition<CMatrix> cod(system);
  out.solution = cod.solve(rhs);
  out.residual = (system * out.solution - rhs).norm();
  return out;
}

}  // namespace derlab
