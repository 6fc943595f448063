#include "derlab/algebra.hpp"

#include <algorithm>
#include <string>

#include "format.hpp"

namespace derlab {

ConcreteAlgebra::ConcreteAlgebra(int dim, std::vector<Complex> constants, CVector unit_coords)
    : dim_(dim), structure_(std::move(constants)), unit_(std::move(unit_coords)) {
  if (dim_ < 1) throw ConfigError("algebra dimension must be positive");
  const auto d = static_cast<std::size_t>(dim_);
  if (structure_.size() != d * d * d) {
    throw DimensionMismatch("structure tensor has " + std::to_string(structure_.size()) +
                            " entries, expected " + std::to_string(d * d * d));
  }
  if (unit_.size() != dim_) throw DimensionMismatch("unit coordinates have the wrong length");

  left_.assign(dim_, CMatrix::Zero(dim_, dim_));
  right_.assign(dim_, CMatrix::Zero(dim_, dim_));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int m = 0; m < dim_; ++m) {
        const Complex c = structure(i, j, m);
        if (c == Complex(0.0)) continue;
        left_[i](m, j) = c;
        right_[j](m, i) = c;
      }
    }
  }
}

CVector ConcreteAlgebra::basis(int i) const {
  CVector e = CVector::Zero(dim_);
  e(i) = 1.0;
  return e;
}

CMatrix ConcreteAlgebra::left_mult(const CVector& x) const {
  CMatrix out = CMatrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i) != Complex(0.0)) out += x(i) * left_[i];
  }
  return out;
}

CMatrix ConcreteAlgebra::right_mult(const CVector& x) const {
  CMatrix out = CMatrix::Zero(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    if (x(j) != Complex(0.0)) out += x(j) * right_[j];
  }
  return out;
}

CVector ConcreteAlgebra::multiply(const CVector& x, const CVector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("multiply: wrong coordinate length");
  return left_mult(x) * y;
}

double ConcreteAlgebra::associativity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      const CVector ij = left_[i].col(j);
      for (int l = 0; l < dim_; ++l) {
        const CVector lhs = right_[l] * ij;
        const CVector rhs = left_[i] * left_[j].col(l);
        worst = std::max(worst, (lhs - rhs).norm());
      }
    }
  }
  return worst;
}

double ConcreteAlgebra::unit_defect() const {
  const CMatrix left_unit = left_mult(unit_);
  const CMatrix right_unit = right_mult(unit_);
  const CMatrix id = CMatrix::Identity(dim_, dim_);
  return std::max((left_unit - id).cwiseAbs().maxCoeff(), (right_unit - id).cwiseAbs().maxCoeff());
}

void ConcreteAlgebra::validate(double tol) const {
  if (const double a = associativity_defect(); a > tol) {
    throw ConfigError("structure constants are not associative (defect " + detail::sci(a) + ")");
  }
  if (const double u = unit_defect(); u > tol) {
    throw ConfigError("unit coordinates do not act as a two-sided unit (defect " +
                      detail::sci(u) + ")");
  }
}

LinearMapOnAlgebra::LinearMapOnAlgebra(CMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw DimensionMismatch("linear map must be square");
}

ConcreteAlgebra upper_triangular_2x2() {
  // 0 = E11, 1 = E12, 2 = E22.
  std::vector<Complex> c(27, 0.0);
  auto set = [&](int i, int j, int m) { c[(i * 3 + j) * 3 + m] = 1.0; };
  set(0, 0, 0);  // E11 E11 = E11
  set(0, 1, 1);  // E11 E12 = E12
  set(1, 2, 1);  // E12 E22 = E12
  set(2, 2, 2);  // E22 E22 = E22
  CVector unit(3);
  unit << 1.0, 0.0, 1.0;
  return ConcreteAlgebra(3, std::move(c), std::move(unit));
}

}  // namespace derlab
