#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace derlab {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class ZeroOperator : public Error {
 public:
  using Error::Error;
};

/// Raised when the numerical rank cannot be decided: either the singular
/// value gap at the cut is below 10x, or the requested threshold sits inside
/// the floating-point noise floor of the constraint matrix.
class RankAmbiguous : public Error {
 public:
  RankAmbiguous(const std::string& what, double gap_ratio)
      : Error(what), gap_ratio_(gap_ratio) {}
  double gap_ratio() const noexcept { return gap_ratio_; }

 private:
  double gap_ratio_;
};

class NotADerivation : public Error {
 public:
  using Error::Error;
};

class NotALinear : public Error {
 public:
  using Error::Error;
};

class UnitPairInvalid : public Error {
 public:
  using Error::Error;
};

class MissingProbe : public Error {
 public:
  using Error::Error;
};

class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace derlab
