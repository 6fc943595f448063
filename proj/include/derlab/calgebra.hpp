#pragma once

// The commutative unital C*-algebra C(S) over a finite point space S.
// Elements are complex functions on S stored as length-k vectors; every
// operation is pointwise.

#include "derlab/types.hpp"

namespace derlab {

inline constexpr double kDefaultInvertTol = 1e-9;

struct PointSpace {
  explicit PointSpace(int points);
  int k;
  bool operator==(const PointSpace&) const = default;
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(CVector values) : values_(std::move(values)) {}

  static AlgebraElement zero(PointSpace space);
  static AlgebraElement constant(PointSpace space, Complex c);

  int size() const { return static_cast<int>(values_.size()); }
  PointSpace space() const { return PointSpace(size()); }
  const CVector& values() const { return values_; }
  Complex operator[](int t) const { return values_(t); }

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(Complex c);

 private:
  CVector values_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(Complex c, AlgebraElement a);

AlgebraElement unit(PointSpace space);
AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement star(const AlgebraElement& a);

/// Pointwise reciprocal. Throws NotInvertible if some |a(t)| <= tol.
AlgebraElement invert(const AlgebraElement& a, double tol = kDefaultInvertTol);

/// True iff every entry is (numerically) a nonnegative real.
bool is_positive(const AlgebraElement& a, double tol);

double sup_norm(const AlgebraElement& a);

/// sup_norm(a - b); throws DimensionMismatch on differing spaces.
double distance(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace derlab
