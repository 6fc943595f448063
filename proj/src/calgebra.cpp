#include "derlab/calgebra.hpp"

#include <string>

#include "format.hpp"

namespace derlab {

namespace {

void require_same_space(const AlgebraElement& a, const AlgebraElement& b, const char* op) {
  if (a.size() != b.size()) {
    throw DimensionMismatch(std::string(op) + ": algebra elements live on " +
                            std::to_string(a.size()) + " and " + std::to_string(b.size()) +
                            " points");
  }
}

}  // namespace

PointSpace::PointSpace(int points) : k(points) {
  if (points < 1) throw ConfigError("point space needs at least one point");
}

AlgebraElement AlgebraElement::zero(PointSpace space) {
  return AlgebraElement(CVector::Zero(space.k));
}

AlgebraElement AlgebraElement::constant(PointSpace space, Complex c) {
  return AlgebraElement(CVector::Constant(space.k, c));
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_space(*this, other, "add");
  values_ += other.values_;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_space(*this, other, "subtract");
  values_ -= other.values_;
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex c) {
  values_ *= c;
  return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
AlgebraElement operator*(Complex c, AlgebraElement a) { return a *= c; }

AlgebraElement unit(PointSpace space) { return AlgebraElement::constant(space, 1.0); }

AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_space(a, b, "product");
  return AlgebraElement(a.values().cwiseProduct(b.values()));
}

AlgebraElement star(const AlgebraElement& a) { return AlgebraElement(a.values().conjugate()); }

AlgebraElement invert(const AlgebraElement& a, double tol) {
  CVector out(a.size());
  for (int t = 0; t < a.size(); ++t) {
    if (std::abs(a[t]) <= tol) {
      throw NotInvertible("element vanishes (|a(t)| <= " + detail::sci(tol) +
                          ") at point " + std::to_string(t));
    }
    out(t) = 1.0 / a[t];
  }
  return AlgebraElement(std::move(out));
}

bool is_positive(const AlgebraElement& a, double tol) {
  for (int t = 0; t < a.size(); ++t) {
    if (std::abs(a[t].imag()) > tol || a[t].real() < -tol) return false;
  }
  return true;
}

double sup_norm(const AlgebraElement& a) {
  return a.size() == 0 ? 0.0 : a.values().cwiseAbs().maxCoeff();
}

double distance(const AlgebraElement& a, const AlgebraElement& b) { return sup_norm(a - b); }

}  // namespace derlab
