#pragma once

// Full Hilbert C(S)-modules. Over a finite point space every such module
// decomposes into one finite-dimensional inner-product space per point; the
// module is full exactly when every fiber is nonzero.
//
// Functionals are stored by their Riesz vector w, acting as f(y) = <y, w>.
// Over finite fibers every bounded A-linear functional has this form, so
// M' is represented without loss.

#include <vector>

#include "derlab/calgebra.hpp"

namespace derlab {

class ModuleSpec {
 public:
  /// Throws ConfigError when `fibers` is empty or some fiber has dimension
  /// < 1 (such a module would not be full: <M,M> would miss that point).
  explicit ModuleSpec(std::vector<int> fibers);

  PointSpace space() const { return PointSpace(k()); }
  int k() const { return static_cast<int>(fibers_.size()); }
  int fiber_dim(int t) const { return fibers_[t]; }
  const std::vector<int>& fibers() const { return fibers_; }

  /// Sum of fiber dimensions (complex dimension of M).
  int module_dim() const;
  /// Sum of squared fiber dimensions (complex dimension of End_A(M)).
  int algebra_dim() const;

  bool operator==(const ModuleSpec&) const = default;

 private:
  std::vector<int> fibers_;
};

class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(std::vector<CVector> fibers) : fibers_(std::move(fibers)) {}

  static ModuleElement zero(const ModuleSpec& spec);
  /// The element with a single 1 at position j of fiber t.
  static ModuleElement basis(const ModuleSpec& spec, int t, int j);

  int num_fibers() const { return static_cast<int>(fibers_.size()); }
  const CVector& fiber(int t) const { return fibers_[t]; }
  CVector& fiber(int t) { return fibers_[t]; }
  const std::vector<CVector>& fibers() const { return fibers_; }

  bool matches(const ModuleSpec& spec) const;

  ModuleElement& operator+=(const ModuleElement& other);
  ModuleElement& operator-=(const ModuleElement& other);
  ModuleElement& operator*=(Complex c);

 private:
  std::vector<CVector> fibers_;
};

ModuleElement operator+(ModuleElement x, const ModuleElement& y);
ModuleElement operator-(ModuleElement x, const ModuleElement& y);
ModuleElement operator*(Complex c, ModuleElement x);

/// Canonical basis of M: fibers ascending, then position within the fiber.
std::vector<ModuleElement> basis_elements(const ModuleSpec& spec);

/// A-valued inner product, linear in the first slot:
/// <x,y>(t) = sum_j x_{t,j} conj(y_{t,j}).
AlgebraElement inner(const ModuleElement& x, const ModuleElement& y);

/// Module action (a x)_t = a(t) x_t.
ModuleElement act(const AlgebraElement& a, const ModuleElement& x);

/// ||x|| = ||<x,x>||^{1/2}, i.e. the largest Euclidean fiber norm.
double module_norm(const ModuleElement& x);

struct Functional {
  ModuleElement riesz;

  AlgebraElement operator()(const ModuleElement& y) const { return inner(y, riesz); }
};

/// x^ : y -> <y, x>.
Functional riesz(const ModuleElement& x);

Functional operator+(const Functional& f, const Functional& g);
Functional operator-(const Functional& f, const Functional& g);
/// (c f)(y) = c f(y); the Riesz vector picks up conj(c).
Functional operator*(Complex c, const Functional& f);
/// (a f)(y) = a f(y); the Riesz vector picks up star(a).
Functional act(const AlgebraElement& a, const Functional& f);

/// A finite family {x_i} with sum_i <x_i, x_i> = e. Element i carries the
/// standard basis vector (i mod n_t) in fiber t, scaled by 1/sqrt(m).
std::vector<ModuleElement> frame(const ModuleSpec& spec, int m);

struct UnitPair {
  ModuleElement x0;
  Functional f0;
};

/// x0 = frame(spec, 1)[0], f0 = x0^, so f0(x0) = e.
UnitPair unit_pair(const ModuleSpec& spec);

}  // namespace derlab
