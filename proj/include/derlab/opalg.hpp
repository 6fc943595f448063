#pragma once

// End_A(M) as block-diagonal complex matrices (one n_t x n_t block per
// point). In this finite model every A-linear operator is adjointable, so
// End_A(M) and End*_A(M) coincide, and the span of rank-one operators is the
// whole algebra. The trace functional phi therefore serves both the Gamma(M)
// and Gamma*(M) readings: for S = sum theta_{x_i, y_i^} the value
// sum <x_i, y_i> equals sum f_i(x_i) with f_i = y_i^.

#include <vector>

#include "derlab/algebra.hpp"
#include "derlab/hilbmod.hpp"

namespace derlab {

class Operator {
 public:
  Operator() = default;
  explicit Operator(std::vector<CMatrix> blocks);

  static Operator zero(const ModuleSpec& spec);
  static Operator identity(const ModuleSpec& spec);

  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const CMatrix& block(int t) const { return blocks_[t]; }
  CMatrix& block(int t) { return blocks_[t]; }
  const std::vector<CMatrix>& blocks() const { return blocks_; }

  bool matches(const ModuleSpec& spec) const;

  ModuleElement operator()(const ModuleElement& x) const;

  Operator& operator+=(const Operator& other);
  Operator& operator-=(const Operator& other);
  Operator& operator*=(Complex c);

 private:
  std::vector<CMatrix> blocks_;
};

Operator operator+(Operator a, const Operator& b);
Operator operator-(Operator a, const Operator& b);
Operator operator*(Complex c, Operator a);

Operator compose(const Operator& a, const Operator& b);
Operator adjoint(const Operator& a);
Operator commutator(const Operator& a, const Operator& b);

/// Largest blockwise spectral norm.
double op_norm(const Operator& a);
/// op_norm(a - b).
double distance(const Operator& a, const Operator& b);

/// theta_{x,f} y = f(y) x; block t is x_t w_t^H with w the Riesz vector of f.
Operator theta(const ModuleElement& x, const Functional& f);

/// T_a x = a x; block t is a(t) I.
Operator mult_op(const ModuleSpec& spec, const AlgebraElement& a);

/// f o A, whose Riesz vector is A^* w.
Functional compose(const Functional& f, const Operator& a);

/// A formal finite sum of rank-one operators, kept unassembled so that phi
/// and Lambda can be evaluated on a specific representation.
struct RankOneTerm {
  ModuleElement x;
  Functional f;
};
using RankOneSum = std::vector<RankOneTerm>;

Operator assemble(const ModuleSpec& spec, const RankOneSum& s);

/// phi(s) = sum_i f_i(x_i).
AlgebraElement phi(const ModuleSpec& spec, const RankOneSum& s);

/// Pointwise trace of each block; the independent oracle that phi(s) must
/// agree with on assemble(s).
AlgebraElement fiberwise_trace(const Operator& a);

/// Expansion of an operator over rank-one matrix units:
/// A = sum_{t,p,q} theta(A(t)_{pq} e_{t,p}, e_{t,q}^).
RankOneSum canonical_expansion(const ModuleSpec& spec, const Operator& a);

/// Lambda(i, j) = f_j(x_i), an n x n matrix over A.
class LambdaMatrix {
 public:
  LambdaMatrix(int n, PointSpace space);

  int size() const { return n_; }
  PointSpace space() const { return space_; }
  const AlgebraElement& at(int i, int j) const { return entries_[i * n_ + j]; }
  AlgebraElement& at(int i, int j) { return entries_[i * n_ + j]; }

  /// The complex n x n matrix Lambda(t).
  CMatrix at_point(int t) const;
  LambdaMatrix squared() const;
  AlgebraElement trace() const;
  /// Largest entry modulus over all points.
  double max_abs() const;

 private:
  int n_;
  PointSpace space_;
  std::vector<AlgebraElement> entries_;
};

LambdaMatrix lambda_matrix(const ModuleSpec& spec, const RankOneSum& s);

/// Canonical operator basis: matrix units E^{(t)}_{pq}, fibers ascending,
/// then p row-major over q.
std::vector<Operator> basis_operators(const ModuleSpec& spec);
CVector to_coords(const Operator& a);
Operator from_coords(const ModuleSpec& spec, const CVector& coords);

/// End_A(M) in the canonical basis.
ConcreteAlgebra structure_constants(const ModuleSpec& spec);

/// Basis of the commutant of End_A(M) inside itself, from the nullspace of
/// the stacked commutation constraints.
std::vector<Operator> centralizer_basis(const ModuleSpec& spec, double tol = 1e-9);

/// a = sum_i <A x_i, x_i>. Meaningful for central A, where T_a = A.
AlgebraElement center_coefficient(const Operator& a, const std::vector<ModuleElement>& frame);

/// For nonzero A returns B = theta(x, (Ax)^) with x the canonical basis
/// element maximizing |Ax|, so that A B A x = <Ax,Ax> Ax != 0.
/// Throws ZeroOperator when op_norm(A) <= tol.
Operator semiprime_witness(const ModuleSpec& spec, const Operator& a, double tol = 1e-10);

}  // namespace derlab
