#include "derlab/dersolve.hpp"

#include <algorithm>

#include "derlab/kernels.hpp"
#include "format.hpp"

namespace derlab {

namespace {

std::vector<LinearMapOnAlgebra> reshape(const std::vector<CVector>& basis, int dim) {
  std::vector<LinearMapOnAlgebra> out;
  out.reserve(basis.size());
  for (const auto& v : basis) {
    // Unknowns are column-major: d(r, c) at c * dim + r.
    out.emplace_back(Eigen::Map<const CMatrix>(v.data(), dim, dim));
  }
  return out;
}

DerivationSpace solve(const CMatrix& constraints, int dim, double tol) {
  Nullspace ns = nullspace(constraints, tol);
  return {reshape(ns.basis, dim), std::move(ns.singular_values), ns.gap_ratio};
}

}  // namespace

DerivationSpace solve_leibniz(const ConcreteAlgebra& alg, double tol) {
  return solve(kernels::leibniz_constraints(alg), alg.dim(), tol);
}

std::vector<LinearMapOnAlgebra> leibniz_nullspace(const ConcreteAlgebra& alg, double tol) {
  return solve_leibniz(alg, tol).maps;
}

DerivationSpace solve_jordan(const ConcreteAlgebra& alg, double tol) {
  return solve(kernels::jordan_constraints(alg), alg.dim(), tol);
}

std::vector<LinearMapOnAlgebra> jordan_nullspace(const ConcreteAlgebra& alg, double tol) {
  return solve_jordan(alg, tol).maps;
}

LinearMapOnAlgebra inner_map(const ConcreteAlgebra& alg, const CVector& m) {
  if (m.size() != alg.dim()) throw DimensionMismatch("inner_map: wrong coordinate length");
  return LinearMapOnAlgebra(alg.left_mult(m) - alg.right_mult(m));
}

LinearMapOnAlgebra inner_map(const ModuleSpec& spec, const Operator& t) {
  return inner_map(structure_constants(spec), to_coords(t));
}

double derivation_defect(const ConcreteAlgebra& alg, const LinearMapOnAlgebra& d) {
  if (d.dim() != alg.dim()) throw DimensionMismatch("derivation_defect: map and algebra differ in dimension");
  const int n = alg.dim();
  const CMatrix& dm = d.matrix();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const CMatrix& left_i = alg.left_basis(i);
    for (int j = 0; j < n; ++j) {
      const CVector lhs = dm * left_i.col(j);
      const CVector rhs = alg.right_mult(alg.basis(j)) * dm.col(i) + left_i * dm.col(j);
      worst = std::max(worst, (lhs - rhs).norm());
    }
  }
  return worst;
}

Operator apply_map(const ModuleSpec& spec, const LinearMapOnAlgebra& d, const Operator& a) {
  if (d.dim() != spec.algebra_dim()) throw DimensionMismatch("apply_map: map does not act on End_A(M)");
  return from_coords(spec, d(to_coords(a)));
}

Operator extract_implementer(const ModuleSpec& spec, const LinearMapOnAlgebra& d,
                             const std::vector<ModuleElement>& frame, double tol) {
  const ConcreteAlgebra alg = structure_constants(spec);
  if (const double defect = derivation_defect(alg, d); defect > tol) {
    throw NotADerivation("extract_implementer: derivation defect " + detail::sci(defect) +
                         " exceeds " + detail::sci(tol));
  }
  Operator t = Operator::zero(spec);
  for (int s = 0; s < spec.k(); ++s) {
    for (int j = 0; j < spec.fiber_dim(s); ++j) {
      const ModuleElement x = ModuleElement::basis(spec, s, j);
      ModuleElement tx = ModuleElement::zero(spec);
      for (const auto& xi : frame) tx += apply_map(spec, d, theta(x, riesz(xi)))(xi);
      // A-linear T keeps fiber s in fiber s; other fibers of tx vanish.
      t.block(s).col(j) = tx.fiber(s);
    }
  }
  return t;
}

namespace {

double linearity_defect(const ModuleSpec& spec, const LinearMapOnAlgebra& d,
                        const std::vector<AlgebraElement>& samples, bool include_units) {
  const auto basis = basis_operators(spec);
  double worst = 0.0;
  for (const auto& a : samples) {
    const Operator ta = mult_op(spec, a);
    if (include_units) worst = std::max(worst, op_norm(apply_map(spec, d, ta)));
    for (const auto& e : basis) {
      const Operator lhs = apply_map(spec, d, compose(ta, e));
      const Operator rhs = compose(ta, apply_map(spec, d, e));
      worst = std::max(worst, distance(lhs, rhs));
    }
  }
  return worst;
}

}  // namespace

double alinearity_defect(const ModuleSpec& spec, const LinearMapOnAlgebra& d,
                         const std::vector<AlgebraElement>& samples) {
  return linearity_defect(spec, d, samples, true);
}

double module_linearity_defect(const ModuleSpec& spec, const LinearMapOnAlgebra& d,
                               const std::vector<AlgebraElement>& samples) {
  return linearity_defect(spec, d, samples, false);
}

}  // namespace derlab
