#pragma once

// Derivation spaces of structure-constant algebras and the inner
// implementer of a derivation of End_A(M).
//
// Derivations of a finite-dimensional algebra are automatically bounded, so
// the continuity half of "A-linear and continuous" is vacuous here; the
// A-linearity half is checked by alinearity_defect.

#include <vector>

#include "derlab/nullspace.hpp"
#include "derlab/opalg.hpp"

namespace derlab {

struct DerivationSpace {
  std::vector<LinearMapOnAlgebra> maps;
  Eigen::VectorXd singular_values;
  double gap_ratio = 0.0;
};

/// Orthonormal basis of {d : d(e_i e_j) = d(e_i) e_j + e_i d(e_j)} over all
/// ordered basis pairs. Throws RankAmbiguous (see nullspace()).
DerivationSpace solve_leibniz(const ConcreteAlgebra& alg, double tol = kDefaultRankTol);
std::vector<LinearMapOnAlgebra> leibniz_nullspace(const ConcreteAlgebra& alg,
                                                  double tol = kDefaultRankTol);

/// Basis of the Jordan derivations (polarized identity on basis pairs).
DerivationSpace solve_jordan(const ConcreteAlgebra& alg, double tol = kDefaultRankTol);
std::vector<LinearMapOnAlgebra> jordan_nullspace(const ConcreteAlgebra& alg,
                                                 double tol = kDefaultRankTol);

/// D_m : x -> m x - x m.
LinearMapOnAlgebra inner_map(const ConcreteAlgebra& alg, const CVector& m);

/// max over basis pairs of |d(e_i e_j) - d(e_i) e_j - e_i d(e_j)|.
double derivation_defect(const ConcreteAlgebra& alg, const LinearMapOnAlgebra& d);

/// d applied to an operator through canonical coordinates.
Operator apply_map(const ModuleSpec& spec, const LinearMapOnAlgebra& d, const Operator& a);

/// T x = sum_i d(theta_{x, x_i^}) x_i, evaluated on the canonical basis of M.
/// For a derivation d this gives d = D_T; T is unique up to a central T_a.
/// Throws NotADerivation when derivation_defect(d) > tol.
Operator extract_implementer(const ModuleSpec& spec, const LinearMapOnAlgebra& d,
                             const std::vector<ModuleElement>& frame, double tol = 1e-9);

/// max over the samples a and basis operators E of |d(T_a E) - T_a d(E)|,
/// together with |d(T_a)|.
double alinearity_defect(const ModuleSpec& spec, const LinearMapOnAlgebra& d,
                         const std::vector<AlgebraElement>& samples);

/// max over the samples a and basis operators E of |d(T_a E) - T_a d(E)| only:
/// plain A-linearity, which does not force d(T_a) = 0.
double module_linearity_defect(const ModuleSpec& spec, const LinearMapOnAlgebra& d,
                               const std::vector<AlgebraElement>& samples);

/// Operator-valued inner derivation D_T in canonical coordinates.
LinearMapOnAlgebra inner_map(const ModuleSpec& spec, const Operator& t);

}  // namespace derlab
