#pragma once

// Tools around a unit pair (x0, f0) with f0(x0) = e: the left ideal
// L = span{theta_{x,f0}}, the right ideal R = span{theta_{x0,f}},
// idempotent decompositions, separating witnesses, zero-product identities
// for A-bilinear maps, generalized derivations and local derivations.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "derlab/dersolve.hpp"
#include "derlab/sampling.hpp"

namespace derlab {

enum class Side { Left, Right };

struct IdealBasis {
  Side side;
  std::vector<Operator> elements;
};

/// Left: theta(e, f0) for canonical basis elements e. Right: theta(x0, e^).
/// Throws UnitPairInvalid unless f0(x0) = e within 1e-10.
IdealBasis ideal_basis(const ModuleSpec& spec, Side side, const ModuleElement& x0,
                       const Functional& f0);

/// Distance from `a` to the span of the ideal basis (least squares in
/// coordinates).
double distance_to_span(const IdealBasis& ideal, const Operator& a);

/// theta_{x,f0} = lambda^{-1} P1 - lambda^{-1} a^{-1} P2 with idempotents
/// P1 = theta_{x0,f0}, P2 = theta_{a(x0 - lambda x), f0}, a = (e - lambda f0(x))^{-1},
/// lambda = 1 / (1 + sup_norm(f0(x))) so |lambda f0(x)(t)| < 1 everywhere.
/// For the right-side version the roles are theta_{x0,f} with
/// P2 = theta_{x0, a(f0 - lambda f)} and a = (e - lambda f(x0))^{-1}.
struct IdempotentDecomposition {
  Complex lambda;
  AlgebraElement a;
  Operator p1;
  Operator p2;

  /// lambda^{-1} P1 - lambda^{-1} T_{a^{-1}} P2.
  Operator reconstruct(const ModuleSpec& spec) const;
};

IdempotentDecomposition idempotent_decomposition(const ModuleSpec& spec, const ModuleElement& x,
                                                 const ModuleElement& x0, const Functional& f0);
IdempotentDecomposition idempotent_decomposition(const ModuleSpec& spec, const Functional& f,
                                                 const ModuleElement& x0, const Functional& f0);

/// Evidence that A does not annihilate the ideal. Left: A theta_{probe,f0} != 0.
/// Right: theta_{x0, probe^} A != 0. `norm` is the norm of that product.
struct SeparatingWitness {
  ModuleElement probe;
  double norm;
};

/// Returns nullopt when op_norm(A) <= 1e-10.
std::optional<SeparatingWitness> separating_witness(const ModuleSpec& spec, Side side,
                                                    const Operator& a, const ModuleElement& x0,
                                                    const Functional& f0);

using BilinearMap = std::function<Operator(const Operator&, const Operator&)>;

/// Largest violation of phi(A,LB) = phi(AL,B) = phi(I,ALB) and
/// phi(AR,B) = phi(A,RB) = phi(ARB,I). phi must be A-bilinear and zero-product
/// preserving for the identities to hold; the caller vouches for that.
double zero_product_chain_defect(const ModuleSpec& spec, const BilinearMap& phi, const Operator& a,
                      const Operator& b, const Operator& l, const Operator& r);

/// phi1(X,Y) = X delta(Y A0) B0 for A0 B0 = 0.
BilinearMap phi1(const ModuleSpec& spec, const LinearMapOnAlgebra& delta, Operator a0, Operator b0);
/// phi2(X,Y) = delta(A X) Y - A delta(X) Y for a fixed A.
BilinearMap phi2(const ModuleSpec& spec, const LinearMapOnAlgebra& delta, Operator a);

/// max over basis pairs of |delta(e_i e_j) - e_i delta(e_j) - delta(e_i) e_j + e_i delta(u) e_j|.
double generalized_derivation_defect(const ConcreteAlgebra& alg, const LinearMapOnAlgebra& delta);

struct ZeroTriple {
  Operator a;
  Operator b;
  Operator c;
};

struct ZeroTripleSample {
  std::vector<ZeroTriple> triples;
  /// Set when every fiber has dimension 1; then every B is zero.
  bool degenerate = false;
};

/// Triples with AB = BC = 0 by construction: on each fiber with n_t >= 2,
/// B_t = beta u w^H, A_t = R_a (I - u u^H), C_t = (I - w w^H) R_c for random
/// unit u, w and random R_a, R_c; one-dimensional fibers get B_t = 0.
ZeroTripleSample zero_triple_sampler(const ModuleSpec& spec, int count, std::uint64_t seed);

/// max over triples of |A delta(B) C|; 0 for an empty list.
double zero_triple_hypothesis_check(const ModuleSpec& spec, const LinearMapOnAlgebra& delta,
                                 const std::vector<ZeroTriple>& triples);

struct ElementResidual {
  std::string element;  // basis index, or "random:<seed>:<i>"
  double residual;
};

struct LocalReport {
  std::vector<ElementResidual> residuals;
  double max_residual = 0.0;
  double derivation_defect = 0.0;
  /// module_linearity_defect over seeded a (the A-linearity precondition).
  double alinearity_defect = 0.0;
  bool certified_local = false;
  bool is_derivation = false;
};

/// Canonical basis of End_A(M), then the unit, then `random_count` seeded
/// elements, labelled for reports. Every derivation vanishes at the unit, so
/// that probe exposes delta(I) != 0.
struct LabelledSample {
  std::vector<CVector> elements;
  std::vector<std::string> labels;
};
LabelledSample local_sample(const ModuleSpec& spec, int random_count, std::uint64_t seed);

/// For each sample element E solves min_T |T E - E T - delta(E)| by least
/// squares (derivations of End_A(M) are inner, so this is exactly
/// implementability by some derivation at E), then reports
/// derivation_defect(delta). Sample-based: sound for rejection only.
/// Throws NotALinear when delta(T_a E) = T_a delta(E) fails beyond tol.
LocalReport local_derivation_certify(const ModuleSpec& spec, const LinearMapOnAlgebra& delta,
                                     const LabelledSample& sample, double tol,
                                     std::uint64_t alinearity_seed = 0);

/// Elementwise blockwise transpose, a linear anti-automorphism (never a
/// derivation unless every fiber is 1-dimensional).
LinearMapOnAlgebra blockwise_transpose(const ModuleSpec& spec);

/// X -> M X as a map on coordinates.
LinearMapOnAlgebra left_multiplication(const ModuleSpec& spec, const Operator& m);

}  // namespace derlab
