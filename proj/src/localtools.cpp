#include "derlab/localtools.hpp"

#include <algorithm>
#include <cmath>

#include "format.hpp"

namespace derlab {

namespace {

constexpr double kUnitPairTol = 1e-10;
constexpr double kZeroOperatorTol = 1e-10;

void require_unit_pair(const ModuleElement& x0, const Functional& f0) {
  const AlgebraElement v = f0(x0);
  if (distance(v, unit(v.space())) > kUnitPairTol) {
    throw UnitPairInvalid("f0(x0) differs from the unit");
  }
}

// Canonical basis element of M maximizing |A x|.
std::pair<ModuleElement, ModuleElement> strongest_probe(const ModuleSpec& spec, const Operator& a) {
  ModuleElement best;
  ModuleElement best_image;
  double best_norm = -1.0;
  for (auto& x : basis_elements(spec)) {
    ModuleElement ax = a(x);
    if (const double n = module_norm(ax); n > best_norm) {
      best_norm = n;
      best = std::move(x);
      best_image = std::move(ax);
    }
  }
  return {std::move(best), std::move(best_image)};
}

// Unit complex vector, resampled in the measure-zero event of a zero draw.
CVector random_unit(Rng& rng, int n) {
  CVector v = rng.complex_vector(n);
  while (v.norm() < 1e-3) v = rng.complex_vector(n);
  return v / v.norm();
}

}  // namespace

IdealBasis ideal_basis(const ModuleSpec& spec, Side side, const ModuleElement& x0,
                       const Functional& f0) {
  require_unit_pair(x0, f0);
  IdealBasis out{side, {}};
  for (const auto& e : basis_elements(spec)) {
    out.elements.push_back(side == Side::Left ? theta(e, f0) : theta(x0, riesz(e)));
  }
  return out;
}

double distance_to_span(const IdealBasis& ideal, const Operator& a) {
  const CVector target = to_coords(a);
  if (ideal.elements.empty()) return target.norm();
  CMatrix span(target.size(), static_cast<Eigen::Index>(ideal.elements.size()));
  for (std::size_t i = 0; i < ideal.elements.size(); ++i) span.col(i) = to_coords(ideal.elements[i]);
  return least_squares(span, target).residual;
}

Operator IdempotentDecomposition::reconstruct(const ModuleSpec& spec) const {
  const Complex inv_lambda = 1.0 / lambda;
  return inv_lambda * p1 - inv_lambda * compose(mult_op(spec, invert(a)), p2);
}

IdempotentDecomposition idempotent_decomposition(const ModuleSpec& spec, const ModuleElement& x,
                                                 const ModuleElement& x0, const Functional& f0) {
  require_unit_pair(x0, f0);
  const AlgebraElement fx = f0(x);
  const Complex lambda = 1.0 / (1.0 + sup_norm(fx));
  const AlgebraElement e = unit(spec.space());
  const AlgebraElement a = invert(e - lambda * fx);
  return {lambda, a, theta(x0, f0), theta(act(a, x0 - lambda * x), f0)};
}

IdempotentDecomposition idempotent_decomposition(const ModuleSpec& spec, const Functional& f,
                                                 const ModuleElement& x0, const Functional& f0) {
  require_unit_pair(x0, f0);
  const AlgebraElement fx0 = f(x0);
  const Complex lambda = 1.0 / (1.0 + sup_norm(fx0));
  const AlgebraElement e = unit(spec.space());
  const AlgebraElement a = invert(e - lambda * fx0);
  return {lambda, a, theta(x0, f0), theta(x0, act(a, f0 - lambda * f))};
}

std::optional<SeparatingWitness> separating_witness(const ModuleSpec& spec, Side side,
                                                    const Operator& a, const ModuleElement& x0,
                                                    const Functional& f0) {
  if (op_norm(a) <= kZeroOperatorTol) return std::nullopt;
  auto [x, ax] = strongest_probe(spec, a);
  if (side == Side::Left) {
    // A theta_{x,f0} x0 = f0(x0) A x = A x.
    const double n = op_norm(compose(a, theta(x, f0)));
    return SeparatingWitness{std::move(x), n};
  }
  // theta_{x0,(Ax)^} A x = <Ax, Ax> x0.
  const double n = op_norm(compose(theta(x0, riesz(ax)), a));
  return SeparatingWitness{std::move(ax), n};
}

double zero_product_chain_defect(const ModuleSpec& spec, const BilinearMap& phi, const Operator& a,
                      const Operator& b, const Operator& l, const Operator& r) {
  const Operator id = Operator::identity(spec);
  const Operator al = compose(a, l);
  const Operator ar = compose(a, r);
  const Operator left_chain = phi(a, compose(l, b));
  const Operator left_mid = phi(al, b);
  const Operator left_end = phi(id, compose(al, b));
  const Operator right_chain = phi(ar, b);
  const Operator right_mid = phi(a, compose(r, b));
  const Operator right_end = phi(compose(ar, b), id);
  return std::max({distance(left_chain, left_mid), distance(left_mid, left_end),
                   distance(right_chain, right_mid), distance(right_mid, right_end)});
}

BilinearMap phi1(const ModuleSpec& spec, const LinearMapOnAlgebra& delta, Operator a0, Operator b0) {
  return [spec, delta, a0 = std::move(a0), b0 = std::move(b0)](const Operator& x, const Operator& y) {
    return compose(compose(x, apply_map(spec, delta, compose(y, a0))), b0);
  };
}

BilinearMap phi2(const ModuleSpec& spec, const LinearMapOnAlgebra& delta, Operator a) {
  return [spec, delta, a = std::move(a)](const Operator& x, const Operator& y) {
    return compose(apply_map(spec, delta, compose(a, x)), y) -
           compose(compose(a, apply_map(spec, delta, x)), y);
  };
}

double generalized_derivation_defect(const ConcreteAlgebra& alg, const LinearMapOnAlgebra& delta) {
  if (delta.dim() != alg.dim()) throw DimensionMismatch("generalized_derivation_defect: dimension mismatch");
  const int n = alg.dim();
  const CMatrix& dm = delta.matrix();
  const CVector du = delta(alg.unit_coords());
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const CMatrix& left_i = alg.left_basis(i);
    const CVector ei_du = left_i * du;
    for (int j = 0; j < n; ++j) {
      const CMatrix right_j = alg.right_mult(alg.basis(j));
      const CVector v = dm * left_i.col(j) - left_i * dm.col(j) - right_j * dm.col(i) + right_j * ei_du;
      worst = std::max(worst, v.norm());
    }
  }
  return worst;
}

ZeroTripleSample zero_triple_sampler(const ModuleSpec& spec, int count, std::uint64_t seed) {
  ZeroTripleSample out;
  out.degenerate = std::all_of(spec.fibers().begin(), spec.fibers().end(), [](int n) { return n == 1; });
  Rng rng = Rng::stream(seed, "zero-triples");
  for (int s = 0; s < count; ++s) {
    ZeroTriple z{Operator::zero(spec), Operator::zero(spec), Operator::zero(spec)};
    for (int t = 0; t < spec.k(); ++t) {
      const int n = spec.fiber_dim(t);
      if (n == 1) {
        z.a.block(t) = rng.complex_matrix(1, 1);
        z.c.block(t) = rng.complex_matrix(1, 1);
        continue;
      }
      const CVector u = random_unit(rng, n);
      const CVector w = random_unit(rng, n);
      const Complex beta = rng.complex();
      const CMatrix id = CMatrix::Identity(n, n);
      z.b.block(t) = beta * u * w.adjoint();
      z.a.block(t) = rng.complex_matrix(n, n) * (id - u * u.adjoint());
      z.c.block(t) = (id - w * w.adjoint()) * rng.complex_matrix(n, n);
    }
    out.triples.push_back(std::move(z));
  }
  return out;
}

double zero_triple_hypothesis_check(const ModuleSpec& spec, const LinearMapOnAlgebra& delta,
                                 const std::vector<ZeroTriple>& triples) {
  double worst = 0.0;
  for (const auto& z : triples) {
    worst = std::max(worst, op_norm(compose(compose(z.a, apply_map(spec, delta, z.b)), z.c)));
  }
  return worst;
}

LabelledSample local_sample(const ModuleSpec& spec, int random_count, std::uint64_t seed) {
  LabelledSample out;
  const int d = spec.algebra_dim();
  for (int i = 0; i < d; ++i) {
    CVector e = CVector::Zero(d);
    e(i) = 1.0;
    out.elements.push_back(std::move(e));
    out.labels.push_back(std::to_string(i));
  }
  out.elements.push_back(to_coords(Operator::identity(spec)));
  out.labels.push_back("unit");
  Rng rng = Rng::stream(seed, "local-sample");
  for (int i = 0; i < random_count; ++i) {
    out.elements.push_back(rng.complex_vector(d));
    out.labels.push_back("random:" + std::to_string(seed) + ":" + std::to_string(i));
  }
  return out;
}

LocalReport local_derivation_certify(const ModuleSpec& spec, const LinearMapOnAlgebra& delta,
                                     const LabelledSample& sample, double tol,
                                     std::uint64_t alinearity_seed) {
  const ConcreteAlgebra alg = structure_constants(spec);
  if (delta.dim() != alg.dim()) throw DimensionMismatch("local_derivation_certify: dimension mismatch");

  LocalReport report;
  Rng rng = Rng::stream(alinearity_seed, "alinearity");
  std::vector<AlgebraElement> as;
  for (int i = 0; i < 5; ++i) as.push_back(random_algebra_element(rng, spec.space()));
  report.alinearity_defect = module_linearity_defect(spec, delta, as);
  if (report.alinearity_defect > tol) {
    throw NotALinear("local_derivation_certify: A-linearity defect " +
                     detail::sci(report.alinearity_defect) + " exceeds " + detail::sci(tol));
  }

  const int count = static_cast<int>(sample.elements.size());
  std::vector<double> residuals(count, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    const CVector& e = sample.elements[i];
    // Coordinates of T E - E T as a function of T.
    const CMatrix system = alg.right_mult(e) - alg.left_mult(e);
    residuals[i] = least_squares(system, delta(e)).residual;
  }
  for (int i = 0; i < count; ++i) {
    report.residuals.push_back({sample.labels[i], residuals[i]});
    report.max_residual = std::max(report.max_residual, residuals[i]);
  }
  report.certified_local = report.max_residual <= tol;
  report.derivation_defect = derivation_defect(alg, delta);
  report.is_derivation = report.derivation_defect <= tol;
  return report;
}

LinearMapOnAlgebra blockwise_transpose(const ModuleSpec& spec) {
  const int d = spec.algebra_dim();
  CMatrix m = CMatrix::Zero(d, d);
  const auto basis = basis_operators(spec);
  for (int i = 0; i < d; ++i) {
    Operator e = basis[i];
    for (int t = 0; t < e.num_blocks(); ++t) e.block(t).transposeInPlace();
    m.col(i) = to_coords(e);
  }
  return LinearMapOnAlgebra(std::move(m));
}

LinearMapOnAlgebra left_multiplication(const ModuleSpec& spec, const Operator& m) {
  return LinearMapOnAlgebra(structure_constants(spec).left_mult(to_coords(m)));
}

}  // namespace derlab
