#include "derlab/twolocal.hpp"

#include <algorithm>
#include <cmath>

#include "derlab/sampling.hpp"

namespace derlab {

void PointMap::set(const CVector& at, const CVector& value) {
  if (at.size() != dim_ || value.size() != dim_) throw DimensionMismatch("PointMap: wrong coordinate length");
  if (auto i = find(at)) {
    entries_[*i].value = value;
  } else {
    entries_.push_back({at, value});
  }
}

std::optional<std::size_t> PointMap::find(const CVector& at) const {
  const double scale = std::max(1.0, at.norm());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if ((entries_[i].at - at).norm() <= 1e-12 * scale) return i;
  }
  return std::nullopt;
}

const CVector* PointMap::lookup(const CVector& at) const {
  auto i = find(at);
  return i ? &entries_[*i].value : nullptr;
}

PointMap tabulate(int dim, const std::vector<CVector>& points,
                  const std::function<CVector(const CVector&)>& f) {
  PointMap out(dim);
  for (const auto& p : points) {
    if (!out.find(p)) out.set(p, f(p));
  }
  return out;
}

DerivationCandidates inner_candidates(const ConcreteAlgebra& alg) {
  DerivationCandidates out;
  for (int i = 0; i < alg.dim(); ++i) out.maps.push_back(inner_map(alg, alg.basis(i)));
  return out;
}

DerivationCandidates explicit_candidates(std::vector<LinearMapOnAlgebra> basis) {
  return DerivationCandidates{std::move(basis)};
}

PairwiseResult pairwise_implementer(const DerivationCandidates& candidates, const CVector& a,
                                    const CVector& delta_a, const CVector& b,
                                    const CVector& delta_b, double tol) {
  const Eigen::Index n = a.size();
  if (b.size() != n || delta_a.size() != n || delta_b.size() != n) {
    throw DimensionMismatch("pairwise_implementer: coordinate lengths differ");
  }
  PairwiseResult out;
  CVector rhs(2 * n);
  rhs << delta_a, delta_b;
  if (candidates.maps.empty()) {
    out.implementer = CVector();
    out.residual = rhs.norm();
    out.feasible = out.residual <= tol;
    return out;
  }
  CMatrix system(2 * n, static_cast<Eigen::Index>(candidates.maps.size()));
  for (std::size_t k = 0; k < candidates.maps.size(); ++k) {
    system.col(k) << candidates.maps[k](a), candidates.maps[k](b);
  }
  LeastSquares ls = least_squares(system, rhs);
  out.implementer = std::move(ls.solution);
  out.residual = ls.residual;
  out.feasible = out.residual <= tol;
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

namespace {

TwoLocalReport finish(std::vector<PairResidual> pairs) {
  TwoLocalReport r;
  r.vacuous = pairs.empty();
  for (const auto& p : pairs) {
    r.max_residual = std::max(r.max_residual, p.residual);
    r.consistent = r.consistent && p.feasible;
  }
  r.pairs = std::move(pairs);
  return r;
}

PairResidual check_pair(const DerivationCandidates& candidates, const PointMap& delta,
                        std::size_t i, std::size_t j, double tol) {
  const auto& e = delta.entries();
  if (i >= e.size() || j >= e.size()) throw DimensionMismatch("certify_2local: pair index outside the table");
  const PairwiseResult r = pairwise_implementer(candidates, e[i].at, e[i].value, e[j].at, e[j].value, tol);
  return {i, j, r.residual, r.feasible};
}

}  // namespace

TwoLocalReport certify_2local(const DerivationCandidates& candidates, const PointMap& delta,
                              const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                              double tol) {
  const int n = static_cast<int>(pairs.size());
  std::vector<PairResidual> results(n);
  for (const auto& [i, j] : pairs) {
    if (i >= delta.size() || j >= delta.size()) {
      throw DimensionMismatch("certify_2local: pair index outside the table");
    }
  }
#pragma omp parallel for schedule(dynamic)
  for (int p = 0; p < n; ++p) {
    results[p] = check_pair(candidates, delta, pairs[p].first, pairs[p].second, tol);
  }
  return finish(std::move(results));
}

TwoLocalReport certify_2local_serial(const DerivationCandidates& candidates, const PointMap& delta,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                     double tol) {
  std::vector<PairResidual> results;
  results.reserve(pairs.size());
  for (const auto& [i, j] : pairs) results.push_back(check_pair(candidates, delta, i, j, tol));
  return finish(std::move(results));
}

std::vector<CVector> probe_points(const ConcreteAlgebra& alg, const std::vector<Probe>& probes) {
  std::vector<CVector> out;
  for (const auto& p : probes) {
    out.push_back(p.a);
    out.push_back(p.b);
    out.push_back(p.a + p.b);
    out.push_back(p.lambda * p.a);
    out.push_back(alg.multiply(p.a, p.a));
  }
  return out;
}

double ConsequenceReport::max() const { return std::max({additivity, homogeneity, jordan}); }

ConsequenceReport consequence_check(const ConcreteAlgebra& alg, const PointMap& delta,
                                    const std::vector<Probe>& probes) {
  auto need = [&](const CVector& at, const char* what) -> const CVector& {
    const CVector* v = delta.lookup(at);
    if (!v) throw MissingProbe(std::string("consequence_check: table lacks the point ") + what);
    return *v;
  };
  ConsequenceReport r;
  for (const auto& p : probes) {
    const CVector& da = need(p.a, "A");
    const CVector& db = need(p.b, "B");
    const CVector& dsum = need(p.a + p.b, "A+B");
    const CVector& dscaled = need(p.lambda * p.a, "lambda A");
    const CVector& dsq = need(alg.multiply(p.a, p.a), "A^2");
    r.additivity = std::max(r.additivity, (dsum - da - db).norm());
    r.homogeneity = std::max(r.homogeneity, (dscaled - p.lambda * da).norm());
    r.jordan = std::max(r.jordan, (dsq - alg.multiply(p.a, da) - alg.multiply(da, p.a)).norm());
  }
  return r;
}

std::vector<Probe> random_probes(int dim, int count, std::uint64_t seed) {
  Rng rng = Rng::stream(seed, "probes");
  std::vector<Probe> out;
  for (int i = 0; i < count; ++i) {
    CVector a = rng.complex_vector(dim);
    CVector b = rng.complex_vector(dim);
    const Complex lambda = rng.complex();
    out.push_back({std::move(a), std::move(b), lambda});
  }
  return out;
}

NegativeControl t2_negative_control(double tol, std::uint64_t seed, int budget) {
  const ConcreteAlgebra alg = upper_triangular_2x2();
  const auto derivations = leibniz_nullspace(alg);
  const DerivationCandidates candidates = explicit_candidates(derivations);

  Rng rng = Rng::stream(seed, "t2-negative-control");
  for (int attempt = 1; attempt <= budget; ++attempt) {
    const Complex p1 = rng.complex();
    const Complex p2 = rng.complex();
    const Complex p3 = rng.complex();
    // h(mu v) = mu h(v) for every complex mu; nonlinear when p3 != 0.
    auto delta = [&](const CVector& x) -> CVector {
      const Complex v1 = x(1);
      const Complex v2 = x(2) - x(0);
      const double w = std::norm(v1) + std::norm(v2);
      Complex h = p1 * v1 + p2 * v2;
      if (w > 0.0) h += p3 * std::norm(v1) * v2 / w;
      CVector out = CVector::Zero(3);
      out(1) = h;
      return out;
    };

    const auto probes = random_probes(3, 4, seed + static_cast<std::uint64_t>(attempt));
    std::vector<CVector> points;
    for (int i = 0; i < 3; ++i) points.push_back(alg.basis(i));
    points.push_back(alg.unit_coords());
    for (auto& p : probe_points(alg, probes)) points.push_back(std::move(p));

    NegativeControl nc;
    nc.table = tabulate(3, points, delta);
    nc.certification = certify_2local(candidates, nc.table, all_pairs(nc.table.size()), tol);
    nc.consequences = consequence_check(alg, nc.table, probes);
    nc.derivation_space_dim = static_cast<int>(derivations.size());
    nc.attempts = attempt;
    if (nc.certification.consistent && nc.consequences.additivity >= 0.1) return nc;
  }
  throw SearchBudgetExceeded("t2_negative_control: no non-additive pairwise-implementable table in " +
                             std::to_string(budget) + " attempts");
}

}  // namespace derlab
