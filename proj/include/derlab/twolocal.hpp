#pragma once

// 2-local derivation checks on finite tables. A candidate delta is a finite
// table of (point, value) pairs; nothing is assumed about linearity. Every
// check here is sound for rejection only: a failing pair proves delta is not
// 2-local, a passing table is merely consistent with it.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "derlab/dersolve.hpp"

namespace derlab {

/// Finite table of values delta(at) = value in algebra coordinates.
class PointMap {
 public:
  struct Entry {
    CVector at;
    CVector value;
  };

  PointMap() = default;
  explicit PointMap(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Adds a point, or overwrites the value of a point already present.
  void set(const CVector& at, const CVector& value);
  /// Index of the entry whose point matches `at` within 1e-12 (relative),
  /// or nullopt.
  std::optional<std::size_t> find(const CVector& at) const;
  const CVector* lookup(const CVector& at) const;

 private:
  int dim_ = 0;
  std::vector<Entry> entries_;
};

/// Table of a function on the given points (duplicates collapse).
PointMap tabulate(int dim, const std::vector<CVector>& points,
                  const std::function<CVector(const CVector&)>& f);

/// The derivations a pair must be implemented by, spanned by `maps`. On
/// End_A(M) every derivation is inner, so the span of D_{e_i} suffices and the
/// coefficients are the coordinates of an implementing T.
struct DerivationCandidates {
  std::vector<LinearMapOnAlgebra> maps;
};
DerivationCandidates inner_candidates(const ConcreteAlgebra& alg);
DerivationCandidates explicit_candidates(std::vector<LinearMapOnAlgebra> basis);

struct PairwiseResult {
  bool feasible = false;
  /// Coefficients over the candidate maps (for inner candidates: T coords).
  CVector implementer;
  double residual = 0.0;
};

/// Least-squares solve of sum_k c_k d_k(A) = delta(A), sum_k c_k d_k(B) = delta(B).
PairwiseResult pairwise_implementer(const DerivationCandidates& candidates, const CVector& a,
                                    const CVector& delta_a, const CVector& b,
                                    const CVector& delta_b, double tol);

struct PairResidual {
  std::size_t first;
  std::size_t second;
  double residual;
  bool feasible;
};

struct TwoLocalReport {
  std::vector<PairResidual> pairs;
  double max_residual = 0.0;
  bool consistent = true;
  /// No pairs were checked; consistency is vacuous.
  bool vacuous = false;
};

/// All unordered pairs (i <= j) of table indices.
std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n);

TwoLocalReport certify_2local(const DerivationCandidates& candidates, const PointMap& delta,
                              const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                              double tol);
/// Same as certify_2local without OpenMP; kept as the reference.
TwoLocalReport certify_2local_serial(const DerivationCandidates& candidates, const PointMap& delta,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                     double tol);

struct Probe {
  CVector a;
  CVector b;
  Complex lambda;
};

/// Points a table needs for consequence_check: A, B, A+B, lambda A, A^2.
std::vector<CVector> probe_points(const ConcreteAlgebra& alg, const std::vector<Probe>& probes);

struct ConsequenceReport {
  double additivity = 0.0;
  double homogeneity = 0.0;
  double jordan = 0.0;
  double max() const;
};

/// Throws MissingProbe when a required point is absent from the table.
ConsequenceReport consequence_check(const ConcreteAlgebra& alg, const PointMap& delta,
                                    const std::vector<Probe>& probes);

std::vector<Probe> random_probes(int dim, int count, std::uint64_t seed);

struct NegativeControl {
  PointMap table;
  TwoLocalReport certification;
  ConsequenceReport consequences;
  int derivation_space_dim = 0;
  int attempts = 0;
};

/// Seeded search on the upper-triangular 2x2 algebra for a table that is
/// pairwise implementable by that algebra's derivations yet not additive.
/// Candidates have the form x -> h(x) E12 where h depends on
/// (x_E12, x_E22 - x_E11) through a complex-homogeneous degree-one function
/// with random parameters. Throws SearchBudgetExceeded after `budget` tries.
NegativeControl t2_negative_control(double tol, std::uint64_t seed = 0, int budget = 64);

}  // namespace derlab
