#pragma once

// Seeded sampling. Uniform doubles are built directly from mt19937_64 bits
// (not std::uniform_real_distribution, whose output is implementation
// defined) so reports are reproducible across standard libraries.

#include <cstdint>
#include <random>
#include <string_view>

#include "derlab/opalg.hpp"

namespace derlab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for `name` derived from `seed`; adding a stream
  /// never shifts the samples of another.
  static Rng stream(std::uint64_t seed, std::string_view name);

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Real and imaginary parts uniform in [-1, 1).
  Complex complex();
  CVector complex_vector(Eigen::Index n);
  CMatrix complex_matrix(Eigen::Index rows, Eigen::Index cols);
  int index(int n);

 private:
  std::mt19937_64 engine_;
};

AlgebraElement random_algebra_element(Rng& rng, PointSpace space);
ModuleElement random_module_element(Rng& rng, const ModuleSpec& spec);
Functional random_functional(Rng& rng, const ModuleSpec& spec);
Operator random_operator(Rng& rng, const ModuleSpec& spec);
RankOneSum random_rank_one_sum(Rng& rng, const ModuleSpec& spec, int terms);

}  // namespace derlab
