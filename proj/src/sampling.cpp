#include "derlab/sampling.hpp"

namespace derlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Rng Rng::stream(std::uint64_t seed, std::string_view name) {
  return Rng(splitmix64(splitmix64(seed) ^ fnv1a(name)));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Complex Rng::complex() {
  const double re = uniform(-1.0, 1.0);
  const double im = uniform(-1.0, 1.0);
  return {re, im};
}

CVector Rng::complex_vector(Eigen::Index n) {
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = complex();
  return v;
}

CMatrix Rng::complex_matrix(Eigen::Index rows, Eigen::Index cols) {
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex();
  }
  return m;
}

int Rng::index(int n) { return static_cast<int>(uniform() * n) % n; }

AlgebraElement random_algebra_element(Rng& rng, PointSpace space) {
  return AlgebraElement(rng.complex_vector(space.k));
}

ModuleElement random_module_element(Rng& rng, const ModuleSpec& spec) {
  std::vector<CVector> fibers;
  for (int n : spec.fibers()) fibers.push_back(rng.complex_vector(n));
  return ModuleElement(std::move(fibers));
}

Functional random_functional(Rng& rng, const ModuleSpec& spec) {
  return riesz(random_module_element(rng, spec));
}

Operator random_operator(Rng& rng, const ModuleSpec& spec) {
  std::vector<CMatrix> blocks;
  for (int n : spec.fibers()) blocks.push_back(rng.complex_matrix(n, n));
  return Operator(std::move(blocks));
}

RankOneSum random_rank_one_sum(Rng& rng, const ModuleSpec& spec, int terms) {
  RankOneSum s;
  for (int i = 0; i < terms; ++i) {
    ModuleElement x = random_module_element(rng, spec);
    s.push_back({std::move(x), random_functional(rng, spec)});
  }
  return s;
}

}  // namespace derlab
