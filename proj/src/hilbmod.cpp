#include "derlab/hilbmod.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace derlab {

namespace {

void require_same_shape(const ModuleElement& x, const ModuleElement& y, const char* op) {
  bool ok = x.num_fibers() == y.num_fibers();
  for (int t = 0; ok && t < x.num_fibers(); ++t) ok = x.fiber(t).size() == y.fiber(t).size();
  if (!ok) throw DimensionMismatch(std::string(op) + ": module elements have different fiber shapes");
}

}  // namespace

ModuleSpec::ModuleSpec(std::vector<int> fibers) : fibers_(std::move(fibers)) {
  if (fibers_.empty()) throw ConfigError("module spec needs at least one fiber");
  for (std::size_t t = 0; t < fibers_.size(); ++t) {
    if (fibers_[t] < 1) {
      throw ConfigError("fiber " + std::to_string(t) + " has dimension " +
                        std::to_string(fibers_[t]) +
                        "; every fiber must be nonzero for the module to be full");
    }
  }
}

int ModuleSpec::module_dim() const { return std::accumulate(fibers_.begin(), fibers_.end(), 0); }

int ModuleSpec::algebra_dim() const {
  int d = 0;
  for (int n : fibers_) d += n * n;
  return d;
}

ModuleElement ModuleElement::zero(const ModuleSpec& spec) {
  std::vector<CVector> fibers;
  fibers.reserve(spec.k());
  for (int n : spec.fibers()) fibers.push_back(CVector::Zero(n));
  return ModuleElement(std::move(fibers));
}

ModuleElement ModuleElement::basis(const ModuleSpec& spec, int t, int j) {
  ModuleElement x = zero(spec);
  x.fiber(t)(j) = 1.0;
  return x;
}

bool ModuleElement::matches(const ModuleSpec& spec) const {
  if (num_fibers() != spec.k()) return false;
  for (int t = 0; t < spec.k(); ++t) {
    if (fiber(t).size() != spec.fiber_dim(t)) return false;
  }
  return true;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& other) {
  require_same_shape(*this, other, "add");
  for (int t = 0; t < num_fibers(); ++t) fibers_[t] += other.fibers_[t];
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& other) {
  require_same_shape(*this, other, "subtract");
  for (int t = 0; t < num_fibers(); ++t) fibers_[t] -= other.fibers_[t];
  return *this;
}

ModuleElement& ModuleElement::operator*=(Complex c) {
  for (auto& f : fibers_) f *= c;
  return *this;
}

ModuleElement operator+(ModuleElement x, const ModuleElement& y) { return x += y; }
ModuleElement operator-(ModuleElement x, const ModuleElement& y) { return x -= y; }
ModuleElement operator*(Complex c, ModuleElement x) { return x *= c; }

std::vector<ModuleElement> basis_elements(const ModuleSpec& spec) {
  std::vector<ModuleElement> out;
  out.reserve(spec.module_dim());
  for (int t = 0; t < spec.k(); ++t) {
    for (int j = 0; j < spec.fiber_dim(t); ++j) out.push_back(ModuleElement::basis(spec, t, j));
  }
  return out;
}

AlgebraElement inner(const ModuleElement& x, const ModuleElement& y) {
  require_same_shape(x, y, "inner");
  CVector out(x.num_fibers());
  // Eigen's dot() conjugates its first argument.
  for (int t = 0; t < x.num_fibers(); ++t) out(t) = y.fiber(t).dot(x.fiber(t));
  return AlgebraElement(std::move(out));
}

ModuleElement act(const AlgebraElement& a, const ModuleElement& x) {
  if (a.size() != x.num_fibers()) {
    throw DimensionMismatch("act: algebra element and module element live on different spaces");
  }
  ModuleElement out = x;
  for (int t = 0; t < x.num_fibers(); ++t) out.fiber(t) *= a[t];
  return out;
}

double module_norm(const ModuleElement& x) { return std::sqrt(sup_norm(inner(x, x))); }

Functional riesz(const ModuleElement& x) { return Functional{x}; }

Functional operator+(const Functional& f, const Functional& g) { return {f.riesz + g.riesz}; }
Functional operator-(const Functional& f, const Functional& g) { return {f.riesz - g.riesz}; }
Functional operator*(Complex c, const Functional& f) { return {std::conj(c) * f.riesz}; }
Functional act(const AlgebraElement& a, const Functional& f) { return {act(star(a), f.riesz)}; }

std::vector<ModuleElement> frame(const ModuleSpec& spec, int m) {
  if (m < 1) throw ConfigError("frame size must be positive");
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  std::vector<ModuleElement> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) {
    ModuleElement x = ModuleElement::zero(spec);
    for (int t = 0; t < spec.k(); ++t) x.fiber(t)(i % spec.fiber_dim(t)) = scale;
    out.push_back(std::move(x));
  }
  return out;
}

UnitPair unit_pair(const ModuleSpec& spec) {
  ModuleElement x0 = frame(spec, 1).front();
  Functional f0 = riesz(x0);
  return {std::move(x0), std::move(f0)};
}

}  // namespace derlab
