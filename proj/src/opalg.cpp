#include "derlab/opalg.hpp"

#include <algorithm>
#include <string>

#include "derlab/kernels.hpp"
#include "derlab/nullspace.hpp"

namespace derlab {

namespace {

void require_same_shape(const Operator& a, const Operator& b, const char* op) {
  bool ok = a.num_blocks() == b.num_blocks();
  for (int t = 0; ok && t < a.num_blocks(); ++t) ok = a.block(t).rows() == b.block(t).rows();
  if (!ok) throw DimensionMismatch(std::string(op) + ": operators have different block shapes");
}

std::vector<int> block_offsets(const ModuleSpec& spec) {
  std::vector<int> off(spec.k() + 1, 0);
  for (int t = 0; t < spec.k(); ++t) off[t + 1] = off[t] + spec.fiber_dim(t) * spec.fiber_dim(t);
  return off;
}

}  // namespace

Operator::Operator(std::vector<CMatrix> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    if (b.rows() != b.cols()) throw DimensionMismatch("operator blocks must be square");
  }
}

Operator Operator::zero(const ModuleSpec& spec) {
  std::vector<CMatrix> blocks;
  for (int n : spec.fibers()) blocks.push_back(CMatrix::Zero(n, n));
  return Operator(std::move(blocks));
}

Operator Operator::identity(const ModuleSpec& spec) {
  std::vector<CMatrix> blocks;
  for (int n : spec.fibers()) blocks.push_back(CMatrix::Identity(n, n));
  return Operator(std::move(blocks));
}

bool Operator::matches(const ModuleSpec& spec) const {
  if (num_blocks() != spec.k()) return false;
  for (int t = 0; t < spec.k(); ++t) {
    if (block(t).rows() != spec.fiber_dim(t)) return false;
  }
  return true;
}

ModuleElement Operator::operator()(const ModuleElement& x) const {
  bool ok = x.num_fibers() == num_blocks();
  for (int t = 0; ok && t < num_blocks(); ++t) ok = x.fiber(t).size() == block(t).cols();
  if (!ok) throw DimensionMismatch("apply: operator and module element have different shapes");
  std::vector<CVector> out;
  out.reserve(num_blocks());
  for (int t = 0; t < num_blocks(); ++t) out.push_back(block(t) * x.fiber(t));
  return ModuleElement(std::move(out));
}

Operator& Operator::operator+=(const Operator& other) {
  require_same_shape(*this, other, "add");
  for (int t = 0; t < num_blocks(); ++t) blocks_[t] += other.blocks_[t];
  return *this;
}

Operator& Operator::operator-=(const Operator& other) {
  require_same_shape(*this, other, "subtract");
  for (int t = 0; t < num_blocks(); ++t) blocks_[t] -= other.blocks_[t];
  return *this;
}

Operator& Operator::operator*=(Complex c) {
  for (auto& b : blocks_) b *= c;
  return *this;
}

Operator operator+(Operator a, const Operator& b) { return a += b; }
Operator operator-(Operator a, const Operator& b) { return a -= b; }
Operator operator*(Complex c, Operator a) { return a *= c; }

Operator compose(const Operator& a, const Operator& b) {
  require_same_shape(a, b, "compose");
  std::vector<CMatrix> out;
  out.reserve(a.num_blocks());
  for (int t = 0; t < a.num_blocks(); ++t) out.push_back(a.block(t) * b.block(t));
  return Operator(std::move(out));
}

Operator adjoint(const Operator& a) {
  std::vector<CMatrix> out;
  out.reserve(a.num_blocks());
  for (const auto& b : a.blocks()) out.push_back(b.adjoint());
  return Operator(std::move(out));
}

Operator commutator(const Operator& a, const Operator& b) { return compose(a, b) - compose(b, a); }

double op_norm(const Operator& a) {
  double worst = 0.0;
  for (const auto& b : a.blocks()) {
    if (b.size() == 0) continue;
    Eigen::JacobiSVD<CMatrix> svd(b);
    worst = std::max(worst, svd.singularValues()(0));
  }
  return worst;
}

double distance(const Operator& a, const Operator& b) { return op_norm(a - b); }

Operator theta(const ModuleElement& x, const Functional& f) {
  const ModuleElement& w = f.riesz;
  bool ok = x.num_fibers() == w.num_fibers();
  for (int t = 0; ok && t < x.num_fibers(); ++t) ok = x.fiber(t).size() == w.fiber(t).size();
  if (!ok) throw DimensionMismatch("theta: vector and functional have different shapes");
  std::vector<CMatrix> blocks;
  blocks.reserve(x.num_fibers());
  for (int t = 0; t < x.num_fibers(); ++t) blocks.push_back(x.fiber(t) * w.fiber(t).adjoint());
  return Operator(std::move(blocks));
}

Operator mult_op(const ModuleSpec& spec, const AlgebraElement& a) {
  if (a.size() != spec.k()) throw DimensionMismatch("mult_op: algebra element has the wrong length");
  std::vector<CMatrix> blocks;
  for (int t = 0; t < spec.k(); ++t) {
    const int n = spec.fiber_dim(t);
    blocks.push_back(a[t] * CMatrix::Identity(n, n));
  }
  return Operator(std::move(blocks));
}

Functional compose(const Functional& f, const Operator& a) { return riesz(adjoint(a)(f.riesz)); }

Operator assemble(const ModuleSpec& spec, const RankOneSum& s) {
  Operator out = Operator::zero(spec);
  for (const auto& term : s) out += theta(term.x, term.f);
  return out;
}

AlgebraElement phi(const ModuleSpec& spec, const RankOneSum& s) {
  AlgebraElement out = AlgebraElement::zero(spec.space());
  for (const auto& term : s) out += term.f(term.x);
  return out;
}

AlgebraElement fiberwise_trace(const Operator& a) {
  CVector out(a.num_blocks());
  for (int t = 0; t < a.num_blocks(); ++t) out(t) = a.block(t).trace();
  return AlgebraElement(std::move(out));
}

RankOneSum canonical_expansion(const ModuleSpec& spec, const Operator& a) {
  if (!a.matches(spec)) throw DimensionMismatch("canonical_expansion: operator does not match spec");
  RankOneSum out;
  for (int t = 0; t < spec.k(); ++t) {
    const int n = spec.fiber_dim(t);
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        out.push_back({a.block(t)(p, q) * ModuleElement::basis(spec, t, p),
                       riesz(ModuleElement::basis(spec, t, q))});
      }
    }
  }
  return out;
}

LambdaMatrix::LambdaMatrix(int n, PointSpace space)
    : n_(n), space_(space), entries_(static_cast<std::size_t>(n) * n, AlgebraElement::zero(space)) {}

CMatrix LambdaMatrix::at_point(int t) const {
  CMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m(i, j) = at(i, j)[t];
  }
  return m;
}

LambdaMatrix LambdaMatrix::squared() const {
  LambdaMatrix out(n_, space_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      for (int l = 0; l < n_; ++l) out.at(i, j) += product(at(i, l), at(l, j));
    }
  }
  return out;
}

AlgebraElement LambdaMatrix::trace() const {
  AlgebraElement out = AlgebraElement::zero(space_);
  for (int i = 0; i < n_; ++i) out += at(i, i);
  return out;
}

double LambdaMatrix::max_abs() const {
  double worst = 0.0;
  for (const auto& e : entries_) worst = std::max(worst, sup_norm(e));
  return worst;
}

LambdaMatrix lambda_matrix(const ModuleSpec& spec, const RankOneSum& s) {
  const int n = static_cast<int>(s.size());
  LambdaMatrix out(n, spec.space());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.at(i, j) = s[j].f(s[i].x);
  }
  return out;
}

std::vector<Operator> basis_operators(const ModuleSpec& spec) {
  std::vector<Operator> out;
  out.reserve(spec.algebra_dim());
  for (int t = 0; t < spec.k(); ++t) {
    const int n = spec.fiber_dim(t);
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        Operator e = Operator::zero(spec);
        e.block(t)(p, q) = 1.0;
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

CVector to_coords(const Operator& a) {
  Eigen::Index d = 0;
  for (const auto& b : a.blocks()) d += b.size();
  CVector out(d);
  Eigen::Index pos = 0;
  for (const auto& b : a.blocks()) {
    for (Eigen::Index p = 0; p < b.rows(); ++p) {
      for (Eigen::Index q = 0; q < b.cols(); ++q) out(pos++) = b(p, q);
    }
  }
  return out;
}

Operator from_coords(const ModuleSpec& spec, const CVector& coords) {
  if (coords.size() != spec.algebra_dim()) {
    throw DimensionMismatch("from_coords: expected " + std::to_string(spec.algebra_dim()) +
                            " coordinates, got " + std::to_string(coords.size()));
  }
  Operator out = Operator::zero(spec);
  Eigen::Index pos = 0;
  for (int t = 0; t < spec.k(); ++t) {
    const int n = spec.fiber_dim(t);
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) out.block(t)(p, q) = coords(pos++);
    }
  }
  return out;
}

ConcreteAlgebra structure_constants(const ModuleSpec& spec) {
  const int d = spec.algebra_dim();
  const auto off = block_offsets(spec);
  std::vector<Complex> c(static_cast<std::size_t>(d) * d * d, 0.0);
  CVector unit = CVector::Zero(d);
  for (int t = 0; t < spec.k(); ++t) {
    const int n = spec.fiber_dim(t);
    auto idx = [&](int p, int q) { return off[t] + p * n + q; };
    // E_pq E_qs = E_ps within a block; products across blocks vanish.
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        for (int s = 0; s < n; ++s) {
          c[(static_cast<std::size_t>(idx(p, q)) * d + idx(q, s)) * d + idx(p, s)] = 1.0;
        }
      }
      unit(idx(p, p)) = 1.0;
    }
  }
  return ConcreteAlgebra(d, std::move(c), std::move(unit));
}

std::vector<Operator> centralizer_basis(const ModuleSpec& spec, double tol) {
  const ConcreteAlgebra alg = structure_constants(spec);
  const Nullspace ns = nullspace(kernels::commutant_constraints(alg), tol);
  std::vector<Operator> out;
  out.reserve(ns.basis.size());
  for (const auto& v : ns.basis) out.push_back(from_coords(spec, v));
  return out;
}

AlgebraElement center_coefficient(const Operator& a, const std::vector<ModuleElement>& frame) {
  AlgebraElement out = AlgebraElement::zero(PointSpace(a.num_blocks()));
  for (const auto& x : frame) out += inner(a(x), x);
  return out;
}

Operator semiprime_witness(const ModuleSpec& spec, const Operator& a, double tol) {
  if (op_norm(a) <= tol) throw ZeroOperator("semiprime_witness: operator norm is below tolerance");
  ModuleElement best;
  double best_norm = -1.0;
  ModuleElement best_image;
  for (auto& x : basis_elements(spec)) {
    ModuleElement ax = a(x);
    const double n = module_norm(ax);
    if (n > best_norm) {
      best_norm = n;
      best = std::move(x);
      best_image = std::move(ax);
    }
  }
  return theta(best, riesz(best_image));
}

}  // namespace derlab
