#include "doctest.h"

#include "oracles.hpp"

#include "derlab/opalg.hpp"
#include "derlab/sampling.hpp"

using namespace derlab;

namespace {

ModuleElement vec2(Complex a, Complex b) {
  CVector c(2);
  c << a, b;
  return ModuleElement({c});
}

}  // namespace

TEST_CASE("theta of basis vectors is a matrix unit") {
  auto t = theta(vec2(1.0, 0.0), riesz(vec2(0.0, 1.0)));
  CMatrix expected(2, 2);
  expected << 0.0, 1.0, 0.0, 0.0;
  CHECK((t.block(0) - expected).norm() == 0.0);
}

TEST_CASE("operators agree with their dense embeddings") {
  ModuleSpec spec({2, 3});
  Rng rng = Rng::stream(1, "dense");
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_operator(rng, spec);
    auto b = random_operator(rng, spec);
    auto x = random_module_element(rng, spec);
    auto f = random_functional(rng, spec);
    CHECK((oracle::dense(spec, compose(a, b)) - oracle::dense(spec, a) * oracle::dense(spec, b)).norm() <= 1e-12);
    CHECK((oracle::dense(spec, adjoint(a)) - oracle::dense(spec, a).adjoint()).norm() == 0.0);
    CHECK((oracle::dense(spec, a(x)) - oracle::dense(spec, a) * oracle::dense(spec, x)).norm() <= 1e-12);
    // theta(x, f) y = f(y) x checked on every basis vector.
    auto th = theta(x, f);
    for (const auto& e : basis_elements(spec)) {
      auto lhs = th(e);
      auto rhs = act(f(e), x);
      CHECK(module_norm(lhs - rhs) <= 1e-12);
    }
  }
}

TEST_CASE("mult_op is central and compatible with theta") {
  ModuleSpec spec({2, 3});
  Rng rng = Rng::stream(2, "mult");
  CHECK(distance(mult_op(spec, unit(spec.space())), Operator::identity(spec)) == 0.0);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_algebra_element(rng, spec.space());
    auto b = random_operator(rng, spec);
    auto x = random_module_element(rng, spec);
    auto f = random_functional(rng, spec);
    CHECK(distance(compose(mult_op(spec, a), b), compose(b, mult_op(spec, a))) <= 1e-12);
    CHECK(distance(theta(act(a, x), f), compose(mult_op(spec, a), theta(x, f))) <= 1e-12);
    CHECK(distance(compose(Operator::identity(spec), b), b) == 0.0);
    CHECK(distance(adjoint(adjoint(b)), b) == 0.0);
    CHECK(distance(compose(b, theta(x, f)), theta(b(x), f)) <= 1e-12);
  }
}

TEST_CASE("the eight theta identities") {
  ModuleSpec spec({2, 3});
  Rng rng = Rng::stream(3, "theta");
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_algebra_element(rng, spec.space());
    auto x = random_module_element(rng, spec);
    auto y = random_module_element(rng, spec);
    auto z = random_module_element(rng, spec);
    auto w = random_module_element(rng, spec);
    auto f = random_functional(rng, spec);
    auto g = random_functional(rng, spec);
    auto A = random_operator(rng, spec);
    CHECK(distance(compose(theta(x, f), A), theta(x, compose(f, A))) <= 1e-12);
    CHECK(distance(compose(A, theta(x, f)), theta(A(x), f)) <= 1e-12);
    CHECK(distance(compose(theta(x, f), theta(y, g)), compose(mult_op(spec, f(y)), theta(x, g))) <= 1e-12);
    CHECK(distance(theta(act(a, x), f), compose(mult_op(spec, a), theta(x, f))) <= 1e-12);
    CHECK(distance(adjoint(theta(x, riesz(y))), theta(y, riesz(x))) <= 1e-12);
    CHECK(distance(compose(theta(x, riesz(y)), A), theta(x, riesz(adjoint(A)(y)))) <= 1e-12);
    CHECK(distance(compose(theta(x, riesz(y)), theta(z, riesz(w))),
                   compose(mult_op(spec, inner(z, y)), theta(x, riesz(w)))) <= 1e-12);
    CHECK(distance(theta(act(a, x), riesz(y)), theta(x, riesz(act(star(a), y)))) <= 1e-12);
  }
}

TEST_CASE("assemble, phi and the trace oracle") {
  ModuleSpec one({2});
  CHECK(distance(assemble(one, {}), Operator::zero(one)) == 0.0);
  auto e1 = vec2(1.0, 0.0);
  auto e2 = vec2(0.0, 1.0);
  RankOneSum resolution{{e1, riesz(e1)}, {e2, riesz(e2)}};
  CHECK(distance(assemble(one, resolution), Operator::identity(one)) == 0.0);
  CHECK(phi(one, resolution)[0] == Complex(2.0));
  CHECK(oracle::brute_trace(one, assemble(one, resolution), 0) == Complex(2.0));

  ModuleSpec spec({2, 3});
  Rng rng = Rng::stream(4, "phi");
  for (int trial = 0; trial < 50; ++trial) {
    auto x = random_module_element(rng, spec);
    CHECK(distance(phi(spec, {{x, riesz(x)}}), inner(x, x)) <= 1e-15);
    auto lam = lambda_matrix(spec, {{x, riesz(x)}});
    CHECK(lam.size() == 1);
    CHECK(distance(lam.at(0, 0), inner(x, x)) <= 1e-15);

    auto s = random_rank_one_sum(rng, spec, 1 + rng.index(5));
    auto value = phi(spec, s);
    auto assembled = assemble(spec, s);
    for (int t = 0; t < spec.k(); ++t) {
      Complex tr = oracle::brute_trace(spec, assembled, t);
      CHECK(std::abs(value[t] - tr) <= 1e-12 * std::max(1.0, std::abs(tr)));
    }

    // phi(theta_{x,f} A) = f(Ax) = phi(A theta_{x,f}).
    auto f = random_functional(rng, spec);
    auto A = random_operator(rng, spec);
    auto left = phi(spec, {{x, compose(f, A)}});
    auto right = phi(spec, {{A(x), f}});
    CHECK(distance(left, f(A(x))) <= 1e-12);
    CHECK(distance(right, f(A(x))) <= 1e-12);
  }
}

TEST_CASE("zero sums have nilpotent lambda and vanishing phi") {
  ModuleSpec spec({2, 3});
  Rng rng = Rng::stream(5, "zero-sums");
  for (int trial = 0; trial < 30; ++trial) {
    auto s = random_rank_one_sum(rng, spec, 1 + rng.index(4));
    auto cancel = canonical_expansion(spec, -1.0 * assemble(spec, s));
    s.insert(s.end(), cancel.begin(), cancel.end());
    CHECK(op_norm(assemble(spec, s)) <= 1e-12);
    auto lam = lambda_matrix(spec, s);
    CHECK(lam.squared().max_abs() <= 1e-9);
    CHECK(sup_norm(lam.trace()) <= 1e-9);
    CHECK(sup_norm(phi(spec, s)) <= 1e-9);
    for (int t = 0; t < spec.k(); ++t) {
      CMatrix m = lam.at_point(t);
      CHECK((m * m).norm() <= 1e-9);
      CHECK(std::abs(m.trace()) <= 1e-9);
    }
  }
}

TEST_CASE("structure constants match dense matrix units") {
  for (auto fibers : {std::vector<int>{2}, std::vector<int>{2, 3}}) {
    ModuleSpec spec(fibers);
    auto alg = structure_constants(spec);
    auto basis = oracle::dense_basis(spec);
    REQUIRE(alg.dim() == spec.algebra_dim());
    for (int i = 0; i < alg.dim(); ++i)
      for (int j = 0; j < alg.dim(); ++j) {
        CVector expected = oracle::dense_coords(spec, basis[i] * basis[j]);
        CHECK((alg.multiply(alg.basis(i), alg.basis(j)) - expected).norm() == 0.0);
      }
    CVector unit_expected = oracle::dense_coords(spec, CMatrix::Identity(spec.module_dim(), spec.module_dim()));
    CHECK((alg.unit_coords() - unit_expected).norm() == 0.0);
    CHECK(alg.associativity_defect() == 0.0);
    CHECK(alg.unit_defect() == 0.0);
  }
  CHECK(structure_constants(ModuleSpec({2, 3})).dim() == 13);
}

TEST_CASE("centralizer is the multiplication operators") {
  for (auto fibers : {std::vector<int>{2}, std::vector<int>{2, 3}, std::vector<int>{2, 2, 2}}) {
    ModuleSpec spec(fibers);
    auto center = centralizer_basis(spec);
    CHECK(static_cast<int>(center.size()) == oracle::center_dim(spec));
    CHECK(static_cast<int>(center.size()) == spec.k());
    auto fr = frame(spec, 1);
    for (const auto& z : center) {
      for (int t = 0; t < spec.k(); ++t) {
        const CMatrix& b = z.block(t);
        CMatrix off = b - b(0, 0) * CMatrix::Identity(b.rows(), b.cols());
        CHECK(off.cwiseAbs().maxCoeff() <= 1e-10);
      }
      CHECK(distance(mult_op(spec, center_coefficient(z, fr)), z) <= 1e-9);
    }
  }
  ModuleSpec two({2});
  auto c = centralizer_basis(two);
  REQUIRE(c.size() == 1);
  CHECK(std::abs(std::abs(c[0].block(0)(0, 0)) - 1.0 / std::sqrt(2.0)) <= 1e-12);
}

TEST_CASE("center coefficient") {
  ModuleSpec spec({2, 3});
  Rng rng = Rng::stream(6, "center");
  for (int m : {1, 2}) {
    auto fr = frame(spec, m);
    CHECK(distance(center_coefficient(Operator::identity(spec), fr), unit(spec.space())) <= 1e-15);
    auto a = random_algebra_element(rng, spec.space());
    CHECK(distance(center_coefficient(mult_op(spec, a), fr), a) <= 1e-12);
  }
  // A non-scalar block cannot be reconstructed.
  Operator e12 = Operator::zero(spec);
  e12.block(1)(0, 1) = 1.0;
  CHECK(distance(mult_op(spec, center_coefficient(e12, frame(spec, 1))), e12) >= 0.1);
}

TEST_CASE("semiprime witness") {
  ModuleSpec spec({2, 3});
  CHECK_THROWS_AS(semiprime_witness(spec, Operator::zero(spec)), ZeroOperator);
  auto id = Operator::identity(spec);
  auto b = semiprime_witness(spec, id);
  CHECK(op_norm(compose(id, compose(b, id))) > 1e-8);
  Rng rng = Rng::stream(7, "semiprime");
  for (int trial = 0; trial < 100; ++trial) {
    auto A = random_operator(rng, spec);
    auto B = semiprime_witness(spec, A);
    CHECK(op_norm(compose(A, compose(B, A))) > 1e-8);
  }
  // A nilpotent A still has a witness.
  Operator n = Operator::zero(spec);
  n.block(1)(0, 2) = 1.0;
  CHECK(op_norm(compose(n, compose(semiprime_witness(spec, n), n))) > 1e-8);
}
