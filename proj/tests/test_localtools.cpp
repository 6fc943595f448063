#include "doctest.h"

#include "oracles.hpp"

#include "derlab/localtools.hpp"

using namespace derlab;

namespace {

ModuleElement vec2(Complex a, Complex b) {
  CVector c(2);
  c << a, b;
  return ModuleElement({c});
}

std::vector<AlgebraElement> seeded_scalars(const ModuleSpec& spec, int n, std::uint64_t seed) {
  Rng rng = Rng::stream(seed, "scalars");
  std::vector<AlgebraElement> out;
  for (int i = 0; i < n; ++i) out.push_back(random_algebra_element(rng, spec.space()));
  return out;
}

}  // namespace

TEST_CASE("ideals generated by the unit pair") {
  ModuleSpec two({2});
  auto [x0, f0] = unit_pair(two);
  CHECK(ideal_basis(two, Side::Left, x0, f0).elements.size() == 2);
  CHECK_THROWS_AS(ideal_basis(two, Side::Left, x0, riesz(vec2(0.0, 1.0))), UnitPairInvalid);

  ModuleSpec spec({2, 3});
  auto pair = unit_pair(spec);
  auto left = ideal_basis(spec, Side::Left, pair.x0, pair.f0);
  auto right = ideal_basis(spec, Side::Right, pair.x0, pair.f0);
  Rng rng = Rng::stream(1, "ideals");
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_operator(rng, spec);
    for (const auto& l : left.elements) CHECK(distance_to_span(left, compose(a, l)) <= 1e-10);
    for (const auto& r : right.elements) CHECK(distance_to_span(right, compose(r, a)) <= 1e-10);
  }
  // The identity is in neither one-sided ideal (fiber 2 has rank 3).
  CHECK(distance_to_span(left, Operator::identity(spec)) > 0.1);
  CHECK(distance(compose(theta(pair.x0, pair.f0), theta(pair.x0, pair.f0)), theta(pair.x0, pair.f0)) <= 1e-12);
}

TEST_CASE("idempotent decomposition of a 2x2 matrix unit") {
  ModuleSpec spec({2});
  auto e1 = vec2(1.0, 0.0);
  auto e2 = vec2(0.0, 1.0);
  auto dec = idempotent_decomposition(spec, e2, e1, riesz(e1));
  CHECK(dec.lambda == Complex(1.0));
  CHECK(distance(dec.a, unit(spec.space())) == 0.0);
  CMatrix p1(2, 2), p2(2, 2);
  p1 << 1, 0, 0, 0;
  p2 << 1, 0, -1, 0;  // theta(e1 - e2, e1^)
  CHECK((dec.p1.block(0) - p1).norm() == 0.0);
  CHECK((dec.p2.block(0) - p2).norm() == 0.0);
  CHECK(distance(dec.reconstruct(spec), theta(e2, riesz(e1))) == 0.0);
  auto same = idempotent_decomposition(spec, e1, e1, riesz(e1));
  CHECK(distance(same.reconstruct(spec), theta(e1, riesz(e1))) <= 1e-12);
}

TEST_CASE("seeded idempotent decompositions") {
  ModuleSpec spec({2, 3});
  auto [x0, f0] = unit_pair(spec);
  Rng rng = Rng::stream(2, "idempotents");
  for (int trial = 0; trial < 100; ++trial) {
    auto x = random_module_element(rng, spec);
    auto f = random_functional(rng, spec);
    auto dl = idempotent_decomposition(spec, x, x0, f0);
    auto dr = idempotent_decomposition(spec, f, x0, f0);
    for (const auto* d : {&dl, &dr}) {
      CHECK(distance(compose(d->p1, d->p1), d->p1) <= 1e-12);
      CHECK(distance(compose(d->p2, d->p2), d->p2) <= 1e-12);
    }
    CHECK(distance(dl.reconstruct(spec), theta(x, f0)) <= 1e-10);
    CHECK(distance(dr.reconstruct(spec), theta(x0, f)) <= 1e-10);
  }
}

TEST_CASE("separating witnesses") {
  ModuleSpec spec({2, 3});
  auto [x0, f0] = unit_pair(spec);
  for (Side side : {Side::Left, Side::Right}) {
    CHECK_FALSE(separating_witness(spec, side, Operator::zero(spec), x0, f0).has_value());
    auto id = separating_witness(spec, side, Operator::identity(spec), x0, f0);
    REQUIRE(id.has_value());
    CHECK(id->norm > 0.5);
  }
  Rng rng = Rng::stream(3, "separating");
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_operator(rng, spec);
    auto l = separating_witness(spec, Side::Left, a, x0, f0);
    auto r = separating_witness(spec, Side::Right, a, x0, f0);
    REQUIRE(l.has_value());
    REQUIRE(r.has_value());
    // Re-evaluate the claimed products independently.
    CHECK(op_norm(compose(a, theta(l->probe, f0))) == doctest::Approx(l->norm));
    CHECK(op_norm(compose(theta(x0, riesz(r->probe)), a)) == doctest::Approx(r->norm));
    CHECK(l->norm > 1e-8);
    CHECK(r->norm > 1e-8);
  }
}

TEST_CASE("zero-product bilinear identities") {
  ModuleSpec spec({2, 3});
  auto alg = structure_constants(spec);
  auto [x0, f0] = unit_pair(spec);
  auto left = ideal_basis(spec, Side::Left, x0, f0);
  auto right = ideal_basis(spec, Side::Right, x0, f0);
  Rng rng = Rng::stream(4, "chains");
  BilinearMap product_map = [](const Operator& x, const Operator& y) { return compose(x, y); };
  const Operator k = random_operator(rng, spec);
  BilinearMap twisted = [k](const Operator& x, const Operator& y) { return compose(x, compose(k, y)); };
  auto triples = zero_triple_sampler(spec, 5, 9).triples;
  auto delta = inner_map(spec, random_operator(rng, spec));
  double twisted_worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_operator(rng, spec);
    auto b = random_operator(rng, spec);
    auto l = left.elements[rng.index(static_cast<int>(left.elements.size()))];
    auto r = right.elements[rng.index(static_cast<int>(right.elements.size()))];
    CHECK(zero_product_chain_defect(spec, product_map, a, b, l, r) <= 1e-12);
    for (const auto& z : triples) {
      CHECK(zero_product_chain_defect(spec, phi1(spec, delta, z.a, z.b), a, b, l, r) <= 1e-10);
    }
    CHECK(zero_product_chain_defect(spec, phi2(spec, delta, random_operator(rng, spec)), a, b, l, r) <= 1e-10);
    twisted_worst = std::max(twisted_worst, zero_product_chain_defect(spec, twisted, a, b, l, r));
  }
  CHECK(twisted_worst > 0.1);
}

TEST_CASE("zero-product triples") {
  ModuleSpec spec({2, 3});
  auto sample = zero_triple_sampler(spec, 50, 7);
  CHECK_FALSE(sample.degenerate);
  REQUIRE(sample.triples.size() == 50);
  double biggest_b = 0.0;
  for (const auto& z : sample.triples) {
    CHECK(op_norm(compose(z.a, z.b)) <= 1e-12);
    CHECK(op_norm(compose(z.b, z.c)) <= 1e-12);
    biggest_b = std::max(biggest_b, op_norm(z.b));
  }
  CHECK(biggest_b > 0.1);
  auto again = zero_triple_sampler(spec, 50, 7);
  for (std::size_t i = 0; i < again.triples.size(); ++i)
    CHECK(distance(again.triples[i].b, sample.triples[i].b) == 0.0);
  auto flat = zero_triple_sampler(ModuleSpec({1, 1}), 3, 7);
  CHECK(flat.degenerate);
  for (const auto& z : flat.triples) CHECK(op_norm(z.b) == 0.0);
}

TEST_CASE("generalized derivations and the triple hypothesis") {
  ModuleSpec spec({2, 3});
  auto alg = structure_constants(spec);
  Rng rng = Rng::stream(5, "generalized");
  auto d = inner_map(spec, random_operator(rng, spec));
  auto triples = zero_triple_sampler(spec, 100, 3).triples;
  CHECK(zero_triple_hypothesis_check(spec, d, triples) <= 1e-10);
  CHECK(zero_triple_hypothesis_check(spec, d, {}) == 0.0);
  CHECK(zero_triple_hypothesis_check(spec, blockwise_transpose(spec), triples) > 0.1);

  CHECK(generalized_derivation_defect(alg, d) <= 1e-10);
  CHECK(d(alg.unit_coords()).norm() <= 1e-12);
  auto m = random_operator(rng, spec);
  LinearMapOnAlgebra gen(d.matrix() + left_multiplication(spec, m).matrix());
  CHECK(generalized_derivation_defect(alg, gen) <= 1e-10);
  CHECK(derivation_defect(alg, gen) > 0.1);
  CHECK(zero_triple_hypothesis_check(spec, gen, triples) <= 1e-10);
  CHECK(generalized_derivation_defect(alg, blockwise_transpose(spec)) > 0.1);
  // Independent check of left_multiplication on dense matrices.
  auto x = random_operator(rng, spec);
  CHECK((oracle::apply_dense(spec, left_multiplication(spec, m).matrix(), oracle::dense(spec, x)) -
         oracle::dense(spec, m) * oracle::dense(spec, x)).norm() <= 1e-12);
}

TEST_CASE("local derivation certification") {
  ModuleSpec spec({2, 3});
  auto alg = structure_constants(spec);
  Rng rng = Rng::stream(6, "local");
  auto sample = local_sample(spec, 20, 1);
  REQUIRE(sample.elements.size() == static_cast<std::size_t>(alg.dim() + 1 + 20));
  CHECK(sample.labels[0] == "0");
  CHECK(sample.labels[alg.dim()] == "unit");
  CHECK(sample.labels.back() == "random:1:19");

  auto inner = inner_map(spec, random_operator(rng, spec));
  auto report = local_derivation_certify(spec, inner, sample, 1e-9, 1);
  CHECK(report.certified_local);
  CHECK(report.is_derivation);
  CHECK(report.max_residual <= 1e-10);
  CHECK(report.derivation_defect <= 1e-9);

  auto m = random_operator(rng, spec);
  LinearMapOnAlgebra gen(inner.matrix() + left_multiplication(spec, m).matrix());
  auto gen_report = local_derivation_certify(spec, gen, sample, 1e-9, 1);
  CHECK_FALSE(gen_report.certified_local);
  const double unit_residual = gen_report.residuals[alg.dim()].residual;
  CHECK(unit_residual == doctest::Approx(gen(alg.unit_coords()).norm()).epsilon(1e-10));

  auto tr = local_derivation_certify(spec, blockwise_transpose(spec), local_sample(spec, 0, 1), 1e-9, 1);
  CHECK_FALSE(tr.certified_local);
  bool basis_failure = false;
  for (int i = 0; i < alg.dim(); ++i) basis_failure = basis_failure || tr.residuals[i].residual >= 0.1;
  CHECK(basis_failure);

  LinearMapOnAlgebra mixing(rng.complex_matrix(alg.dim(), alg.dim()));
  CHECK_THROWS_AS(local_derivation_certify(spec, mixing, sample, 1e-9, 1), NotALinear);
}
