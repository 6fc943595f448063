#include "doctest.h"

#include "derlab/verify.hpp"

using namespace derlab;

namespace {

const CheckResult* find(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("model info") {
  ModelConfig c;
  c.fibers = {2, 3};
  auto info = model_info(c);
  CHECK(info.algebra_dim == 13);
  CHECK(info.k == 2);
  CHECK(info.center_dim == 2);
  CHECK(info.expected_derivation_dim == 11);
  c.fibers = {1};
  CHECK(model_info(c).expected_derivation_dim == 0);
  CHECK_THROWS_AS(config_from_json(parse_json("{\"fibers\": []}")), ConfigError);
  CHECK_THROWS_AS(config_from_json(parse_json("{\"fibers\": [2], \"tol\": -1}")), ConfigError);
  CHECK_THROWS_AS(config_from_json(parse_json("{\"fibers\": \"two\"}")), ConfigError);
  CHECK_THROWS_AS(config_from_json(parse_json("[2]")), ParseError);
}

TEST_CASE("full verification passes and is reproducible") {
  ModelConfig c;
  c.fibers = {2};
  c.seed = 7;
  auto r = run_verify(c, "all");
  for (const auto& check : r.checks) CHECK_MESSAGE(check.status == CheckStatus::Pass, check.suite << "/" << check.name);
  CHECK(r.passed());
  CHECK(r.to_json().dump() == run_verify(c, "all").to_json().dump());
  CHECK_THROWS_AS(run_verify(c, "nonsense"), ConfigError);
}

TEST_CASE("derivation suite reports the dimension") {
  ModelConfig c;
  c.fibers = {2, 3};
  auto r = run_verify(c, "derivations");
  const auto* dim = find(r, "leibniz-dimension");
  REQUIRE(dim != nullptr);
  CHECK(dim->value == 11.0);
  CHECK(dim->status == CheckStatus::Pass);
}

TEST_CASE("an over-tight tolerance surfaces as rank-ambiguous") {
  ModelConfig c;
  c.fibers = {2, 3};
  c.tol = 1e-15;
  auto r = run_verify(c, "derivations");
  CHECK_FALSE(r.passed());
  const auto* dim = find(r, "leibniz-dimension");
  REQUIRE(dim != nullptr);
  CHECK(dim->status == CheckStatus::RankAmbiguous);
  CHECK(std::string(to_string(dim->status)) != std::string(to_string(CheckStatus::Fail)));
}

TEST_CASE("map checks") {
  ModelConfig c;
  c.fibers = {2, 3};
  const ModuleSpec spec = c.spec();
  const int dim = spec.algebra_dim();
  auto identity = check_map(c, LinearMapOnAlgebra::identity(dim), MapMode::Derivation);
  CHECK_FALSE(identity.passed());
  REQUIRE_FALSE(identity.checks.empty());
  CHECK(identity.checks.front().value >= 0.5);

  Rng rng = Rng::stream(1, "maps");
  auto inner = inner_map(spec, random_operator(rng, spec));
  for (auto mode : {MapMode::Derivation, MapMode::Local, MapMode::Generalized, MapMode::TwoLocal})
    CHECK(check_map(c, inner, mode).passed());
  CHECK_THROWS_AS(check_map(c, LinearMapOnAlgebra::identity(4), MapMode::Derivation), DimensionMismatch);
  CHECK_THROWS_AS(map_mode_from_string("sideways"), ConfigError);
}
