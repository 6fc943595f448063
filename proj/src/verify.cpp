#include "derlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

#include "format.hpp"

namespace derlab {

namespace {

struct Outcome {
  bool passed;
  double value;
  std::string detail;
};

std::string fmt(double v) { return detail::sci(v); }

class SuiteRunner {
 public:
  SuiteRunner(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

  void run(const std::string& name, const std::string& metric, const std::function<Outcome()>& body) {
    CheckResult r{suite_, name, CheckStatus::Pass, metric, 0.0, "", 0.0};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = body();
      r.status = o.passed ? CheckStatus::Pass : CheckStatus::Fail;
      r.value = o.value;
      r.detail = o.detail;
    } catch (const RankAmbiguous& e) {
      r.status = CheckStatus::RankAmbiguous;
      r.value = e.gap_ratio();
      r.detail = e.what();
    } catch (const Error& e) {
      r.status = CheckStatus::Error;
      r.detail = e.what();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out_.push_back(std::move(r));
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

Outcome at_most(double value, double bound) { return {value <= bound, value, "bound " + fmt(bound)}; }

bool has_matrix_fiber(const ModuleSpec& spec) {
  return std::any_of(spec.fibers().begin(), spec.fibers().end(), [](int n) { return n >= 2; });
}

// Operator built from a random rank-one sum followed by the canonical
// expansion of its negation, so the whole sum assembles to zero.
RankOneSum cancelling_sum(Rng& rng, const ModuleSpec& spec) {
  RankOneSum s = random_rank_one_sum(rng, spec, 1 + rng.index(4));
  const Operator total = assemble(spec, s);
  for (auto& term : canonical_expansion(spec, Complex(-1.0) * total)) s.push_back(std::move(term));
  return s;
}

std::vector<Probe> table_probes(const ConcreteAlgebra& alg, std::uint64_t seed) {
  return random_probes(alg.dim(), 4, seed);
}

std::vector<CVector> table_points(const ConcreteAlgebra& alg, const std::vector<Probe>& probes) {
  std::vector<CVector> points;
  for (int i = 0; i < alg.dim(); ++i) points.push_back(alg.basis(i));
  points.push_back(alg.unit_coords());
  for (auto& p : probe_points(alg, probes)) points.push_back(std::move(p));
  return points;
}

void suite_lemmas(const ModelConfig& config, std::vector<CheckResult>& out) {
  const ModuleSpec spec = config.spec();
  SuiteRunner run("lemmas", out);
  Rng rng = Rng::stream(config.seed, "lemmas");

  run.run("module-axioms", "residual", [&] {
    double worst = 0.0;
    bool positive = true;
    for (int s = 0; s < 100; ++s) {
      const auto x = random_module_element(rng, spec);
      const auto y = random_module_element(rng, spec);
      const auto z = random_module_element(rng, spec);
      const auto a = random_algebra_element(rng, spec.space());
      const Complex lambda = rng.complex();
      worst = std::max(worst, distance(inner(lambda * x + y, z), lambda * inner(x, z) + inner(y, z)));
      worst = std::max(worst, distance(inner(act(a, x), y), product(a, inner(x, y))));
      worst = std::max(worst, distance(inner(x, y), star(inner(y, x))));
      positive = positive && is_positive(inner(x, x), 1e-12);
    }
    Outcome o = at_most(worst, 1e-12);
    o.passed = o.passed && positive;
    if (!positive) o.detail += "; <x,x> not positive";
    return o;
  });

  run.run("frame-unit-sum", "residual", [&] {
    double worst = 0.0;
    for (int m = 1; m <= 5; ++m) {
      AlgebraElement sum = AlgebraElement::zero(spec.space());
      for (const auto& x : frame(spec, m)) sum += inner(x, x);
      worst = std::max(worst, distance(sum, unit(spec.space())));
    }
    return at_most(worst, 1e-12);
  });

  run.run("theta-identities", "residual", [&] {
    double worst = 0.0;
    auto track = [&](const Operator& l, const Operator& r) { worst = std::max(worst, distance(l, r)); };
    for (int s = 0; s < 100; ++s) {
      const auto x = random_module_element(rng, spec);
      const auto y = random_module_element(rng, spec);
      const auto z = random_module_element(rng, spec);
      const auto w = random_module_element(rng, spec);
      const auto f = random_functional(rng, spec);
      const auto g = random_functional(rng, spec);
      const auto a = random_algebra_element(rng, spec.space());
      const auto op = random_operator(rng, spec);
      track(compose(theta(x, f), op), theta(x, compose(f, op)));
      track(compose(op, theta(x, f)), theta(op(x), f));
      track(compose(theta(x, f), theta(y, g)), compose(mult_op(spec, f(y)), theta(x, g)));
      track(theta(act(a, x), f), compose(mult_op(spec, a), theta(x, f)));
      track(adjoint(theta(x, riesz(y))), theta(y, riesz(x)));
      track(compose(theta(x, riesz(y)), op), theta(x, riesz(adjoint(op)(y))));
      track(compose(theta(x, riesz(y)), theta(z, riesz(w))),
            compose(mult_op(spec, inner(z, y)), theta(x, riesz(w))));
      track(theta(act(a, x), riesz(y)), theta(x, riesz(act(star(a), y))));
    }
    return at_most(worst, 1e-12);
  });

  run.run("center-dimension", "dimension", [&] {
    const auto basis = centralizer_basis(spec, config.tol);
    const auto fr = frame(spec, config.frame_size);
    double worst = 0.0;
    for (const auto& z : basis) worst = std::max(worst, distance(mult_op(spec, center_coefficient(z, fr)), z));
    const bool ok = static_cast<int>(basis.size()) == spec.k() && worst <= 1e-9;
    return Outcome{ok, static_cast<double>(basis.size()),
                   "expected " + std::to_string(spec.k()) + ", reconstruction residual " + fmt(worst)};
  });

  run.run("semiprime-witness", "min-norm", [&] {
    double weakest = std::numeric_limits<double>::infinity();
    for (int s = 0; s < 100; ++s) {
      const Operator a = random_operator(rng, spec);
      const Operator b = semiprime_witness(spec, a);
      weakest = std::min(weakest, op_norm(compose(compose(a, b), a)));
    }
    return Outcome{weakest > 1e-8, weakest, "must exceed 1e-8"};
  });

  run.run("phi-equals-trace", "relative-residual", [&] {
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
      const RankOneSum sum = random_rank_one_sum(rng, spec, 1 + rng.index(6));
      const AlgebraElement p = phi(spec, sum);
      const AlgebraElement tr = fiberwise_trace(assemble(spec, sum));
      worst = std::max(worst, distance(p, tr) / std::max(1.0, sup_norm(tr)));
    }
    return at_most(worst, 1e-12);
  });

  run.run("phi-vanishes-on-zero-sums", "residual", [&] {
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
      const RankOneSum sum = cancelling_sum(rng, spec);
      const LambdaMatrix lam = lambda_matrix(spec, sum);
      worst = std::max({worst, sup_norm(phi(spec, sum)), lam.squared().max_abs(), sup_norm(lam.trace())});
    }
    return at_most(worst, 1e-9);
  });

  run.run("unit-pair-idempotent", "residual", [&] {
    const auto [x0, f0] = unit_pair(spec);
    const Operator p = theta(x0, f0);
    return at_most(std::max(distance(f0(x0), unit(spec.space())), distance(compose(p, p), p)), 1e-12);
  });
}

void suite_derivations(const ModelConfig& config, std::vector<CheckResult>& out) {
  const ModuleSpec spec = config.spec();
  const ConcreteAlgebra alg = structure_constants(spec);
  const int expected = spec.algebra_dim() - spec.k();
  SuiteRunner run("derivations", out);
  Rng rng = Rng::stream(config.seed, "derivations");

  std::vector<LinearMapOnAlgebra> derivations;
  run.run("leibniz-dimension", "dimension", [&] {
    DerivationSpace ds = solve_leibniz(alg, config.tol);
    derivations = ds.maps;
    const int dim = static_cast<int>(ds.maps.size());
    return Outcome{dim == expected, static_cast<double>(dim),
                   "expected " + std::to_string(expected) + ", gap ratio " + fmt(ds.gap_ratio)};
  });

  run.run("jordan-dimension", "dimension", [&] {
    const int dim = static_cast<int>(solve_jordan(alg, config.tol).maps.size());
    return Outcome{dim == expected, static_cast<double>(dim), "expected " + std::to_string(expected)};
  });

  run.run("implementer-round-trip", "residual", [&] {
    const auto fr = frame(spec, config.frame_size);
    double worst = 0.0;
    for (const auto& d : derivations) {
      const Operator t = extract_implementer(spec, d, fr, config.tol);
      worst = std::max(worst, (inner_map(alg, to_coords(t)).matrix() - d.matrix()).norm());
    }
    return at_most(worst, 1e-9);
  });

  run.run("implementer-unique-mod-center", "residual", [&] {
    const auto fr = frame(spec, config.frame_size);
    double worst = 0.0;
    for (int s = 0; s < 10; ++s) {
      const Operator t0 = random_operator(rng, spec);
      const Operator diff = extract_implementer(spec, inner_map(spec, t0), fr, config.tol) - t0;
      worst = std::max(worst, distance(mult_op(spec, center_coefficient(diff, fr)), diff));
    }
    return at_most(worst, 1e-9);
  });

  run.run("alinearity", "residual", [&] {
    std::vector<AlgebraElement> as;
    for (int s = 0; s < 20; ++s) as.push_back(random_algebra_element(rng, spec.space()));
    double worst = 0.0;
    for (const auto& d : derivations) worst = std::max(worst, alinearity_defect(spec, d, as));
    return at_most(worst, 1e-9);
  });
}

void suite_local(const ModelConfig& config, std::vector<CheckResult>& out) {
  const ModuleSpec spec = config.spec();
  const ConcreteAlgebra alg = structure_constants(spec);
  const auto [x0, f0] = unit_pair(spec);
  SuiteRunner run("local", out);
  Rng rng = Rng::stream(config.seed, "local");

  run.run("ideal-closure", "residual", [&] {
    const IdealBasis left = ideal_basis(spec, Side::Left, x0, f0);
    const IdealBasis right = ideal_basis(spec, Side::Right, x0, f0);
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      const Operator a = random_operator(rng, spec);
      for (const auto& l : left.elements) worst = std::max(worst, distance_to_span(left, compose(a, l)));
      for (const auto& r : right.elements) worst = std::max(worst, distance_to_span(right, compose(r, a)));
    }
    return at_most(worst, 1e-10);
  });

  run.run("idempotent-decomposition", "residual", [&] {
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
      const auto x = random_module_element(rng, spec);
      const auto f = random_functional(rng, spec);
      const auto dl = idempotent_decomposition(spec, x, x0, f0);
      const auto dr = idempotent_decomposition(spec, f, x0, f0);
      for (const auto* dec : {&dl, &dr}) {
        worst = std::max(worst, distance(compose(dec->p1, dec->p1), dec->p1));
        worst = std::max(worst, distance(compose(dec->p2, dec->p2), dec->p2));
      }
      worst = std::max(worst, distance(dl.reconstruct(spec), theta(x, f0)));
      worst = std::max(worst, distance(dr.reconstruct(spec), theta(x0, f)));
    }
    return at_most(worst, 1e-10);
  });

  run.run("separating-witness", "min-norm", [&] {
    double weakest = std::numeric_limits<double>::infinity();
    for (int s = 0; s < 100; ++s) {
      const Operator a = random_operator(rng, spec);
      for (Side side : {Side::Left, Side::Right}) {
        const auto w = separating_witness(spec, side, a, x0, f0);
        weakest = std::min(weakest, w ? w->norm : 0.0);
      }
    }
    return Outcome{weakest > 1e-8, weakest, "must exceed 1e-8"};
  });

  std::vector<LinearMapOnAlgebra> derivations;
  run.run("zero-product-chains", "residual", [&] {
    derivations = leibniz_nullspace(alg, config.tol);
    const IdealBasis left = ideal_basis(spec, Side::Left, x0, f0);
    const IdealBasis right = ideal_basis(spec, Side::Right, x0, f0);
    const auto triples = zero_triple_sampler(spec, 4, config.seed).triples;
    double worst = 0.0;
    for (const auto& d : derivations) {
      for (const auto& z : triples) {
        const Operator a = random_operator(rng, spec);
        const Operator b = random_operator(rng, spec);
        const Operator l = left.elements[rng.index(static_cast<int>(left.elements.size()))];
        const Operator r = right.elements[rng.index(static_cast<int>(right.elements.size()))];
        worst = std::max(worst, zero_product_chain_defect(spec, phi1(spec, d, z.a, z.b), a, b, l, r));
        worst = std::max(worst, zero_product_chain_defect(spec, phi2(spec, d, random_operator(rng, spec)), a, b, l, r));
      }
    }
    return at_most(worst, 1e-10);
  });

  run.run("zero-triple-hypothesis-inner", "residual", [&] {
    const auto triples = zero_triple_sampler(spec, 100, config.seed).triples;
    const auto delta = inner_map(spec, random_operator(rng, spec));
    return at_most(zero_triple_hypothesis_check(spec, delta, triples), 1e-10);
  });

  run.run("generalized-derivation", "residual", [&] {
    double worst = 0.0;
    for (const auto& d : derivations) {
      const auto m = left_multiplication(spec, random_operator(rng, spec));
      worst = std::max(worst, generalized_derivation_defect(alg, LinearMapOnAlgebra(d.matrix() + m.matrix())));
      worst = std::max(worst, derivation_defect(alg, d));
    }
    return at_most(worst, 1e-10);
  });

  run.run("local-certifies-inner", "residual", [&] {
    const auto delta = inner_map(spec, random_operator(rng, spec));
    const LocalReport r = local_derivation_certify(spec, delta, local_sample(spec, 20, config.seed),
                                                   config.tol, config.seed);
    Outcome o = at_most(std::max(r.max_residual, r.derivation_defect), 1e-9);
    o.passed = o.passed && r.certified_local && r.is_derivation;
    return o;
  });

  run.run("local-rejects-transpose", "max-residual", [&] {
    if (!has_matrix_fiber(spec)) {
      return Outcome{true, 0.0, "all fibers are 1-dimensional; transpose is the identity"};
    }
    const LocalReport r = local_derivation_certify(spec, blockwise_transpose(spec),
                                                   local_sample(spec, 0, config.seed), config.tol, config.seed);
    return Outcome{!r.certified_local && r.max_residual >= 0.1, r.max_residual, "must reach 0.1"};
  });
}

void suite_twolocal(const ModelConfig& config, std::vector<CheckResult>& out) {
  const ModuleSpec spec = config.spec();
  const ConcreteAlgebra alg = structure_constants(spec);
  const DerivationCandidates inner = inner_candidates(alg);
  SuiteRunner run("twolocal", out);
  const auto probes = table_probes(alg, config.seed);
  const auto points = table_points(alg, probes);

  std::vector<LinearMapOnAlgebra> derivations;
  run.run("derivation-tables-certify", "residual", [&] {
    derivations = leibniz_nullspace(alg, config.tol);
    double worst = 0.0;
    bool consistent = true;
    for (const auto& d : derivations) {
      const PointMap table = tabulate(alg.dim(), points, [&](const CVector& x) { return d(x); });
      const TwoLocalReport r = certify_2local(inner, table, all_pairs(table.size()), config.tol);
      consistent = consistent && r.consistent;
      worst = std::max({worst, r.max_residual, consequence_check(alg, table, probes).max()});
    }
    Outcome o = at_most(worst, 1e-9);
    o.passed = o.passed && consistent;
    return o;
  });

  run.run("corrupted-table-rejected", "max-residual", [&] {
    if (derivations.empty()) return Outcome{true, 0.0, "no derivations to corrupt"};
    const auto& d = derivations.front();
    PointMap table = tabulate(alg.dim(), points, [&](const CVector& x) { return d(x); });
    const CVector target = alg.basis(0);
    table.set(target, d(target) + 0.5 * alg.unit_coords());
    const TwoLocalReport r = certify_2local(inner, table, all_pairs(table.size()), config.tol);
    return Outcome{!r.consistent && r.max_residual >= 0.1, r.max_residual, "must reach 0.1"};
  });

  run.run("t2-negative-control", "dimension", [&] {
    const int dim = static_cast<int>(leibniz_nullspace(upper_triangular_2x2(), config.tol).size());
    std::string detail;
    try {
      const NegativeControl nc = t2_negative_control(config.tol, config.seed);
      detail = "found after " + std::to_string(nc.attempts) + " attempt(s): additivity defect " +
               fmt(nc.consequences.additivity) + ", max pair residual " + fmt(nc.certification.max_residual);
    } catch (const SearchBudgetExceeded& e) {
      detail = e.what();
    }
    return Outcome{dim == 2, static_cast<double>(dim), "derivation space of T2 (expected 2); " + detail};
  });
}

}  // namespace

void ModelConfig::validate() const {
  if (fibers.empty()) throw ConfigError("config: fibers must be a nonempty list");
  (void)spec();
  if (!(tol > 0.0)) throw ConfigError("config: tol must be positive");
  if (frame_size < 1) throw ConfigError("config: frame_size must be positive");
}

ModelConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("config: expected a JSON object");
  ModelConfig c;
  try {
    if (!j.contains("fibers") || !j.at("fibers").is_array()) throw ConfigError("config: missing fibers list");
    c.fibers = j.at("fibers").get<std::vector<int>>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tol")) c.tol = j.at("tol").get<double>();
    if (j.contains("frame_size")) c.frame_size = j.at("frame_size").get<int>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

Json to_json(const ModelConfig& c) {
  return Json{{"fibers", c.fibers}, {"seed", c.seed}, {"tol", c.tol}, {"frame_size", c.frame_size}};
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::RankAmbiguous: return "rank-ambiguous";
    case CheckStatus::Error: return "error";
  }
  return "unknown";
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Pass; });
}

Json VerificationReport::to_json(bool include_timings) const {
  Json list = Json::array();
  for (const auto& c : checks) {
    Json j{{"suite", c.suite}, {"name", c.name}, {"status", to_string(c.status)},
           {"metric", c.metric}, {"value", c.value}, {"detail", c.detail}};
    if (include_timings) j["runtime_ms"] = c.runtime_ms;
    list.push_back(std::move(j));
  }
  return Json{{"checks", std::move(list)}, {"verdict", passed() ? "pass" : "fail"}};
}

InfoReport model_info(const ModelConfig& config) {
  config.validate();
  const ModuleSpec spec = config.spec();
  const int center = static_cast<int>(centralizer_basis(spec, config.tol).size());
  return {spec.algebra_dim(), spec.k(), center, spec.algebra_dim() - spec.k()};
}

VerificationReport run_verify(const ModelConfig& config, const std::string& suite) {
  config.validate();
  using SuiteFn = void (*)(const ModelConfig&, std::vector<CheckResult>&);
  const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"derivations", suite_derivations}, {"lemmas", suite_lemmas},
      {"local", suite_local}, {"twolocal", suite_twolocal}};
  VerificationReport report;
  bool matched = false;
  for (const auto& [name, fn] : suites) {
    if (suite == "all" || suite == name) {
      fn(config, report.checks);
      matched = true;
    }
  }
  if (!matched) throw ConfigError("unknown suite '" + suite + "' (expected all|lemmas|derivations|local|twolocal)");
  return report;
}

MapMode map_mode_from_string(const std::string& s) {
  if (s == "derivation") return MapMode::Derivation;
  if (s == "local") return MapMode::Local;
  if (s == "generalized") return MapMode::Generalized;
  if (s == "twolocal") return MapMode::TwoLocal;
  throw ConfigError("unknown mode '" + s + "' (expected derivation|local|generalized|twolocal)");
}

VerificationReport check_map(const ModelConfig& config, const LinearMapOnAlgebra& map, MapMode mode) {
  config.validate();
  const ModuleSpec spec = config.spec();
  if (map.dim() != spec.algebra_dim()) {
    throw DimensionMismatch("map acts on dimension " + std::to_string(map.dim()) + " but End_A(M) has dimension " +
                            std::to_string(spec.algebra_dim()));
  }
  const ConcreteAlgebra alg = structure_constants(spec);
  VerificationReport report;
  SuiteRunner run("check-map", report.checks);
  switch (mode) {
    case MapMode::Derivation:
      run.run("derivation-defect", "residual", [&] { return at_most(derivation_defect(alg, map), config.tol); });
      break;
    case MapMode::Generalized:
      run.run("generalized-derivation-defect", "residual",
              [&] { return at_most(generalized_derivation_defect(alg, map), config.tol); });
      break;
    case MapMode::Local:
      run.run("local-derivation", "max-residual", [&] {
        try {
          const LocalReport r = local_derivation_certify(spec, map, local_sample(spec, 20, config.seed),
                                                         config.tol, config.seed);
          return Outcome{r.certified_local && r.is_derivation, r.max_residual,
                         to_json(r).at("verdict").get<std::string>() + ", derivation defect " +
                             fmt(r.derivation_defect)};
        } catch (const NotALinear& e) {
          return Outcome{false, std::numeric_limits<double>::infinity(), e.what()};
        }
      });
      break;
    case MapMode::TwoLocal:
      run.run("two-local", "max-residual", [&] {
        const auto probes = table_probes(alg, config.seed);
        const PointMap table = tabulate(alg.dim(), table_points(alg, probes), [&](const CVector& x) { return map(x); });
        const TwoLocalReport r = certify_2local(inner_candidates(alg), table, all_pairs(table.size()), config.tol);
        const ConsequenceReport c = consequence_check(alg, table, probes);
        return Outcome{r.consistent && c.max() <= config.tol, std::max(r.max_residual, c.max()),
                       std::string(r.consistent ? "pairwise consistent" : "pairwise infeasible") +
                           ", consequence defect " + fmt(c.max())};
      });
      break;
  }
  return report;
}

}  // namespace derlab
