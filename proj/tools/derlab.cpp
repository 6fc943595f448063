// derlab: batch front end for the Hilbert-module derivation model.
//
//   derlab info      --model cfg.json
//   derlab verify    --model cfg.json [--suite all|lemmas|derivations|local|twolocal] [--json out.json]
//   derlab check-map --model cfg.json --map map.json --mode derivation|local|generalized|twolocal
//   derlab export-inner --model cfg.json --out map.json
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on
// configuration, parse or dimension errors.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "derlab/verify.hpp"

namespace {

struct Common {
  std::string model;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<int> frame_size;
  std::string json_out;
  bool timings = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--model", c.model, "model configuration (JSON)")->required();
  cmd->add_option("--seed", c.seed, "override the config seed");
  cmd->add_option("--tol", c.tol, "override the config tolerance");
  cmd->add_option("--frame-size", c.frame_size, "override the config frame size");
  cmd->add_option("--json", c.json_out, "write the JSON report here");
  cmd->add_flag("--timings", c.timings, "include per-check runtimes in the JSON report");
}

derlab::ModelConfig load(const Common& c) {
  derlab::Json j = derlab::read_json_file(c.model);
  if (j.is_object()) {
    if (c.seed) j["seed"] = *c.seed;
    if (c.tol) j["tol"] = *c.tol;
    if (c.frame_size) j["frame_size"] = *c.frame_size;
  }
  return derlab::config_from_json(j);
}

int emit(const derlab::VerificationReport& report, const Common& c) {
  for (const auto& check : report.checks) {
    std::cout << (check.status == derlab::CheckStatus::Pass ? "[PASS] " : "[FAIL] ") << check.suite << "/"
              << check.name << " " << check.metric << "=" << check.value << " (" << to_string(check.status)
              << ", " << check.runtime_ms << " ms)";
    if (!check.detail.empty()) std::cout << " -- " << check.detail;
    std::cout << '\n';
  }
  std::cout << "verdict: " << (report.passed() ? "pass" : "fail") << '\n';
  if (!c.json_out.empty()) derlab::write_json_file(c.json_out, report.to_json(c.timings));
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivations on End_A(M) for full Hilbert C(S)-modules"};
  app.require_subcommand(1);

  Common info_opts, verify_opts, map_opts, export_opts;
  std::string suite = "all";
  std::string map_path;
  std::string mode = "derivation";
  std::string export_path;

  auto* info = app.add_subcommand("info", "print model dimensions");
  add_common(info, info_opts);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, verify_opts);
  verify->add_option("--suite", suite, "all|lemmas|derivations|local|twolocal");
  auto* check = app.add_subcommand("check-map", "check a user-supplied linear map");
  add_common(check, map_opts);
  check->add_option("--map", map_path, "map file (JSON)")->required();
  check->add_option("--mode", mode, "derivation|local|generalized|twolocal");
  auto* exp = app.add_subcommand("export-inner", "write the map file of a seeded inner derivation");
  add_common(exp, export_opts);
  exp->add_option("--out", export_path, "output map file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) {
      const auto config = load(info_opts);
      const auto r = derlab::model_info(config);
      std::cout << "D = " << r.algebra_dim << "\nk = " << r.k << "\ncenter dimension = " << r.center_dim
                << "\nexpected derivation dimension = " << r.expected_derivation_dim << '\n';
      if (!info_opts.json_out.empty()) {
        derlab::write_json_file(info_opts.json_out,
                                derlab::Json{{"D", r.algebra_dim}, {"k", r.k}, {"center_dim", r.center_dim},
                                             {"expected_derivation_dim", r.expected_derivation_dim}});
      }
      return 0;
    }
    if (*verify) return emit(derlab::run_verify(load(verify_opts), suite), verify_opts);
    if (*check) {
      const auto config = load(map_opts);
      const auto map = derlab::map_from_json(derlab::read_json_file(map_path));
      return emit(derlab::check_map(config, map, derlab::map_mode_from_string(mode)), map_opts);
    }
    if (*exp) {
      const auto config = load(export_opts);
      const auto spec = config.spec();
      derlab::Rng rng = derlab::Rng::stream(config.seed, "export-inner");
      derlab::write_json_file(export_path, derlab::to_json(derlab::inner_map(spec, derlab::random_operator(rng, spec))));
      return 0;
    }
  } catch (const derlab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
