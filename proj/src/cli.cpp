#include "cluster_forge/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cluster_forge/construct.hpp"
#include "cluster_forge/errors.hpp"
#include "cluster_forge/io.hpp"

namespace cluster_forge::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct Options {
  std::string command;
  std::string scene_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<std::string> mode;
  std::optional<std::size_t> probes;
  std::optional<std::string> depths;
  std::optional<std::string> function_path;
};

ordered_json point_json(const Point& p) {
  ordered_json a = ordered_json::array();
  for (double c : p.coords()) a.push_back(c);
  return a;
}

void diagnostic(std::ostream& err, const std::string& kind, const std::string& field,
                const std::string& message, const char* field_key = "field") {
  ordered_json j;
  j["error"] = kind;
  if (!field.empty()) j[field_key] = field;
  j["message"] = message;
  err << j.dump() << '\n';
}

Depths parse_depths(const std::string& text) {
  Depths d;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> d.n_max >> c1 >> d.k_max >> c2 >> d.K) || c1 != ',' || c2 != ',' || !in.eof() ||
      d.n_max < 1 || d.k_max < 1 || d.K < 1) {
    throw SceneError("--depths", "expected three positive integers n_max,k_max,K");
  }
  return d;
}

std::string distances_csv(const VerifyReport& v, std::size_t dim) {
  std::string out = "probe_index";
  for (std::size_t i = 0; i < dim; ++i) out += fmt::format(",p{}", i);
  out += ",delta,distance\n";
  for (std::size_t i = 0; i < v.per_probe.size(); ++i) {
    const ProbeResult& r = v.per_probe[i];
    for (std::size_t j = 0; j < r.distance_per_delta.size(); ++j) {
      out += std::to_string(i);
      for (double c : r.probe.coords()) out += "," + format_double(c);
      out += "," + format_double(v.deltas[j]) + "," + format_double(r.distance_per_delta[j]) + "\n";
    }
  }
  return out;
}

std::string points_csv(const FunctionSample& f, std::size_t dim, std::size_t value_dim) {
  std::string out;
  for (std::size_t i = 0; i < dim; ++i) out += fmt::format("x{},", i);
  for (std::size_t i = 0; i < value_dim; ++i) out += fmt::format("y{},", i);
  out += "source,layer,k\n";
  for (const auto& p : f.pairs()) {
    for (double c : p.x.coords()) out += format_double(c) + ",";
    for (double c : p.y.coords()) out += format_double(c) + ",";
    if (p.provenance) {
      out += fmt::format("{},{},{}\n", to_string(p.provenance->source), p.provenance->layer,
                         p.provenance->k);
    } else {
      out += "external,,\n";
    }
  }
  return out;
}

struct Outcome {
  bool pass = false;
};

/// Verifies and audits f, writes the artifacts and prints a summary.
Outcome emit(const Scene& scene, const Options& opt, const std::string& scene_hash,
             const FunctionSample& f, const fs::path& out_dir, bool write_function,
             std::ostream& out) {
  const std::string command = infer_command(f);
  MatchMode mode = command == "lemma1" ? MatchMode::kContainment : MatchMode::kEquality;
  if (scene.verify.mode) mode = *scene.verify.mode;
  if (opt.mode) mode = match_mode_from_string(*opt.mode);

  ToleranceBreakdown tol =
      default_tolerance(scene.depths.n_max, scene.phi.value_resolution(), scene.delta_min());
  if (scene.verify.tol) tol.override_value = scene.verify.tol;
  if (opt.tol) tol.override_value = opt.tol;

  const std::vector<double> deltas = scene.delta_schedule();
  const std::vector<Point> probes = select_probes(scene, f, scene.verify.probe_set,
                                                  opt.probes ? opt.probes : scene.verify.probes);
  const VerifyReport verify =
      verify_cluster_match(f, scene.phi, probes, deltas, tol.total(), mode, scene.metric);
  const AuditReport audit = audit_construction(scene, f);

  if (write_function) write_file(out_dir / "function.jsonl", function_to_jsonl(f));
  write_file(out_dir / "report.json",
             dump_json(report_json(scene_hash, command, f.size(), tol, verify, audit)));
  write_file(out_dir / "plot" / "distances.csv", distances_csv(verify, scene.dimension));
  if (scene.dimension <= 2) {
    write_file(out_dir / "plot" / "points.csv",
               points_csv(f, scene.dimension, scene.phi.value_space().dimension()));
  }

  out << fmt::format("{}: {} pairs, {} probes, mode {}, tol {:.6g} (2/n_max {:.6g} + "
                     "2*value_resolution {:.6g} + delta_min {:.6g}{})\n",
                     command, f.size(), probes.size(), to_string(mode), tol.total(),
                     tol.layer_term, tol.value_term, tol.delta_term,
                     tol.override_value ? ", overridden" : "");
  if (verify.worst) {
    const ProbeResult& w = verify.per_probe[*verify.worst];
    out << fmt::format("  worst probe {} at distance {:.6g}\n", to_string(w.probe), w.distance);
  }
  for (const auto& r : verify.per_probe) {
    if (r.error) out << "  probe error: " << *r.error << '\n';
  }
  for (const auto& c : audit.checks) {
    if (!c.pass) out << "  audit " << c.name << " failed: " << c.first_failure << '\n';
  }
  const bool pass = verify.pass && audit.pass();
  out << fmt::format("  verification {}, audit {} -> {}\n", verify.pass ? "pass" : "fail",
                     audit.pass() ? "pass" : "fail", pass ? "PASS" : "FAIL");
  return {pass};
}

FunctionSample build(const Scene& scene, const std::string& command) {
  if (command == "lemma1") return construct_lemma1(scene);
  if (command == "thm1") return construct_theorem1(scene).f;
  return construct_theorem2(scene).f;
}

int execute(const Options& opt, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(opt.scene_path);
  const std::string scene_hash = hex64(fnv1a64(text));
  Scene scene = parse_scene(text);
  if (opt.seed) scene.seed = *opt.seed;
  if (opt.depths) scene.depths = parse_depths(*opt.depths);
  if (opt.mode) match_mode_from_string(*opt.mode);

  const SceneDiagnostics diag = validate_scene(scene);
  for (const auto& w : diag.warnings) err << "warning: " << w << '\n';
  if (opt.command == "validate") {
    out << (diag.valid() ? "valid\n" : "invalid\n");
    for (const auto& e : diag.errors) out << "  error: " << e << '\n';
    out << "usc modulus ladder (delta, sup directed gap over key pairs closer than delta):\n";
    for (const auto& row : diag.modulus_ladder) {
      out << fmt::format("  {:<12.6g} {:.6g}\n", row.delta, row.modulus);
    }
    return diag.valid() ? kPass : kInvalidInput;
  }
  require_valid(scene);

  const fs::path out_dir(opt.out_dir);
  if (opt.command == "verify") {
    const fs::path fn = opt.function_path ? fs::path(*opt.function_path) : out_dir / "function.jsonl";
    const FunctionSample f = function_from_jsonl(read_file(fn));
    return emit(scene, opt, scene_hash, f, out_dir, false, out).pass ? kPass : kVerificationFailed;
  }

  std::vector<std::string> commands;
  if (opt.command == "all") {
    commands = scene.domain ? std::vector<std::string>{"lemma1", "thm1", "thm2"}
                            : std::vector<std::string>{"thm1"};
  } else {
    commands = {opt.command};
  }
  bool pass = true;
  for (const auto& cmd : commands) {
    if (cmd != "thm1" && !scene.domain) {
      throw SceneError("/D", cmd + " needs an explicit domain D");
    }
    const FunctionSample f = build(scene, cmd);
    const fs::path dir = opt.command == "all" ? out_dir / cmd : out_dir;
    pass = emit(scene, opt, scene_hash, f, dir, true, out).pass && pass;
  }
  return pass ? kPass : kVerificationFailed;
}

}  // namespace

std::string infer_command(const FunctionSample& f) {
  bool thm1 = false, lemma1 = false;
  for (const auto& p : f.pairs()) {
    if (!p.provenance) return "external";
    (p.provenance->source == Source::kTheorem1 ? thm1 : lemma1) = true;
  }
  if (thm1 && lemma1) return "thm2";
  if (thm1) return "thm1";
  if (lemma1) return "lemma1";
  return "external";
}

ordered_json report_json(const std::string& scene_hash, const std::string& command,
                         std::size_t pairs, const ToleranceBreakdown& tol,
                         const VerifyReport& verify, const AuditReport& audit) {
  ordered_json r;
  r["scene_hash"] = scene_hash;
  r["command"] = command;
  r["mode"] = std::string(to_string(verify.mode));
  r["pairs"] = pairs;
  r["deltas"] = verify.deltas;

  ordered_json t;
  t["formula"] = "2/n_max + 2*value_resolution + delta_min";
  t["layer_term"] = tol.layer_term;
  t["value_term"] = tol.value_term;
  t["delta_term"] = tol.delta_term;
  t["formula_total"] = tol.formula();
  t["override"] = tol.override_value ? ordered_json(*tol.override_value) : ordered_json(nullptr);
  t["tol"] = tol.total();
  r["tolerance_breakdown"] = t;

  ordered_json probes = ordered_json::array();
  for (const auto& p : verify.per_probe) {
    ordered_json e;
    e["probe"] = point_json(p.probe);
    e["distance_per_delta"] = p.distance_per_delta;
    e["trend_nonincreasing"] = p.trend_nonincreasing;
    e["pass"] = p.pass;
    if (p.error) e["error"] = *p.error;
    probes.push_back(e);
  }
  r["per_probe"] = probes;
  if (verify.worst) {
    const ProbeResult& w = verify.per_probe[*verify.worst];
    ordered_json e;
    e["index"] = *verify.worst;
    e["probe"] = point_json(w.probe);
    e["distance"] = w.distance;
    r["worst"] = e;
  } else {
    r["worst"] = nullptr;
  }

  ordered_json checks = ordered_json::array();
  for (const auto& c : audit.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["checked"] = c.checked;
    if (!c.pass) e["first_failure"] = c.first_failure;
    checks.push_back(e);
  }
  r["audit"] = {{"pass", audit.pass()}, {"checks", checks}};
  r["verification_pass"] = verify.pass;
  r["pass"] = verify.pass && audit.pass();
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct functions with prescribed cluster sets and verify them.",
               "cluster-forge"};
  Options opt;
  app.add_option("command", opt.command, "lemma1 | thm1 | thm2 | verify | all | validate")
      ->required()
      ->check(CLI::IsMember({"lemma1", "thm1", "thm2", "verify", "all", "validate"}));
  app.add_option("scene", opt.scene_path, "scene JSON file")->required();
  app.add_option("--out", opt.out_dir, "output directory")->capture_default_str();
  app.add_option("--seed", opt.seed, "seed override");
  app.add_option("--tol", opt.tol, "verification tolerance override")->check(CLI::NonNegativeNumber);
  app.add_option("--mode", opt.mode, "equality | containment")
      ->check(CLI::IsMember({"equality", "containment"}));
  app.add_option("--probes", opt.probes, "evenly spaced probe subsample size")
      ->check(CLI::PositiveNumber);
  app.add_option("--depths", opt.depths, "n_max,k_max,K");
  app.add_option("--function", opt.function_path,
                 "function sample for verify (default: <out>/function.jsonl)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    diagnostic(err, "usage", "", e.what());
    err << app.help();
    return kInvalidInput;
  }

  try {
    return execute(opt, out, err);
  } catch (const SceneError& e) {
    diagnostic(err, "scene", e.field(), e.what());
    return kInvalidInput;
  } catch (const ConstructionError& e) {
    diagnostic(err, "construction", to_string(e.kind()), e.what(), "kind");
    return kConstructionFailed;
  } catch (const InputError& e) {
    diagnostic(err, "input", "", e.what());
    return kInvalidInput;
  }
}

}  // namespace cluster_forge::cli
