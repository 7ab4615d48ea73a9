// kscheck: command-line front end for the ksproof verification engine.
//
//   kscheck [--json] [--seed N] [--tol X] <command> [options]
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on
// argument or I/O errors.

#include "CLI11.hpp"
#include "ksproof/cli/commands.hpp"

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace ksproof;
using namespace ksproof::cli;

int emit(const Report& rep, const GlobalOptions& opts) {
  if (opts.json) {
    std::cout << rep.to_json().dump(2) << '\n';
  } else {
    std::cout << rep.to_text();
  }
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kochen-Specker ray set verification"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_flag("--json", opts.json, "Emit the report as JSON");
  app.add_option("--seed", opts.seed, "Random seed")->capture_default_str();
  app.add_option("--tol", opts.tol, "Floating-point tolerance")->capture_default_str()->check(CLI::PositiveNumber);

  std::string set = "peres";
  FamilyParams phases;
  auto add_phases = [&](CLI::App* sub) {
    sub->add_option("--alpha", phases.alpha, "Phase of a (radians)");
    sub->add_option("--beta", phases.beta, "Phase of b (radians)");
    sub->add_option("--gamma", phases.gamma, "Phase of c (radians)");
  };

  auto* catalog = app.add_subcommand("catalog", "Print a 33-ray catalog");
  std::string format = "json";
  catalog->add_option("--set", set, "peres | penrose | family")->capture_default_str();
  catalog->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  add_phases(catalog);

  auto* verify = app.add_subcommand("verify", "Check a catalog's orthogonality diagram");
  int family_samples = 0;
  verify->add_option("--set", set, "peres | penrose | family")->capture_default_str();
  verify->add_option("--samples", family_samples, "Random family samples (family only)")->check(CLI::NonNegativeNumber);
  add_phases(verify);

  auto* prove = app.add_subcommand("prove", "Prove non-colorability of the 33-ray set");
  std::string mode = "both";
  prove->add_option("--mode", mode, "replay | search | both")->capture_default_str();

  auto* critical = app.add_subcommand("critical", "Audit colorability after deleting one ray");
  std::optional<int> critical_ray;
  auto* ray_opt = critical->add_option("--ray", critical_ray, "Ray to delete (1..33)")->check(CLI::Range(1, kRayCount));
  critical->add_flag("--all", "Delete each ray in turn (default)")->excludes(ray_opt);

  auto* export_cnf = app.add_subcommand("export-cnf", "Write the coloring instance as DIMACS CNF");
  std::string out_path;
  std::optional<int> deleted;
  export_cnf->add_option("--out", out_path, "Output path")->required();
  export_cnf->add_option("--delete", deleted, "Ray to delete (1..33)")->check(CLI::Range(1, kRayCount));

  auto* majorana = app.add_subcommand("majorana", "Cross-check the Majorana machinery");
  int majorana_samples = 1000;
  majorana->add_option("--samples", majorana_samples, "Random samples")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*catalog) {
      std::cout << cmd_catalog(parse_set(set), phases, format == "csv" ? CatalogFormat::Csv : CatalogFormat::Json);
      return 0;
    }
    if (*verify) return emit(cmd_verify(parse_set(set), phases, family_samples, opts), opts);
    if (*prove) return emit(cmd_prove(parse_mode(mode), opts), opts);
    if (*critical) return emit(cmd_critical(critical_ray, opts), opts);
    if (*export_cnf) return emit(cmd_export_cnf(out_path, deleted, opts), opts);
    if (*majorana) return emit(cmd_majorana(majorana_samples, opts), opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
