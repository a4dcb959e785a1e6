// sfcrel: design, place, simulate and validate reliable service chains.
//
// Exit codes: 0 success, 1 a validation check failed, 2 bad input.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sfcrel/errors.hpp"
#include "sfcrel/pipeline.hpp"
#include "sfcrel/scenario.hpp"

namespace fs = std::filesystem;
using namespace sfcrel;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;

struct Common {
  std::string scenario;
  std::string setting;
  std::optional<std::uint64_t> seed;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--scenario", c.scenario, "Scenario JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--setting", c.setting, "Queueing setting: mm1 or mmm")
      ->check(CLI::IsMember({"mm1", "mmm"}, CLI::ignore_case));
  cmd->add_option("--seed", c.seed, "Override the scenario seed");
  cmd->add_option("--out", c.out,
                  "Directory for CSV output (default: print to stdout)");
}

struct Resolved {
  Scenario scenario;
  QueueSetting setting;
  std::uint64_t seed;
};

Resolved resolve(const Common& c) {
  Resolved r{load_scenario(c.scenario), QueueSetting::MMM, 0};
  r.setting = c.setting.empty() ? r.scenario.setting
                                : parse_queue_setting(c.setting);
  r.seed = c.seed.value_or(r.scenario.seed);
  return r;
}

// Writes each (file, text) pair under --out, or prints them to stdout.
void emit(const Common& c,
          const std::vector<std::pair<std::string, std::string>>& files) {
  if (c.out.empty()) {
    bool first = true;
    for (const auto& [name, text] : files) {
      if (!first) std::cout << '\n';
      first = false;
      std::cout << "# " << name << '\n' << text;
    }
    return;
  }
  fs::create_directories(c.out);
  for (const auto& [name, text] : files) {
    const fs::path path = fs::path(c.out) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write '" + path.string() + "'");
    f << text;
  }
}

std::vector<PlacementMethod> parse_methods(const std::vector<std::string>& raw) {
  std::vector<PlacementMethod> methods;
  for (const auto& m : raw) methods.push_back(parse_placement_method(m));
  return methods;
}

int report_input_error(const std::exception& e) {
  std::cerr << "error: " << e.what() << '\n';
  if (const auto* v = dynamic_cast<const ValidationError*>(&e)) {
    for (const auto& p : v->problems()) std::cerr << "  - " << p << '\n';
  }
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reliable service function chain design and placement"};
  app.require_subcommand(1);

  Common design_opts;
  auto* design = app.add_subcommand("design", "Design every catalog service");
  add_common(design, design_opts);

  Common place_opts;
  std::vector<std::string> method_names{"ilp", "mma", "mdm"};
  auto* place_cmd = app.add_subcommand("place", "Place generated requests");
  add_common(place_cmd, place_opts);
  place_cmd
      ->add_option("--methods", method_names,
                   "Placement methods (ilp, mma, mdm, ffd)")
      ->delimiter(',');

  Common sim_opts;
  auto* simulate = app.add_subcommand(
      "simulate", "Discrete-event simulation of the subchain study");
  add_common(simulate, sim_opts);

  Common validate_opts;
  auto* validate = app.add_subcommand(
      "validate", "Check analytical values against the simulation oracles");
  add_common(validate, validate_opts);

  Common bench_opts;
  BenchOptions bench_cfg;
  std::vector<std::string> bench_methods{"ilp", "mma", "mdm"};
  auto* bench = app.add_subcommand("bench", "Placement sweep over request counts");
  add_common(bench, bench_opts);
  bench->add_option("--counts", bench_cfg.counts, "Request counts")
      ->delimiter(',');
  bench->add_option("--repeats", bench_cfg.repeats, "Instances per count")
      ->check(CLI::PositiveNumber);
  bench->add_option("--methods", bench_methods, "Placement methods")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*design) {
      const Resolved r = resolve(design_opts);
      emit(design_opts,
           {{"design.csv", design_csv(run_design(r.scenario, r.setting))},
            {"study.csv",
             study_csv(run_study(r.scenario.study, r.scenario.design_nodes()))}});
      return kExitOk;
    }
    if (*place_cmd) {
      const Resolved r = resolve(place_opts);
      const auto methods = parse_methods(method_names);
      const PlaceReport report = run_place(r.scenario, r.setting, methods,
                                           r.seed, place_options_from_env());
      for (const auto& row : report.rows) {
        if (row.status == "skipped") {
          std::cerr << "notice: " << to_string(row.method) << " skipped: "
                    << row.note << '\n';
        }
      }
      emit(place_opts, {{"placement.csv", placement_csv(report)},
                        {"assignments.csv", assignments_csv(report)},
                        {"timings.csv", placement_timings_csv(report)}});
      return kExitOk;
    }
    if (*simulate) {
      const Resolved r = resolve(sim_opts);
      emit(sim_opts, {{"simulation.csv",
                       simulation_csv(run_simulate(r.scenario, r.setting, r.seed))}});
      return kExitOk;
    }
    if (*validate) {
      const Resolved r = resolve(validate_opts);
      const ValidationReport report = run_validate(r.scenario, r.setting, r.seed);
      emit(validate_opts, {{"validation.csv", validation_csv(report)}});
      if (!report.all_pass()) {
        for (const auto& c : report.checks) {
          if (!c.pass) std::cerr << "FAIL " << c.name << ": " << c.note << '\n';
        }
        return kExitValidation;
      }
      return kExitOk;
    }
    if (*bench) {
      const Resolved r = resolve(bench_opts);
      bench_cfg.methods = parse_methods(bench_methods);
      bench_cfg.place = place_options_from_env();
      const auto rows = run_bench(r.scenario, r.setting, r.seed, bench_cfg);
      emit(bench_opts, {{"bench.csv", bench_csv(rows)},
                        {"timings.csv", bench_timings_csv(rows)}});
      return kExitOk;
    }
  } catch (const ParseError& e) {
    return report_input_error(e);
  } catch (const ValidationError& e) {
    return report_input_error(e);
  } catch (const DomainError& e) {
    return report_input_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
