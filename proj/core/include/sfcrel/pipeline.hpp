#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sfcrel/design.hpp"
#include "sfcrel/placement.hpp"
#include "sfcrel/scenario.hpp"
#include "sfcrel/simulate.hpp"
#include "sfcrel/structure.hpp"

namespace sfcrel {

/// Environment variable overriding PlaceOptions::exact_max_requests.
inline constexpr const char* kExactLimitEnv = "SFCREL_EXACT_MAX_REQUESTS";
inline constexpr int kDefaultExactMaxRequests = 60;

/// One redundancy scheme applied to one service.
struct DesignRow {
  std::string service;
  QueueSetting setting = QueueSetting::MM1;
  std::string scheme;  ///< subchain, full_backup, scb1, scb2
  int subchains = 1;
  int backups = 0;
  double reliability = 0.0;
  double delay = 0.0;
  int vcpus = 0;
  int backup_vcpus = 0;  ///< vCPUs spent on backups alone
  bool feasible = true;
  std::string note;
};

/// Designs every catalog service under `setting` and adds the baseline
/// schemes. Per-service errors become rows with feasible == false.
std::vector<DesignRow> run_design(const Scenario& scenario, QueueSetting setting);

/// One point of the subchain sweep.
struct StudyRow {
  QueueSetting setting = QueueSetting::MM1;
  int subchains = 1;
  double reliability = 0.0;
  double delay = 0.0;
  int vcpus = 0;
  double scb_reliability = 0.0;  ///< equivalent classical backup scheme
  int scb_vcpus = 0;
};

/// Both settings, l = 1..max_subchains, for the study chain hosted on
/// nodes with reliabilities `node_p`.
std::vector<StudyRow> run_study(const StudySpec& study,
                                std::span<const double> node_p);

struct SimulationRow {
  QueueSetting setting = QueueSetting::MM1;
  int subchains = 1;
  double analytic_delay = 0.0;
  SimEstimate des;
  double relative_error = 0.0;
};

/// DES of the study chain under `setting` for l = 1..max_subchains.
std::vector<SimulationRow> run_simulate(const Scenario& scenario,
                                        QueueSetting setting,
                                        std::uint64_t seed);

/// Redundancy structure of a designed layout (subchain or full-backup).
RedundancyStructure structure_of(const ChainSpec& spec,
                                 const DesignOutcome& outcome,
                                 std::span<const double> node_p);

std::vector<SubstrateNode> make_substrate(const Scenario& scenario);

/// Draws request_count requests. Service types follow the traffic shares;
/// demands follow the scenario's demand mode.
std::vector<PlacementRequest> make_requests(const Scenario& scenario,
                                            QueueSetting setting,
                                            std::uint64_t seed);

struct PlaceOptions {
  int exact_max_requests = kDefaultExactMaxRequests;
};

/// Reads kExactLimitEnv; falls back to the default when unset. Throws
/// DomainError for a malformed value.
PlaceOptions place_options_from_env();

struct PlaceRow {
  PlacementMethod method = PlacementMethod::MMA;
  int requests = 0;
  std::string status;  ///< ok, skipped, error
  int active_nodes = 0;
  std::uint64_t proposals = 0;
  std::uint64_t search_nodes = 0;
  bool proven_optimal = false;
  bool stable = false;  ///< matching methods only
  std::string note;
  double wall_seconds = 0.0;
};

struct PlaceReport {
  std::vector<PlacementRequest> requests;
  std::vector<SubstrateNode> nodes;
  std::vector<PlaceRow> rows;
  std::vector<PlacementOutcome> outcomes;  ///< parallel to rows; empty if not ok
};

PlaceReport run_place(const Scenario& scenario, QueueSetting setting,
                      std::span<const PlacementMethod> methods,
                      std::uint64_t seed, const PlaceOptions& options = {});

struct CheckRow {
  std::string name;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct ValidationReport {
  std::vector<CheckRow> checks;
  bool all_pass() const;
};

/// Cross-checks every designed chain and every study configuration against
/// the simulation oracles.
ValidationReport run_validate(const Scenario& scenario, QueueSetting setting,
                              std::uint64_t seed);

struct BenchOptions {
  std::vector<int> counts{10, 20, 30, 40, 50, 60};
  int repeats = 10;
  std::vector<PlacementMethod> methods{PlacementMethod::ExactILP,
                                       PlacementMethod::MMA,
                                       PlacementMethod::MDM};
  PlaceOptions place;
};

struct BenchRow {
  int requests = 0;
  PlacementMethod method = PlacementMethod::MMA;
  int instances = 0;
  int skipped = 0;
  double mean_active_nodes = 0.0;
  double mean_proposals = 0.0;
  double mean_seconds = 0.0;
};

/// Placement sweep over request counts with `repeats` seeded instances each.
std::vector<BenchRow> run_bench(const Scenario& scenario, QueueSetting setting,
                                std::uint64_t seed, const BenchOptions& options);

// CSV renderers. Every table has a fixed header; wall-clock times only
// appear in the *_timings renderers so the other files are reproducible.
std::string design_csv(const std::vector<DesignRow>& rows);
std::string study_csv(const std::vector<StudyRow>& rows);
std::string simulation_csv(const std::vector<SimulationRow>& rows);
std::string placement_csv(const PlaceReport& report);
std::string assignments_csv(const PlaceReport& report);
std::string placement_timings_csv(const PlaceReport& report);
std::string validation_csv(const ValidationReport& report);
std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_timings_csv(const std::vector<BenchRow>& rows);

}  // namespace sfcrel
