#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfcrel/design.hpp"
#include "sfcrel/queueing.hpp"

namespace sfcrel {

inline constexpr int kScenarioSchemaVersion = 1;

/// A flat pool of identical processing nodes.
struct SubstrateSpec {
  int node_count = 400;
  int capacity = 56;
  double reliability = 0.999;

  friend bool operator==(const SubstrateSpec&, const SubstrateSpec&) = default;
};

/// Where placement demands come from.
enum class DemandMode {
  uniform,   ///< integer uniform in [min, max]
  catalog,   ///< the designed vCPU bill of each request's service
  explicit_  ///< `values`, one per request, in order
};

std::string_view to_string(DemandMode mode) noexcept;

struct DemandSpec {
  DemandMode mode = DemandMode::uniform;
  int min = 20;
  int max = 40;
  std::vector<int> values;

  friend bool operator==(const DemandSpec&, const DemandSpec&) = default;
};

struct ServiceTemplate {
  ChainSpec chain;
  double traffic_share = 0.0;

  friend bool operator==(const ServiceTemplate&,
                         const ServiceTemplate&) = default;
};

/// Parameters of the single-chain subchaining study (one synthetic chain of
/// identical VNFs, swept over l = 1..max_subchains).
struct StudySpec {
  int vnf_count = 5;
  double vnf_reliability = 0.9;
  double service_rate = 200.0;
  double arrival_rate = 100.0;
  int vcpus = 4;
  int max_subchains = 4;
  std::uint64_t des_arrivals = 1'000'000;
  std::uint64_t mc_trials = 1'000'000;

  ChainSpec chain() const;

  friend bool operator==(const StudySpec&, const StudySpec&) = default;
};

struct Scenario {
  int schema_version = kScenarioSchemaVersion;
  std::string name;
  QueueSetting setting = QueueSetting::MMM;
  std::uint64_t seed = 1;
  int request_count = 1;
  SubstrateSpec substrate;
  DemandSpec demand;
  std::vector<ServiceTemplate> service_catalog;
  StudySpec study;

  /// Throws ValidationError listing every violated invariant.
  void validate() const;

  /// Hosting-node reliabilities used when designing a chain: every chain
  /// and its backups sit on one node.
  std::vector<double> design_nodes() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Parses and validates scenario JSON. Malformed text or a schema mismatch
/// (unknown field, missing field, wrong type) raises ParseError; invariant
/// violations raise ValidationError.
Scenario parse_scenario(std::string_view text);

/// Reads `path` and calls parse_scenario. A missing file is a ParseError.
Scenario load_scenario(const std::filesystem::path& path);

/// Canonical JSON text for `scenario`; parse_scenario reads it back equal.
std::string write_scenario(const Scenario& scenario);

}  // namespace sfcrel
