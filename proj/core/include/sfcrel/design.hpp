#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sfcrel/errors.hpp"
#include "sfcrel/queueing.hpp"
#include "sfcrel/reliability.hpp"

namespace sfcrel {

/// A service request: an ordered chain plus its SLA.
struct ChainSpec {
  std::string service_name;
  std::vector<VnfDescriptor> vnfs;  ///< traffic visits vnfs[i] before vnfs[i+1]
  double arrival_rate = 1.0;        ///< lambda_s, requests/s
  double delay_budget = 1.0;        ///< Psi_s, seconds
  double reliability_target = 0.5;  ///< Delta_s in (0, 1)

  /// Throws ValidationError listing every broken invariant.
  void validate() const;

  std::vector<double> service_rates() const;
  std::vector<double> vnf_reliabilities() const;
  std::vector<int> base_vcpus() const;

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

/// Output of the subchaining search.
struct SubchainResult {
  double reliability = 0.0;
  int subchains = 1;
  double delay = 0.0;
};

/// Redundancy layout chosen for one chain.
///
/// `backups` holds extra replicas per slot. For MM1 it has one row per
/// subchain (row k, column v: standbys of VNF v inside subchain k). For MMM
/// it has a single row (column v: extra depth of stage v's pool). The
/// full-backup baseline uses the MM1 layout with a single subchain.
struct DesignOutcome {
  std::string service_name;
  QueueSetting setting = QueueSetting::MM1;
  int subchains = 1;
  std::vector<std::vector<int>> backups;
  double reliability = 0.0;
  double delay = 0.0;
  int total_backups = 0;
  int vcpus = 0;
  bool feasible = true;
  std::string reason;  ///< why `feasible` is false; empty otherwise
};

/// Reliability target cannot be met on the chosen hosting. Carries the best
/// layout found so callers can still report it.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, DesignOutcome outcome)
      : Error(what), outcome_(std::move(outcome)) {}
  const DesignOutcome& outcome() const noexcept { return outcome_; }

 private:
  DesignOutcome outcome_;
};

/// Targets within this distance of the hosting ceiling are treated as
/// unreachable.
inline constexpr double kCeilingEpsilon = 1e-9;

/// A sweep of |V| backups that gains less than this ends the search.
inline constexpr double kSaturationGain = 1e-12;

/// Grows the subchain count while the delay budget holds, stopping at the
/// first count that meets the reliability target. Always returns l >= 1;
/// the returned delay may exceed the budget only when l = 1 already does.
SubchainResult subchain_design(const ChainSpec& spec, QueueSetting setting,
                               std::span<const double> node_p);

/// Adds backups one at a time, least reliable VNF first and circularly,
/// until the target is met. Throws InfeasibleError when the target is at or
/// above reliability_ceiling(node_p) (minus kCeilingEpsilon) or when
/// reliability saturates.
DesignOutcome guarantee_reliability(const ChainSpec& spec,
                                    QueueSetting setting,
                                    const SubchainResult& subchained,
                                    std::span<const double> node_p);

/// vCPUs of a layout: every primary replica costs ceil(c_v / l) and so does
/// every backup replica of VNF v.
int vcpu_bill(std::span<const int> base_vcpus, int subchains,
              const std::vector<std::vector<int>>& backups);

/// Reliability / cost / delay of a classical backup scheme. Standbys run at
/// full capacity, so delay is that of the unbacked chain.
struct BaselineResult {
  double reliability = 0.0;
  int vcpus = 0;
  double delay = 0.0;
};

/// Dedicated per-VNF standbys.
BaselineResult scb1_baseline(const ChainSpec& spec,
                             std::span<const int> vnf_backups,
                             std::span<const double> node_p);

/// Whole-chain standbys.
BaselineResult scb2_baseline(const ChainSpec& spec, int chain_backups,
                             std::span<const double> node_p);

/// Full-capacity dedicated backups, one at a time to the currently least
/// reliable stage, no subchaining. Throws InfeasibleError like
/// guarantee_reliability.
DesignOutcome full_backup_baseline(const ChainSpec& spec,
                                   std::span<const double> node_p);

/// subchain_design followed by guarantee_reliability. Never throws
/// InfeasibleError: the outcome comes back with `feasible == false` and a
/// reason instead. Also flags a bare chain that already misses the delay
/// budget.
DesignOutcome design_chain(const ChainSpec& spec, QueueSetting setting,
                           std::span<const double> node_p);

/// Non-throwing wrapper around full_backup_baseline.
DesignOutcome design_full_backup(const ChainSpec& spec,
                                 std::span<const double> node_p);

}  // namespace sfcrel
