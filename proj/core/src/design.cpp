#include "sfcrel/design.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace sfcrel {

namespace {

// Upper bound on the subchain search; far beyond any delay budget that
// makes sense for the rates involved.
constexpr int kMaxSubchains = 1024;

std::vector<std::size_t> ascending_reliability_order(
    std::span<const double> vnf_p) {
  std::vector<std::size_t> order(vnf_p.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return vnf_p[a] < vnf_p[b];
                   });
  return order;
}

std::string describe_ceiling(double target, double ceiling) {
  std::ostringstream os;
  os.precision(10);
  os << "reliability target " << target
     << " is not below the hosting-node ceiling " << ceiling;
  return os.str();
}

std::string describe_saturation(double reached, double target) {
  std::ostringstream os;
  os.precision(10);
  os << "reliability saturated at " << reached << " below target " << target;
  return os.str();
}

// Tracks the gain of each sweep of |V| additions for the saturation guard.
class SweepMonitor {
 public:
  SweepMonitor(std::size_t sweep, double start)
      : sweep_(sweep), start_(start) {}

  // Returns true when a completed sweep gained less than kSaturationGain.
  bool saturated_after(double reliability) {
    if (++added_ < sweep_) return false;
    const bool stalled = reliability - start_ < kSaturationGain;
    added_ = 0;
    start_ = reliability;
    return stalled;
  }

 private:
  std::size_t sweep_;
  double start_;
  std::size_t added_ = 0;
};

[[noreturn]] void give_up(DesignOutcome outcome, const std::string& reason) {
  outcome.feasible = false;
  outcome.reason = reason;
  throw InfeasibleError(reason, std::move(outcome));
}

}  // namespace

void ChainSpec::validate() const {
  std::vector<std::string> problems;
  const std::string who =
      "service '" + (service_name.empty() ? "<unnamed>" : service_name) + "': ";
  if (vnfs.empty()) problems.push_back(who + "chain has no VNFs");
  for (std::size_t i = 0; i < vnfs.size(); ++i) {
    const auto& v = vnfs[i];
    const std::string at = who + "vnf[" + std::to_string(i) + "] ";
    if (!(v.reliability > 0.0 && v.reliability <= 1.0)) {
      problems.push_back(at + "reliability must lie in (0, 1]");
    }
    if (!(v.service_rate > 0.0) || !std::isfinite(v.service_rate)) {
      problems.push_back(at + "service rate must be positive");
    }
    if (v.vcpus < 1) problems.push_back(at + "vcpus must be >= 1");
  }
  if (!(arrival_rate > 0.0) || !std::isfinite(arrival_rate)) {
    problems.push_back(who + "arrival rate must be positive");
  }
  if (!(delay_budget > 0.0) || !std::isfinite(delay_budget)) {
    problems.push_back(who + "delay budget must be positive");
  }
  if (!(reliability_target > 0.0 && reliability_target < 1.0)) {
    problems.push_back(who + "reliability target must lie in (0, 1)");
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

std::vector<double> ChainSpec::service_rates() const {
  std::vector<double> out;
  out.reserve(vnfs.size());
  for (const auto& v : vnfs) out.push_back(v.service_rate);
  return out;
}

std::vector<double> ChainSpec::vnf_reliabilities() const {
  return reliabilities_of(vnfs);
}

std::vector<int> ChainSpec::base_vcpus() const {
  std::vector<int> out;
  out.reserve(vnfs.size());
  for (const auto& v : vnfs) out.push_back(v.vcpus);
  return out;
}

SubchainResult subchain_design(const ChainSpec& spec, QueueSetting setting,
                               std::span<const double> node_p) {
  spec.validate();
  const auto rates = spec.service_rates();
  const auto vnf_p = spec.vnf_reliabilities();

  SubchainResult best{chain_reliability(vnf_p, node_p), 1,
                      chain_response(setting, rates, spec.arrival_rate, 1)};
  while (best.reliability < spec.reliability_target &&
         best.subchains < kMaxSubchains) {
    const int next = best.subchains + 1;
    const double delay =
        chain_response(setting, rates, spec.arrival_rate, next);
    if (!within_delay_budget(delay, spec.delay_budget)) break;
    best.subchains = next;
    best.delay = delay;
    best.reliability = setting == QueueSetting::MM1
                           ? subchain_mm1_reliability(vnf_p, next, node_p)
                           : subchain_mmm_reliability(vnf_p, next, node_p);
  }
  return best;
}

DesignOutcome guarantee_reliability(const ChainSpec& spec,
                                    QueueSetting setting,
                                    const SubchainResult& subchained,
                                    std::span<const double> node_p) {
  spec.validate();
  if (subchained.subchains < 1) {
    throw DomainError("subchain count must be >= 1");
  }
  const auto vnf_p = spec.vnf_reliabilities();
  const auto base = spec.base_vcpus();
  const std::size_t width = vnf_p.size();
  const int l = subchained.subchains;

  DesignOutcome out;
  out.service_name = spec.service_name;
  out.setting = setting;
  out.subchains = l;
  out.backups.assign(setting == QueueSetting::MM1 ? l : 1,
                     std::vector<int>(width, 0));
  out.reliability = subchained.reliability;
  out.delay = subchained.delay;
  out.vcpus = vcpu_bill(base, l, out.backups);

  const double target = spec.reliability_target;
  if (out.reliability >= target) return out;

  const double ceiling = reliability_ceiling(node_p);
  if (target >= ceiling - kCeilingEpsilon) {
    give_up(std::move(out), describe_ceiling(target, ceiling));
  }

  const auto order = ascending_reliability_order(vnf_p);
  SweepMonitor monitor(width, out.reliability);
  std::size_t next = 0;  // position in `order` within the current sweep

  if (setting == QueueSetting::MM1) {
    MixedMm1State state{l, 2, 0, {}};
    while (out.reliability < target) {
      const std::size_t v = order[next];
      state.backed.push_back(v);
      ++out.backups[static_cast<std::size_t>(state.full_subchains)][v];
      ++out.total_backups;
      out.reliability = mixed_mm1_reliability(vnf_p, state, node_p);
      if (++next == width) {
        next = 0;
        state.backed.clear();
        if (++state.full_subchains == l) {
          state.full_subchains = 0;
          ++state.depth;
        }
      }
      if (out.reliability < target && monitor.saturated_after(out.reliability)) {
        out.vcpus = vcpu_bill(base, l, out.backups);
        const auto reason = describe_saturation(out.reliability, target);
        give_up(std::move(out), reason);
      }
    }
  } else {
    int depth = l;
    std::vector<std::size_t> backed;
    while (out.reliability < target) {
      const std::size_t v = order[next];
      backed.push_back(v);
      ++out.backups[0][v];
      ++out.total_backups;
      out.reliability = mixed_mmm_reliability(vnf_p, depth, backed, node_p);
      if (++next == width) {
        next = 0;
        backed.clear();
        ++depth;
      }
      if (out.reliability < target && monitor.saturated_after(out.reliability)) {
        out.vcpus = vcpu_bill(base, l, out.backups);
        const auto reason = describe_saturation(out.reliability, target);
        give_up(std::move(out), reason);
      }
    }
  }
  out.vcpus = vcpu_bill(base, l, out.backups);
  return out;
}

int vcpu_bill(std::span<const int> base_vcpus, int subchains,
              const std::vector<std::vector<int>>& backups) {
  if (subchains < 1) throw DomainError("subchain count must be >= 1");
  int total = 0;
  for (std::size_t v = 0; v < base_vcpus.size(); ++v) {
    const int c = base_vcpus[v];
    if (c < 1) throw DomainError("base vCPU demand must be >= 1");
    const int share = (c + subchains - 1) / subchains;
    total += share * subchains;
    for (const auto& row : backups) {
      if (row.size() != base_vcpus.size()) {
        throw DomainError("backup layout does not match chain length");
      }
      if (row[v] < 0) throw DomainError("negative backup count");
      total += share * row[v];
    }
  }
  return total;
}

BaselineResult scb1_baseline(const ChainSpec& spec,
                             std::span<const int> vnf_backups,
                             std::span<const double> node_p) {
  spec.validate();
  BaselineResult r;
  r.reliability = dedicated_backup_reliability(spec.vnf_reliabilities(),
                                               vnf_backups, node_p);
  for (std::size_t v = 0; v < spec.vnfs.size(); ++v) {
    r.vcpus += (vnf_backups[v] + 1) * spec.vnfs[v].vcpus;
  }
  r.delay = mm1_chain_response(spec.service_rates(), spec.arrival_rate, 1);
  return r;
}

BaselineResult scb2_baseline(const ChainSpec& spec, int chain_backups,
                             std::span<const double> node_p) {
  spec.validate();
  BaselineResult r;
  r.reliability = chain_backup_reliability(spec.vnf_reliabilities(),
                                           chain_backups, node_p);
  const auto base = spec.base_vcpus();
  r.vcpus = (chain_backups + 1) * std::accumulate(base.begin(), base.end(), 0);
  r.delay = mm1_chain_response(spec.service_rates(), spec.arrival_rate, 1);
  return r;
}

DesignOutcome full_backup_baseline(const ChainSpec& spec,
                                   std::span<const double> node_p) {
  spec.validate();
  const auto vnf_p = spec.vnf_reliabilities();
  const std::size_t width = vnf_p.size();

  DesignOutcome out;
  out.service_name = spec.service_name;
  out.setting = QueueSetting::MM1;
  out.subchains = 1;
  out.backups.assign(1, std::vector<int>(width, 0));
  out.delay = mm1_chain_response(spec.service_rates(), spec.arrival_rate, 1);
  auto& counts = out.backups[0];
  auto refresh = [&] {
    out.reliability = dedicated_backup_reliability(vnf_p, counts, node_p);
    out.vcpus = vcpu_bill(spec.base_vcpus(), 1, out.backups);
  };
  refresh();

  const double target = spec.reliability_target;
  if (out.reliability >= target) return out;
  const double ceiling = reliability_ceiling(node_p);
  if (target >= ceiling - kCeilingEpsilon) {
    give_up(std::move(out), describe_ceiling(target, ceiling));
  }

  SweepMonitor monitor(width, out.reliability);
  while (out.reliability < target) {
    std::size_t weakest = 0;
    double weakest_r = 2.0;
    for (std::size_t v = 0; v < width; ++v) {
      const double r = 1.0 - std::pow(1.0 - vnf_p[v], counts[v] + 1);
      if (r < weakest_r) {
        weakest_r = r;
        weakest = v;
      }
    }
    ++counts[weakest];
    ++out.total_backups;
    refresh();
    if (out.reliability < target && monitor.saturated_after(out.reliability)) {
      const auto reason = describe_saturation(out.reliability, target);
      give_up(std::move(out), reason);
    }
  }
  return out;
}

DesignOutcome design_chain(const ChainSpec& spec, QueueSetting setting,
                           std::span<const double> node_p) {
  const SubchainResult sub = subchain_design(spec, setting, node_p);
  DesignOutcome out;
  try {
    out = guarantee_reliability(spec, setting, sub, node_p);
  } catch (const InfeasibleError& e) {
    out = e.outcome();
  }
  if (!within_delay_budget(out.delay, spec.delay_budget)) {
    out.feasible = false;
    if (!out.reason.empty()) out.reason += "; ";
    out.reason += "delay budget exceeded even without subchaining";
  }
  return out;
}

DesignOutcome design_full_backup(const ChainSpec& spec,
                                 std::span<const double> node_p) {
  DesignOutcome out;
  try {
    out = full_backup_baseline(spec, node_p);
  } catch (const InfeasibleError& e) {
    out = e.outcome();
  }
  if (!within_delay_budget(out.delay, spec.delay_budget)) {
    out.feasible = false;
    if (!out.reason.empty()) out.reason += "; ";
    out.reason += "delay budget exceeded";
  }
  return out;
}

}  // namespace sfcrel
