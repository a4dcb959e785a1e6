#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sfcrel/queueing.hpp"
#include "sfcrel/structure.hpp"

namespace sfcrel {

/// How M/M/1 arrivals are spread over the subchains.
enum class SplitPolicy { random, round_robin };

struct DesConfig {
  QueueSetting setting = QueueSetting::MM1;
  std::vector<double> stages;        ///< full-capacity service rate per stage
  double arrival_rate = 1.0;
  int subchains = 1;
  std::uint64_t arrivals = 1'000'000;
  /// Leading arrivals excluded from the estimate; negative means 10%.
  std::int64_t warmup = -1;
  std::uint64_t seed = 1;
  SplitPolicy split = SplitPolicy::random;
  int batches = 30;

  /// Warmup count actually used.
  std::uint64_t effective_warmup() const;
};

/// A point estimate with a 95% confidence half-width.
struct SimEstimate {
  double mean = 0.0;
  double half_width_95 = 0.0;
  std::uint64_t samples = 0;

  friend bool operator==(const SimEstimate&, const SimEstimate&) = default;
};

/// Event-driven simulation of the chain's queueing network. Returns the
/// mean sojourn time (seconds) over post-warmup arrivals, with a batch-means
/// half-width. Throws InstabilityError for lambda >= mu at any stage and
/// DomainError for malformed configurations.
SimEstimate des_tandem(const DesConfig& cfg);

/// Components above which exhaustive enumeration refuses to run.
inline constexpr std::size_t kExhaustiveLimit = 25;

/// Sum of the probabilities of every up/down state under which the structure
/// delivers, times its node factors. Throws SizeError above kExhaustiveLimit
/// components.
double exact_structure_reliability(const RedundancyStructure& structure);

/// Monte-Carlo estimate: each trial draws every component and every node
/// factor independently. The half-width is the normal-approximation binomial
/// interval.
SimEstimate mc_structure_reliability(const RedundancyStructure& structure,
                                     std::uint64_t trials, std::uint64_t seed);

}  // namespace sfcrel
