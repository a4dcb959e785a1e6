#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace sfcrel {

/// One network function of a chain.
struct VnfDescriptor {
  std::string kind;           ///< NAT, FW, TM, WOC, VOC, IDPS, ...
  double reliability = 1.0;   ///< p_v in (0, 1]
  double service_rate = 1.0;  ///< requests/s at full capacity
  int vcpus = 1;              ///< demand at full capacity

  friend bool operator==(const VnfDescriptor&,
                         const VnfDescriptor&) = default;
};

/// Extracts p_v from each descriptor, in chain order.
std::vector<double> reliabilities_of(std::span<const VnfDescriptor> vnfs);

// All closed forms below take VNF reliabilities `vnf_p` in chain order and
// the reliabilities `node_p` of the distinct hosting nodes; the node factor
// multiplies once, outside every redundant group. Probabilities must lie in
// (0, 1] or DomainError is thrown.

/// Bare chain: prod p_v * prod p_n.
double chain_reliability(std::span<const double> vnf_p,
                         std::span<const double> node_p);

/// Dedicated backups: VNF v runs with `backups[v]` full standbys.
double dedicated_backup_reliability(std::span<const double> vnf_p,
                                    std::span<const int> backups,
                                    std::span<const double> node_p);

/// Whole-chain standbys: `chain_backups` extra copies of the full chain.
double chain_backup_reliability(std::span<const double> vnf_p,
                                int chain_backups,
                                std::span<const double> node_p);

/// `subchains` parallel M/M/1 subchains. Same value as
/// chain_backup_reliability(vnf_p, subchains - 1, node_p).
double subchain_mm1_reliability(std::span<const double> vnf_p, int subchains,
                                std::span<const double> node_p);

/// Every stage pooled `subchains` deep.
double subchain_mmm_reliability(std::span<const double> vnf_p, int subchains,
                                std::span<const double> node_p);

/// Snapshot of the incremental-backup state for parallel M/M/1 subchains.
///
/// `full_subchains` subchains carry `depth` copies of every VNF, one subchain
/// is in progress (`depth` copies on `backed`, `depth - 1` elsewhere) and
/// the remaining `subchains - 1 - full_subchains` carry `depth - 1` copies.
struct MixedMm1State {
  int subchains = 1;                 ///< l_1 >= 1
  int depth = 2;                     ///< u >= 2
  int full_subchains = 0;            ///< w in [0, l_1 - 1]
  std::vector<std::size_t> backed;   ///< Q, chain positions
};

double mixed_mm1_reliability(std::span<const double> vnf_p,
                             const MixedMm1State& state,
                             std::span<const double> node_p);

/// Pooled stages where positions in `backed` are `pool_depth + 1` deep and
/// all others `pool_depth` deep.
double mixed_mmm_reliability(std::span<const double> vnf_p, int pool_depth,
                             std::span<const std::size_t> backed,
                             std::span<const double> node_p);

/// prod p_n: what any amount of VNF redundancy can approach but not beat.
double reliability_ceiling(std::span<const double> node_p);

}  // namespace sfcrel
