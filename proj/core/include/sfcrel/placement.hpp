#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sfcrel {

/// A processing node. `residual` is the capacity still available to the
/// placement run and starts at `capacity`.
struct SubstrateNode {
  std::string id;
  int capacity = 0;
  double reliability = 1.0;
  int residual = 0;

  static SubstrateNode make(std::string id, int capacity,
                            double reliability = 1.0) {
    return SubstrateNode{std::move(id), capacity, reliability, capacity};
  }
};

/// One designed chain to be hosted as a whole on a single node.
struct PlacementRequest {
  std::string id;
  int demand = 0;         ///< c_s, vCPUs
  std::string service;    ///< service type the demand was designed for
};

enum class PlacementMethod { ExactILP, MMA, MDM, FFD };

std::string_view to_string(PlacementMethod method) noexcept;
PlacementMethod parse_placement_method(std::string_view text);

/// Strict, complete preference orders. Requests and nodes are referred to by
/// their position in the input spans; ties in any metric fall back to that
/// position, which is what "ascending id" means throughout this module.
class PreferenceTables {
 public:
  PreferenceTables() = default;
  PreferenceTables(std::vector<std::vector<std::size_t>> request_prefs,
                   std::vector<std::vector<std::size_t>> node_prefs);

  /// pl(s): node positions, most preferred first.
  std::span<const std::size_t> of_request(std::size_t s) const {
    return request_prefs_[s];
  }
  /// pl(n): request positions, most preferred first.
  std::span<const std::size_t> of_node(std::size_t n) const {
    return node_prefs_[n];
  }

  /// Position of node n in pl(s); lower is better.
  std::size_t request_rank(std::size_t s, std::size_t n) const {
    return request_rank_[s][n];
  }
  /// Position of request s in pl(n); lower is better.
  std::size_t node_rank(std::size_t n, std::size_t s) const {
    return node_rank_[n][s];
  }

  std::size_t request_count() const noexcept { return request_prefs_.size(); }
  std::size_t node_count() const noexcept { return node_prefs_.size(); }

 private:
  std::vector<std::vector<std::size_t>> request_prefs_;
  std::vector<std::vector<std::size_t>> node_prefs_;
  std::vector<std::vector<std::size_t>> request_rank_;
  std::vector<std::vector<std::size_t>> node_rank_;
};

struct PlacementOutcome {
  PlacementMethod method = PlacementMethod::FFD;
  std::vector<std::size_t> assignment;  ///< request position -> node position
  std::vector<int> residuals;           ///< per node, after placement
  int active_nodes = 0;
  std::uint64_t proposals = 0;          ///< matching methods only
  std::uint64_t search_nodes = 0;       ///< exact method only
  bool proven_optimal = false;          ///< exact method only
};

struct ExactOptions {
  /// Stop after this many branch-and-bound nodes (0 = no limit). A stopped
  /// search returns its incumbent with `proven_optimal == false`.
  std::uint64_t node_limit = 0;
};

/// Nodes prefer larger requests; requests prefer more reliable, then larger
/// nodes.
PreferenceTables build_preferences(std::span<const PlacementRequest> requests,
                                   std::span<const SubstrateNode> nodes);

/// Minimum number of active nodes by branch and bound.
PlacementOutcome ilp_exact_place(std::span<const PlacementRequest> requests,
                                 std::span<const SubstrateNode> nodes,
                                 const ExactOptions& options = {});

/// First-fit decreasing over nodes in input order.
PlacementOutcome ffd_place(std::span<const PlacementRequest> requests,
                           std::span<const SubstrateNode> nodes);

/// Deferred acceptance with reclamation precheck and re-proposals.
PlacementOutcome mma_place(std::span<const PlacementRequest> requests,
                           std::span<const SubstrateNode> nodes,
                           const PreferenceTables& prefs);

/// Classical many-to-one deferred acceptance: a better proposer that does
/// not fit evicts every lesser accepted request, and rejected or evicted
/// requests never return to that node.
PlacementOutcome mdm_place(std::span<const PlacementRequest> requests,
                           std::span<const SubstrateNode> nodes,
                           const PreferenceTables& prefs);

/// True iff no request s and node n exist where s prefers n to its own node
/// and n could take s, either in its residual capacity or by dropping
/// requests it likes strictly less than s.
bool verify_stability(const PlacementOutcome& outcome,
                      std::span<const PlacementRequest> requests,
                      std::span<const SubstrateNode> nodes,
                      const PreferenceTables& prefs);

/// Every request on exactly one node, no node over capacity, and
/// residuals/active_nodes consistent with the assignment.
bool satisfies_constraints(const PlacementOutcome& outcome,
                           std::span<const PlacementRequest> requests,
                           std::span<const SubstrateNode> nodes);

/// Runs `method`; MMA and MDM build their own preference tables.
PlacementOutcome place(PlacementMethod method,
                       std::span<const PlacementRequest> requests,
                       std::span<const SubstrateNode> nodes);

}  // namespace sfcrel
