#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sfcrel {

/// An explicit series-parallel graph of independent components.
///
/// Components (leaves) each carry an up-probability. Inner elements are
/// series ("all children up") or parallel ("any child up") compositions.
/// Hosting-node factors are kept apart: they are in series with the whole
/// structure. Elements are stored in creation order and a composite may only
/// reference elements created before it, so one forward pass evaluates the
/// structure.
class RedundancyStructure {
 public:
  using Index = std::size_t;
  enum class Kind : std::uint8_t { component, series, parallel };

  Index add_component(double probability);
  Index add_series(std::vector<Index> children);
  Index add_parallel(std::vector<Index> children);

  /// The root defaults to the last element added.
  void set_root(Index root);
  Index root() const;

  void set_node_factors(std::vector<double> node_p);
  std::span<const double> node_factors() const noexcept { return node_p_; }

  std::size_t component_count() const noexcept { return leaf_p_.size(); }
  std::span<const double> component_probabilities() const noexcept {
    return leaf_p_;
  }
  bool empty() const noexcept { return elements_.empty(); }

  /// Whether the structure (without node factors) delivers service when
  /// component j is up iff `up[j]` is true.
  bool delivers(std::span<const bool> up) const;
  bool delivers(std::span<const bool> up, std::vector<char>& scratch) const;

  /// Same, with component j's state packed into bit j (<= 64 components).
  bool delivers(std::uint64_t up_mask) const;

  /// Allocation-free variant for tight loops; `scratch` is reused.
  bool delivers(std::uint64_t up_mask, std::vector<char>& scratch) const;

 private:
  struct Element {
    Kind kind;
    Index leaf = 0;                 // component: index into leaf_p_
    std::vector<Index> children;    // series / parallel
  };

  Index add_composite(Kind kind, std::vector<Index> children);

  template <typename LeafUp>
  bool evaluate(LeafUp&& leaf_up, std::vector<char>& value) const;

  std::vector<Element> elements_;
  std::vector<double> leaf_p_;
  std::vector<double> node_p_;
  Index root_ = 0;
  bool root_set_ = false;
};

// Builders for every topology the closed forms describe. VNF reliabilities
// are in chain order; `node_p` lists the distinct hosting nodes.

/// Series of single VNFs.
RedundancyStructure make_bare_chain(std::span<const double> vnf_p,
                                    std::span<const double> node_p);

/// Series of stages; stage v is `copies[v]` parallel replicas of VNF v.
/// Covers dedicated backups (copies = b_v + 1) and pooled M/M/m stages.
RedundancyStructure make_pooled_stages(std::span<const double> vnf_p,
                                       std::span<const int> copies,
                                       std::span<const double> node_p);

/// `chains` whole copies of the chain in parallel (chain-level standbys,
/// M/M/1 subchains).
RedundancyStructure make_parallel_chains(std::span<const double> vnf_p,
                                         int chains,
                                         std::span<const double> node_p);

/// Parallel subchains with per-subchain, per-stage replica counts:
/// `copies[k][v]` replicas of VNF v inside subchain k.
RedundancyStructure make_parallel_subchains(
    std::span<const double> vnf_p,
    const std::vector<std::vector<int>>& copies,
    std::span<const double> node_p);

}  // namespace sfcrel
