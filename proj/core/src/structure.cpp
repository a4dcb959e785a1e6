#include "sfcrel/structure.hpp"

#include <string>
#include <utility>

#include "sfcrel/errors.hpp"

namespace sfcrel {

namespace {

void require_probability(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw DomainError("component probability must lie in (0, 1], got " +
                      std::to_string(p));
  }
}

}  // namespace

RedundancyStructure::Index RedundancyStructure::add_component(
    double probability) {
  require_probability(probability);
  Element e{Kind::component, leaf_p_.size(), {}};
  leaf_p_.push_back(probability);
  elements_.push_back(std::move(e));
  return elements_.size() - 1;
}

RedundancyStructure::Index RedundancyStructure::add_series(
    std::vector<Index> children) {
  return add_composite(Kind::series, std::move(children));
}

RedundancyStructure::Index RedundancyStructure::add_parallel(
    std::vector<Index> children) {
  return add_composite(Kind::parallel, std::move(children));
}

RedundancyStructure::Index RedundancyStructure::add_composite(
    Kind kind, std::vector<Index> children) {
  if (children.empty()) {
    throw DomainError("a series/parallel element needs at least one child");
  }
  for (Index c : children) {
    if (c >= elements_.size()) {
      throw DomainError("child element " + std::to_string(c) +
                        " does not exist yet");
    }
  }
  elements_.push_back(Element{kind, 0, std::move(children)});
  return elements_.size() - 1;
}

void RedundancyStructure::set_root(Index root) {
  if (root >= elements_.size()) {
    throw DomainError("root element " + std::to_string(root) +
                      " does not exist");
  }
  root_ = root;
  root_set_ = true;
}

RedundancyStructure::Index RedundancyStructure::root() const {
  if (elements_.empty()) throw DomainError("empty redundancy structure");
  return root_set_ ? root_ : elements_.size() - 1;
}

void RedundancyStructure::set_node_factors(std::vector<double> node_p) {
  for (double p : node_p) require_probability(p);
  node_p_ = std::move(node_p);
}

template <typename LeafUp>
bool RedundancyStructure::evaluate(LeafUp&& leaf_up,
                                   std::vector<char>& value) const {
  const Index top = root();
  value.resize(top + 1);
  for (Index i = 0; i <= top; ++i) {
    const Element& e = elements_[i];
    switch (e.kind) {
      case Kind::component:
        value[i] = leaf_up(e.leaf) ? 1 : 0;
        break;
      case Kind::series: {
        char v = 1;
        for (Index c : e.children) v &= value[c];
        value[i] = v;
        break;
      }
      case Kind::parallel: {
        char v = 0;
        for (Index c : e.children) v |= value[c];
        value[i] = v;
        break;
      }
    }
  }
  return value[top] != 0;
}

bool RedundancyStructure::delivers(std::span<const bool> up) const {
  std::vector<char> scratch;
  return delivers(up, scratch);
}

bool RedundancyStructure::delivers(std::span<const bool> up,
                                   std::vector<char>& scratch) const {
  if (up.size() != leaf_p_.size()) {
    throw DomainError("state vector has " + std::to_string(up.size()) +
                      " entries for " + std::to_string(leaf_p_.size()) +
                      " components");
  }
  return evaluate([&](Index leaf) { return up[leaf]; }, scratch);
}

bool RedundancyStructure::delivers(std::uint64_t up_mask) const {
  std::vector<char> scratch;
  return delivers(up_mask, scratch);
}

bool RedundancyStructure::delivers(std::uint64_t up_mask,
                                   std::vector<char>& scratch) const {
  if (leaf_p_.size() > 64) {
    throw SizeError("bit-mask evaluation supports at most 64 components");
  }
  return evaluate([&](Index leaf) { return ((up_mask >> leaf) & 1U) != 0; },
                  scratch);
}

RedundancyStructure make_bare_chain(std::span<const double> vnf_p,
                                    std::span<const double> node_p) {
  std::vector<int> ones(vnf_p.size(), 1);
  return make_pooled_stages(vnf_p, ones, node_p);
}

RedundancyStructure make_pooled_stages(std::span<const double> vnf_p,
                                       std::span<const int> copies,
                                       std::span<const double> node_p) {
  if (copies.size() != vnf_p.size()) {
    throw DomainError("replica counts do not match chain length");
  }
  return make_parallel_subchains(
      vnf_p, {std::vector<int>(copies.begin(), copies.end())}, node_p);
}

RedundancyStructure make_parallel_chains(std::span<const double> vnf_p,
                                         int chains,
                                         std::span<const double> node_p) {
  if (chains < 1) throw DomainError("need at least one chain");
  return make_parallel_subchains(
      vnf_p,
      std::vector<std::vector<int>>(static_cast<std::size_t>(chains),
                                    std::vector<int>(vnf_p.size(), 1)),
      node_p);
}

RedundancyStructure make_parallel_subchains(
    std::span<const double> vnf_p,
    const std::vector<std::vector<int>>& copies,
    std::span<const double> node_p) {
  if (vnf_p.empty()) throw DomainError("chain has no VNFs");
  if (copies.empty()) throw DomainError("need at least one subchain");
  RedundancyStructure s;
  std::vector<RedundancyStructure::Index> subchains;
  for (const auto& row : copies) {
    if (row.size() != vnf_p.size()) {
      throw DomainError("replica counts do not match chain length");
    }
    std::vector<RedundancyStructure::Index> stages;
    for (std::size_t v = 0; v < vnf_p.size(); ++v) {
      if (row[v] < 1) throw DomainError("every stage needs >= 1 replica");
      std::vector<RedundancyStructure::Index> replicas;
      for (int k = 0; k < row[v]; ++k) {
        replicas.push_back(s.add_component(vnf_p[v]));
      }
      stages.push_back(replicas.size() == 1
                           ? replicas.front()
                           : s.add_parallel(std::move(replicas)));
    }
    subchains.push_back(s.add_series(std::move(stages)));
  }
  if (subchains.size() > 1) s.add_parallel(std::move(subchains));
  s.set_node_factors(std::vector<double>(node_p.begin(), node_p.end()));
  return s;
}

}  // namespace sfcrel
