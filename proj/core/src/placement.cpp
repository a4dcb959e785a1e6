#include "sfcrel/placement.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <limits>
#include <numeric>

#include "sfcrel/errors.hpp"

namespace sfcrel {

namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

// Checks done before any method runs: every request fits some node and the
// substrate holds the total demand.
void check_resources(std::span<const PlacementRequest> requests,
                     std::span<const SubstrateNode> nodes) {
  long long total_demand = 0;
  long long total_capacity = 0;
  int largest = 0;
  for (const auto& n : nodes) {
    if (n.capacity <= 0 || n.residual < 0 || n.residual > n.capacity) {
      throw DomainError("node '" + n.id + "' needs 0 <= residual <= capacity"
                        " and a positive capacity");
    }
    if (!(n.reliability > 0.0 && n.reliability <= 1.0)) {
      throw DomainError("node '" + n.id + "' reliability must lie in (0, 1]");
    }
    total_capacity += n.residual;
    largest = std::max(largest, n.residual);
  }
  for (const auto& r : requests) {
    if (r.demand <= 0) {
      throw DomainError("request '" + r.id + "' must have a positive demand");
    }
    if (r.demand > largest) {
      throw UnplaceableError("request '" + r.id + "' needs " +
                             std::to_string(r.demand) +
                             " vCPUs but the largest node offers " +
                             std::to_string(largest));
    }
    total_demand += r.demand;
  }
  if (total_demand > total_capacity) {
    throw CapacityExhaustedError(
        "total demand " + std::to_string(total_demand) +
        " exceeds total capacity " + std::to_string(total_capacity));
  }
}

PlacementOutcome finish(PlacementMethod method,
                        std::vector<std::size_t> assignment,
                        std::span<const PlacementRequest> requests,
                        std::span<const SubstrateNode> nodes) {
  PlacementOutcome out;
  out.method = method;
  out.assignment = std::move(assignment);
  out.residuals.resize(nodes.size());
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    out.residuals[n] = nodes[n].residual;
  }
  std::vector<bool> used(nodes.size(), false);
  for (std::size_t s = 0; s < requests.size(); ++s) {
    out.residuals[out.assignment[s]] -= requests[s].demand;
    used[out.assignment[s]] = true;
  }
  out.active_nodes =
      static_cast<int>(std::count(used.begin(), used.end(), true));
  return out;
}

std::vector<std::size_t> decreasing_demand_order(
    std::span<const PlacementRequest> requests) {
  std::vector<std::size_t> order(requests.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return requests[a].demand > requests[b].demand;
                   });
  return order;
}

// ---------------------------------------------------------------------------
// Lower bounds for identical bins of size `cap`.

// Martello-Toth L2.
int bound_l2(const std::vector<int>& sizes, int cap) {
  long long sum = 0;
  for (int s : sizes) sum += s;
  int best = static_cast<int>((sum + cap - 1) / cap);
  std::vector<int> thresholds{0};
  for (int s : sizes) {
    if (2 * s <= cap) thresholds.push_back(s);
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());
  for (int k : thresholds) {
    long long big = 0;        // |J1| + |J2|
    long long mid_count = 0;  // |J2|
    long long mid_sum = 0;
    long long small_sum = 0;  // sum of J3
    for (int s : sizes) {
      if (s > cap - k) {
        ++big;
      } else if (2 * s > cap) {
        ++big;
        ++mid_count;
        mid_sum += s;
      } else if (s >= k) {
        small_sum += s;
      }
    }
    const long long spill = small_sum - (mid_count * cap - mid_sum);
    const long long extra = spill > 0 ? (spill + cap - 1) / cap : 0;
    best = std::max(best, static_cast<int>(big + extra));
  }
  return best;
}

// When no three items fit together every bin holds at most two, so the bin
// count is at least (items - maximum pairing). Greedy two-pointer pairing is
// maximum for the "sum fits" compatibility relation. Returns 0 when the
// premise does not hold.
int bound_pairing(std::vector<int> sizes, int cap) {
  if (sizes.size() < 3) return 0;
  std::sort(sizes.begin(), sizes.end());
  if (static_cast<long long>(sizes[0]) + sizes[1] + sizes[2] <= cap) return 0;
  std::size_t lo = 0;
  std::size_t hi = sizes.size() - 1;
  int pairs = 0;
  while (lo < hi) {
    if (sizes[lo] + sizes[hi] <= cap) {
      ++pairs;
      ++lo;
    }
    --hi;
  }
  return static_cast<int>(sizes.size()) - pairs;
}

// ---------------------------------------------------------------------------

class BranchAndBound {
 public:
  BranchAndBound(std::span<const PlacementRequest> requests,
                 std::span<const SubstrateNode> nodes,
                 const ExactOptions& options)
      : requests_(requests), nodes_(nodes), options_(options) {
    order_ = decreasing_demand_order(requests);
    for (std::size_t i : order_) demand_.push_back(requests[i].demand);
    suffix_.assign(demand_.size() + 1, 0);
    for (std::size_t i = demand_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1] + demand_[i];
    }
    // Nodes of equal residual capacity are interchangeable and no solution
    // opens more nodes than there are requests, so only the first
    // |requests| nodes of each capacity take part in the search.
    std::vector<std::pair<int, std::size_t>> kept_per_capacity;
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      const int c = nodes[n].residual;
      if (c == 0) continue;
      auto it = std::find_if(kept_per_capacity.begin(), kept_per_capacity.end(),
                             [&](const auto& e) { return e.first == c; });
      if (it == kept_per_capacity.end()) {
        kept_per_capacity.emplace_back(c, 0);
        it = std::prev(kept_per_capacity.end());
      }
      if (it->second == requests.size()) continue;
      ++it->second;
      cap_.push_back(c);
      node_of_.push_back(n);
    }
    uniform_ = std::adjacent_find(cap_.begin(), cap_.end(),
                                  std::not_equal_to<>()) == cap_.end();
    residual_ = cap_;
    open_.assign(cap_.size(), false);
    slot_.assign(demand_.size(), kUnassigned);
  }

  PlacementOutcome solve() {
    seed_incumbent();
    root_bound_ = lower_bound(0);
    if (best_count_ > root_bound_) {
      aborted_ = false;
      dfs(0);
    }
    if (best_count_ == kNone) {
      throw CapacityExhaustedError(
          "no packing of the requests into the available nodes exists");
    }
    std::vector<std::size_t> assignment(requests_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      assignment[order_[i]] = node_of_[best_slot_[i]];
    }
    PlacementOutcome out = finish(PlacementMethod::ExactILP,
                                  std::move(assignment), requests_, nodes_);
    out.search_nodes = visited_;
    out.proven_optimal = !aborted_;
    return out;
  }

 private:
  static constexpr int kNone = std::numeric_limits<int>::max();

  void offer(const std::vector<std::size_t>& slots) {
    std::vector<bool> used(cap_.size(), false);
    for (std::size_t n : slots) used[n] = true;
    const int count = static_cast<int>(std::count(used.begin(), used.end(), true));
    if (count < best_count_) {
      best_count_ = count;
      best_slot_ = slots;
    }
  }

  void seed_incumbent() {
    // First fit decreasing in sorted order.
    std::vector<int> residual = cap_;
    std::vector<std::size_t> slots(demand_.size(), kUnassigned);
    bool complete = true;
    for (std::size_t i = 0; i < demand_.size() && complete; ++i) {
      complete = false;
      for (std::size_t n = 0; n < residual.size(); ++n) {
        if (residual[n] >= demand_[i]) {
          residual[n] -= demand_[i];
          slots[i] = n;
          complete = true;
          break;
        }
      }
    }
    if (complete) offer(slots);

    // With identical bins and at most two items per bin, the greedy pairing
    // is itself an optimal packing.
    if (!uniform_ || cap_.empty()) return;
    const int cap = cap_.front();
    if (bound_pairing(demand_, cap) == 0) return;
    std::size_t lo_idx = demand_.size();  // demand_ is non-increasing
    std::size_t hi_idx = 0;
    std::size_t bin = 0;
    std::fill(slots.begin(), slots.end(), kUnassigned);
    while (hi_idx < lo_idx) {
      if (bin >= cap_.size()) return;
      if (lo_idx - 1 > hi_idx && demand_[hi_idx] + demand_[lo_idx - 1] <= cap) {
        slots[lo_idx - 1] = bin;
        --lo_idx;
      }
      slots[hi_idx] = bin;
      ++hi_idx;
      ++bin;
    }
    offer(slots);
  }

  int lower_bound(std::size_t next) const {
    int open_count = 0;
    long long open_residual = 0;
    for (std::size_t n = 0; n < cap_.size(); ++n) {
      if (open_[n]) {
        ++open_count;
        open_residual += residual_[n];
      }
    }
    if (uniform_ && !cap_.empty()) {
      const int cap = cap_.front();
      std::vector<int> sizes;
      sizes.reserve(open_count + demand_.size() - next);
      for (std::size_t n = 0; n < cap_.size(); ++n) {
        if (open_[n]) sizes.push_back(cap - residual_[n]);
      }
      sizes.insert(sizes.end(), demand_.begin() + static_cast<long>(next),
                   demand_.end());
      return std::max({open_count, bound_l2(sizes, cap),
                       bound_pairing(sizes, cap)});
    }
    // Mixed capacities: cover the spill with the largest unopened nodes.
    long long spill = suffix_[next] - open_residual;
    std::vector<int> closed;
    for (std::size_t n = 0; n < cap_.size(); ++n) {
      if (!open_[n]) closed.push_back(cap_[n]);
    }
    std::sort(closed.rbegin(), closed.rend());
    int extra = 0;
    for (int c : closed) {
      if (spill <= 0) break;
      spill -= c;
      ++extra;
    }
    if (spill > 0) return kNone;
    return open_count + extra;
  }

  void place(std::size_t i, std::size_t n) {
    residual_[n] -= demand_[i];
    slot_[i] = n;
  }

  void unplace(std::size_t i, std::size_t n) {
    residual_[n] += demand_[i];
    slot_[i] = kUnassigned;
  }

  void dfs(std::size_t i) {
    if (aborted_ || best_count_ == root_bound_) return;
    if (options_.node_limit != 0 && visited_ >= options_.node_limit) {
      aborted_ = true;
      return;
    }
    ++visited_;
    if (i == demand_.size()) {
      offer(slot_);
      return;
    }
    const int bound = lower_bound(i);
    if (bound >= best_count_) return;

    const int d = demand_[i];
    // An item that exactly fills an open node belongs there.
    for (std::size_t n = 0; n < cap_.size(); ++n) {
      if (open_[n] && residual_[n] == d) {
        place(i, n);
        dfs(i + 1);
        unplace(i, n);
        return;
      }
    }

    // Open nodes, tightest first; nodes with equal residuals are
    // interchangeable for the rest of the search.
    std::vector<std::size_t> candidates;
    for (std::size_t n = 0; n < cap_.size(); ++n) {
      if (open_[n] && residual_[n] >= d) candidates.push_back(n);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t a, std::size_t b) {
                       return residual_[a] < residual_[b];
                     });
    int last_residual = -1;
    for (std::size_t n : candidates) {
      if (residual_[n] == last_residual) continue;
      last_residual = residual_[n];
      place(i, n);
      dfs(i + 1);
      unplace(i, n);
    }

    // Closed nodes: one per distinct capacity, lowest position first.
    std::vector<int> tried;
    for (std::size_t n = 0; n < cap_.size(); ++n) {
      if (open_[n] || cap_[n] < d) continue;
      if (std::find(tried.begin(), tried.end(), cap_[n]) != tried.end()) {
        continue;
      }
      tried.push_back(cap_[n]);
      open_[n] = true;
      place(i, n);
      dfs(i + 1);
      unplace(i, n);
      open_[n] = false;
    }
  }

  std::span<const PlacementRequest> requests_;
  std::span<const SubstrateNode> nodes_;
  ExactOptions options_;

  std::vector<std::size_t> order_;  // search position -> request position
  std::vector<int> demand_;         // non-increasing
  std::vector<long long> suffix_;
  std::vector<int> cap_;
  std::vector<std::size_t> node_of_;  // search node -> input position
  bool uniform_ = true;

  std::vector<int> residual_;
  std::vector<bool> open_;
  std::vector<std::size_t> slot_;

  int best_count_ = kNone;
  std::vector<std::size_t> best_slot_;
  int root_bound_ = 0;
  std::uint64_t visited_ = 0;
  bool aborted_ = false;
};

// ---------------------------------------------------------------------------
// Deferred acceptance.

enum class Matching { modified, classical };

// Guards against a non-terminating run on adversarial preference tables.
constexpr std::uint64_t kProposalCeiling = 50'000'000;

PlacementOutcome deferred_acceptance(Matching kind,
                                     std::span<const PlacementRequest> requests,
                                     std::span<const SubstrateNode> nodes,
                                     const PreferenceTables& prefs) {
  if (prefs.request_count() != requests.size() ||
      prefs.node_count() != nodes.size()) {
    throw DomainError("preference tables do not match the instance");
  }
  check_resources(requests, nodes);

  const std::size_t n_nodes = nodes.size();
  std::vector<int> residual(n_nodes);
  for (std::size_t n = 0; n < n_nodes; ++n) residual[n] = nodes[n].residual;
  std::vector<std::vector<std::size_t>> hosted(n_nodes);
  std::vector<std::size_t> assigned(requests.size(), kUnassigned);
  // Marked nodes always form a prefix of pl(s): a request only moves down
  // its list, and an eviction leaves the evicting node unmarked.
  std::vector<std::size_t> cursor(requests.size(), 0);
  std::uint64_t proposals = 0;

  auto evict = [&](std::size_t n, std::size_t victim, bool mark) {
    auto& on = hosted[n];
    on.erase(std::find(on.begin(), on.end(), victim));
    residual[n] += requests[victim].demand;
    assigned[victim] = kUnassigned;
    if (mark) ++cursor[victim];
  };
  auto accept = [&](std::size_t n, std::size_t s) {
    hosted[n].push_back(s);
    residual[n] -= requests[s].demand;
    assigned[s] = n;
  };

  // Room node n could free for s: residual plus everything it likes less.
  auto room_for = [&](std::size_t s, std::size_t n) {
    long long room = residual[n];
    for (std::size_t t : hosted[n]) {
      if (prefs.node_rank(n, t) > prefs.node_rank(n, s)) {
        room += requests[t].demand;
      }
    }
    return room;
  };

  // Reclaiming least-preferred-first can free more than the newcomer takes,
  // which may reopen a node for a request it turned down earlier. Such a
  // request withdraws and proposes there again; returns false once no
  // request is in that position.
  auto reopen_one = [&]() {
    for (std::size_t s = 0; s < requests.size(); ++s) {
      const std::size_t mine = prefs.request_rank(s, assigned[s]);
      for (std::size_t pos = 0; pos < mine; ++pos) {
        const std::size_t n = prefs.of_request(s)[pos];
        if (room_for(s, n) >= requests[s].demand) {
          evict(assigned[s], s, /*mark=*/false);
          cursor[s] = pos;
          return true;
        }
      }
    }
    return false;
  };

  std::vector<std::size_t> round;
  for (;;) {
    round.clear();
    for (std::size_t s = 0; s < requests.size(); ++s) {
      if (assigned[s] == kUnassigned) round.push_back(s);
    }
    if (round.empty()) {
      if (kind == Matching::modified && reopen_one()) continue;
      break;
    }

    for (std::size_t s : round) {
      if (cursor[s] >= n_nodes) {
        throw CapacityExhaustedError("request '" + requests[s].id +
                                     "' was rejected by every node");
      }
      if (++proposals > kProposalCeiling) {
        throw std::logic_error("deferred acceptance did not converge");
      }
      const std::size_t n = prefs.of_request(s)[cursor[s]];
      const int need = requests[s].demand;
      if (residual[n] >= need) {
        accept(n, s);
        continue;
      }

      // Accepted requests the node likes less than s, least preferred first.
      std::vector<std::size_t> lesser;
      for (std::size_t t : hosted[n]) {
        if (prefs.node_rank(n, t) > prefs.node_rank(n, s)) lesser.push_back(t);
      }
      std::sort(lesser.begin(), lesser.end(),
                [&](std::size_t a, std::size_t b) {
                  return prefs.node_rank(n, a) > prefs.node_rank(n, b);
                });

      if (kind == Matching::modified) {
        long long reclaimable = 0;
        for (std::size_t t : lesser) reclaimable += requests[t].demand;
        if (!lesser.empty() && residual[n] + reclaimable >= need) {
          for (std::size_t t : lesser) {
            if (residual[n] >= need) break;
            evict(n, t, /*mark=*/false);
          }
          accept(n, s);
        } else {
          ++cursor[s];
        }
      } else {
        for (std::size_t t : lesser) evict(n, t, /*mark=*/true);
        if (residual[n] >= need) {
          accept(n, s);
        } else {
          ++cursor[s];
        }
      }
    }
  }

  PlacementOutcome out =
      finish(kind == Matching::modified ? PlacementMethod::MMA
                                        : PlacementMethod::MDM,
             std::move(assigned), requests, nodes);
  out.proposals = proposals;
  return out;
}

std::string lower_case(std::string_view text) {
  std::string out(text);
  for (auto& c : out) c = static_cast<char>(std::tolower(c));
  return out;
}

}  // namespace

std::string_view to_string(PlacementMethod method) noexcept {
  switch (method) {
    case PlacementMethod::ExactILP:
      return "ilp";
    case PlacementMethod::MMA:
      return "mma";
    case PlacementMethod::MDM:
      return "mdm";
    case PlacementMethod::FFD:
      return "ffd";
  }
  return "?";
}

PlacementMethod parse_placement_method(std::string_view text) {
  const std::string m = lower_case(text);
  if (m == "ilp" || m == "exact" || m == "exactilp") {
    return PlacementMethod::ExactILP;
  }
  if (m == "mma") return PlacementMethod::MMA;
  if (m == "mdm") return PlacementMethod::MDM;
  if (m == "ffd") return PlacementMethod::FFD;
  throw DomainError("unknown placement method '" + std::string(text) +
                    "' (expected ilp, mma, mdm or ffd)");
}

PreferenceTables::PreferenceTables(
    std::vector<std::vector<std::size_t>> request_prefs,
    std::vector<std::vector<std::size_t>> node_prefs)
    : request_prefs_(std::move(request_prefs)),
      node_prefs_(std::move(node_prefs)) {
  const std::size_t n_req = request_prefs_.size();
  const std::size_t n_nodes = node_prefs_.size();
  auto ranks = [](const std::vector<std::vector<std::size_t>>& lists,
                  std::size_t universe, const char* who) {
    std::vector<std::vector<std::size_t>> rank(
        lists.size(), std::vector<std::size_t>(universe, kUnassigned));
    for (std::size_t i = 0; i < lists.size(); ++i) {
      if (lists[i].size() != universe) {
        throw DomainError(std::string(who) +
                          " preference list is not complete");
      }
      for (std::size_t pos = 0; pos < lists[i].size(); ++pos) {
        const std::size_t x = lists[i][pos];
        if (x >= universe || rank[i][x] != kUnassigned) {
          throw DomainError(std::string(who) +
                            " preference list is not a strict order");
        }
        rank[i][x] = pos;
      }
    }
    return rank;
  };
  request_rank_ = ranks(request_prefs_, n_nodes, "request");
  node_rank_ = ranks(node_prefs_, n_req, "node");
}

PreferenceTables build_preferences(std::span<const PlacementRequest> requests,
                                   std::span<const SubstrateNode> nodes) {
  std::vector<std::size_t> by_demand(requests.size());
  std::iota(by_demand.begin(), by_demand.end(), std::size_t{0});
  std::stable_sort(by_demand.begin(), by_demand.end(),
                   [&](std::size_t a, std::size_t b) {
                     return requests[a].demand > requests[b].demand;
                   });
  std::vector<std::size_t> by_quality(nodes.size());
  std::iota(by_quality.begin(), by_quality.end(), std::size_t{0});
  std::stable_sort(by_quality.begin(), by_quality.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (nodes[a].reliability != nodes[b].reliability) {
                       return nodes[a].reliability > nodes[b].reliability;
                     }
                     return nodes[a].capacity > nodes[b].capacity;
                   });
  return PreferenceTables(
      std::vector<std::vector<std::size_t>>(requests.size(), by_quality),
      std::vector<std::vector<std::size_t>>(nodes.size(), by_demand));
}

PlacementOutcome ilp_exact_place(std::span<const PlacementRequest> requests,
                                 std::span<const SubstrateNode> nodes,
                                 const ExactOptions& options) {
  check_resources(requests, nodes);
  return BranchAndBound(requests, nodes, options).solve();
}

PlacementOutcome ffd_place(std::span<const PlacementRequest> requests,
                           std::span<const SubstrateNode> nodes) {
  check_resources(requests, nodes);
  std::vector<int> residual(nodes.size());
  for (std::size_t n = 0; n < nodes.size(); ++n) residual[n] = nodes[n].residual;
  std::vector<std::size_t> assignment(requests.size(), kUnassigned);
  for (std::size_t s : decreasing_demand_order(requests)) {
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      if (residual[n] >= requests[s].demand) {
        residual[n] -= requests[s].demand;
        assignment[s] = n;
        break;
      }
    }
    if (assignment[s] == kUnassigned) {
      throw CapacityExhaustedError("first-fit decreasing could not place '" +
                                   requests[s].id + "'");
    }
  }
  return finish(PlacementMethod::FFD, std::move(assignment), requests, nodes);
}

PlacementOutcome mma_place(std::span<const PlacementRequest> requests,
                           std::span<const SubstrateNode> nodes,
                           const PreferenceTables& prefs) {
  return deferred_acceptance(Matching::modified, requests, nodes, prefs);
}

PlacementOutcome mdm_place(std::span<const PlacementRequest> requests,
                           std::span<const SubstrateNode> nodes,
                           const PreferenceTables& prefs) {
  return deferred_acceptance(Matching::classical, requests, nodes, prefs);
}

bool verify_stability(const PlacementOutcome& outcome,
                      std::span<const PlacementRequest> requests,
                      std::span<const SubstrateNode> nodes,
                      const PreferenceTables& prefs) {
  std::vector<std::vector<std::size_t>> hosted(nodes.size());
  for (std::size_t s = 0; s < outcome.assignment.size(); ++s) {
    hosted[outcome.assignment[s]].push_back(s);
  }
  for (std::size_t s = 0; s < requests.size(); ++s) {
    const std::size_t mine = outcome.assignment[s];
    const std::size_t my_rank = prefs.request_rank(s, mine);
    for (std::size_t pos = 0; pos < my_rank; ++pos) {
      const std::size_t n = prefs.of_request(s)[pos];
      long long room = outcome.residuals[n];
      for (std::size_t t : hosted[n]) {
        if (prefs.node_rank(n, t) > prefs.node_rank(n, s)) {
          room += requests[t].demand;
        }
      }
      if (room >= requests[s].demand) return false;
    }
  }
  return true;
}

bool satisfies_constraints(const PlacementOutcome& outcome,
                           std::span<const PlacementRequest> requests,
                           std::span<const SubstrateNode> nodes) {
  if (outcome.assignment.size() != requests.size() ||
      outcome.residuals.size() != nodes.size()) {
    return false;
  }
  std::vector<long long> load(nodes.size(), 0);
  for (std::size_t s = 0; s < requests.size(); ++s) {
    const std::size_t n = outcome.assignment[s];
    if (n >= nodes.size()) return false;
    load[n] += requests[s].demand;
  }
  int active = 0;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (load[n] > nodes[n].residual) return false;
    if (outcome.residuals[n] != nodes[n].residual - load[n]) return false;
    if (load[n] > 0) ++active;
  }
  return active == outcome.active_nodes;
}

PlacementOutcome place(PlacementMethod method,
                       std::span<const PlacementRequest> requests,
                       std::span<const SubstrateNode> nodes) {
  switch (method) {
    case PlacementMethod::ExactILP:
      return ilp_exact_place(requests, nodes);
    case PlacementMethod::FFD:
      return ffd_place(requests, nodes);
    case PlacementMethod::MMA:
      return mma_place(requests, nodes, build_preferences(requests, nodes));
    case PlacementMethod::MDM:
      return mdm_place(requests, nodes, build_preferences(requests, nodes));
  }
  throw DomainError("unknown placement method");
}

}  // namespace sfcrel
