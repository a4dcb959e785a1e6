#include "sfcrel/reliability.hpp"

#include <cmath>
#include <string>

#include "sfcrel/errors.hpp"

namespace sfcrel {

namespace {

void require_probability(double p, const char* what) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in (0, 1], got " +
                      std::to_string(p));
  }
}

void require_probabilities(std::span<const double> vnf_p,
                           std::span<const double> node_p) {
  for (double p : vnf_p) require_probability(p, "VNF reliability");
  for (double p : node_p) require_probability(p, "node reliability");
}

void require_count(int value, int minimum, const char* what) {
  if (value < minimum) {
    throw DomainError(std::string(what) + " must be >= " +
                      std::to_string(minimum) + ", got " +
                      std::to_string(value));
  }
}

double node_factor(std::span<const double> node_p) {
  double r = 1.0;
  for (double p : node_p) r *= p;
  return r;
}

// 1 - (1 - p)^copies: at least one of `copies` replicas is up.
double redundant(double p, int copies) {
  return 1.0 - std::pow(1.0 - p, copies);
}

// Stage-wise product with `copies_on_backed` copies on the positions flagged
// in `mask` and `copies_elsewhere` on the others.
double staged_product(std::span<const double> vnf_p,
                      const std::vector<bool>& mask, int copies_on_backed,
                      int copies_elsewhere) {
  double r = 1.0;
  for (std::size_t v = 0; v < vnf_p.size(); ++v) {
    r *= redundant(vnf_p[v], mask[v] ? copies_on_backed : copies_elsewhere);
  }
  return r;
}

std::vector<bool> backed_mask(std::size_t size,
                              std::span<const std::size_t> backed) {
  std::vector<bool> mask(size, false);
  for (std::size_t q : backed) {
    if (q >= size) {
      throw DomainError("backed VNF position " + std::to_string(q) +
                        " is outside a chain of " + std::to_string(size));
    }
    if (mask[q]) {
      throw DomainError("backed VNF position " + std::to_string(q) +
                        " listed twice");
    }
    mask[q] = true;
  }
  return mask;
}

}  // namespace

std::vector<double> reliabilities_of(std::span<const VnfDescriptor> vnfs) {
  std::vector<double> out;
  out.reserve(vnfs.size());
  for (const auto& v : vnfs) out.push_back(v.reliability);
  return out;
}

double chain_reliability(std::span<const double> vnf_p,
                         std::span<const double> node_p) {
  require_probabilities(vnf_p, node_p);
  double r = 1.0;
  for (double p : vnf_p) r *= p;
  return r * node_factor(node_p);
}

double dedicated_backup_reliability(std::span<const double> vnf_p,
                                    std::span<const int> backups,
                                    std::span<const double> node_p) {
  require_probabilities(vnf_p, node_p);
  if (backups.size() != vnf_p.size()) {
    throw DomainError("backup counts (" + std::to_string(backups.size()) +
                      ") do not match chain length (" +
                      std::to_string(vnf_p.size()) + ")");
  }
  double r = 1.0;
  for (std::size_t v = 0; v < vnf_p.size(); ++v) {
    require_count(backups[v], 0, "dedicated backup count");
    r *= redundant(vnf_p[v], backups[v] + 1);
  }
  return r * node_factor(node_p);
}

double chain_backup_reliability(std::span<const double> vnf_p,
                                int chain_backups,
                                std::span<const double> node_p) {
  require_probabilities(vnf_p, node_p);
  require_count(chain_backups, 0, "chain backup count");
  double chain = 1.0;
  for (double p : vnf_p) chain *= p;
  return redundant(chain, chain_backups + 1) * node_factor(node_p);
}

double subchain_mm1_reliability(std::span<const double> vnf_p, int subchains,
                                std::span<const double> node_p) {
  require_count(subchains, 1, "subchain count");
  return chain_backup_reliability(vnf_p, subchains - 1, node_p);
}

double subchain_mmm_reliability(std::span<const double> vnf_p, int subchains,
                                std::span<const double> node_p) {
  require_probabilities(vnf_p, node_p);
  require_count(subchains, 1, "subchain count");
  double r = 1.0;
  for (double p : vnf_p) r *= redundant(p, subchains);
  return r * node_factor(node_p);
}

double mixed_mm1_reliability(std::span<const double> vnf_p,
                             const MixedMm1State& state,
                             std::span<const double> node_p) {
  require_probabilities(vnf_p, node_p);
  require_count(state.subchains, 1, "subchain count");
  require_count(state.depth, 2, "replica depth u");
  if (state.full_subchains < 0 || state.full_subchains > state.subchains - 1) {
    throw DomainError("fully backed subchain count w must lie in [0, " +
                      std::to_string(state.subchains - 1) + "], got " +
                      std::to_string(state.full_subchains));
  }
  const auto mask = backed_mask(vnf_p.size(), state.backed);
  const std::vector<bool> none(vnf_p.size(), false);

  const int u = state.depth;
  const double full = staged_product(vnf_p, none, u, u);
  const double partial = staged_product(vnf_p, mask, u, u - 1);
  const double plain = staged_product(vnf_p, none, u - 1, u - 1);

  const int w = state.full_subchains;
  const int rest = state.subchains - 1 - w;
  const double all_down = std::pow(1.0 - full, w) * (1.0 - partial) *
                          std::pow(1.0 - plain, rest);
  return (1.0 - all_down) * node_factor(node_p);
}

double mixed_mmm_reliability(std::span<const double> vnf_p, int pool_depth,
                             std::span<const std::size_t> backed,
                             std::span<const double> node_p) {
  require_probabilities(vnf_p, node_p);
  require_count(pool_depth, 1, "pool depth");
  const auto mask = backed_mask(vnf_p.size(), backed);
  return staged_product(vnf_p, mask, pool_depth + 1, pool_depth) *
         node_factor(node_p);
}

double reliability_ceiling(std::span<const double> node_p) {
  return node_factor(node_p);
}

}  // namespace sfcrel
