#pragma once

#include <span>
#include <string_view>

namespace sfcrel {

/// How a chain split into `l` subchains is modelled.
///
/// MM1: `l` independent subchains, each a tandem of single-server queues
///      running at mu/l and fed lambda/l (random split).
/// MMM: every stage becomes a pool of `l` servers at mu/l sharing the full
///      arrival stream.
enum class QueueSetting { MM1, MMM };

std::string_view to_string(QueueSetting setting) noexcept;

/// Accepts "mm1" / "mmm" (case-insensitive); throws DomainError otherwise.
QueueSetting parse_queue_setting(std::string_view text);

/// Absolute slack applied when a delay is compared against a budget.
inline constexpr double kDelayTolerance = 1e-9;

/// `delay <= budget` with kDelayTolerance of slack (the boundary is feasible).
bool within_delay_budget(double delay, double budget) noexcept;

/// Mean response time of `subchains` parallel M/M/1 tandems:
/// sum over stages of l / (mu_v - lambda).
double mm1_chain_response(std::span<const double> service_rates,
                          double arrival_rate, int subchains);

/// Probability that an arrival waits in an M/M/m pool of `servers` servers,
/// each at `service_rate / servers`, under `arrival_rate` (Erlang C).
double mmm_wait_probability(double service_rate, double arrival_rate,
                            int servers);

/// Mean response time of a single stage split into an M/M/m pool.
double mmm_stage_response(double service_rate, double arrival_rate,
                          int subchains);

/// Dispatch over the two settings; MMM sums mmm_stage_response per stage.
double chain_response(QueueSetting setting,
                      std::span<const double> service_rates,
                      double arrival_rate, int subchains);

}  // namespace sfcrel
