#include "sfcrel/queueing.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "sfcrel/errors.hpp"

namespace sfcrel {

namespace {

void require_stable(double service_rate, double arrival_rate) {
  if (!(arrival_rate > 0.0) || !std::isfinite(arrival_rate)) {
    throw DomainError("arrival rate must be positive and finite, got " +
                      std::to_string(arrival_rate));
  }
  if (!(service_rate > 0.0) || !std::isfinite(service_rate)) {
    throw DomainError("service rate must be positive and finite, got " +
                      std::to_string(service_rate));
  }
  if (service_rate <= arrival_rate) {
    throw InstabilityError("unstable stage: service rate " +
                           std::to_string(service_rate) +
                           " <= arrival rate " + std::to_string(arrival_rate));
  }
}

void require_subchains(int subchains) {
  if (subchains < 1) {
    throw DomainError("subchain count must be >= 1, got " +
                      std::to_string(subchains));
  }
}

}  // namespace

std::string_view to_string(QueueSetting setting) noexcept {
  return setting == QueueSetting::MM1 ? "mm1" : "mmm";
}

QueueSetting parse_queue_setting(std::string_view text) {
  std::string lower(text);
  for (auto& c : lower) c = static_cast<char>(std::tolower(c));
  if (lower == "mm1" || lower == "m/m/1") return QueueSetting::MM1;
  if (lower == "mmm" || lower == "m/m/m") return QueueSetting::MMM;
  throw DomainError("unknown queue setting '" + std::string(text) +
                    "' (expected mm1 or mmm)");
}

bool within_delay_budget(double delay, double budget) noexcept {
  return delay <= budget + kDelayTolerance;
}

double mm1_chain_response(std::span<const double> service_rates,
                          double arrival_rate, int subchains) {
  require_subchains(subchains);
  double total = 0.0;
  for (double mu : service_rates) {
    require_stable(mu, arrival_rate);
    total += 1.0 / (mu - arrival_rate);
  }
  return static_cast<double>(subchains) * total;
}

double mmm_wait_probability(double service_rate, double arrival_rate,
                            int servers) {
  require_subchains(servers);
  require_stable(service_rate, arrival_rate);
  // Offered load a = lambda / (mu / m), utilisation rho = a / m.
  // Erlang B by its forward recurrence never forms a^m / m! explicitly, so
  // it stays finite for any pool size; Erlang C follows from B.
  const double m = static_cast<double>(servers);
  const double a = m * arrival_rate / service_rate;
  const double rho = arrival_rate / service_rate;
  double blocking = 1.0;
  for (int k = 1; k <= servers; ++k) {
    blocking = a * blocking / (static_cast<double>(k) + a * blocking);
  }
  return blocking / (1.0 - rho * (1.0 - blocking));
}

double mmm_stage_response(double service_rate, double arrival_rate,
                          int subchains) {
  const double wait = mmm_wait_probability(service_rate, arrival_rate,
                                           subchains);
  const double l = static_cast<double>(subchains);
  const double rho = arrival_rate / service_rate;
  return (l / service_rate) * (1.0 + wait / (l * (1.0 - rho)));
}

double chain_response(QueueSetting setting,
                      std::span<const double> service_rates,
                      double arrival_rate, int subchains) {
  if (setting == QueueSetting::MM1) {
    return mm1_chain_response(service_rates, arrival_rate, subchains);
  }
  require_subchains(subchains);
  double total = 0.0;
  for (double mu : service_rates) {
    total += mmm_stage_response(mu, arrival_rate, subchains);
  }
  return total;
}

}  // namespace sfcrel
