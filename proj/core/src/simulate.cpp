#include "sfcrel/simulate.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <memory>
#include <queue>
#include <string>

#include "sfcrel/errors.hpp"
#include "sfcrel/rng.hpp"

namespace sfcrel {

namespace {

// Student t quantile at 0.975 (Cornish-Fisher expansion around the normal
// quantile; within 1e-3 of the tabulated value for df >= 3).
double t975(int df) {
  if (df == 1) return 12.706;
  if (df == 2) return 4.303;
  const double z = 1.959963984540054;
  const double n = df;
  const double z3 = z * z * z;
  const double z5 = z3 * z * z;
  const double z7 = z5 * z * z;
  return z + (z3 + z) / (4 * n) + (5 * z5 + 16 * z3 + 3 * z) / (96 * n * n) +
         (3 * z7 + 19 * z5 + 17 * z3 - 15 * z) / (384 * n * n * n);
}

// Neumaier compensated sum.
class Accumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void check_config(const DesConfig& cfg) {
  if (cfg.stages.empty()) throw DomainError("a chain needs at least one stage");
  if (cfg.subchains < 1) throw DomainError("subchain count must be >= 1");
  if (!(cfg.arrival_rate > 0.0) || !std::isfinite(cfg.arrival_rate)) {
    throw DomainError("arrival rate must be positive and finite");
  }
  if (cfg.batches < 2) throw DomainError("batch means need at least 2 batches");
  if (cfg.warmup >= 0 &&
      static_cast<std::uint64_t>(cfg.warmup) >= cfg.arrivals) {
    throw DomainError("arrivals must exceed the warmup count");
  }
  if (cfg.arrivals - cfg.effective_warmup() <
      static_cast<std::uint64_t>(cfg.batches)) {
    throw DomainError("too few post-warmup arrivals for the batch count");
  }
  for (double mu : cfg.stages) {
    if (!(mu > 0.0) || !std::isfinite(mu)) {
      throw DomainError("service rates must be positive and finite");
    }
    // Per server: (mu / l) against lambda / l (M/M/1) or lambda / l per
    // server on average (M/M/m); both reduce to lambda < mu.
    if (!(cfg.arrival_rate < mu)) {
      throw InstabilityError("arrival rate " + std::to_string(cfg.arrival_rate) +
                             " is not below service rate " + std::to_string(mu));
    }
  }
}

struct Station {
  int servers = 1;
  double rate = 1.0;
  int busy = 0;
  std::deque<std::uint32_t> waiting;
};

struct Event {
  double time;
  std::uint64_t seq;
  std::uint32_t customer;
  bool external;

  bool operator>(const Event& o) const {
    return time != o.time ? time > o.time : seq > o.seq;
  }
};

}  // namespace

std::uint64_t DesConfig::effective_warmup() const {
  return warmup >= 0 ? static_cast<std::uint64_t>(warmup) : arrivals / 10;
}

SimEstimate des_tandem(const DesConfig& cfg) {
  check_config(cfg);
  if (cfg.arrivals > std::numeric_limits<std::uint32_t>::max()) {
    throw DomainError("arrival count exceeds the simulator's limit");
  }
  const auto n_stages = cfg.stages.size();
  const int l = cfg.subchains;
  const bool pooled = cfg.setting == QueueSetting::MMM;

  std::vector<Station> stations;
  const int rows = pooled ? 1 : l;
  for (int k = 0; k < rows; ++k) {
    for (double mu : cfg.stages) {
      stations.push_back(Station{pooled ? l : 1, mu / l, 0, {}});
    }
  }

  Rng rng(cfg.seed);
  const auto n = static_cast<std::uint32_t>(cfg.arrivals);
  std::vector<double> entered(n);
  std::vector<double> sojourn(n);
  std::vector<std::uint32_t> row(n, 0);
  std::vector<std::uint32_t> stage(n, 0);

  std::priority_queue<Event, std::vector<Event>, std::greater<>> events;
  std::uint64_t seq = 0;
  std::uint32_t next_customer = 0;

  auto station_of = [&](std::uint32_t c) -> Station& {
    return stations[row[c] * n_stages + stage[c]];
  };
  auto start_service = [&](Station& s, std::uint32_t c, double now) {
    events.push(Event{now + rng.exponential(s.rate), seq++, c, false});
  };
  auto arrive = [&](std::uint32_t c, double now) {
    Station& s = station_of(c);
    if (s.busy < s.servers) {
      ++s.busy;
      start_service(s, c, now);
    } else {
      s.waiting.push_back(c);
    }
  };

  events.push(Event{rng.exponential(cfg.arrival_rate), seq++, 0, true});
  while (!events.empty()) {
    const Event e = events.top();
    events.pop();
    if (e.external) {
      const std::uint32_t c = next_customer++;
      entered[c] = e.time;
      if (!pooled && l > 1) {
        row[c] = cfg.split == SplitPolicy::random
                     ? static_cast<std::uint32_t>(rng.below(l))
                     : c % static_cast<std::uint32_t>(l);
      }
      arrive(c, e.time);
      if (next_customer < n) {
        events.push(Event{e.time + rng.exponential(cfg.arrival_rate), seq++,
                          next_customer, true});
      }
      continue;
    }
    const std::uint32_t c = e.customer;
    Station& s = station_of(c);
    if (!s.waiting.empty()) {
      const std::uint32_t next = s.waiting.front();
      s.waiting.pop_front();
      start_service(s, next, e.time);
    } else {
      --s.busy;
    }
    if (++stage[c] == n_stages) {
      sojourn[c] = e.time - entered[c];
    } else {
      arrive(c, e.time);
    }
  }

  const std::uint64_t warm = cfg.effective_warmup();
  const std::uint64_t kept = n - warm;
  const auto b = static_cast<std::uint64_t>(cfg.batches);
  Accumulator total;
  std::vector<double> batch_means(b);
  for (std::uint64_t i = 0; i < b; ++i) {
    const std::uint64_t lo = warm + i * kept / b;
    const std::uint64_t hi = warm + (i + 1) * kept / b;
    Accumulator acc;
    for (std::uint64_t c = lo; c < hi; ++c) {
      acc.add(sojourn[c]);
      total.add(sojourn[c]);
    }
    batch_means[i] = acc.value() / static_cast<double>(hi - lo);
  }
  SimEstimate est;
  est.samples = kept;
  est.mean = total.value() / static_cast<double>(kept);
  double grand = 0.0;
  for (double m : batch_means) grand += m;
  grand /= static_cast<double>(b);
  double ss = 0.0;
  for (double m : batch_means) ss += (m - grand) * (m - grand);
  const double var = ss / static_cast<double>(b - 1);
  est.half_width_95 =
      t975(cfg.batches - 1) * std::sqrt(var / static_cast<double>(b));
  return est;
}

double exact_structure_reliability(const RedundancyStructure& structure) {
  const std::size_t k = structure.component_count();
  if (k > kExhaustiveLimit) {
    throw SizeError("exhaustive enumeration supports at most " +
                    std::to_string(kExhaustiveLimit) + " components, got " +
                    std::to_string(k));
  }
  if (structure.empty()) throw DomainError("structure has no elements");
  const auto p = structure.component_probabilities();

  // State probability factorises over the low and high halves of the mask.
  const std::size_t low_bits = k / 2;
  const std::size_t high_bits = k - low_bits;
  auto table = [&](std::size_t offset, std::size_t bits) {
    std::vector<double> t(std::size_t{1} << bits, 1.0);
    for (std::size_t m = 0; m < t.size(); ++m) {
      for (std::size_t j = 0; j < bits; ++j) {
        const double q = p[offset + j];
        t[m] *= ((m >> j) & 1U) ? q : 1.0 - q;
      }
    }
    return t;
  };
  const std::vector<double> low = table(0, low_bits);
  const std::vector<double> high = table(low_bits, high_bits);

  Accumulator acc;
  std::vector<char> scratch;
  const std::uint64_t low_mask = (std::uint64_t{1} << low_bits) - 1;
  const std::uint64_t states = std::uint64_t{1} << k;
  for (std::uint64_t m = 0; m < states; ++m) {
    const double w = low[m & low_mask] * high[m >> low_bits];
    if (w == 0.0) continue;
    if (structure.delivers(m, scratch)) acc.add(w);
  }
  double r = acc.value();
  for (double q : structure.node_factors()) r *= q;
  return r;
}

SimEstimate mc_structure_reliability(const RedundancyStructure& structure,
                                     std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("at least one trial is required");
  if (structure.empty()) throw DomainError("structure has no elements");
  const auto p = structure.component_probabilities();
  const auto nodes = structure.node_factors();
  Rng rng(seed);
  std::unique_ptr<bool[]> up(new bool[p.size()]);
  std::vector<char> scratch;
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (std::size_t j = 0; j < p.size(); ++j) up[j] = rng.bernoulli(p[j]);
    bool nodes_up = true;
    for (double q : nodes) nodes_up = rng.bernoulli(q) && nodes_up;
    if (nodes_up &&
        structure.delivers(std::span<const bool>(up.get(), p.size()), scratch)) {
      ++hits;
    }
  }
  SimEstimate est;
  est.samples = trials;
  est.mean = static_cast<double>(hits) / static_cast<double>(trials);
  est.half_width_95 = 1.96 * std::sqrt(est.mean * (1.0 - est.mean) /
                                       static_cast<double>(trials));
  return est;
}

}  // namespace sfcrel
