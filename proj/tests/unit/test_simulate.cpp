#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "sfcrel/errors.hpp"
#include "sfcrel/queueing.hpp"
#include "sfcrel/reliability.hpp"
#include "sfcrel/rng.hpp"
#include "sfcrel/simulate.hpp"
#include "sfcrel/structure.hpp"

using namespace sfcrel;

namespace {

const std::vector<double> kRates(5, 200.0);

DesConfig config(QueueSetting setting, int l, std::uint64_t arrivals,
                 std::uint64_t seed = 17) {
  DesConfig c;
  c.setting = setting;
  c.stages = kRates;
  c.arrival_rate = 100.0;
  c.subchains = l;
  c.arrivals = arrivals;
  c.seed = seed;
  return c;
}

std::vector<double> random_probs(std::mt19937_64& gen, std::size_t n) {
  std::uniform_real_distribution<double> d(0.5, 0.999);
  std::vector<double> p(n);
  for (auto& x : p) x = d(gen);
  return p;
}

}  // namespace

TEST(Des, TracksAnalyticMeans) {
  for (auto setting : {QueueSetting::MM1, QueueSetting::MMM}) {
    for (int l : {1, 3}) {
      const auto est = des_tandem(config(setting, l, 300'000));
      const double exact = chain_response(setting, kRates, 100.0, l);
      EXPECT_NEAR(est.mean, exact, 0.03 * exact)
          << to_string(setting) << " l=" << l;
      EXPECT_GT(est.half_width_95, 0.0);
      EXPECT_LT(est.half_width_95, 0.05 * exact);
      EXPECT_EQ(est.samples, 270'000u);
    }
  }
}

TEST(Des, RoundRobinSplitStillTracks) {
  auto cfg = config(QueueSetting::MM1, 2, 300'000);
  cfg.split = SplitPolicy::round_robin;
  const double exact = chain_response(QueueSetting::MM1, kRates, 100.0, 2);
  // Deterministic splitting smooths arrivals, so sojourn drops below the
  // Poisson-split value.
  const auto est = des_tandem(cfg);
  EXPECT_LT(est.mean, exact * 1.03);
  EXPECT_GT(est.mean, 0.5 * exact);
}

TEST(Des, LightTrafficApproachesServiceTime) {
  auto cfg = config(QueueSetting::MM1, 1, 200'000);
  cfg.arrival_rate = 0.5;
  const auto est = des_tandem(cfg);
  EXPECT_NEAR(est.mean, 5.0 / 200.0, 0.03 * 5.0 / 200.0);
}

TEST(Des, DeterministicPerSeed) {
  const auto a = des_tandem(config(QueueSetting::MMM, 2, 50'000, 3));
  const auto b = des_tandem(config(QueueSetting::MMM, 2, 50'000, 3));
  const auto c = des_tandem(config(QueueSetting::MMM, 2, 50'000, 4));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.mean, c.mean);
}

TEST(Des, WarmupHandling) {
  auto cfg = config(QueueSetting::MM1, 1, 1000);
  EXPECT_EQ(cfg.effective_warmup(), 100u);
  cfg.warmup = 0;
  EXPECT_EQ(cfg.effective_warmup(), 0u);
  EXPECT_EQ(des_tandem(cfg).samples, 1000u);
  cfg.warmup = 1000;
  EXPECT_THROW(des_tandem(cfg), DomainError);
}

TEST(Des, Errors) {
  auto unstable = config(QueueSetting::MM1, 1, 1000);
  unstable.arrival_rate = 200.0;
  EXPECT_THROW(des_tandem(unstable), InstabilityError);
  auto c = config(QueueSetting::MM1, 0, 1000);
  EXPECT_THROW(des_tandem(c), DomainError);
  c = config(QueueSetting::MM1, 1, 1000);
  c.stages.clear();
  EXPECT_THROW(des_tandem(c), DomainError);
  c = config(QueueSetting::MM1, 1, 1000);
  c.stages[2] = -1.0;
  EXPECT_THROW(des_tandem(c), DomainError);
  c = config(QueueSetting::MM1, 1, 1000);
  c.arrival_rate = 0.0;
  EXPECT_THROW(des_tandem(c), DomainError);
  c = config(QueueSetting::MM1, 1, 1000);
  c.batches = 1;
  EXPECT_THROW(des_tandem(c), DomainError);
  c = config(QueueSetting::MM1, 1, 20);
  c.batches = 30;
  EXPECT_THROW(des_tandem(c), DomainError);
}

TEST(Enumeration, MatchesClosedFormsOnRandomChains) {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + gen() % 5;
    const auto p = random_probs(gen, n);
    const std::vector<double> node{0.9 + 0.0999 * (gen() % 2)};

    EXPECT_NEAR(exact_structure_reliability(make_bare_chain(p, node)),
                chain_reliability(p, node), 1e-12);

    std::vector<int> copies(n);
    for (auto& x : copies) x = 1 + static_cast<int>(gen() % 3);
    std::vector<int> backups(copies);
    for (auto& x : backups) --x;
    EXPECT_NEAR(exact_structure_reliability(make_pooled_stages(p, copies, node)),
                dedicated_backup_reliability(p, backups, node), 1e-12);

    const int chains = 1 + static_cast<int>(gen() % (n <= 3 ? 4 : 3));
    EXPECT_NEAR(
        exact_structure_reliability(make_parallel_chains(p, chains, node)),
        chain_backup_reliability(p, chains - 1, node), 1e-12);
    EXPECT_NEAR(
        exact_structure_reliability(make_parallel_chains(p, chains, node)),
        subchain_mm1_reliability(p, chains, node), 1e-12);
  }
}

TEST(Enumeration, MatchesMixedForms) {
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + gen() % 2;
    const auto p = random_probs(gen, n);
    const std::vector<double> node{0.999, 0.995};

    MixedMm1State s;
    s.subchains = 1 + static_cast<int>(gen() % 3);
    s.depth = 2;
    s.full_subchains = static_cast<int>(gen() % s.subchains);
    for (std::size_t v = 0; v < n; ++v) {
      if (gen() % 2) s.backed.push_back(v);
    }
    std::vector<std::vector<int>> copies;
    for (int k = 0; k < s.subchains; ++k) {
      std::vector<int> row(n, s.depth - 1);
      if (k < s.full_subchains) row.assign(n, s.depth);
      if (k == s.full_subchains) {
        for (auto v : s.backed) row[v] = s.depth;
      }
      copies.push_back(row);
    }
    EXPECT_NEAR(
        exact_structure_reliability(make_parallel_subchains(p, copies, node)),
        mixed_mm1_reliability(p, s, node), 1e-12);

    const int depth = 1 + static_cast<int>(gen() % 3);
    std::vector<std::size_t> backed;
    std::vector<int> pooled(n, depth);
    for (std::size_t v = 0; v < n; ++v) {
      if (gen() % 2) {
        backed.push_back(v);
        pooled[v] = depth + 1;
      }
    }
    EXPECT_NEAR(exact_structure_reliability(make_pooled_stages(p, pooled, node)),
                mixed_mmm_reliability(p, depth, backed, node), 1e-12);
    std::vector<int> mmm(n, depth);
    EXPECT_NEAR(exact_structure_reliability(make_pooled_stages(p, mmm, node)),
                subchain_mmm_reliability(p, depth, node), 1e-12);
  }
}

TEST(Enumeration, HandBuiltBridgeFreeNetwork) {
  RedundancyStructure r;
  const auto a = r.add_component(0.9);
  const auto b = r.add_component(0.8);
  const auto c = r.add_component(0.7);
  const auto ab = r.add_series({a, b});
  r.add_parallel({ab, c});
  r.set_node_factors({0.5});
  const double expected = (1 - (1 - 0.72) * 0.3) * 0.5;
  EXPECT_NEAR(exact_structure_reliability(r), expected, 1e-15);
}

TEST(Enumeration, PerfectComponentsGiveExactlyOne) {
  const std::vector<double> p(20, 1.0);
  EXPECT_EQ(exact_structure_reliability(make_bare_chain(p, {})), 1.0);
  const auto mc = mc_structure_reliability(make_bare_chain(p, {}), 1000, 1);
  EXPECT_EQ(mc.mean, 1.0);
  EXPECT_EQ(mc.half_width_95, 0.0);
}

TEST(Enumeration, RefusesLargeStructures) {
  const std::vector<double> p(26, 0.9);
  EXPECT_THROW(exact_structure_reliability(make_bare_chain(p, {})), SizeError);
  const std::vector<double> q(25, 0.9);
  EXPECT_NEAR(exact_structure_reliability(make_bare_chain(q, {})),
              std::pow(0.9, 25), 1e-12);
  EXPECT_THROW(exact_structure_reliability(RedundancyStructure{}), DomainError);
}

TEST(MonteCarlo, AgreesWithClosedFormOnLargeStructure) {
  const std::vector<double> p(5, 0.9);
  const std::vector<double> node{0.999};
  const std::vector<int> copies(5, 10);  // 50 components
  const auto s = make_pooled_stages(p, copies, node);
  const double exact = subchain_mmm_reliability(p, 10, node);
  const auto est = mc_structure_reliability(s, 200'000, 5);
  const double se = std::sqrt(exact * (1 - exact) / 200'000.0);
  EXPECT_NEAR(est.mean, exact, 4 * se);
  EXPECT_EQ(est.samples, 200'000u);
  EXPECT_NEAR(est.half_width_95,
              1.96 * std::sqrt(est.mean * (1 - est.mean) / 200'000.0), 1e-12);
}

TEST(MonteCarlo, IntervalCoverage) {
  const std::vector<double> p{0.9, 0.85, 0.95};
  const auto s = make_parallel_chains(p, 2, std::vector<double>{0.99});
  const double exact = chain_backup_reliability(p, 1, std::vector<double>{0.99});
  int covered = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto est = mc_structure_reliability(s, 5000, derive_seed(99, seed));
    if (std::abs(est.mean - exact) <= est.half_width_95) ++covered;
  }
  EXPECT_GE(covered, 90);
}

TEST(MonteCarlo, DeterministicAndValidated) {
  const auto s = make_parallel_chains(std::vector<double>{0.9, 0.9}, 2, {});
  EXPECT_EQ(mc_structure_reliability(s, 1000, 4),
            mc_structure_reliability(s, 1000, 4));
  EXPECT_THROW(mc_structure_reliability(s, 0, 4), DomainError);
  EXPECT_THROW(mc_structure_reliability(RedundancyStructure{}, 10, 4),
               DomainError);
}

TEST(Structure, BuilderErrors) {
  RedundancyStructure r;
  EXPECT_THROW(r.add_component(0.0), DomainError);
  EXPECT_THROW(r.add_component(1.5), DomainError);
  EXPECT_THROW(r.add_series({}), DomainError);
  EXPECT_THROW(r.add_parallel({3}), DomainError);
  EXPECT_THROW(r.set_root(0), DomainError);
  EXPECT_THROW(r.root(), DomainError);
  const std::vector<double> p{0.9, 0.9};
  EXPECT_THROW(make_pooled_stages(p, std::vector<int>{1}, {}), DomainError);
  EXPECT_THROW(make_parallel_chains(p, 0, {}), DomainError);
  EXPECT_THROW(make_parallel_subchains(p, {}, {}), DomainError);
  EXPECT_THROW(make_parallel_subchains(p, {{1, 0}}, {}), DomainError);
}

TEST(Structure, DeliversByMaskAndVector) {
  const auto s = make_parallel_chains(std::vector<double>{0.9, 0.9}, 2, {});
  EXPECT_TRUE(s.delivers(std::uint64_t{0b0011}));
  EXPECT_TRUE(s.delivers(std::uint64_t{0b1100}));
  EXPECT_FALSE(s.delivers(std::uint64_t{0b0101}));
  const bool up[] = {true, true, false, false};
  EXPECT_TRUE(s.delivers(std::span<const bool>(up)));
  const bool short_state[] = {true};
  EXPECT_THROW(s.delivers(std::span<const bool>(short_state)), DomainError);
}

TEST(Rng, ReproducibleAndInRange) {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(a.next(), b.next());
  Rng r(7);
  double sum = 0.0;
  for (int i = 0; i < 100'000; ++i) {
    const double u = r.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100'000, 0.5, 0.01);
  double esum = 0.0;
  for (int i = 0; i < 100'000; ++i) esum += r.exponential(4.0);
  EXPECT_NEAR(esum / 100'000, 0.25, 0.01);
  std::vector<int> hist(6, 0);
  for (int i = 0; i < 60'000; ++i) ++hist[r.uniform_int(0, 5)];
  for (int h : hist) EXPECT_NEAR(h, 10'000, 500);
  EXPECT_EQ(r.uniform_int(3, 3), 3);
  EXPECT_LT(r.below(1), 1u);
}

TEST(Rng, Errors) {
  Rng r(1);
  EXPECT_THROW(r.exponential(0.0), DomainError);
  EXPECT_THROW(r.below(0), DomainError);
  EXPECT_THROW(r.uniform_int(2, 1), DomainError);
}

TEST(Rng, DerivedSeedsDiffer) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(5, 9), derive_seed(5, 9));
}
