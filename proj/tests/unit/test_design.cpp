#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sfcrel/design.hpp"
#include "sfcrel/errors.hpp"

using namespace sfcrel;

namespace {

const std::vector<double> kNode{0.999};

ChainSpec service(std::string name, double budget, double target) {
  ChainSpec s;
  s.service_name = std::move(name);
  for (const char* kind : {"NAT", "FW", "TM", "WOC", "IDPS"}) {
    s.vnfs.push_back(VnfDescriptor{kind, 0.9, 200.0, 4});
  }
  s.arrival_rate = 100.0;
  s.delay_budget = budget;
  s.reliability_target = target;
  return s;
}

const ChainSpec kWeb = service("web", 0.5, 0.9);
const ChainSpec kVoip = service("voip", 0.1, 0.999);
const ChainSpec kVideo = service("video", 0.1, 0.99);
const ChainSpec kGaming = service("gaming", 0.07, 0.99);

int backups_in(const DesignOutcome& o) {
  int total = 0;
  for (const auto& row : o.backups) {
    total = std::accumulate(row.begin(), row.end(), total);
  }
  return total;
}

void expect_consistent(const ChainSpec& spec, const DesignOutcome& o) {
  EXPECT_EQ(o.total_backups, backups_in(o));
  EXPECT_EQ(o.vcpus, vcpu_bill(spec.base_vcpus(), o.subchains, o.backups));
  if (o.feasible) {
    EXPECT_GE(o.reliability, spec.reliability_target);
    EXPECT_LE(o.delay, spec.delay_budget + kDelayTolerance);
    EXPECT_TRUE(o.reason.empty());
  } else {
    EXPECT_FALSE(o.reason.empty());
  }
}

}  // namespace

TEST(Subchaining, StopsAtFirstSufficientCount) {
  const auto r = subchain_design(kWeb, QueueSetting::MMM, kNode);
  EXPECT_EQ(r.subchains, 2);
  EXPECT_NEAR(r.reliability, 0.9500, 5e-5);
  const auto m = subchain_design(kWeb, QueueSetting::MM1, kNode);
  EXPECT_EQ(m.subchains, 3);
  EXPECT_NEAR(m.delay, 0.150, 1e-12);
}

TEST(Subchaining, StopsAtDelayBudget) {
  const auto voip = subchain_design(kVoip, QueueSetting::MM1, kNode);
  EXPECT_EQ(voip.subchains, 2);
  EXPECT_NEAR(voip.reliability, 0.8315, 5e-5);
  EXPECT_EQ(subchain_design(kVoip, QueueSetting::MMM, kNode).subchains, 3);
  const auto gaming = subchain_design(kGaming, QueueSetting::MM1, kNode);
  EXPECT_EQ(gaming.subchains, 1);
  EXPECT_NEAR(gaming.reliability, 0.5899, 5e-5);
}

TEST(Subchaining, BudgetBoundaryIsInclusive) {
  auto spec = service("edge", 0.1, 0.99);
  EXPECT_EQ(subchain_design(spec, QueueSetting::MM1, kNode).subchains, 2);
  spec.delay_budget = 0.1 - 1e-6;
  EXPECT_EQ(subchain_design(spec, QueueSetting::MM1, kNode).subchains, 1);
}

TEST(Subchaining, PropagatesInstability) {
  auto spec = kWeb;
  spec.arrival_rate = 250.0;
  EXPECT_THROW(subchain_design(spec, QueueSetting::MM1, kNode),
               InstabilityError);
}

TEST(Guarantee, SubchainedRowsMm1) {
  const auto web = design_chain(kWeb, QueueSetting::MM1, kNode);
  EXPECT_TRUE(web.feasible);
  EXPECT_EQ(web.subchains, 3);
  EXPECT_EQ(web.total_backups, 0);
  EXPECT_EQ(web.vcpus, 30);

  const auto video = design_chain(kVideo, QueueSetting::MM1, kNode);
  EXPECT_TRUE(video.feasible);
  EXPECT_EQ(video.subchains, 2);
  EXPECT_EQ(video.total_backups, 9);
  EXPECT_NEAR(video.reliability, 0.9924, 5e-5);
  EXPECT_EQ(video.vcpus, 38);

  const auto gaming = design_chain(kGaming, QueueSetting::MM1, kNode);
  EXPECT_TRUE(gaming.feasible);
  EXPECT_EQ(gaming.subchains, 1);
  EXPECT_EQ(gaming.total_backups, 10);
  EXPECT_EQ(gaming.vcpus, 60);
  expect_consistent(kWeb, web);
  expect_consistent(kVideo, video);
  expect_consistent(kGaming, gaming);
}

TEST(Guarantee, SubchainedRowsMmm) {
  const auto web = design_chain(kWeb, QueueSetting::MMM, kNode);
  EXPECT_EQ(web.subchains, 2);
  EXPECT_EQ(web.total_backups, 0);
  EXPECT_EQ(web.vcpus, 20);

  const auto video = design_chain(kVideo, QueueSetting::MMM, kNode);
  EXPECT_EQ(video.subchains, 3);
  EXPECT_EQ(video.total_backups, 0);
  EXPECT_NEAR(video.reliability, 0.9940, 5e-5);
  EXPECT_EQ(video.vcpus, 30);

  const auto gaming = design_chain(kGaming, QueueSetting::MMM, kNode);
  EXPECT_EQ(gaming.subchains, 2);
  EXPECT_EQ(gaming.total_backups, 5);
  EXPECT_NEAR(gaming.reliability, 0.9940, 5e-5);
  EXPECT_EQ(gaming.vcpus, 30);
  ASSERT_EQ(gaming.backups.size(), 1u);
  EXPECT_EQ(gaming.backups[0], (std::vector<int>{1, 1, 1, 1, 1}));
  expect_consistent(kWeb, web);
  expect_consistent(kVideo, video);
  expect_consistent(kGaming, gaming);
}

TEST(Guarantee, Mm1FillsFirstSubchainFirst) {
  const auto video = design_chain(kVideo, QueueSetting::MM1, kNode);
  ASSERT_EQ(video.backups.size(), 2u);
  EXPECT_EQ(video.backups[0], (std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_EQ(video.backups[1], (std::vector<int>{1, 1, 1, 1, 0}));
}

TEST(Guarantee, VoipHitsHostingCeiling) {
  for (auto setting : {QueueSetting::MM1, QueueSetting::MMM}) {
    const auto sub = subchain_design(kVoip, setting, kNode);
    try {
      guarantee_reliability(kVoip, setting, sub, kNode);
      FAIL() << "expected InfeasibleError";
    } catch (const InfeasibleError& e) {
      EXPECT_FALSE(e.outcome().feasible);
      EXPECT_EQ(e.outcome().subchains, setting == QueueSetting::MM1 ? 2 : 3);
      EXPECT_NE(std::string(e.what()).find("ceiling"), std::string::npos);
    }
    const auto o = design_chain(kVoip, setting, kNode);
    EXPECT_FALSE(o.feasible);
    expect_consistent(kVoip, o);
  }
}

TEST(Guarantee, NoBackupsWhenAlreadySatisfied) {
  auto spec = kGaming;
  spec.reliability_target = 0.5;
  const auto sub = subchain_design(spec, QueueSetting::MM1, kNode);
  const auto o = guarantee_reliability(spec, QueueSetting::MM1, sub, kNode);
  EXPECT_EQ(o.total_backups, 0);
  EXPECT_DOUBLE_EQ(o.reliability, sub.reliability);
  EXPECT_EQ(o.vcpus, 20);
}

TEST(Guarantee, RejectsZeroSubchains) {
  EXPECT_THROW(guarantee_reliability(kWeb, QueueSetting::MM1,
                                     SubchainResult{0.5, 0, 0.05}, kNode),
               DomainError);
}

TEST(Guarantee, BareChainOverBudgetIsFlagged) {
  auto spec = kWeb;
  spec.delay_budget = 0.01;
  const auto o = design_chain(spec, QueueSetting::MM1, kNode);
  EXPECT_FALSE(o.feasible);
  EXPECT_NE(o.reason.find("delay budget"), std::string::npos);
}

TEST(Guarantee, RandomTargetsProperty) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> target(0.3, 0.998);
  std::uniform_real_distribution<double> budget(0.04, 0.6);
  std::uniform_real_distribution<double> prob(0.8, 0.999);
  for (int trial = 0; trial < 200; ++trial) {
    auto spec = kWeb;
    spec.reliability_target = target(gen);
    spec.delay_budget = budget(gen);
    for (auto& v : spec.vnfs) v.reliability = prob(gen);
    for (auto setting : {QueueSetting::MM1, QueueSetting::MMM}) {
      const auto o = design_chain(spec, setting, kNode);
      expect_consistent(spec, o);
      if (spec.delay_budget >= 0.05) EXPECT_TRUE(o.feasible);
    }
    const auto full = design_full_backup(spec, kNode);
    expect_consistent(spec, full);
  }
}

TEST(Guarantee, ReliabilityGrowsOneBackupAtATime) {
  // Raising the target by the reliability reached so far never removes
  // backups.
  int previous = 0;
  for (double t = 0.6; t < 0.998; t += 0.01) {
    auto spec = kGaming;
    spec.reliability_target = t;
    const auto o = design_chain(spec, QueueSetting::MMM, kNode);
    ASSERT_TRUE(o.feasible);
    EXPECT_GE(o.total_backups, previous);
    previous = o.total_backups;
  }
}

TEST(VcpuBill, ResourceRule) {
  const std::vector<int> base(5, 4);
  EXPECT_EQ(vcpu_bill(base, 3, {std::vector<int>(5, 0)}), 30);
  EXPECT_EQ(vcpu_bill(base, 1, {std::vector<int>(5, 2)}), 60);
  EXPECT_EQ(vcpu_bill(base, 1, {std::vector<int>(5, 0)}), 20);
  EXPECT_EQ(vcpu_bill(base, 4, {}), 20);
  EXPECT_EQ(vcpu_bill(base, 3, {std::vector<int>{1, 1, 1, 1, 1}}), 40);
  const std::vector<int> odd{3, 5};
  EXPECT_EQ(vcpu_bill(odd, 1, {}), 8);
}

TEST(VcpuBill, Errors) {
  const std::vector<int> base(5, 4);
  EXPECT_THROW(vcpu_bill(base, 0, {}), DomainError);
  EXPECT_THROW(vcpu_bill(base, 1, {std::vector<int>(4, 0)}), DomainError);
  EXPECT_THROW(vcpu_bill(base, 1, {std::vector<int>{0, 0, -1, 0, 0}}),
               DomainError);
  EXPECT_THROW(vcpu_bill(std::vector<int>{0}, 1, {}), DomainError);
}

TEST(Baselines, ScbValues) {
  const auto b1 = scb1_baseline(kWeb, std::vector<int>(5, 1), kNode);
  EXPECT_NEAR(b1.reliability, 0.95004, 5e-6);
  EXPECT_EQ(b1.vcpus, 40);
  EXPECT_NEAR(b1.delay, 0.05, 1e-12);
  const auto b2 = scb2_baseline(kWeb, 1, kNode);
  EXPECT_NEAR(b2.reliability, 0.83147, 5e-6);
  EXPECT_EQ(b2.vcpus, 40);
  const auto z1 = scb1_baseline(kWeb, std::vector<int>(5, 0), kNode);
  const auto z2 = scb2_baseline(kWeb, 0, kNode);
  EXPECT_DOUBLE_EQ(z1.reliability, z2.reliability);
  EXPECT_EQ(z1.vcpus, 20);
  EXPECT_EQ(z2.vcpus, 20);
  EXPECT_THROW(scb2_baseline(kWeb, -1, kNode), DomainError);
}

TEST(Baselines, FullBackupRows) {
  const auto web = design_full_backup(kWeb, kNode);
  EXPECT_EQ(web.total_backups, 5);
  EXPECT_NEAR(web.reliability, 0.9500, 5e-5);
  EXPECT_EQ(web.vcpus, 40);
  for (const auto& spec : {kVideo, kGaming}) {
    const auto o = design_full_backup(spec, kNode);
    EXPECT_TRUE(o.feasible);
    EXPECT_EQ(o.total_backups, 10);
    EXPECT_NEAR(o.reliability, 0.9940, 5e-5);
    EXPECT_EQ(o.vcpus, 60);
  }
  EXPECT_FALSE(design_full_backup(kVoip, kNode).feasible);
  EXPECT_THROW(full_backup_baseline(kVoip, kNode), InfeasibleError);
  auto easy = kWeb;
  easy.reliability_target = 0.5;
  EXPECT_EQ(full_backup_baseline(easy, kNode).total_backups, 0);
}

TEST(Baselines, SubchainingDominatesFullBackup) {
  for (const auto& spec : {kWeb, kVideo, kGaming}) {
    const auto full = design_full_backup(spec, kNode);
    for (auto setting : {QueueSetting::MM1, QueueSetting::MMM}) {
      const auto o = design_chain(spec, setting, kNode);
      EXPECT_LE(o.total_backups, full.total_backups) << spec.service_name;
      EXPECT_LE(o.vcpus, full.vcpus) << spec.service_name;
    }
  }
}

TEST(ChainSpecValidation, ListsEveryProblem) {
  ChainSpec bad;
  bad.service_name = "bad";
  bad.vnfs.push_back(VnfDescriptor{"NAT", 1.5, -1.0, 0});
  bad.arrival_rate = 0.0;
  bad.delay_budget = -1.0;
  bad.reliability_target = 1.0;
  try {
    bad.validate();
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.problems().size(), 6u);
  }
  ChainSpec empty;
  EXPECT_THROW(empty.validate(), ValidationError);
  EXPECT_THROW(design_chain(empty, QueueSetting::MM1, kNode), ValidationError);
  auto nan = kWeb;
  nan.delay_budget = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(nan.validate(), ValidationError);
}
