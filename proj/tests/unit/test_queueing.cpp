#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "sfcrel/errors.hpp"
#include "sfcrel/queueing.hpp"

using namespace sfcrel;

namespace {

const std::vector<double> kFive(5, 200.0);

// Erlang C straight from its textbook definition, summed in long double.
long double erlang_c_literal(int m, long double a) {
  long double term = 1.0L;  // a^k / k!
  long double head = 0.0L;
  for (int k = 0; k < m; ++k) {
    head += term;
    term *= a / (k + 1);
  }
  const long double rho = a / m;
  const long double tail = term / (1.0L - rho);
  return tail / (head + tail);
}

// Mean sojourn of one M/M/m station: waiting time + one service time.
double mmm_sojourn_literal(double mu_total, double lambda, int m) {
  const double mu = mu_total / m;
  const long double a = lambda / mu;
  const double c = static_cast<double>(erlang_c_literal(m, a));
  return c / (m * mu - lambda) + 1.0 / mu;
}

}  // namespace

TEST(Queueing, Mm1DelaysMatchSubchainTable) {
  const double expected_ms[] = {50.0, 100.0, 150.0, 200.0};
  for (int l = 1; l <= 4; ++l) {
    EXPECT_NEAR(mm1_chain_response(kFive, 100.0, l) * 1000.0,
                expected_ms[l - 1], 1e-9);
  }
}

TEST(Queueing, MmmDelaysMatchSubchainTable) {
  const double expected_ms[] = {50.0, 66.67, 86.84, 108.70};
  for (int l = 1; l <= 4; ++l) {
    EXPECT_NEAR(chain_response(QueueSetting::MMM, kFive, 100.0, l) * 1000.0,
                expected_ms[l - 1], 0.005);
  }
}

TEST(Queueing, ErlangCMatchesLiteralFormula) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> util(0.01, 0.99);
  for (int trial = 0; trial < 400; ++trial) {
    const int m = 1 + static_cast<int>(gen() % 40);
    const double rho = util(gen);
    const double mu = 200.0;
    const double lambda = rho * mu;
    const double expected = static_cast<double>(erlang_c_literal(m, m * rho));
    EXPECT_NEAR(mmm_wait_probability(mu, lambda, m), expected, 1e-12)
        << "m=" << m << " rho=" << rho;
  }
}

TEST(Queueing, StageResponseMatchesTextbookSojourn) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(gen() % 12);
    const double mu = 50.0 + static_cast<double>(gen() % 400);
    const double lambda = mu * (0.05 + 0.9 * (gen() % 1000) / 1000.0);
    const double expected = mmm_sojourn_literal(mu, lambda, m);
    EXPECT_NEAR(mmm_stage_response(mu, lambda, m), expected,
                1e-12 * expected);
  }
}

TEST(Queueing, SingleServerPoolIsMm1) {
  EXPECT_NEAR(mmm_stage_response(200.0, 100.0, 1), 1.0 / 100.0, 1e-15);
  EXPECT_NEAR(mmm_wait_probability(200.0, 100.0, 1), 0.5, 1e-15);
}

TEST(Queueing, WaitProbabilityLimits) {
  EXPECT_LT(mmm_wait_probability(200.0, 1e-6, 4), 1e-12);
  EXPECT_GT(mmm_wait_probability(200.0, 199.999, 4), 0.999);
}

TEST(Queueing, DelayGrowsWithSubchainsAndPoolingHelps) {
  for (int l = 1; l <= 8; ++l) {
    const double mm1 = chain_response(QueueSetting::MM1, kFive, 100.0, l);
    const double mmm = chain_response(QueueSetting::MMM, kFive, 100.0, l);
    EXPECT_LE(mmm, mm1 + 1e-15);
    if (l > 1) {
      EXPECT_GT(mm1, chain_response(QueueSetting::MM1, kFive, 100.0, l - 1));
      EXPECT_GT(mmm, chain_response(QueueSetting::MMM, kFive, 100.0, l - 1));
    }
  }
}

TEST(Queueing, HeterogeneousChainSumsStages) {
  const std::vector<double> mu{150.0, 300.0, 500.0};
  const double lambda = 90.0;
  double expected = 0.0;
  for (double m : mu) expected += 2.0 / (m - lambda);
  EXPECT_NEAR(mm1_chain_response(mu, lambda, 2), expected, 1e-15);
}

TEST(Queueing, UnstableStageThrows) {
  EXPECT_THROW(mm1_chain_response(kFive, 200.0, 1), InstabilityError);
  EXPECT_THROW(mm1_chain_response(kFive, 250.0, 2), InstabilityError);
  EXPECT_THROW(mmm_stage_response(200.0, 200.0, 3), InstabilityError);
  EXPECT_THROW(mmm_wait_probability(100.0, 150.0, 2), InstabilityError);
}

TEST(Queueing, BadArgumentsThrowDomainError) {
  EXPECT_THROW(mm1_chain_response(kFive, 100.0, 0), DomainError);
  EXPECT_THROW(mmm_stage_response(200.0, 100.0, -1), DomainError);
  EXPECT_THROW(mm1_chain_response(kFive, -1.0, 1), DomainError);
  EXPECT_THROW(mm1_chain_response(std::vector<double>{0.0}, 1.0, 1),
               DomainError);
  EXPECT_THROW(mmm_stage_response(NAN, 1.0, 1), DomainError);
}

TEST(Queueing, SettingNames) {
  EXPECT_EQ(parse_queue_setting("mm1"), QueueSetting::MM1);
  EXPECT_EQ(parse_queue_setting("MMM"), QueueSetting::MMM);
  EXPECT_EQ(parse_queue_setting("M/M/1"), QueueSetting::MM1);
  EXPECT_EQ(to_string(QueueSetting::MMM), "mmm");
  EXPECT_THROW(parse_queue_setting("mm2"), DomainError);
  EXPECT_THROW(parse_queue_setting(""), DomainError);
}

TEST(Queueing, BudgetBoundaryIsFeasible) {
  EXPECT_TRUE(within_delay_budget(0.1, 0.1));
  EXPECT_TRUE(within_delay_budget(0.1 + 1e-12, 0.1));
  EXPECT_FALSE(within_delay_budget(0.1 + 1e-6, 0.1));
}
