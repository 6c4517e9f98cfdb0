#include <gtest/gtest.h>

#include "nonneg/analysis.hpp"
#include "nonneg/simulation.hpp"

namespace nonneg {
namespace {

SimulationParams params(std::size_t n, double density, std::size_t trials) {
  SimulationParams p;
  p.n = n;
  p.density = density;
  p.trials = trials;
  return p;
}

void expect_same(const SimulationRow& a, const SimulationRow& b) {
  EXPECT_EQ(a.mean_rho, b.mean_rho);
  EXPECT_EQ(a.percent_weakly_irreducible, b.percent_weakly_irreducible);
  EXPECT_EQ(a.mean_iterations, b.mean_iterations);
  EXPECT_EQ(a.mean_blocks, b.mean_blocks);
  EXPECT_EQ(a.mean_residual, b.mean_residual);
}

TEST(SimulationTest, Validation) {
  EXPECT_THROW(params(3, 0.0, 5).validate(), std::invalid_argument);
  EXPECT_THROW(params(3, 1.5, 5).validate(), std::invalid_argument);
  EXPECT_THROW(params(0, 0.5, 5).validate(), std::invalid_argument);
  EXPECT_THROW(params(3, 0.5, 0).validate(), std::invalid_argument);
  auto p = params(3, 0.5, 5);
  p.order = 1;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  EXPECT_NO_THROW(params(3, 1.0, 5).validate());
}

TEST(SimulationTest, GeneratorIsSeededAndNested) {
  EXPECT_EQ(random_tensor(4, 3, 0.3, 9), random_tensor(4, 3, 0.3, 9));
  EXPECT_NE(random_tensor(4, 3, 0.3, 9), random_tensor(4, 3, 0.3, 10));
  const Tensor sparse = random_tensor(5, 3, 0.2, 3);
  const Tensor dense = random_tensor(5, 3, 0.6, 3);
  for (std::size_t k = 0; k < sparse.nnz(); ++k) {
    EXPECT_EQ(dense.at(sparse.indices(k)), sparse.value(k));
  }
  const Tensor full = random_tensor(3, 3, 1.0, 5);
  EXPECT_EQ(full.nnz(), 27u);
  for (std::size_t k = 0; k < full.nnz(); ++k) {
    EXPECT_GT(full.value(k), 0.0);
    EXPECT_LT(full.value(k), 1.0);
  }
}

TEST(SimulationTest, FullDensityAlwaysWeaklyIrreducible) {
  const auto row = simulate(params(4, 1.0, 20));
  EXPECT_EQ(row.percent_weakly_irreducible, 100.0);
  EXPECT_EQ(row.mean_blocks, 1.0);
  EXPECT_EQ(row.trials, 20u);
}

TEST(SimulationTest, TrialMatchesDirectComputation) {
  const auto p = params(4, 0.4, 3);
  const auto outcome = run_trial(p, 2);
  const Tensor t = random_tensor(4, 3, 0.4, p.seed + 2);
  EXPECT_EQ(outcome.weakly_irreducible, classify(t).weakly_irreducible);
}

TEST(SimulationProperty, ThreadCountInvariant) {
  auto p = params(5, 0.3, 24);
  const auto serial = simulate(p);
  p.threads = 4;
  expect_same(serial, simulate(p));
  p.threads = 0;
  expect_same(serial, simulate(p));
}

TEST(SimulationProperty, DensityTrends) {
  double previous_percent = -1.0;
  double previous_blocks = 1e9;
  for (int d = 1; d <= 9; ++d) {
    const auto row = simulate(params(3, 0.1 * d, 50));
    EXPECT_GE(row.percent_weakly_irreducible, previous_percent);
    EXPECT_LE(row.mean_blocks, previous_blocks);
    EXPECT_GE(row.percent_weakly_irreducible, 0.0);
    EXPECT_LE(row.percent_weakly_irreducible, 100.0);
    previous_percent = row.percent_weakly_irreducible;
    previous_blocks = row.mean_blocks;
  }
  EXPECT_GE(previous_percent, 70.0);
  EXPECT_GT(simulate(params(10, 0.05, 50)).mean_blocks, 1.0);
}

TEST(SimulationTest, SweepParameters) {
  const auto sweep = sweep_parameters(50, 1, 1e-6);
  ASSERT_EQ(sweep.size(), 23u);
  EXPECT_EQ(sweep.front().n, 3u);
  EXPECT_DOUBLE_EQ(sweep.front().density, 0.1);
  EXPECT_EQ(sweep.back().n, 50u);
  EXPECT_DOUBLE_EQ(sweep.back().density, 0.05);
  for (const auto& p : sweep) {
    EXPECT_EQ(p.order, 3);
    EXPECT_EQ(p.trials, 50u);
  }
}

}  // namespace
}  // namespace nonneg
