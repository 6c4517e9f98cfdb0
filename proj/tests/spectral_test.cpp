#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "nonneg/analysis.hpp"
#include "nonneg/spectral.hpp"
#include "support/fixtures.hpp"

namespace nonneg {
namespace {

constexpr double kCoupledRadius = 4.872983346207417;

TEST(SpectralTest, TwoBlocks) {
  const auto r = spectral_radius(testing::two_blocks());
  EXPECT_NEAR(r.rho, kCoupledRadius, 1e-6);
  ASSERT_EQ(r.block_results.size(), 2u);
  EXPECT_EQ(r.block_results[0].indices, (IndexSet{0, 1}));
  EXPECT_EQ(r.block_results[1].indices, IndexSet{2});
  EXPECT_EQ(r.block_results[1].value, 4.0);
  EXPECT_EQ(r.block_results[1].iterations, 1u);
  EXPECT_EQ(r.block_results[1].residual, 0.0);
  EXPECT_EQ(r.argmax_block, 0u);
  EXPECT_EQ(r.total_iterations, 15u);
  ASSERT_TRUE(r.assembled_vector.has_value());
  EXPECT_NEAR((*r.assembled_vector)[0], 0.468116718581024, 1e-6);
  EXPECT_NEAR((*r.assembled_vector)[1], 0.531883281418976, 1e-6);
  EXPECT_EQ((*r.assembled_vector)[2], 0.0);
  EXPECT_LE(r.assembled_residual, r.certification_tolerance);
}

TEST(SpectralTest, ZeroRadiusFixtures) {
  const auto lone = spectral_radius(testing::lone_entry());
  EXPECT_EQ(lone.rho, 0.0);
  EXPECT_EQ(lone.block_results.size(), 2u);

  const auto zero = spectral_radius(Tensor::zero(3, 3));
  EXPECT_EQ(zero.rho, 0.0);
  EXPECT_EQ(zero.block_results.size(), 3u);
  ASSERT_TRUE(zero.assembled_vector.has_value());
  EXPECT_EQ(*zero.assembled_vector, (Vector{1, 0, 0}));
  EXPECT_EQ(zero.assembled_residual, 0.0);
}

TEST(SpectralTest, SymmetricSingleBlock) {
  const auto r = spectral_radius(testing::symmetric_pair());
  EXPECT_NEAR(r.rho, 7.349604207872798, 1e-6);
  ASSERT_EQ(r.block_results.size(), 1u);
  ASSERT_TRUE(r.assembled_vector.has_value());
  EXPECT_EQ(*r.assembled_vector, r.block_results[0].vector);
}

TEST(SpectralTest, IdentitySplitsIntoUnitBlocks) {
  const auto r = spectral_radius(Tensor::identity(3, 4));
  EXPECT_EQ(r.rho, 1.0);
  EXPECT_EQ(r.block_results.size(), 4u);
  EXPECT_EQ(r.assembled_residual, 0.0);
}

TEST(SpectralTest, DiagonalAssembly) {
  const Tensor t(3, 2, {{{0, 0, 0}, 2.0}, {{1, 1, 1}, 3.0}});
  const auto r = spectral_radius(t);
  EXPECT_EQ(r.rho, 3.0);
  ASSERT_TRUE(r.assembled_vector.has_value());
  EXPECT_EQ(*r.assembled_vector, (Vector{0, 1}));
  EXPECT_EQ(r.assembled_residual, 0.0);
}

TEST(SpectralTest, UncertifiedAssemblyIsWithheld) {
  // Row 1 of the dominant block {2} feeds into the weaker block {1}, so
  // padding the block vector with zeros leaves a residual in row 1.
  const Tensor t(3, 2, {{{0, 0, 0}, 1.0}, {{0, 1, 1}, 1.0}, {{1, 1, 1}, 3.0}});
  const auto r = spectral_radius(t);
  EXPECT_EQ(r.rho, 3.0);
  EXPECT_FALSE(r.assembled_vector.has_value());
  EXPECT_FALSE(assemble_eigenvector(t, r).has_value());
}

TEST(SpectralTest, ConvergenceFailureCarriesPartialReport) {
  HopmConfig c;
  c.max_iterations = 2;
  try {
    spectral_radius(testing::two_blocks(), c);
    FAIL() << "expected SpectralConvergenceError";
  } catch (const SpectralConvergenceError& e) {
    EXPECT_EQ(e.failed_block(), 0u);
    EXPECT_EQ(e.partial().partition.blocks.size(), 2u);
    EXPECT_EQ(e.cause().iterations(), 2u);
  }
}

TEST(SpectralProperty, AlgebraicInvariants) {
  std::mt19937_64 rng(51);
  const HopmConfig c;
  const double tol = 10 * c.tolerance;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Tensor t = testing::random_strictly_nonnegative(rng, 3 + trial % 2, n, 0.3);
    const auto base = spectral_radius(t, c);
    EXPECT_GT(base.rho, 0.0);

    EXPECT_NEAR(spectral_radius(add_identity(t), c).rho, base.rho + 1.0, tol);

    const double s = testing::uniform(rng, 0.5, 3.0);
    EXPECT_NEAR(spectral_radius(scaled(t, s), c).rho, s * base.rho, tol * std::max(1.0, s));

    IndexSet perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_NEAR(spectral_radius(permuted(t, perm), c).rho, base.rho, tol);

    const IndexSet sub = testing::random_subset(rng, n);
    EXPECT_GE(base.rho, spectral_radius(induced(t, sub).tensor, c).rho - 1e-8);

    if (base.assembled_vector) {
      EXPECT_LE(residual(t, base.rho, *base.assembled_vector), 100 * c.tolerance);
    }
  }
}

TEST(SpectralProperty, SymmetricTensorsAlwaysAssemble) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 4;
    std::vector<Entry> entries;
    for (Index i = 0; i < n; ++i)
      for (Index j = i; j < n; ++j)
        for (Index k = j; k < n; ++k) {
          if (testing::uniform(rng) > 0.3) continue;
          const double v = testing::uniform(rng, 0.1, 1.0);
          std::vector<std::vector<Index>> tuples{{i, j, k}, {i, k, j}, {j, i, k},
                                                 {j, k, i}, {k, i, j}, {k, j, i}};
          std::sort(tuples.begin(), tuples.end());
          tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
          for (auto& tp : tuples) entries.push_back({tp, v});
        }
    const Tensor t(3, n, std::move(entries));
    ASSERT_TRUE(is_symmetric(t));
    const auto r = spectral_radius(t);
    ASSERT_TRUE(r.assembled_vector.has_value()) << "trial " << trial;
    EXPECT_LE(r.assembled_residual, r.certification_tolerance);
  }
}

}  // namespace
}  // namespace nonneg
