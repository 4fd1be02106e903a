#include <gtest/gtest.h>

#include <bit>
#include <cstring>
#include <random>

#include "mcgame/choquet.hpp"
#include "mcgame/simd/kernels.hpp"

namespace mcgame::simd {
namespace {

std::vector<double> random_vector(std::mt19937_64& gen, std::size_t count, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(count);
  for (auto& x : out) x = dist(gen);
  return out;
}

bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

class KernelVariants : public ::testing::TestWithParam<const KernelTable*> {};

TEST_P(KernelVariants, SubtractMatchesScalarBitwise) {
  const KernelTable& k = *GetParam();
  std::mt19937_64 gen(1);
  for (std::size_t count = 0; count < 40; ++count) {
    const auto a = random_vector(gen, count, -1e3, 1e3);
    const auto b = random_vector(gen, count, -1e3, 1e3);
    std::vector<double> want(count), got(count);
    scalar_kernels().subtract(a.data(), b.data(), want.data(), count);
    k.subtract(a.data(), b.data(), got.data(), count);
    for (std::size_t j = 0; j < count; ++j) ASSERT_TRUE(same_bits(want[j], got[j]));
  }
}

TEST_P(KernelVariants, SubtractInPlace) {
  const KernelTable& k = *GetParam();
  std::vector<double> a{5, 6, 7, 8, 9, 10, 11};
  const std::vector<double> b{1, 1, 2, 2, 3, 3, 4};
  k.subtract(a.data(), b.data(), a.data(), a.size());
  EXPECT_EQ(a, (std::vector<double>{4, 5, 5, 6, 6, 7, 7}));
}

TEST_P(KernelVariants, MinimumMatchesScalar) {
  const KernelTable& k = *GetParam();
  std::mt19937_64 gen(2);
  EXPECT_EQ(k.minimum(nullptr, 0), std::numeric_limits<double>::infinity());
  for (std::size_t count = 1; count < 40; ++count) {
    const auto a = random_vector(gen, count, -5, 5);
    ASSERT_EQ(k.minimum(a.data(), count), scalar_kernels().minimum(a.data(), count));
  }
}

TEST_P(KernelVariants, ChoquetMobiusMatchesScalarBitwise) {
  const KernelTable& k = *GetParam();
  std::mt19937_64 gen(3);
  for (int n = 1; n <= 6; ++n) {
    const auto mobius = random_vector(gen, std::size_t{1} << n, -1, 1);
    for (std::size_t count : {0u, 1u, 3u, 4u, 5u, 8u, 13u, 64u}) {
      std::vector<std::vector<double>> rows;
      std::vector<const double*> ptrs;
      for (int i = 0; i < n; ++i) rows.push_back(random_vector(gen, count, 0, 1));
      for (auto& r : rows) ptrs.push_back(r.data());
      std::vector<double> scratch((std::size_t{1} << n) * kChoquetBlock);
      std::vector<double> want(count), got(count);
      scalar_kernels().choquet_mobius(mobius.data(), n, ptrs.data(), count, want.data(),
                                      scratch.data());
      k.choquet_mobius(mobius.data(), n, ptrs.data(), count, got.data(), scratch.data());
      for (std::size_t s = 0; s < count; ++s) ASSERT_TRUE(same_bits(want[s], got[s])) << n << " " << s;
    }
  }
}

// The Moebius form against the ascending-sort definition of the integral.
TEST_P(KernelVariants, ChoquetMobiusMatchesSortedSum) {
  const KernelTable& k = *GetParam();
  std::mt19937_64 gen(4);
  for (int n = 1; n <= 5; ++n) {
    SectionCapacity mu{LatticePoint::zeros(n), random_vector(gen, std::size_t{1} << n, 0, 1)};
    mu.weights[0] = 0.0;
    const auto mobius = mobius_transform(mu.weights);
    const std::size_t count = 37;
    std::vector<std::vector<double>> rows;
    std::vector<const double*> ptrs;
    for (int i = 0; i < n; ++i) rows.push_back(random_vector(gen, count, 0, 1));
    // Force ties and boundary values in a few points.
    rows[0][0] = 0.0;
    rows[n - 1][1] = 1.0;
    if (n > 1) rows[1][2] = rows[0][2];
    for (auto& r : rows) ptrs.push_back(r.data());
    std::vector<double> scratch((std::size_t{1} << n) * kChoquetBlock);
    std::vector<double> got(count);
    k.choquet_mobius(mobius.data(), n, ptrs.data(), count, got.data(), scratch.data());
    for (std::size_t s = 0; s < count; ++s) {
      std::vector<double> w(n);
      for (int i = 0; i < n; ++i) w[i] = rows[i][s];
      ASSERT_NEAR(got[s], choquet_capacity(mu, w), 1e-12);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Available, KernelVariants, ::testing::ValuesIn(available_kernels()),
                         [](const auto& info) { return std::string(info.param->name); });

TEST(KernelDispatch, ActiveIsAvailable) {
  const auto all = available_kernels();
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(all.front()->name, "scalar");
  bool found = false;
  for (const auto* t : all) found = found || t == &active_kernels();
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace mcgame::simd
