#include <gtest/gtest.h>

#include "braidcover/error.hpp"
#include "braidcover/families.hpp"
#include "braidcover/homology.hpp"
#include "test_support.hpp"

using namespace braidcover;
using braidcover::oracle::Random;

namespace {

PalfDescriptor annulus_palf(std::size_t twists) {
  std::vector<BandGenerator> bands(twists, BandGenerator{BraidWord(2), 1, 1});
  const BraidedSurface s{MonodromyTuple(2, bands)};
  return build_cover(s, CoveringMonodromy::from_transpositions(2, {{1, 2}, {1, 2}}));
}

PalfDescriptor family_palf(int n, int j) {
  return build_cover(family::build_surface(n), family::build_covering(n, j));
}

}  // namespace

TEST(ChainComplex, AnnulusSingleCycle) {
  const auto data = chain_complex(annulus_palf(1));
  EXPECT_EQ(data.boundary, (IntMatrix{{1}}));
  EXPECT_EQ(data.linking, (IntMatrix{{0, 1}, {1, 0}}));
}

TEST(ChainComplex, EmptyCycleList) {
  const auto data = chain_complex(annulus_palf(0));
  EXPECT_EQ(data.boundary.rows(), 1u);
  EXPECT_EQ(data.boundary.cols(), 0u);
}

TEST(ChainComplex, FamilyShape) {
  for (int n = 2; n <= 4; ++n) {
    const auto data = chain_complex(family_palf(n, 1));
    EXPECT_EQ(data.boundary.rows(), static_cast<std::size_t>(3 * n - 2));
    EXPECT_EQ(data.boundary.cols(), static_cast<std::size_t>(3 * n - 1));
    EXPECT_EQ(data.linking, data.linking.transposed());
  }
}

TEST(Homology, FamilyN2J1) {
  const auto h = homology(family_palf(2, 1));
  EXPECT_EQ(h.euler_characteristic, 2);
  EXPECT_TRUE(h.h1.trivial());
  EXPECT_EQ(h.h2_rank, 1u);
}

TEST(Homology, NoCyclesIsFree) {
  PalfDescriptor p;
  p.page = validate_covering(CoveringMonodromy::from_transpositions(
      3, {{1, 2}, {1, 2}, {2, 3}, {2, 3}}));
  ASSERT_EQ(p.page.boundary_count(), 3u);
  const auto h = homology(p);
  EXPECT_EQ(h.h1, (AbelianGroupDescriptor{2, {}}));
  EXPECT_EQ(h.h2_rank, 0u);
  EXPECT_EQ(h.euler_characteristic, -1);
}

TEST(Homology, EulerCharacteristicFromPage) {
  for (int n = 2; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      const auto p = family_palf(n, j);
      EXPECT_EQ(homology(p).euler_characteristic,
                1 - static_cast<int>(p.page.boundary_count() - 1) +
                    static_cast<int>(p.cycles.size()));
    }
  }
}

TEST(BoundaryH1, AnnulusLensSpaces) {
  EXPECT_TRUE(boundary_h1(annulus_palf(1)).trivial());
  EXPECT_EQ(boundary_h1(annulus_palf(2)), (AbelianGroupDescriptor{0, {2}}));
  EXPECT_EQ(boundary_h1(annulus_palf(3)), (AbelianGroupDescriptor{0, {3}}));
}

TEST(BoundaryH1, Family) {
  for (int n = 2; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      EXPECT_EQ(boundary_h1(family_palf(n, j)),
                (AbelianGroupDescriptor{0, {2 * n}}));
    }
  }
}

TEST(KernelGenerator, AnnulusCases) {
  try {
    kernel_generator(annulus_palf(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankNotOne);
  }
  EXPECT_EQ(kernel_generator(annulus_palf(2)), (std::vector<std::int64_t>{1, -1}));
  EXPECT_THROW((void)kernel_generator(annulus_palf(3)), Error);
}

TEST(KernelGenerator, FamilyN2J1) {
  EXPECT_EQ(kernel_generator(family_palf(2, 1)),
            (std::vector<std::int64_t>{1, -1, 1, 0, 1}));
}

TEST(Rot, Examples) {
  const VanishingCycleClass c{1, {1, 0, 1, 1}};
  EXPECT_EQ(rot(c, TrivializationWeights::flat(4)), 1);
  EXPECT_EQ(rot(c, TrivializationWeights{{-1, 0, -1, -1}}), -2);
  EXPECT_EQ(rot(c, TrivializationWeights{{5, 7, -2, 3}}), 7);
  EXPECT_THROW((void)rot(c, TrivializationWeights::flat(3)), Error);
}

TEST(C1, FlatGaugeFamily) {
  for (int n = 2; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      const auto p = family_palf(n, j);
      const auto z = kernel_generator(p);
      std::int64_t sum = 0;
      for (auto v : z) sum += v;
      const auto c1 = c1_pairing(p, TrivializationWeights::flat(p.page.boundary_count() - 1));
      EXPECT_EQ(c1, sum);
      EXPECT_EQ(std::abs(c1), 2 * (n - j));
    }
  }
  EXPECT_EQ(c1_pairing(family_palf(2, 2), TrivializationWeights::flat(4)), 0);
}

TEST(C1, GaugeInvariance) {
  Random rng(73);
  for (int n = 2; n <= 3; ++n) {
    for (int j = 1; j <= n; ++j) {
      const auto p = family_palf(n, j);
      const std::size_t labels = p.page.boundary_count() - 1;
      const auto flat = c1_pairing(p, TrivializationWeights::flat(labels));
      for (int trial = 0; trial < 100; ++trial) {
        TrivializationWeights t;
        for (std::size_t b = 0; b < labels; ++b) t.weights.push_back(rng.uniform(-5, 5));
        EXPECT_EQ(c1_pairing(p, t), flat);
      }
    }
  }
}

TEST(C1, SignFlipKeepsAbsoluteValue) {
  const auto p = family_palf(3, 1);
  auto z = kernel_generator(p);
  std::int64_t flipped = 0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    flipped += -z[k] * rot(p.cycles[k], TrivializationWeights::flat(p.page.boundary_count() - 1));
  }
  EXPECT_EQ(std::abs(flipped),
            std::abs(c1_pairing(p, TrivializationWeights::flat(p.page.boundary_count() - 1))));
}

// A gauge giving rot values (0, 0, 1, 1, 1) on the five N = 2 cycles, found
// by exhaustive search over small weights.
TEST(C1, FixtureRotationGaugeExists) {
  for (int j = 1; j <= 2; ++j) {
    const auto p = family_palf(2, j);
    const std::vector<std::int64_t> target{0, 0, 1, 1, 1};
    std::optional<TrivializationWeights> found;
    for (int code = 0; code < 5 * 5 * 5 * 5 && !found; ++code) {
      TrivializationWeights t;
      for (int b = 0, c = code; b < 4; ++b, c /= 5) t.weights.push_back(c % 5 - 2);
      bool ok = true;
      for (std::size_t k = 0; k < 5 && ok; ++k) ok = rot(p.cycles[k], t) == target[k];
      if (ok) found = t;
    }
    ASSERT_TRUE(found.has_value()) << "j=" << j;
    EXPECT_EQ(c1_pairing(p, *found),
              c1_pairing(p, TrivializationWeights::flat(4)));
  }
}
