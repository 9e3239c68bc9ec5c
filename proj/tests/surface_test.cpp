#include <gtest/gtest.h>

#include "braidcover/error.hpp"
#include "braidcover/families.hpp"
#include "braidcover/surface.hpp"
#include "test_support.hpp"

using namespace braidcover;
using braidcover::oracle::Random;

TEST(ValidateSurface, FamilyN2) {
  const auto summary = validate_surface(family::build_surface(2));
  EXPECT_EQ(summary.strands, 8u);
  EXPECT_EQ(summary.bands, 5u);
  EXPECT_EQ(summary.euler_characteristic, 3);
  EXPECT_TRUE(summary.positive);
  EXPECT_TRUE(summary.negative_bands.empty());
}

TEST(ValidateSurface, ReportsNegativeBands) {
  const BraidedSurface s{MonodromyTuple(
      4, {BandGenerator{BraidWord(4), 1, 1}, BandGenerator{BraidWord(4, {2}), 1, -1},
          BandGenerator{BraidWord(4), 3, -1}})};
  const auto summary = validate_surface(s);
  EXPECT_FALSE(summary.positive);
  EXPECT_EQ(summary.negative_bands, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(summary.positive_per_band, (std::vector<bool>{true, false, false}));
  EXPECT_EQ(summary.euler_characteristic, 1);
}

TEST(ValidateSurface, FamilyBandCounts) {
  for (int n = 2; n <= 6; ++n) {
    const auto summary = validate_surface(family::build_surface(n));
    EXPECT_EQ(summary.bands, static_cast<std::size_t>(3 * n - 1));
    EXPECT_EQ(summary.strands, static_cast<std::size_t>(6 * n - 4));
    EXPECT_TRUE(summary.positive);
  }
}

TEST(BuildCover, FamilyPage) {
  for (int n = 2; n <= 4; ++n) {
    const auto s = family::build_surface(n);
    for (int j = 1; j <= n; ++j) {
      const auto palf = build_cover(s, family::build_covering(n, j));
      EXPECT_EQ(palf.page.genus, 0);
      EXPECT_EQ(palf.page.boundary_count(), static_cast<std::size_t>(3 * n - 1));
      ASSERT_EQ(palf.cycles.size(), static_cast<std::size_t>(3 * n - 1));
      for (std::size_t k = 0; k < palf.cycles.size(); ++k) {
        EXPECT_EQ(palf.cycles[k].band_position, k + 1);
        bool nonzero = false;
        for (auto v : palf.cycles[k].winding) {
          EXPECT_TRUE(v == 0 || v == 1);
          nonzero = nonzero || v != 0;
        }
        EXPECT_TRUE(nonzero);
      }
    }
  }
}

TEST(BuildCover, NotLiftableAtIndex) {
  const auto rho = CoveringMonodromy::from_transpositions(3, {{1, 2}, {2, 3}, {1, 2}});
  const BraidedSurface s{MonodromyTuple(
      3, {BandGenerator{BraidWord(3), 2, 1}, BandGenerator{BraidWord(3), 1, 1}})};
  try {
    build_cover(s, rho);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotLiftable);
    EXPECT_EQ(e.index(), std::size_t{1});
  }
}

TEST(BuildCover, SizeMismatch) {
  const auto rho = CoveringMonodromy::from_transpositions(2, {{1, 2}, {1, 2}});
  EXPECT_THROW((void)build_cover(family::build_surface(2), rho), Error);
}

// Descent relation of the four-dimensional cover, checked on free words
// for random liftable bands.
TEST(BuildCover, DescentHoldsWhenLiftable) {
  Random rng(53);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = static_cast<std::size_t>(rng.uniform(2, 4));
    const std::size_t m = static_cast<std::size_t>(rng.uniform(2, 6));
    const auto rho = rng.covering(d, m, false);
    const BandGenerator band{rng.braid(m, 6), rng.uniform(1, static_cast<int>(m) - 1), 1};
    if (!oracle::liftable_by_free_words(rho, band.word())) continue;
    const auto image = [&](int k) {
      return rho.evaluate(artin_apply(band.conjugator, FreeWord::generator(m, k)));
    };
    EXPECT_EQ(image(band.core), image(band.core + 1));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(BoundaryLink, TrivialBraid) {
  const BraidedSurface s{MonodromyTuple(4, {})};
  const auto link = boundary_link(s);
  EXPECT_EQ(link.exponent_sum, 0);
  EXPECT_EQ(link.component_count, 4u);
  EXPECT_EQ(link.self_linking, -4);
}

TEST(BoundaryLink, Family) {
  for (int n = 2; n <= 6; ++n) {
    const auto s = family::build_surface(n);
    const auto link = boundary_link(s);
    EXPECT_EQ(link.strand_count, static_cast<std::size_t>(6 * n - 4));
    EXPECT_EQ(link.exponent_sum, 3 * n - 1);
    EXPECT_EQ(link.self_linking, 3 - 3 * n);
    EXPECT_EQ(link.component_count, perm_of(s.tuple.product()).cycles().size());
  }
}

TEST(BoundaryLink, HurwitzInvariant) {
  Random rng(59);
  const auto s = family::build_surface(3);
  const auto before = boundary_link(s);
  auto tuple = s.tuple;
  for (int step = 0; step < 30; ++step) {
    const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(tuple.size()) - 1));
    tuple = hurwitz_move(tuple, k,
                         rng.uniform(0, 1) ? HurwitzDirection::Forward
                                           : HurwitzDirection::Backward);
    EXPECT_EQ(boundary_link(BraidedSurface{tuple}), before);
  }
}
