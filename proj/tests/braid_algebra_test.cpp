#include <gtest/gtest.h>

#include "braidcover/braid.hpp"
#include "braidcover/error.hpp"
#include "braidcover/families.hpp"
#include "test_support.hpp"

using namespace braidcover;
using braidcover::oracle::Random;

namespace {

FreeWord gamma(std::size_t m, int k) { return FreeWord::generator(m, k); }

FreeWord boundary_word(std::size_t m) {
  FreeWord w(m);
  for (int k = 1; k <= static_cast<int>(m); ++k) w = w * gamma(m, k);
  return w;
}

}  // namespace

TEST(PermOf, SingleGenerator) {
  EXPECT_EQ(perm_of(BraidWord(3, {1})), Permutation::transposition(3, 1, 2));
}

TEST(PermOf, ComposesLeftToRight) {
  const auto p = perm_of(BraidWord(3, {1, 2}));
  EXPECT_EQ(p(1), 3);
  EXPECT_EQ(p(2), 1);
  EXPECT_EQ(p(3), 2);
}

TEST(PermOf, BandIsConjugatedTransposition) {
  Random rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(2, 7));
    BandGenerator band{rng.braid(m, 6), rng.uniform(1, static_cast<int>(m) - 1),
                       rng.uniform(0, 1) ? 1 : -1};
    const auto pw = perm_of(band.conjugator);
    const auto expected =
        Permutation::transposition(m, pw(band.core), pw(band.core + 1));
    EXPECT_EQ(perm_of(band.word()), expected);
  }
}

TEST(ArtinApply, SecondGeneratorUnderFirstTwist) {
  EXPECT_EQ(artin_apply(BraidWord(3, {1}), gamma(3, 2)), gamma(3, 1));
}

TEST(ArtinApply, EmptyWordActsTrivially) {
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(artin_apply(BraidWord(4), gamma(4, k)), gamma(4, k));
  }
}

TEST(ArtinApply, TwoLetters) {
  EXPECT_EQ(artin_apply(BraidWord(3, {1, 2}), gamma(3, 1)),
            FreeWord(3, {1, 2, 3, -2, -1}));
}

TEST(ArtinApply, InverseLetterCases) {
  const BraidWord inv(3, {-1});
  EXPECT_EQ(artin_apply(inv, gamma(3, 1)), gamma(3, 2));
  EXPECT_EQ(artin_apply(inv, gamma(3, 2)), FreeWord(3, {-2, 1, 2}));
  EXPECT_EQ(artin_apply(inv, gamma(3, 3)), gamma(3, 3));
}

TEST(ArtinApply, RankMismatchThrows) {
  EXPECT_THROW((void)artin_apply(BraidWord(3, {1}), gamma(4, 1)), Error);
}

TEST(Tau, AdjacentIsGenerator) {
  for (int i = 1; i < 6; ++i) {
    EXPECT_EQ(tau(i, i + 1, 7), BraidWord(7, {i}));
    EXPECT_EQ(tau(i, i + 1, 7, true), BraidWord(7, {i}));
  }
}

TEST(Tau, Expansions) {
  EXPECT_EQ(tau(2, 5, 6).to_string(), "-4 -3 2 3 4");
  EXPECT_EQ(tau(2, 4, 6, true).to_string(), "3 2 -3");
}

TEST(Tau, RangeErrors) {
  EXPECT_THROW((void)tau(3, 3, 6), Error);
  EXPECT_THROW((void)tau(0, 2, 6), Error);
  EXPECT_THROW((void)tau(2, 7, 6), Error);
}

TEST(ExponentSum, Examples) {
  EXPECT_EQ(exponent_sum(BraidWord(3, {1, -2})), 0);
  EXPECT_EQ(exponent_sum(BandGenerator{BraidWord(5, {1, 3, -2}), 2, -1}.word()),
            -1);
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(exponent_sum(family::build_surface(n).tuple.product()), 3 * n - 1);
  }
}

TEST(ExponentSum, ConjugationInvariant) {
  Random rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto b = rng.braid(5, 8);
    const auto w = rng.braid(5, 8);
    EXPECT_EQ(exponent_sum(w.inverse() * b * w), exponent_sum(b));
  }
}

TEST(BraidWord, Validation) {
  EXPECT_THROW(BraidWord(3, {0}), Error);
  EXPECT_THROW(BraidWord(3, {3}), Error);
  EXPECT_THROW(BraidWord(3, {-3}), Error);
  EXPECT_NO_THROW(BraidWord(3, {2, -2, -1}));
}

TEST(BraidWord, Parse) {
  EXPECT_EQ(parse_braid_word("3 -4 2", 5), BraidWord(5, {3, -4, 2}));
  EXPECT_EQ(parse_braid_word("3,-4 , +2", 5), BraidWord(5, {3, -4, 2}));
  EXPECT_EQ(parse_braid_word("", 5), BraidWord(5));
  EXPECT_THROW((void)parse_braid_word("3 x", 5), Error);
  EXPECT_THROW((void)parse_braid_word("5", 5), Error);
}

TEST(Hurwitz, RoundTrip) {
  Random rng(3);
  const auto tuple = family::build_surface(2).tuple;
  for (std::size_t k = 1; k < tuple.size(); ++k) {
    const auto fwd = hurwitz_move(tuple, k, HurwitzDirection::Forward);
    const auto back = hurwitz_move(fwd, k, HurwitzDirection::Backward);
    for (std::size_t p = 1; p <= tuple.size(); ++p) {
      EXPECT_TRUE(braid_equal(back.band(p).word(), tuple.band(p).word()));
    }
  }
}

TEST(Hurwitz, CommutingEntries) {
  const BandGenerator s1{BraidWord(3), 1, 1};
  const MonodromyTuple t(3, {s1, s1});
  const auto moved = hurwitz_move(t, 1, HurwitzDirection::Forward);
  EXPECT_TRUE(braid_equal(moved.band(1).word(), BraidWord(3, {1})));
  EXPECT_TRUE(braid_equal(moved.band(2).word(), BraidWord(3, {1})));
}

TEST(Hurwitz, ProductPermutationUnchanged) {
  const auto tuple = family::build_surface(2).tuple;
  const auto before = perm_of(tuple.product());
  for (std::size_t k = 1; k < tuple.size(); ++k) {
    for (auto dir : {HurwitzDirection::Forward, HurwitzDirection::Backward}) {
      EXPECT_EQ(perm_of(hurwitz_move(tuple, k, dir).product()), before);
    }
  }
}

TEST(Hurwitz, PositionOutOfRange) {
  const auto tuple = family::build_surface(2).tuple;
  EXPECT_THROW((void)hurwitz_move(tuple, 0, HurwitzDirection::Forward), Error);
  EXPECT_THROW(
      (void)hurwitz_move(tuple, tuple.size(), HurwitzDirection::Forward), Error);
}

TEST(BraidLaws, RelationsActIdentically) {
  Random rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(3, 7));
    const auto x = rng.free_word(m, 8);
    const int i = rng.uniform(1, static_cast<int>(m) - 2);
    EXPECT_EQ(artin_apply(BraidWord(m, {i, i + 1, i}), x),
              artin_apply(BraidWord(m, {i + 1, i, i + 1}), x));
    if (m >= 4) {
      const int a = rng.uniform(1, static_cast<int>(m) - 3);
      const int b = rng.uniform(a + 2, static_cast<int>(m) - 1);
      EXPECT_EQ(artin_apply(BraidWord(m, {a, b}), x),
                artin_apply(BraidWord(m, {b, a}), x));
    }
    EXPECT_EQ(artin_apply(BraidWord(m, {i, -i}), x), x);
  }
}

TEST(BraidLaws, ActionIsRightAction) {
  Random rng(202);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(2, 6));
    const auto b1 = rng.braid(m, 5);
    const auto b2 = rng.braid(m, 5);
    const auto x = rng.free_word(m, 6);
    EXPECT_EQ(artin_apply(b1 * b2, x), artin_apply(b2, artin_apply(b1, x)));
  }
}

TEST(BraidLaws, BoundaryWordFixed) {
  Random rng(303);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(2, 8));
    EXPECT_EQ(artin_apply(rng.braid(m, 10), boundary_word(m)), boundary_word(m));
  }
}

TEST(BraidLaws, PermOfIsHomomorphism) {
  Random rng(404);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(2, 8));
    const auto b1 = rng.braid(m, 8);
    const auto b2 = rng.braid(m, 8);
    EXPECT_EQ(perm_of(b1 * b2), perm_of(b1) * perm_of(b2));
  }
}

TEST(FreeReduction, IdempotentAndCancellingInsertion) {
  Random rng(505);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(2, 6));
    const auto b = rng.braid(m, 10);
    const auto once = b.freely_reduced();
    EXPECT_EQ(once.freely_reduced(), once);
    for (std::size_t k = 1; k < once.letters().size(); ++k) {
      EXPECT_NE(once.letters()[k], -once.letters()[k - 1]);
    }

    std::vector<int> letters(b.letters().begin(), b.letters().end());
    const int at = rng.uniform(0, static_cast<int>(letters.size()));
    const int g = rng.uniform(1, static_cast<int>(m) - 1) * (rng.uniform(0, 1) ? 1 : -1);
    letters.insert(letters.begin() + at, {g, -g});
    EXPECT_EQ(BraidWord(m, letters).freely_reduced(), once);

    const auto x = rng.free_word(m, 10);
    std::vector<int> fl(x.letters().begin(), x.letters().end());
    const int fat = rng.uniform(0, static_cast<int>(fl.size()));
    const int h = rng.uniform(1, static_cast<int>(m)) * (rng.uniform(0, 1) ? 1 : -1);
    fl.insert(fl.begin() + fat, {h, -h});
    EXPECT_EQ(FreeWord(m, fl), x);
  }
}

TEST(BraidEqual, DetectsRelations) {
  EXPECT_TRUE(braid_equal(BraidWord(4, {1, 2, 1}), BraidWord(4, {2, 1, 2})));
  EXPECT_TRUE(braid_equal(BraidWord(4, {1, 3}), BraidWord(4, {3, 1})));
  EXPECT_FALSE(braid_equal(BraidWord(4, {1, 2}), BraidWord(4, {2, 1})));
}

TEST(MonodromyTuple, ValidatesBands) {
  EXPECT_THROW(MonodromyTuple(3, {BandGenerator{BraidWord(3), 3, 1}}), Error);
  EXPECT_THROW(MonodromyTuple(3, {BandGenerator{BraidWord(4), 1, 1}}), Error);
  EXPECT_THROW(MonodromyTuple(3, {BandGenerator{BraidWord(3), 1, 0}}), Error);
  try {
    MonodromyTuple(3, {BandGenerator{BraidWord(3), 1, 1},
                       BandGenerator{BraidWord(3), 5, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.index(), std::size_t{2});
  }
}
