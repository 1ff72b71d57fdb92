#include <gtest/gtest.h>

#include "ckgeo/geodesics.hpp"
#include "ckgeo/oracle.hpp"
#include "oracles.hpp"

using namespace ckgeo;

namespace {

const BallIndex<CkModel>& ball12() {
  static const auto ball = build_ball(CkModel{}, 12);
  return ball;
}

std::string letters(const std::vector<Letter>& xs) {
  std::string s;
  for (Letter x : xs) s += to_char(x);
  return s;
}

template <class F>
void for_each_state(const BallIndex<CkModel>& ball, int max_distance, F f) {
  for (int d = 0; d <= max_distance; ++d) {
    for (const auto& key : ball.level(d)) f(CkModel::from_key(key), d);
  }
}

}  // namespace

TEST(StdRep, Examples) {
  EXPECT_EQ(format_word(std_rep({2, 1, 4})), "b^3 a b^2 a^3");
  EXPECT_EQ(format_word(std_rep({-4, 2, 4})), "b^-2 a b^-4 a^3");
  EXPECT_EQ(format_word(std_rep(kIdentity)), "");
  EXPECT_EQ(format_word(std_rep({0, 3, 0})), "b^3");
  EXPECT_EQ(format_word(std_rep({0, 0, 2})), "a^2");
  EXPECT_EQ(format_word(std_rep(kCentralT)), "a b a^-1 b");
}

TEST(StdRep, UnnormalizedPullback) {
  EXPECT_EQ(evaluate(std_rep({2, 1, -4})), (Element{2, 1, -4}));
  EXPECT_EQ(evaluate(std_rep({-1, 0, 0})), (Element{-1, 0, 0}));
  EXPECT_EQ(evaluate(std_rep({3, -2, 0})), (Element{3, -2, 0}));
  EXPECT_EQ(evaluate(std_rep({2, -5, 3})), (Element{2, -5, 3}));
}

TEST(Length, Examples) {
  EXPECT_EQ(length({3, 0, 0}), 8);
  EXPECT_EQ(length(kCentralT), 4);
  EXPECT_EQ(length(kIdentity), 0);
  EXPECT_EQ(length({0, 3, 2}), 5);
  EXPECT_EQ(length({2, 1, 4}), 9);
  EXPECT_EQ(length({-4, 2, 4}), 10);
  EXPECT_EQ(length({-3, 3, 3}), 6);
}

TEST(IsGeodesic, Examples) {
  EXPECT_TRUE(is_geodesic(parse_word("a b a^-1 b")));
  EXPECT_FALSE(is_geodesic(parse_word("a a^-1")));
  EXPECT_TRUE(is_geodesic(Word{}));
  EXPECT_TRUE(is_geodesic(parse_word("a b^-1 a^2 b^-2")));
  EXPECT_TRUE(is_geodesic(parse_word("a b^-3 a^2")));
  EXPECT_FALSE(is_geodesic(parse_word("a^2 b a^-2 b^-1")));
}

TEST(Continuations, Examples) {
  EXPECT_EQ(letters(continuations(kIdentity)), "aAbB");
  const auto c = continuations({2, 1, 4});
  EXPECT_NE(std::find(c.begin(), c.end(), Letter::a), c.end());
  EXPECT_NE(std::find(c.begin(), c.end(), Letter::b), c.end());
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_region({2, 1, 4}), RegionCase::pos_k);
  EXPECT_EQ(classify_region({-4, 2, 4}), RegionCase::neg_k_dominant);
  EXPECT_EQ(classify_region({-1, 3, 4}), RegionCase::neg_k_small_even);
  EXPECT_EQ(classify_region({-1, 3, 3}), RegionCase::neg_k_small_odd);
  EXPECT_EQ(classify_region({0, 3, 3}), RegionCase::zero_k);
  EXPECT_EQ(to_string(RegionCase::neg_k_small_odd), "NEG_K_SMALL_ODD");
  // classification happens after normalization
  EXPECT_EQ(classify_region({-2, -1, -4}), RegionCase::pos_k);
}

TEST(DeadEnds, NoneNearIdentity) {
  EXPECT_FALSE(is_dead_end({-3, 7, 2}));
  EXPECT_EQ(depth({-3, 7, 2}), 0);
  EXPECT_FALSE(is_dead_end(kIdentity));
}

TEST(DeadEnds, OracleAgreesOnNamedElement) {
  const auto ball = build_ball(CkModel{}, 14);
  const Element g{-3, 7, 2};
  const int d = exact_length(ball, g);
  EXPECT_EQ(d, length(g));
  bool extends = false;
  for (Letter x : kAlphabet) extends = extends || *ball.distance(step(g, x)) == d + 1;
  EXPECT_TRUE(extends);
}

TEST(LengthProperty, EqualsBallDistance) {
  const auto& ball = ball12();
  EXPECT_EQ(ball.size(), 2537u);
  for_each_state(ball, 12, [](const Element& g, int d) { ASSERT_EQ(length(g), d) << to_string(g); });
}

TEST(LengthProperty, IsometryInvariant) {
  for_each_state(ball12(), 12, [](const Element& g, int) {
    ASSERT_EQ(length(apply_isometry(IsometryKind::n_flip, g)), length(g));
    ASSERT_EQ(length(apply_isometry(IsometryKind::full_flip, g)), length(g));
    ASSERT_EQ(length(inverse(g)), length(g));
  });
}

TEST(LengthProperty, NeighborsDifferByOne) {
  for_each_state(ball12(), 11, [](const Element& g, int) {
    for (Letter x : kAlphabet) {
      const std::int64_t diff = length(step(g, x)) - length(g);
      ASSERT_TRUE(diff == 1 || diff == -1) << to_string(g) << ' ' << to_string(x);
    }
  });
}

TEST(LengthProperty, ParityAndLowerBound) {
  oracle::RandomWords gen(211);
  for (int i = 0; i < 5000; ++i) {
    const Word w = gen.next(30);
    const Element g = evaluate(w);
    const std::int64_t l = length(g);
    ASSERT_EQ((l - static_cast<std::int64_t>(w.size())) % 2, 0);
    ASSERT_LE(l, static_cast<std::int64_t>(w.size()));
    ASSERT_GE(l, std::abs(g.m) + std::abs(g.n));
  }
}

TEST(StdRepProperty, GeodesicWithGeodesicPrefixes) {
  for_each_state(ball12(), 12, [](const Element& g, int d) {
    const Word w = std_rep(g);
    ASSERT_EQ(evaluate(w), g);
    ASSERT_TRUE(w.is_reduced());
    ASSERT_EQ(static_cast<int>(w.size()), d);
    for (std::size_t i = 0; i <= w.size(); ++i) ASSERT_TRUE(is_geodesic(w.prefix(i)));
  });
}

TEST(StdRepProperty, LargeCoordinates) {
  oracle::RandomWords gen(223);
  for (int i = 0; i < 2000; ++i) {
    const Element g{gen.uniform(-500, 500), gen.uniform(-500, 500), gen.uniform(-500, 500)};
    const Word w = std_rep(g);
    ASSERT_EQ(evaluate(w), g);
    ASSERT_EQ(static_cast<std::int64_t>(w.size()), length(g));
  }
}

TEST(ContinuationsProperty, NonEmptyAndExact) {
  for_each_state(ball12(), 11, [](const Element& g, int d) {
    const auto c = continuations(g);
    ASSERT_FALSE(c.empty()) << to_string(g);
    for (Letter x : kAlphabet) {
      const bool listed = std::find(c.begin(), c.end(), x) != c.end();
      ASSERT_EQ(listed, *ball12().distance(step(g, x)) == d + 1);
    }
    ASSERT_EQ(depth(g), 0);
  });
}

TEST(ContinuationsProperty, EquivariantUnderLetterMaps) {
  for_each_state(ball12(), 11, [](const Element& g, int) {
    for (IsometryKind kind : {IsometryKind::n_flip, IsometryKind::full_flip}) {
      std::vector<Letter> mapped;
      for (Letter x : continuations(g)) mapped.push_back(apply_letter_map(letter_map_of(kind), x));
      std::sort(mapped.begin(), mapped.end());
      ASSERT_EQ(mapped, continuations(apply_isometry(kind, g)));
    }
  });
}
