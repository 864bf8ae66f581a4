#include <gtest/gtest.h>

#include <numeric>

#include "tsurf/tsurf.hpp"

using namespace tsurf;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rat("3/6"), Rat(1, 2));
  EXPECT_EQ(parse_rat("-2"), Rat(-2));
  EXPECT_EQ(to_string(Rat(-7, 14)), "-1/2");
  EXPECT_EQ(to_string(Rat(4)), "4");
  EXPECT_THROW(parse_rat("1/0"), InvalidArgument);
  EXPECT_THROW(parse_rat("x"), InvalidArgument);
  EXPECT_THROW(parse_rat("0.5"), InvalidArgument);
}

TEST(Rational, FloorAndFrac) {
  EXPECT_EQ(floor(Rat(-1, 3)), Int(-1));
  EXPECT_EQ(floor(Rat(7, 3)), Int(2));
  EXPECT_EQ(frac(Rat(-1, 3)), Rat(2, 3));
  EXPECT_EQ(TorusPoint(Rat(5, 4), Rat(-1, 4)), TorusPoint(Rat(1, 4), Rat(3, 4)));
}

TEST(Directions, PrimitiveAndCanonical) {
  EXPECT_THROW(Heading::make(2, 4), InvalidArgument);
  EXPECT_THROW(Heading::make(0, 0), InvalidArgument);
  EXPECT_EQ(PrimitiveDirection::make(-1, 2), (PrimitiveDirection{1, -2}));
  EXPECT_EQ(PrimitiveDirection::make(0, -1), (PrimitiveDirection{0, 1}));
}

TEST(Directions, EnumerationCountMatchesGcdLoop) {
  for (std::int64_t H = 1; H <= 25; ++H) {
    std::size_t expected = 0;
    for (std::int64_t p = -H; p <= H; ++p)
      for (std::int64_t q = -H; q <= H; ++q)
        if (std::abs(p) + std::abs(q) <= H && std::gcd(p, q) == 1) ++expected;
    auto dirs = enumerate_primitive_directions(H);
    EXPECT_EQ(2 * dirs.size(), expected) << "H=" << H;
    EXPECT_TRUE(std::is_sorted(dirs.begin(), dirs.end()));
    EXPECT_EQ(std::set<PrimitiveDirection>(dirs.begin(), dirs.end()).size(), dirs.size());
  }
}

// Sweep: walk the lifted line from b for one period and look for x mod Z^2 among
// the points of denominator L it passes.
static bool sweep_hits(const TorusPoint& b, const PrimitiveDirection& d, const TorusPoint& x, int L) {
  std::int64_t steps = L * (std::abs(d.p) + std::abs(d.q)) * 8;
  for (std::int64_t k = 0; k < steps; ++k) {
    Rat t(k, steps);
    if (TorusPoint(b.x() + t * d.p, b.y() + t * d.q) == x) return true;
  }
  return false;
}

TEST(LineHits, AgreesWithSweep) {
  std::vector<TorusPoint> pts;
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c) pts.emplace_back(Rat(a, 4), Rat(c, 4));
  pts.emplace_back(Rat(1, 3), Rat(2, 3));
  for (const auto& d : enumerate_primitive_directions(5))
    for (const auto& b : pts)
      for (const auto& x : pts) {
        EXPECT_EQ(line_hits_point(b, d, x), sweep_hits(b, d, x, 12)) << to_string(b) << to_string(d) << to_string(x);
        auto t = line_parameter(b, d.heading(), x);
        EXPECT_EQ(t.has_value(), line_hits_point(b, d, x));
        if (t) EXPECT_EQ(TorusPoint(b.x() + *t * d.p, b.y() + *t * d.q), x);
      }
}

TEST(Segments, ValidationAndEndpoints) {
  EXPECT_THROW(Segment::make(TorusPoint(0, 0), {Rat(0), Rat(0)}), InvalidArgument);
  EXPECT_THROW(Segment::make(TorusPoint(0, 0), {Rat(3, 2), Rat(0)}), InvalidArgument);
  Segment s = Segment::between({Rat(3, 4), Rat(0)}, {Rat(5, 4), Rat(0)});
  EXPECT_EQ(s.end(), TorusPoint(Rat(1, 4), 0));
  EXPECT_EQ(segment_parameters(s, TorusPoint(0, 0)), std::vector<Rat>{Rat(1, 2)});
  EXPECT_TRUE(segment_parameters(s, TorusPoint(Rat(1, 2), 0)).empty());
}

TEST(Segments, CrossingAndWrapIntersection) {
  Segment h = Segment::between({Rat(3, 4), Rat(1, 2)}, {Rat(5, 4), Rat(1, 2)});
  Segment v = Segment::between({Rat(0), Rat(1, 4)}, {Rat(0), Rat(3, 4)});
  auto r = segment_intersection(h, v);
  ASSERT_EQ(r.parts.size(), 1u);
  EXPECT_EQ(r.parts[0].point, TorusPoint(0, Rat(1, 2)));
  EXPECT_EQ(r.parts[0].a0, Rat(1, 2));
  EXPECT_EQ(r.parts[0].b0, Rat(1, 2));

  Segment o = Segment::between({Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(1, 2)});
  auto ov = segment_intersection(h, o);
  ASSERT_EQ(ov.parts.size(), 1u);
  EXPECT_EQ(ov.parts[0].kind, Intersection::Kind::Overlap);
  EXPECT_EQ(ov.parts[0].a0, Rat(1, 2));
  EXPECT_EQ(ov.parts[0].a1, Rat(1));

  Segment far = Segment::between({Rat(1, 8), Rat(1, 8)}, {Rat(1, 4), Rat(1, 8)});
  EXPECT_TRUE(segment_intersection(h, far).disjoint());
}

TEST(Permutations, ParseComposeCycles) {
  auto a = Permutation::parse("(1 2 3)", 4);
  auto b = Permutation::parse("(3 4)", 4);
  EXPECT_EQ((a * b)(3), a(b(3)));
  EXPECT_EQ((a * b).cycle_type(), (std::vector<int>{4}));
  EXPECT_EQ(a.inverse() * a, Permutation(4));
  EXPECT_EQ(a.to_string(), "(1 2 3)");
  EXPECT_EQ(Permutation(3).to_string(), "()");
  EXPECT_THROW(Permutation::parse("(1 5)", 4), InvalidArgument);
  EXPECT_THROW(Permutation::parse("(1 1)", 4), InvalidArgument);
  EXPECT_EQ(orbit_count(4, {b}), 3);
}

TEST(Strata, ParseAndPrint) {
  EXPECT_EQ(parse_h_stratum("H(1,1,2)").to_string(), "H(2,1,1)");
  EXPECT_EQ(parse_q_stratum("Q(-1^4)").entries().size(), 4u);
  EXPECT_EQ(parse_q_stratum("Q(2,2,-1,-1,-1,-1)").to_string(), "Q(2,2,-1^4)");
  EXPECT_EQ(HStratum{}.to_string(), "H()");
  EXPECT_THROW(parse_h_stratum("H(1)"), InvalidArgument);
  EXPECT_THROW(parse_q_stratum("Q(1)"), InvalidArgument);
  EXPECT_THROW(parse_q_stratum("Q(-2,2)"), InvalidArgument);
}

TEST(Strata, DoubleCoverRule) {
  EXPECT_EQ(q_to_h(parse_q_stratum("Q(5,-1)")), HStratum::make({6}));
  EXPECT_EQ(q_to_h(parse_q_stratum("Q(-1^4)")), HStratum{});
  EXPECT_EQ(q_to_h(parse_q_stratum("Q(2,2,-1^4)")), HStratum::make({1, 1, 1, 1}));
  EXPECT_EQ(q_to_h(parse_q_stratum("Q(1,1,-1^2)")), HStratum::make({2, 2}));
  EXPECT_EQ(q_to_h(parse_q_stratum("Q(4)")), HStratum::make({2, 2}));
}

TEST(Strata, PreimagesInvertTheRule) {
  for (auto k : std::vector<std::vector<int>>{{2}, {1, 1}, {4}, {2, 2}, {6}, {3, 3}, {2, 1, 1}}) {
    HStratum h = HStratum::make(k);
    for (const auto& q : h_to_q_preimages(h, {9, true})) {
      EXPECT_EQ(q_to_h(q), h) << q.to_string();
      EXPECT_LE(q.poles(), 9);
      EXPECT_FALSE(is_empty_q_stratum(q));
    }
  }
  EXPECT_TRUE(h_to_q_preimages(HStratum::make({3, 1}), {12, true}).empty());
  auto with = h_to_q_preimages(HStratum::make({1, 1, 1, 1}), {4, true});
  EXPECT_NE(std::find(with.begin(), with.end(), parse_q_stratum("Q(2,2)")), with.end());
  auto without = h_to_q_preimages(HStratum::make({1, 1, 1, 1}), {4, false});
  EXPECT_EQ(std::find(without.begin(), without.end(), parse_q_stratum("Q(2,2)")), without.end());
}

TEST(Strata, GenusAndTiles) {
  EXPECT_EQ(HStratum::make({2}).genus(), 2);
  EXPECT_EQ(HStratum::make({1, 1, 1, 1}).genus(), 3);
  EXPECT_EQ(min_tiles(HStratum::make({2})), 3);
  EXPECT_EQ(min_tiles(HStratum{}), 1);
  EXPECT_EQ(parse_q_stratum("Q(5,-1)").genus(), 2);
}
