#include <gtest/gtest.h>

#include <numeric>

#include "tsurf/tsurf.hpp"

using namespace tsurf;

namespace {

std::vector<Permutation> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_images(v));
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Origami l3() { return Origami::make(Permutation::parse("(1 2)", 3), Permutation::parse("(1 3)", 3)); }

}  // namespace

TEST(CutCover, OrigamiConeDataMatchesCommutator) {
  // The star walk around the origin and the commutator are computed independently.
  for (int n = 1; n <= 4; ++n) {
    auto perms = all_perms(n);
    for (const auto& r : perms)
      for (const auto& u : perms) {
        if (!generates_transitive(n, {r, u})) continue;
        Origami o = Origami::make(r, u);
        CutCover s = from_origami(o);
        EXPECT_EQ(stratum(s), o.stratum()) << r.to_string() << " " << u.to_string();
        auto cyc = s.cone_datum(TorusPoint(0, 0)).cycles;
        auto ref = o.commutator().cycle_type();
        std::sort(cyc.begin(), cyc.end());
        std::sort(ref.begin(), ref.end());
        EXPECT_EQ(cyc, ref);
      }
  }
}

TEST(CutCover, EulerOracleAgreesOnOrigamis) {
  for (int n = 1; n <= 4; ++n) {
    auto perms = all_perms(n);
    for (std::size_t i = 0; i < perms.size(); i += 3)
      for (std::size_t j = 0; j < perms.size(); j += 2) {
        if (!generates_transitive(n, {perms[i], perms[j]})) continue;
        CutCover s = from_origami(Origami::make(perms[i], perms[j]));
        EXPECT_EQ(euler_genus_oracle(s), genus(s));
      }
  }
}

TEST(CutCover, Validation) {
  Segment a = Segment::between({Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(1, 2)});
  Permutation t = Permutation::transposition(2, 0, 1);
  EXPECT_THROW(CutCover::make(2, {{a, t, "A"}}, {TorusPoint(0, Rat(1, 2))}), ModelError);
  EXPECT_THROW(CutCover::make(3, {{a, t, "A"}}, {a.start(), a.end()}), ModelError);
  EXPECT_THROW(CutCover::make(2, {}, {}), ConnectivityError);
  EXPECT_NO_THROW(CutCover::make(2, {}, {}, "two", true));
  // overlapping cuts with non-commuting permutations
  Segment b = Segment::between({Rat(1, 4), Rat(1, 2)}, {Rat(3, 4), Rat(1, 2)});
  std::set<TorusPoint> m = {a.start(), a.end(), b.start(), b.end()};
  EXPECT_THROW(CutCover::make(3, {{a, Permutation::parse("(1 2)", 3), "A"}, {b, Permutation::parse("(2 3)", 3), "B"}}, m),
               ModelError);
  EXPECT_NO_THROW(CutCover::make(3, {{a, Permutation::parse("(1 2 3)", 3), "A"}, {b, Permutation::parse("(1 3 2)", 3), "B"}}, m));
}

TEST(CutCover, SlitPairCones) {
  CutCover s = slit_tori_pair().surface;
  EXPECT_EQ(stratum(s), HStratum::make({1, 1}));
  EXPECT_EQ(euler_genus_oracle(s), 2);
  for (const auto& d : s.cone_data()) EXPECT_EQ(d.cycles, std::vector<int>{2});
  auto f = fiber(s, TorusPoint(Rat(1, 4), Rat(1, 8)));
  EXPECT_EQ(f.size(), 1u);
  EXPECT_EQ(fiber(s, TorusPoint(Rat(1, 2), Rat(7, 8))).size(), 2u);
  EXPECT_EQ(s.cone_order(f[0]), 2);
}

TEST(CutCover, MarkedRegularPointIsRegular) {
  // A slit whose permutation is trivial leaves its endpoints regular.
  Segment a = Segment::between({Rat(1, 4), Rat(1, 4)}, {Rat(3, 4), Rat(1, 4)});
  CutCover s = CutCover::make(2, {{a, Permutation(2), "A"}, {Segment::between({Rat(1, 8), Rat(0)}, {Rat(1, 8), Rat(1)}),
                                                             Permutation::transposition(2, 0, 1), "B"}},
                              {a.start(), a.end(), TorusPoint(Rat(1, 8), 0)});
  EXPECT_EQ(stratum(s), HStratum{});
  EXPECT_TRUE(s.is_regular({0, a.start(), Side::Left}));
}

TEST(CutCover, NotationsForConstructions) {
  EXPECT_EQ(stratum(cyclic_blocked(1).surface), HStratum{});
  EXPECT_EQ(stratum(cyclic_blocked(4).surface), HStratum::make({3, 3, 3, 3}));
  auto even = add_even_genus_slit(cyclic_blocked(2), 0, 1);
  EXPECT_EQ(stratum(even.surface), HStratum::make({1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(euler_genus_oracle(even.surface), 4);
  EXPECT_THROW(add_even_genus_slit(cyclic_blocked(2), 0, 0), InvalidArgument);
  EXPECT_THROW(grid_blocked(2, 4), InvalidArgument);
  auto g = grid_blocked(2, 5);
  EXPECT_EQ(genus(g.surface), euler_genus_oracle(g.surface));
  EXPECT_EQ(g.blocking_points.size(), 24u);
}

TEST(SemiTranslation, SmallComplexes) {
  EXPECT_EQ(q_stratum(pillowcase()), parse_q_stratum("Q(-1^4)"));
  EXPECT_EQ(q_stratum(torus_complex()), QStratum{});
  auto dc = canonical_double_cover(pillowcase());
  EXPECT_TRUE(dc.connected);
  EXPECT_EQ(dc.origami.squares(), 4);
  EXPECT_EQ(dc.origami.stratum(), HStratum{});
  EXPECT_FALSE(canonical_double_cover(torus_complex()).connected);
}

TEST(SemiTranslation, Validation) {
  EXPECT_THROW(SemiTranslationComplex::make(1, {{{0, Edge::R}, {0, Edge::R}, false}}), ModelError);
  EXPECT_THROW(SemiTranslationComplex::make(1, {{{0, Edge::R}, {0, Edge::T}, true}}), ModelError);
  EXPECT_THROW(SemiTranslationComplex::make(1, {{{0, Edge::R}, {0, Edge::L}, false}}), ModelError);
  EXPECT_THROW(SemiTranslationComplex::make(2, {{{0, Edge::R}, {0, Edge::L}, false},
                                                {{0, Edge::T}, {0, Edge::B}, false},
                                                {{1, Edge::R}, {1, Edge::L}, false},
                                                {{1, Edge::T}, {1, Edge::B}, false}}),
               ConnectivityError);
}

TEST(SemiTranslation, LFamily) {
  for (int n = 4; n <= 8; ++n) {
    auto cx = l_complex(n);
    EXPECT_EQ(q_stratum(cx), QStratum::make({5, -1})) << n;
    auto pi = unique_pi_point(cx);
    ASSERT_TRUE(pi.has_value());
    auto r = l_family(n);
    EXPECT_EQ(r.origami->stratum(), HStratum::make({6}));
    EXPECT_EQ(r.origami->squares(), 2 * n);
    EXPECT_TRUE(r.surface.is_regular(r.candidates[0]));
  }
  EXPECT_THROW(l_complex(3), InvalidArgument);
}

TEST(SemiTranslation, FuzzAgainstEulerOracle) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 60; ++i) {
    auto cx = random_complex(rng, 5);
    auto dc = canonical_double_cover(cx);
    HStratum h = q_to_h(q_stratum(cx));
    EXPECT_EQ(dc.origami.stratum(), h);
    CutCover s = from_origami(dc.origami, "fuzz");
    if (s.connected()) EXPECT_EQ(euler_genus_oracle(s), h.genus());
  }
}

TEST(SL2Z, DecompositionMultipliesBack) {
  for (std::int64_t a = -5; a <= 5; ++a)
    for (std::int64_t b = -5; b <= 5; ++b)
      for (std::int64_t c = -5; c <= 5; ++c)
        for (std::int64_t d = -5; d <= 5; ++d) {
          std::int64_t det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          VeechElement prod;
          for (Generator g : decompose({a, b, c, d})) prod = prod * matrix_of(g);
          EXPECT_EQ(prod, (VeechElement{a, b, c, d}));
        }
  EXPECT_THROW(decompose({2, 0, 0, 1}), InvalidArgument);
}

TEST(SL2Z, GeneratorOrbitsOfL) {
  Origami o = l3();
  EXPECT_EQ(act(act(o, Generator::T), Generator::Tinv), o);
  EXPECT_EQ(act(act(o, Generator::S), Generator::Sinv), o);
  EXPECT_EQ(sl2z_act(o, VeechElement::S() * VeechElement::S()), o);
  for (auto g : {Generator::T, Generator::Tinv, Generator::S, Generator::Sinv, Generator::D})
    EXPECT_EQ(act(o, g).stratum(), HStratum::make({2}));
}

TEST(SL2Z, PointMapInverts) {
  Origami o = l3();
  for (int sq = 0; sq < 3; ++sq)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        OrigamiPoint p{sq, Rat(i, 4), Rat(j, 4)};
        EXPECT_EQ(act_point(act(o, Generator::T), Generator::Tinv, act_point(o, Generator::T, p)), p);
        EXPECT_EQ(act_point(act(o, Generator::S), Generator::Sinv, act_point(o, Generator::S, p)), p);
      }
}

TEST(SL2Z, RefinementKeepsClosedTrajectories) {
  const int M = 4;
  CutCover base = double_blocked().surface;
  Origami o = refine_to_origami(base, M);
  EXPECT_EQ(o.squares(), 2 * M * M);
  CutCover ref = from_origami(o, "refined");
  EXPECT_EQ(stratum(ref), stratum(base));
  SurfacePoint p{1, TorusPoint(Rat(1, 8), Rat(3, 8)), Side::Left};
  for (auto d : {Heading::make(0, 1), Heading::make(1, 0), Heading::make(1, 2)}) {
    // Time in the refined surface runs M times faster.
    auto t0 = trace(base, p, d);
    auto t1 = trace(ref, to_surface_point(refine_point(p, M)), d, M * M * 2);
    EXPECT_EQ(t0.closed(), t1.closed()) << to_string(d);
  }
  EXPECT_THROW(refine_to_origami(slit_tori_pair().surface, 8), UnsupportedGeometry);
}
