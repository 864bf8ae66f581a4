#ifndef TSURF_CONSTRUCTIONS_HPP
#define TSURF_CONSTRUCTIONS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsurf/blocking.hpp"
#include "tsurf/cut_cover.hpp"
#include "tsurf/semi_translation.hpp"

namespace tsurf {

struct ConstructionReport {
  CutCover surface;
  std::optional<Origami> origami;           // when the surface is square-tiled by construction
  std::vector<SurfacePoint> candidates;     // advertised oblivious points
  std::vector<TorusPoint> blocking_points;  // base points used for certificates, if any
  std::optional<HStratum> expected_stratum;
  std::optional<int> expected_genus;
  std::string description;
  std::vector<std::string> notes;

  /// Throws std::logic_error when the expectations disagree with the computed data.
  void verify() const {
    HStratum h = stratum(surface);
    if (expected_stratum && !(*expected_stratum == h))
      throw std::logic_error(surface.name() + ": expected " + expected_stratum->to_string() + ", computed " + h.to_string());
    if (expected_genus && *expected_genus != h.genus())
      throw std::logic_error(surface.name() + ": expected genus " + std::to_string(*expected_genus) + ", computed " +
                             std::to_string(h.genus()));
    for (const auto& c : candidates)
      if (!surface.is_regular(c)) throw std::logic_error(surface.name() + ": candidate " + to_string(c) + " is a cone point");
  }
};

namespace detail {

inline HStratum repeated(int k, int times) { return HStratum::make(std::vector<int>(times, k)); }

inline std::vector<SurfacePoint> sheet_origins(int n) {
  std::vector<SurfacePoint> out;
  for (int j = 0; j < n; ++j) out.push_back({j, TorusPoint(0, 0), Side::Left});
  return out;
}

}  // namespace detail

inline Segment default_pair_slit() { return Segment::between({Rat(1, 4), Rat(1, 8)}, {Rat(5, 8), Rat(1, 2)}); }

/// Two tori glued crosswise along one slit.
inline ConstructionReport slit_tori_pair(const Segment& slit = default_pair_slit()) {
  CutCover torus = CutCover::make(1, {}, {}, "torus");
  ConstructionReport r;
  r.surface = slit_join({torus, torus}, slit, Permutation::cyclic(2), true, "slit-pair");
  r.expected_stratum = HStratum::make({1, 1});
  r.expected_genus = 2;
  r.description = "pair of slit tori";
  r.verify();
  return r;
}

inline const std::vector<TorusPoint>& half_blocking_points() {
  static const std::vector<TorusPoint> P = {TorusPoint(Rat(1, 2), 0), TorusPoint(0, Rat(1, 2)),
                                            TorusPoint(Rat(1, 2), Rat(1, 2)), TorusPoint(Rat(1, 4), Rat(1, 2))};
  return P;
}

/// Degree n cover branched over the four points P, both slits carrying (1 2 ... n).
inline ConstructionReport cyclic_blocked(int n) {
  if (n < 1) throw InvalidArgument("cyclic_blocked needs n >= 1");
  Permutation cyc = Permutation::cyclic(n);
  std::vector<Cut> cuts = {
      {Segment::between({Rat(0), Rat(1, 2)}, {Rat(1, 4), Rat(1, 2)}), cyc, "A"},
      {Segment::between({Rat(1, 2), Rat(0)}, {Rat(1, 2), Rat(1, 2)}), cyc, "B"},
  };
  const auto& P = half_blocking_points();
  ConstructionReport r;
  r.surface = CutCover::make(n, cuts, {P.begin(), P.end()}, "cyclic-blocked-" + std::to_string(n));
  r.candidates = detail::sheet_origins(n);
  r.blocking_points = P;
  r.expected_stratum = n >= 2 ? detail::repeated(n - 1, 4) : HStratum{};
  r.expected_genus = 2 * n - 1;
  r.description = "cyclic slit cover of degree " + std::to_string(n) + " branched over four half-points";
  r.verify();
  return r;
}

inline ConstructionReport double_blocked() {
  ConstructionReport r = cyclic_blocked(2);
  r.surface = CutCover::make(2, r.surface.cuts(), r.surface.marked(), "double-blocked");
  r.description = "double cover branched over four half-points";
  r.verify();
  return r;
}

/// Adds the diagonal slit (5/8,7/8)-(7/8,5/8) joining sheets i and j (0-based).
inline ConstructionReport add_even_genus_slit(const ConstructionReport& base, int i, int j) {
  const CutCover& s = base.surface;
  int n = s.sheets();
  if (n < 2) throw InvalidArgument("even genus step needs at least two sheets");
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw InvalidArgument("invalid sheet pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  auto cuts = s.cuts();
  Segment diag = Segment::between({Rat(5, 8), Rat(7, 8)}, {Rat(7, 8), Rat(5, 8)});
  cuts.push_back({diag, Permutation::transposition(n, i, j), "C"});
  auto marked = s.marked();
  marked.insert(diag.start());
  marked.insert(diag.end());
  ConstructionReport r = base;
  r.surface = CutCover::make(n, cuts, marked, s.name() + "-even");
  if (base.expected_stratum) {
    auto k = base.expected_stratum->excesses();
    k.push_back(1);
    k.push_back(1);
    r.expected_stratum = HStratum::make(k);
  }
  if (base.expected_genus) r.expected_genus = *base.expected_genus + 1;
  r.description = base.description + ", plus a diagonal slit";
  r.verify();
  return r;
}

struct GridComparison {
  HStratum computed_stratum;
  int computed_genus = 0;
  std::string reference_stratum;
  int reference_genus = 0;
  bool agrees() const { return computed_genus == reference_genus; }
};

/// Reference formulas H((k-1)^{4(2n+1)}) and genus 2(2n+1)(k-1)+1 next to the computed values.
inline GridComparison grid_comparison(int k, int n, const CutCover& s) {
  GridComparison c;
  c.computed_stratum = stratum(s);
  c.computed_genus = c.computed_stratum.genus();
  c.reference_stratum = "H(" + std::to_string(k - 1) + "^" + std::to_string(4 * (2 * n + 1)) + ")";
  c.reference_genus = 2 * (2 * n + 1) * (k - 1) + 1;
  return c;
}

inline std::string to_string(const GridComparison& c) {
  return "computed " + c.computed_stratum.to_string() + " genus " + std::to_string(c.computed_genus) + "; reference formula " +
         c.reference_stratum + " genus " + std::to_string(c.reference_genus) + (c.agrees() ? " (agree)" : " (differ)");
}

/// k sheets over the torus with every non-origin point of the 1/n grid a cut
/// endpoint. Each row y = j/n and the column x = 0 carry the alternating unit
/// sub-cuts [1/n,2/n], [3/n,4/n], ..., all with the k-cycle.
inline ConstructionReport grid_blocked(int k, int n) {
  if (k < 2) throw InvalidArgument("grid_blocked needs k >= 2");
  if (n < 3 || n % 2 == 0) throw InvalidArgument("grid_blocked needs odd n >= 3");
  Permutation cyc = Permutation::cyclic(k);
  std::vector<Cut> cuts;
  std::set<TorusPoint> marked;
  auto add = [&](Vec2 a, Vec2 b, std::string label) {
    Segment seg = Segment::between(a, b);
    marked.insert(seg.start());
    marked.insert(seg.end());
    cuts.push_back({seg, cyc, std::move(label)});
  };
  for (int j = 0; j < n; ++j)
    for (int m = 1; m + 1 < n; m += 2)
      add({Rat(m, n), Rat(j, n)}, {Rat(m + 1, n), Rat(j, n)}, "h" + std::to_string(j) + "_" + std::to_string(m));
  for (int m = 1; m + 1 < n; m += 2) add({Rat(0), Rat(m, n)}, {Rat(0), Rat(m + 1, n)}, "v_" + std::to_string(m));

  std::vector<TorusPoint> grid;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a || b) grid.emplace_back(Rat(a, n), Rat(b, n));
  if (std::set<TorusPoint>(grid.begin(), grid.end()) != marked)
    throw std::logic_error("grid cut endpoints differ from the non-origin grid");

  ConstructionReport r;
  r.surface = CutCover::make(k, cuts, marked, "grid-blocked-" + std::to_string(k) + "-" + std::to_string(n));
  r.candidates = detail::sheet_origins(k);
  r.blocking_points = grid;
  r.expected_stratum = detail::repeated(k - 1, n * n - 1);
  r.expected_genus = 1 + (n * n - 1) * (k - 1) / 2;
  r.description = std::to_string(k) + " sheets tiled by " + std::to_string(k * n * n) + " squares of side 1/" +
                  std::to_string(n);
  r.notes.push_back(to_string(grid_comparison(k, n, r.surface)));
  r.verify();
  return r;
}

/// Double cover of the n-cell L complex; the candidate sits over its pi point.
inline ConstructionReport l_family(int n) {
  SemiTranslationComplex cx = l_complex(n);
  if (!unique_pi_point(cx)) throw std::logic_error("L complex has no unique pi point");
  DoubleCover dc = canonical_double_cover(cx);
  if (!dc.connected || !dc.pi_square) throw std::logic_error("L double cover is degenerate");
  ConstructionReport r;
  r.origami = dc.origami;
  r.surface = from_origami(dc.origami, "l-family-" + std::to_string(n));
  r.candidates = {{*dc.pi_square, TorusPoint(0, 0), Side::Left}};
  r.expected_stratum = q_to_h(q_stratum(cx));
  r.description = std::to_string(2 * n) + "-square double cover of the " + std::to_string(n) + "-cell L, " +
                  q_stratum(cx).to_string();
  r.verify();
  return r;
}

}  // namespace tsurf

#endif  // TSURF_CONSTRUCTIONS_HPP
