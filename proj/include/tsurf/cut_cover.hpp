#ifndef TSURF_CUT_COVER_HPP
#define TSURF_CUT_COVER_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "tsurf/errors.hpp"
#include "tsurf/geometry.hpp"
#include "tsurf/origami.hpp"
#include "tsurf/permutation.hpp"
#include "tsurf/strata.hpp"

namespace tsurf {

/// A slit on the base torus. Crossing it from its left side to its right side
/// (along the segment direction rotated by -90 degrees) sends sheet s to perm(s);
/// the reverse crossing applies the inverse.
struct Cut {
  Segment segment;
  Permutation perm;
  std::string label;

  /// Sheet reached when moving across the cut with velocity `motion`.
  int cross(const Vec2& motion, int sheet) const {
    return tsurf::cross(motion, segment.holonomy()) > 0 ? perm(sheet) : perm.inverse()(sheet);
  }
};

enum class Side { Left, Right };

/// A point of the cover. Conventions for the sheet label:
///  - at a vertex of the cut arrangement, the sheet seen just counterclockwise of
///    the positive x-axis (the lower-left corner of a square in an origami);
///  - on the interior of a cut, the sheet seen from `side` of the cut;
///  - elsewhere the sheet is unambiguous and `side` is ignored.
struct SurfacePoint {
  int sheet = 0;
  TorusPoint pos;
  Side side = Side::Left;

  friend bool operator==(const SurfacePoint& a, const SurfacePoint& b) {
    return a.sheet == b.sheet && a.pos == b.pos && a.side == b.side;
  }
};

inline std::string to_string(const SurfacePoint& p) {
  return std::to_string(p.sheet + 1) + ":" + to_string(p.pos.x()) + "," + to_string(p.pos.y());
}

/// Half-line of a cut emanating from a point: direction +h (sense +1) or -h (sense -1).
struct Ray {
  Vec2 dir;
  int cut = 0;
  int sense = 1;
};

/// A position on a small circle around a point: just clockwise (bias -1) or just
/// counterclockwise (bias +1) of direction `dir`.
struct CirclePos {
  Vec2 dir;
  int bias = 1;
};

/// Cut rays around a point, sorted by angle from the positive x-axis.
struct Star {
  TorusPoint point;
  std::vector<Ray> rays;
};

struct ConeDatum {
  TorusPoint base_point;
  Permutation monodromy;   // counterclockwise loop, labels in the reference sector
  std::vector<int> cycles; // descending
  bool regular() const { return cycles.empty() || cycles.front() == 1; }
};

class CutCover {
 public:
  CutCover() = default;

  static CutCover make(int sheets, std::vector<Cut> cuts, std::set<TorusPoint> marked, std::string name = "surface",
                       bool allow_disconnected = false) {
    if (sheets < 1) throw InvalidArgument("a cover needs at least one sheet");
    for (const auto& c : cuts) {
      if (c.perm.size() != sheets)
        throw ModelError("cut '" + c.label + "' permutation acts on " + std::to_string(c.perm.size()) +
                         " sheets, expected " + std::to_string(sheets));
      for (const TorusPoint& e : {c.segment.start(), c.segment.end()})
        if (!marked.count(e)) throw ModelError("endpoint " + to_string(e) + " of cut '" + c.label + "' is not marked");
    }
    CutCover s;
    s.sheets_ = sheets;
    s.cuts_ = std::move(cuts);
    s.marked_ = std::move(marked);
    s.name_ = std::move(name);
    s.allow_disconnected_ = allow_disconnected;
    s.topo_ = std::make_shared<Topology>(build_topology(s));
    if (!allow_disconnected && !s.connected()) throw ConnectivityError("surface '" + s.name_ + "' is disconnected");
    return s;
  }

  int sheets() const { return sheets_; }
  const std::vector<Cut>& cuts() const { return cuts_; }
  const std::set<TorusPoint>& marked() const { return marked_; }
  const std::string& name() const { return name_; }
  bool allows_disconnected() const { return allow_disconnected_; }

  /// Marked points together with all pairwise cut intersection points.
  const std::set<TorusPoint>& vertices() const { return topo_->vertices; }
  bool is_vertex(const TorusPoint& p) const { return topo_->vertices.count(p) > 0; }

  std::vector<Permutation> cut_permutations() const {
    std::vector<Permutation> g;
    for (const auto& c : cuts_) g.push_back(c.perm);
    return g;
  }

  int component_count() const { return orbit_count(sheets_, cut_permutations()); }
  bool connected() const { return component_count() == 1; }

  /// Rays of every cut through `p` (precomputed for vertices).
  Star star(const TorusPoint& p) const {
    if (auto it = topo_->stars.find(p); it != topo_->stars.end()) return it->second;
    return make_star(cuts_, p);
  }

  /// Structural equality of the defining data (the derived topology is ignored).
  friend bool operator==(const CutCover& a, const CutCover& b) {
    if (a.sheets_ != b.sheets_ || a.marked_ != b.marked_ || a.name_ != b.name_ ||
        a.allow_disconnected_ != b.allow_disconnected_ || a.cuts_.size() != b.cuts_.size())
      return false;
    for (std::size_t i = 0; i < a.cuts_.size(); ++i) {
      const Cut& x = a.cuts_[i];
      const Cut& y = b.cuts_[i];
      if (!(x.segment == y.segment) || !(x.perm == y.perm) || x.label != y.label) return false;
    }
    return true;
  }

  int ccw_cross(const Ray& r, int sheet) const { return cuts_[r.cut].cross(rot90(r.dir), sheet); }
  int cw_cross(const Ray& r, int sheet) const { return cuts_[r.cut].cross(-rot90(r.dir), sheet); }

  /// Sheet label after walking counterclockwise around star.point from `from` to `to`
  /// (less than one full turn).
  int walk_ccw(const Star& st, int sheet, const CirclePos& from, const CirclePos& to) const {
    for (const Ray* r : rays_between(st, from, to)) sheet = ccw_cross(*r, sheet);
    return sheet;
  }

  /// Inverse of walk_ccw(st, ., to, from): walks clockwise from `from` to `to`.
  int walk_cw(const Star& st, int sheet, const CirclePos& from, const CirclePos& to) const {
    auto rays = rays_between(st, to, from);
    for (auto it = rays.rbegin(); it != rays.rend(); ++it) sheet = cw_cross(**it, sheet);
    return sheet;
  }

  /// Monodromy of one counterclockwise loop starting at `start`.
  Permutation monodromy(const Star& st, const CirclePos& start) const {
    std::vector<int> img(sheets_);
    auto order = loop_order(st, start);
    for (int s = 0; s < sheets_; ++s) {
      int t = s;
      for (const Ray* r : order) t = ccw_cross(*r, t);
      img[s] = t;
    }
    return Permutation::from_images(std::move(img));
  }

  static CirclePos reference_position() { return {{Rat(1), Rat(0)}, +1}; }

  ConeDatum cone_datum(const TorusPoint& p) const {
    Star st = star(p);
    Permutation m = monodromy(st, reference_position());
    return {p, m, m.cycle_type()};
  }

  /// One datum per vertex, in canonical point order.
  std::vector<ConeDatum> cone_data() const {
    std::vector<ConeDatum> out;
    for (const auto& v : vertices()) out.push_back(cone_datum(v));
    return out;
  }

  bool is_regular(const SurfacePoint& pt) const {
    if (!is_vertex(pt.pos)) return true;
    return cone_datum(pt.pos).monodromy.cycle_length_of(pt.sheet) == 1;
  }

  /// Cone angle of the point in multiples of 2*pi.
  int cone_order(const SurfacePoint& pt) const {
    if (!is_vertex(pt.pos)) return 1;
    return cone_datum(pt.pos).monodromy.cycle_length_of(pt.sheet);
  }

 private:
  struct Topology {
    std::set<TorusPoint> vertices;
    std::map<TorusPoint, Star> stars;
  };

  static Star make_star(const std::vector<Cut>& cuts, const TorusPoint& p) {
    Star st{p, {}};
    for (int c = 0; c < static_cast<int>(cuts.size()); ++c) {
      const Segment& seg = cuts[c].segment;
      for (const Rat& u : segment_parameters(seg, p)) {
        if (u < 1) st.rays.push_back({seg.holonomy(), c, +1});
        if (u > 0) st.rays.push_back({-seg.holonomy(), c, -1});
      }
    }
    std::stable_sort(st.rays.begin(), st.rays.end(),
                     [](const Ray& a, const Ray& b) { return angle_compare(a.dir, b.dir) < 0; });
    return st;
  }

  static Topology build_topology(const CutCover& s) {
    Topology t;
    t.vertices = s.marked_;
    const auto& cuts = s.cuts_;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      for (std::size_t j = i + 1; j < cuts.size(); ++j) {
        auto inter = segment_intersection(cuts[i].segment, cuts[j].segment);
        for (const auto& part : inter.parts) {
          if (part.kind == Intersection::Kind::Point) {
            t.vertices.insert(part.point);
          } else if (cuts[i].perm * cuts[j].perm != cuts[j].perm * cuts[i].perm) {
            throw ModelError("cuts '" + cuts[i].label + "' and '" + cuts[j].label +
                             "' overlap with non-commuting permutations");
          }
        }
      }
    }
    for (const auto& v : t.vertices) t.stars.emplace(v, make_star(cuts, v));
    return t;
  }

  // Rotated coordinates of v in the frame where `base` points along +x.
  static Vec2 relative(const Vec2& base, const Vec2& v) { return {dot(base, v), cross(base, v)}; }

  static bool at_zero(const Vec2& base, const Vec2& v) { return cross(base, v) == 0 && dot(base, v) > 0; }

  // Rays met when moving counterclockwise strictly from `from` to `to`.
  static std::vector<const Ray*> rays_between(const Star& st, const CirclePos& from, const CirclePos& to) {
    const Vec2& a = from.dir;
    std::vector<const Ray*> sorted;
    for (const auto& r : st.rays) sorted.push_back(&r);
    std::stable_sort(sorted.begin(), sorted.end(), [&](const Ray* x, const Ray* y) {
      return angle_compare(relative(a, x->dir), relative(a, y->dir)) < 0;
    });
    Vec2 rel_to = relative(a, to.dir);
    // position key: (angle relative to `a`, bias); rays have bias 0
    auto cmp_pos = [&](const Vec2& rel_dir, int bias, const Vec2& rel_dir2, int bias2) {
      int c = angle_compare(rel_dir, rel_dir2);
      if (c != 0) return c;
      return bias < bias2 ? -1 : (bias > bias2 ? 1 : 0);
    };
    Vec2 zero{Rat(1), Rat(0)};
    bool wraps = cmp_pos(rel_to, to.bias, zero, from.bias) <= 0;
    std::vector<const Ray*> first, second;
    for (const Ray* r : sorted) {
      Vec2 rr = relative(a, r->dir);
      bool after_from = cmp_pos(rr, 0, zero, from.bias) > 0;
      bool before_to = cmp_pos(rr, 0, rel_to, to.bias) < 0;
      if (!wraps) {
        if (after_from && before_to) first.push_back(r);
      } else {
        if (after_from) first.push_back(r);
        if (before_to) second.push_back(r);
      }
    }
    first.insert(first.end(), second.begin(), second.end());
    return first;
  }

  static std::vector<const Ray*> loop_order(const Star& st, const CirclePos& start) {
    const Vec2& a = start.dir;
    std::vector<const Ray*> head, tail;
    for (const auto& r : st.rays) (start.bias > 0 && at_zero(a, r.dir) ? tail : head).push_back(&r);
    std::stable_sort(head.begin(), head.end(), [&](const Ray* x, const Ray* y) {
      return angle_compare(relative(a, x->dir), relative(a, y->dir)) < 0;
    });
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
  }

  int sheets_ = 1;
  std::vector<Cut> cuts_;
  std::set<TorusPoint> marked_;
  std::string name_ = "surface";
  bool allow_disconnected_ = false;
  std::shared_ptr<const Topology> topo_ = std::make_shared<Topology>();
};

/// Stratum from the cone data (combinatorial Gauss-Bonnet bookkeeping).
inline HStratum stratum(const CutCover& s) {
  std::vector<int> k;
  int sum = 0;
  for (const auto& d : s.cone_data())
    for (int c : d.cycles)
      if (c > 1) {
        k.push_back(c - 1);
        sum += c - 1;
      }
  if (sum % 2 != 0) throw std::logic_error("odd cone angle excess sum on '" + s.name() + "'");
  return HStratum::make(std::move(k));
}

inline int genus(const CutCover& s) {
  if (!s.connected()) throw ConnectivityError("genus of disconnected surface '" + s.name() + "'");
  return stratum(s).genus();
}

inline TorusPoint project(const SurfacePoint& pt) { return pt.pos; }

/// Points over x: N of them over a non-vertex, one per monodromy cycle over a vertex.
inline std::vector<SurfacePoint> fiber(const CutCover& s, const TorusPoint& x) {
  std::vector<SurfacePoint> out;
  if (!s.is_vertex(x)) {
    for (int i = 0; i < s.sheets(); ++i) out.push_back({i, x, Side::Left});
    return out;
  }
  for (const auto& c : s.cone_datum(x).monodromy.cycles()) out.push_back({c.front(), x, Side::Left});
  return out;
}

/// The origami as a cover of the unit torus branched over the origin: the loop
/// x = 0 moves a sheet to its right neighbour, the loop y = 0 to its top neighbour.
inline CutCover from_origami(const Origami& o, std::string name = "origami") {
  std::vector<Cut> cuts;
  cuts.push_back({Segment::make(TorusPoint(0, 0), {Rat(0), Rat(1)}), o.right(), "r"});
  cuts.push_back({Segment::make(TorusPoint(0, 0), {Rat(-1), Rat(0)}), o.up(), "u"});
  return CutCover::make(o.squares(), std::move(cuts), {TorusPoint(0, 0)}, std::move(name), o.allows_disconnected());
}

/// Joins the surfaces along one slit placed identically on the first sheet of each;
/// crossing the slit on summand i leads to summand cycle(i).
inline CutCover slit_join(const std::vector<CutCover>& surfaces, const Segment& slit, const Permutation& cycle,
                          bool require_connected = true, std::string name = "slit-join") {
  int n = static_cast<int>(surfaces.size());
  if (n == 0) throw InvalidArgument("slit_join needs at least one surface");
  if (cycle.size() != n) throw InvalidArgument("cycle must permute the surface list");
  if (require_connected && cycle.cycles().size() != 1)
    throw ConnectivityError("slit permutation " + cycle.to_string() + " is not a single cycle");
  std::vector<int> offset(n + 1, 0);
  for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + surfaces[i].sheets();
  int total = offset[n];

  std::vector<Cut> cuts;
  std::set<TorusPoint> marked;
  for (int i = 0; i < n; ++i) {
    for (const auto& c : surfaces[i].cuts())
      cuts.push_back({c.segment, c.perm.embedded(total, offset[i]), c.label + "_" + std::to_string(i + 1)});
    marked.insert(surfaces[i].marked().begin(), surfaces[i].marked().end());
  }
  std::vector<int> img(total);
  for (int s = 0; s < total; ++s) img[s] = s;
  for (int i = 0; i < n; ++i) img[offset[i]] = offset[cycle(i)];
  cuts.push_back({slit, Permutation::from_images(img), "slit"});
  marked.insert(slit.start());
  marked.insert(slit.end());
  return CutCover::make(total, std::move(cuts), std::move(marked), std::move(name), !require_connected);
}

}  // namespace tsurf

#endif  // TSURF_CUT_COVER_HPP
