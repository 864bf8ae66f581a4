#ifndef TSURF_GEODESICS_HPP
#define TSURF_GEODESICS_HPP

#include <algorithm>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "tsurf/cut_cover.hpp"

namespace tsurf {

// The tracer follows the sheet seen just to the left of the trajectory (an
// infinitesimal left offset). That label is unambiguous even where the path runs
// along a cut or through a vertex, so every case reduces to ray crossings.

struct TraceEvent {
  Rat time;              // periods elapsed (integer part) plus position in the period
  TorusPoint where;
  std::string what;      // cut label, or "vertex"
  int before = 0;        // left label before the event
  int after = 0;
};

struct TraceOutcome {
  enum class Kind { Closed, HitsConePoint, HitsMarkedRegular, BudgetExceeded };
  Kind kind = Kind::BudgetExceeded;
  int periods = 0;                 // Closed: number of torus periods
  std::vector<TraceEvent> events;  // Closed: crossing events over all periods
  SurfacePoint at;                 // hit point (sheet in the vertex reference sector)
  Rat time;                        // hit time in periods

  bool closed() const { return kind == Kind::Closed; }
};

inline std::string to_string(TraceOutcome::Kind k) {
  switch (k) {
    case TraceOutcome::Kind::Closed: return "closed";
    case TraceOutcome::Kind::HitsConePoint: return "hits-cone-point";
    case TraceOutcome::Kind::HitsMarkedRegular: return "hits-marked-regular";
    case TraceOutcome::Kind::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

namespace detail {

struct PeriodEvent {
  Rat t;
  TorusPoint where;
  int cut = -1;                  // transversal crossing of this cut, or -1 for a vertex
  Permutation action;            // left label before -> after
  Permutation loop;              // vertex only: monodromy seen from the incoming left sector
  Star star;                     // vertex only
};

inline CirclePos incoming_left(const Vec2& d) { return {-d, -1}; }
inline CirclePos outgoing_left(const Vec2& d) { return {d, +1}; }

/// Events met over one torus period t in [0,1) along base + t*d, sorted by t.
inline std::vector<PeriodEvent> period_events(const CutCover& s, const TorusPoint& base, const Heading& h) {
  const Vec2 d = h.vec();
  const Vec2 b = base.vec();
  std::vector<PeriodEvent> ev;
  for (const auto& v : s.vertices()) {
    auto t = line_parameter(base, h, v);
    if (!t) continue;
    PeriodEvent e;
    e.t = *t;
    e.where = v;
    e.star = s.star(v);
    std::vector<int> img(s.sheets());
    for (int i = 0; i < s.sheets(); ++i) img[i] = s.walk_cw(e.star, i, incoming_left(d), outgoing_left(d));
    e.action = Permutation::from_images(std::move(img));
    e.loop = s.monodromy(e.star, incoming_left(d));
    ev.push_back(std::move(e));
  }
  for (int c = 0; c < static_cast<int>(s.cuts().size()); ++c) {
    const Cut& cut = s.cuts()[c];
    const Vec2& hv = cut.segment.holonomy();
    Rat cr = cross(d, hv);
    if (cr == 0) continue;  // collinear: the left offset never crosses it
    Rat f0 = cross(d, cut.segment.start().vec() - b);
    Rat f1 = f0 + cr;
    Int lo = floor(std::min(f0, f1)), hi = floor(std::max(f0, f1));
    for (Int m = lo; m <= hi; ++m) {
      Rat u = (Rat(m) - f0) / cr;
      if (u <= 0 || u >= 1) continue;
      TorusPoint x = cut.segment.at(u);
      if (s.is_vertex(x)) continue;
      PeriodEvent e;
      e.t = *line_parameter(base, h, x);
      e.where = x;
      e.cut = c;
      e.action = tsurf::cross(d, hv) > 0 ? cut.perm : cut.perm.inverse();
      ev.push_back(std::move(e));
    }
  }
  std::stable_sort(ev.begin(), ev.end(), [](const PeriodEvent& x, const PeriodEvent& y) { return x.t < y.t; });
  return ev;
}

/// Left label just before time 0 for a trajectory leaving `start` along d.
inline int initial_label(const CutCover& s, const SurfacePoint& start, const Vec2& d) {
  if (start.sheet < 0 || start.sheet >= s.sheets())
    throw InvalidArgument("sheet " + std::to_string(start.sheet + 1) + " out of range");
  if (s.is_vertex(start.pos)) {
    if (!s.is_regular(start)) throw InvalidArgument("trace starts at a cone point " + to_string(start));
    Star st = s.star(start.pos);
    return s.walk_ccw(st, start.sheet, CutCover::reference_position(), incoming_left(d));
  }
  int label = start.sheet;
  for (const auto& cut : s.cuts()) {
    if (segment_parameters(cut.segment, start.pos).empty()) continue;
    const Vec2& hv = cut.segment.holonomy();
    Rat cr = cross(hv, d);
    bool need_left = cr != 0 ? cr < 0 : dot(hv, d) > 0;
    bool have_left = start.side == Side::Left;
    if (need_left == have_left) continue;
    label = have_left ? cut.perm(label) : cut.perm.inverse()(label);
  }
  return label;
}

}  // namespace detail

/// Return permutation of left labels over one torus period, with every vertex met.
struct ReturnData {
  Permutation permutation;
  std::vector<std::pair<TorusPoint, Rat>> singular_hits;
};

inline ReturnData torus_return_data(const CutCover& s, const TorusPoint& base, const PrimitiveDirection& dir) {
  auto ev = detail::period_events(s, base, dir.heading());
  ReturnData r{Permutation(s.sheets()), {}};
  for (const auto& e : ev) {
    r.permutation = e.action * r.permutation;
    if (e.cut < 0) r.singular_hits.emplace_back(e.where, e.t);
  }
  return r;
}

/// Oriented variant; `max_periods` <= 0 means the sheet count.
inline TraceOutcome trace(const CutCover& s, const SurfacePoint& start, const Heading& h, int max_periods = 0) {
  if (max_periods <= 0) max_periods = s.sheets();
  const Vec2 d = h.vec();
  const int label0 = detail::initial_label(s, start, d);
  auto ev = detail::period_events(s, start.pos, h);

  TraceOutcome out;
  int label = label0;
  for (int k = 0; k < max_periods; ++k) {
    for (const auto& e : ev) {
      Rat time = Rat(k) + e.t;
      if (e.cut < 0 && e.loop.cycle_length_of(label) > 1) {
        out.kind = TraceOutcome::Kind::HitsConePoint;
        int ref = s.walk_cw(e.star, label, detail::incoming_left(d), CutCover::reference_position());
        out.at = {ref, e.where, Side::Left};
        out.time = time;
        out.events.clear();
        return out;
      }
      int next = e.action(label);
      if (next != label || e.cut < 0)
        out.events.push_back({time, e.where, e.cut < 0 ? "vertex" : s.cuts()[e.cut].label, label, next});
      label = next;
    }
    if (label == label0) {
      out.kind = TraceOutcome::Kind::Closed;
      out.periods = k + 1;
      return out;
    }
  }
  out.kind = TraceOutcome::Kind::BudgetExceeded;
  out.events.clear();
  return out;
}

inline TraceOutcome trace(const CutCover& s, const SurfacePoint& start, const PrimitiveDirection& dir,
                          int max_periods = 0) {
  return trace(s, start, dir.heading(), max_periods);
}

inline bool is_on_closed_geodesic(const CutCover& s, const SurfacePoint& pt, const Heading& h) {
  return trace(s, pt, h).closed();
}

inline bool is_on_closed_geodesic(const CutCover& s, const SurfacePoint& pt, const PrimitiveDirection& dir) {
  return trace(s, pt, dir).closed();
}

/// First direction in enumeration order through which pt closes. Absence is only
/// evidence of obliviousness up to the searched height.
inline std::optional<PrimitiveDirection> find_closing_direction(const CutCover& s, const SurfacePoint& pt,
                                                                std::int64_t max_height, int jobs = 1) {
  if (!s.is_regular(pt)) throw InvalidArgument("search from a cone point " + to_string(pt));
  auto dirs = enumerate_primitive_directions(max_height);
  auto scan = [&](std::size_t lo, std::size_t hi) -> std::optional<std::size_t> {
    for (std::size_t i = lo; i < hi; ++i)
      if (is_on_closed_geodesic(s, pt, dirs[i])) return i;
    return std::nullopt;
  };
  if (jobs <= 1) {
    auto i = scan(0, dirs.size());
    return i ? std::optional(dirs[*i]) : std::nullopt;
  }
  std::size_t chunk = (dirs.size() + jobs - 1) / jobs;
  std::vector<std::future<std::optional<std::size_t>>> parts;
  for (std::size_t lo = 0; lo < dirs.size(); lo += chunk)
    parts.push_back(std::async(std::launch::async, scan, lo, std::min(dirs.size(), lo + chunk)));
  std::optional<std::size_t> best;
  for (auto& f : parts) {
    auto i = f.get();
    if (i && (!best || *i < *best)) best = i;
  }
  return best ? std::optional(dirs[*best]) : std::nullopt;
}

}  // namespace tsurf

#endif  // TSURF_GEODESICS_HPP
