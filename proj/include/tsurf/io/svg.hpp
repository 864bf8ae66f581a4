#ifndef TSURF_IO_SVG_HPP
#define TSURF_IO_SVG_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tsurf/geodesics.hpp"
#include "tsurf/semi_translation.hpp"

namespace tsurf::io {

struct SvgOptions {
  std::optional<SurfacePoint> trace_from;
  std::optional<Heading> trace_dir;
  int max_periods = 0;  // 0: sheet count
};

namespace detail {

inline std::string subscript(int n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s;
  for (char c : std::to_string(n)) s += digits[c - '0'];
  return s;
}

/// Pieces of start + t*h, t in [t0,t1], cut at the unit square boundaries and
/// translated into [0,1]^2.
inline std::vector<std::pair<Vec2, Vec2>> unit_pieces(const Vec2& start, const Vec2& h, const Rat& t0, const Rat& t1) {
  std::vector<Rat> ts = {t0, t1};
  for (int axis = 0; axis < 2; ++axis) {
    Rat a = axis ? start.y : start.x, d = axis ? h.y : h.x;
    if (d == 0) continue;
    Rat lo = a + t0 * d, hi = a + t1 * d;
    if (lo > hi) std::swap(lo, hi);
    for (Int k = floor(lo) + 1; Rat(k) < hi; ++k) ts.push_back((Rat(k) - a) / d);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<std::pair<Vec2, Vec2>> out;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    Vec2 mid = start + (Rat(1, 2) * (ts[i] + ts[i + 1])) * h;
    Vec2 off{Rat(floor(mid.x)), Rat(floor(mid.y))};
    out.push_back({start + ts[i] * h - off, start + ts[i + 1] * h - off});
  }
  return out;
}

inline long long round_px(const Rat& v) { return static_cast<long long>(to_i64(floor(v + Rat(1, 2)))); }

struct Canvas {
  int unit = 480;
  int gap = 96;
  int margin = 48;
  std::ostringstream body;

  long long sx(int panel, const Rat& x) const { return margin + panel * (unit + gap) + round_px(x * unit); }
  long long sy(const Rat& y) const { return margin + round_px((1 - y) * unit); }

  void line(int panel, const Vec2& a, const Vec2& b, const std::string& style) {
    body << "<line x1=\"" << sx(panel, a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(panel, b.x) << "\" y2=\""
         << sy(b.y) << "\" " << style << "/>\n";
  }
  void text(long long x, long long y, const std::string& t, const std::string& style = "") {
    body << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"sans-serif\" font-size=\"" << unit / 20
         << "\" text-anchor=\"middle\"" << (style.empty() ? "" : " " + style) << ">" << t << "</text>\n";
  }
  void square(int panel, const std::string& label) {
    body << "<rect x=\"" << sx(panel, Rat(0)) << "\" y=\"" << sy(Rat(1)) << "\" width=\"" << unit << "\" height=\"" << unit
         << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    text(sx(panel, Rat(1, 2)), margin + unit + margin / 2 + unit / 40, label);
  }
  void cross_mark(int panel, const TorusPoint& p) {
    long long x = sx(panel, p.x()), y = sy(p.y()), r = unit / 60 + 2;
    body << "<path d=\"M" << x - r << " " << y - r << " L" << x + r << " " << y + r << " M" << x - r << " " << y + r
         << " L" << x + r << " " << y - r << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  std::string finish(int panels) const {
    std::ostringstream o;
    long long w = 2 * margin + panels * unit + (panels - 1) * gap, h = 2 * margin + unit + margin;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
      << " " << h << "\">\n";
    o << body.str() << "</svg>\n";
    return o.str();
  }
};

inline int pick_unit(const CutCover& s) {
  Int m = 1;
  for (const auto& c : s.cuts())
    for (const Rat& v : {c.segment.start().x(), c.segment.start().y(), c.segment.holonomy().x, c.segment.holonomy().y})
      m = lcm(m, den(v));
  for (const auto& p : s.marked()) m = lcm(m, lcm(den(p.x()), den(p.y())));
  if (m > 480) return 480;
  int mi = static_cast<int>(m);
  return mi * ((480 + mi - 1) / mi);
}

}  // namespace detail

/// One unit square per sheet; cuts drawn with sheet-indexed labels and +/- sides,
/// marked points as crosses, an optional traced trajectory in red.
inline std::string render_svg(const CutCover& s, const SvgOptions& opt = {}) {
  detail::Canvas cv;
  cv.unit = detail::pick_unit(s);
  cv.gap = cv.unit / 5;
  cv.margin = cv.unit / 10;
  const int N = s.sheets();
  for (int k = 0; k < N; ++k) {
    cv.square(k, "sheet " + std::to_string(k + 1));
    for (const auto& c : s.cuts()) {
      const Vec2 h = c.segment.holonomy();
      auto pieces = detail::unit_pieces(c.segment.start().vec(), h, Rat(0), Rat(1));
      for (const auto& [a, b] : pieces) cv.line(k, a, b, "stroke=\"blue\" stroke-width=\"3\"");
      const auto& [a, b] = pieces.front();
      Vec2 mid = Rat(1, 2) * (a + b);
      Vec2 n = rot90(h);  // left normal
      Rat len = abs(n.x) + abs(n.y);
      Vec2 off = (Rat(1, 24) / len) * n;
      cv.text(cv.sx(k, mid.x + off.x), cv.sy(mid.y + off.y), "+", "fill=\"blue\"");
      cv.text(cv.sx(k, mid.x - off.x), cv.sy(mid.y - off.y), "−", "fill=\"blue\"");
      Vec2 tag = mid + Rat(2) * off;
      cv.text(cv.sx(k, tag.x), cv.sy(tag.y), c.label + detail::subscript(k + 1), "fill=\"blue\"");
    }
    for (const auto& p : s.marked()) cv.cross_mark(k, p);
  }
  if (opt.trace_from && opt.trace_dir) {
    const SurfacePoint& st = *opt.trace_from;
    const Heading& h = *opt.trace_dir;
    TraceOutcome out = trace(s, st, h, opt.max_periods);
    int periods = opt.max_periods > 0 ? opt.max_periods : N;
    Rat stop = Rat(periods);
    if (out.closed()) stop = Rat(out.periods);
    if (out.kind == TraceOutcome::Kind::HitsConePoint) stop = out.time;
    // Replays labels with the full event list so that unchanged crossings are kept.
    auto ev = tsurf::detail::period_events(s, st.pos, h);
    int label = tsurf::detail::initial_label(s, st, h.vec());
    Rat t = 0;
    auto draw = [&](const Rat& t0, const Rat& t1, int sheet) {
      if (t1 <= t0) return;
      for (const auto& [a, b] : detail::unit_pieces(st.pos.vec(), h.vec(), t0, t1))
        cv.line(sheet, a, b, "stroke=\"red\" stroke-width=\"2\"");
    };
    for (int k = 0; k < periods && t < stop; ++k) {
      for (const auto& e : ev) {
        Rat te = Rat(k) + e.t;
        if (te >= stop) break;
        draw(t, te, label);
        t = te;
        label = e.action(label);
      }
    }
    draw(t, stop, label);
    cv.cross_mark(st.sheet, st.pos);
  }
  return cv.finish(N);
}

/// Cells in a row; paired edges share a letter, flips are starred.
inline std::string render_svg(const SemiTranslationComplex& cx, const SvgOptions& opt = {}) {
  if (opt.trace_from || opt.trace_dir) throw InvalidArgument("trace overlays need a translation surface");
  detail::Canvas cv;
  cv.unit = 240;
  cv.gap = 60;
  cv.margin = 40;
  std::vector<std::pair<EdgeRef, std::string>> tags;
  int letter = 0;
  for (const auto& p : cx.pairs()) {
    std::string t;
    for (int v = letter++;; v = v / 26 - 1) {
      t.insert(t.begin(), static_cast<char>('a' + v % 26));
      if (v < 26) break;
    }
    if (p.flip) t += "*";
    tags.push_back({p.a, t});
    tags.push_back({p.b, t});
  }
  for (int c = 0; c < cx.cells(); ++c) cv.square(c, "cell " + std::to_string(c + 1));
  for (const auto& [e, t] : tags) {
    Rat x = Rat(1, 2), y = Rat(1, 2);
    switch (e.edge) {
      case Edge::R: x = Rat(9, 10); break;
      case Edge::L: x = Rat(1, 10); break;
      case Edge::T: y = Rat(17, 20); break;
      case Edge::B: y = Rat(1, 10); break;
    }
    cv.text(cv.sx(e.cell, x), cv.sy(y), t);
  }
  return cv.finish(cx.cells());
}

}  // namespace tsurf::io

#endif  // TSURF_IO_SVG_HPP
