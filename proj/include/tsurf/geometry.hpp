#ifndef TSURF_GEOMETRY_HPP
#define TSURF_GEOMETRY_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tsurf/errors.hpp"
#include "tsurf/rational.hpp"

namespace tsurf {

struct Vec2 {
  Rat x{0};
  Rat y{0};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(const Rat& s, const Vec2& a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  bool is_zero() const { return x == 0 && y == 0; }
};

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Vec2 rot90(const Vec2& a) { return {-a.y, a.x}; }

inline int sign(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

/// Compares the polar angles of two nonzero vectors, angles taken in [0, 2pi)
/// from the positive x-axis. Exact; no trigonometry.
inline int angle_compare(const Vec2& a, const Vec2& b) {
  auto half = [](const Vec2& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb ? -1 : 1;
  return -sign(cross(a, b));
}

/// A point of R^2/Z^2; coordinates are reduced into [0,1) on construction.
class TorusPoint {
 public:
  TorusPoint() = default;
  TorusPoint(Rat x, Rat y) : x_(frac(x)), y_(frac(y)) {}
  explicit TorusPoint(const Vec2& v) : TorusPoint(v.x, v.y) {}

  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }
  Vec2 vec() const { return {x_, y_}; }

  friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.x_ == b.x_ && a.y_ == b.y_; }
  friend bool operator<(const TorusPoint& a, const TorusPoint& b) {
    if (a.x_ != b.x_) return a.x_ < b.x_;
    return a.y_ < b.y_;
  }

 private:
  Rat x_{0};
  Rat y_{0};
};

inline std::string to_string(const TorusPoint& p) {
  return "(" + to_string(p.x()) + "," + to_string(p.y()) + ")";
}

/// Difference a - b lifted to the representative with both components in (-1/2, 1/2].
inline Vec2 torus_delta(const TorusPoint& a, const TorusPoint& b) {
  auto wrap = [](Rat v) {
    v = frac(v);
    if (v > Rat(1, 2)) v -= 1;
    return v;
  };
  return {wrap(a.x() - b.x()), wrap(a.y() - b.y())};
}

struct ExtGcd {
  std::int64_t g, a, b;  // a*x + b*y = g
};

inline ExtGcd ext_gcd(std::int64_t x, std::int64_t y) {
  std::int64_t old_r = x, r = y, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

/// A primitive integer vector (gcd 1). Oriented; see PrimitiveDirection for the
/// canonical unoriented form.
struct Heading {
  std::int64_t p = 0;
  std::int64_t q = 1;

  static Heading make(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) throw InvalidArgument("direction (0,0)");
    if (std::gcd(p, q) != 1) throw InvalidArgument("direction (" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive");
    return {p, q};
  }
  Vec2 vec() const { return {Rat(p), Rat(q)}; }
  Heading reversed() const { return {-p, -q}; }
  std::int64_t height() const { return (p < 0 ? -p : p) + (q < 0 ? -q : q); }
  friend bool operator==(const Heading&, const Heading&) = default;
};

/// Direction of a closed torus geodesic: coprime (p,q) with p > 0, or (0,1).
struct PrimitiveDirection {
  std::int64_t p = 0;
  std::int64_t q = 1;

  /// Validates primitivity and flips to the canonical sign.
  static PrimitiveDirection make(std::int64_t p, std::int64_t q) {
    Heading h = Heading::make(p, q);
    if (h.p < 0 || (h.p == 0 && h.q < 0)) h = h.reversed();
    return {h.p, h.q};
  }
  Heading heading() const { return {p, q}; }
  Vec2 vec() const { return {Rat(p), Rat(q)}; }
  std::int64_t height() const { return heading().height(); }

  friend bool operator==(const PrimitiveDirection&, const PrimitiveDirection&) = default;
  friend auto operator<=>(const PrimitiveDirection& a, const PrimitiveDirection& b) {
    return std::make_tuple(a.height(), a.p, a.q) <=> std::make_tuple(b.height(), b.p, b.q);
  }
};

inline std::string to_string(const PrimitiveDirection& d) {
  return "(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
}
inline std::string to_string(const Heading& d) {
  return "(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
}

/// Position of `target` along the closed geodesic base + t*(p,q), t in [0,1),
/// or nullopt when the geodesic misses it.
inline std::optional<Rat> line_parameter(const TorusPoint& base, const Heading& dir, const TorusPoint& target) {
  Vec2 w = target.vec() - base.vec();
  if (!is_integer(Rat(dir.q) * w.x - Rat(dir.p) * w.y)) return std::nullopt;
  auto [g, a, b] = ext_gcd(dir.p, dir.q);
  // a*p + b*q = 1 and w - t*(p,q) integral imply t = a*w.x + b*w.y mod 1.
  return frac(Rat(a) * w.x + Rat(b) * w.y);
}

/// True iff `target` lies on the closed torus geodesic through `base` in direction `dir`.
inline bool line_hits_point(const TorusPoint& base, const PrimitiveDirection& dir, const TorusPoint& target) {
  Vec2 w = target.vec() - base.vec();
  return is_integer(Rat(dir.q) * w.x - Rat(dir.p) * w.y);
}

/// Straight segment on the torus: start + u*holonomy, u in [0,1].
/// Components of the holonomy are bounded by 1 in absolute value; a holonomy with
/// an entry of absolute value 1 must be integral, i.e. the segment is a closed loop.
class Segment {
 public:
  Segment() = default;

  static Segment make(TorusPoint start, Vec2 holonomy) {
    if (holonomy.is_zero()) throw InvalidArgument("degenerate segment");
    auto in_range = [](const Rat& v) { return v >= -1 && v <= 1; };
    if (!in_range(holonomy.x) || !in_range(holonomy.y))
      throw InvalidArgument("segment holonomy components must lie in [-1,1]");
    bool unit = abs(holonomy.x) == 1 || abs(holonomy.y) == 1;
    if (unit && !(is_integer(holonomy.x) && is_integer(holonomy.y)))
      throw InvalidArgument("segment of holonomy " + to_string(holonomy.x) + "," + to_string(holonomy.y) +
                            " overlaps itself on the torus");
    Segment s;
    s.start_ = start;
    s.holonomy_ = std::move(holonomy);
    return s;
  }

  static Segment between(const Vec2& from, const Vec2& to) { return make(TorusPoint(from), to - from); }

  const TorusPoint& start() const { return start_; }
  const Vec2& holonomy() const { return holonomy_; }
  TorusPoint end() const { return TorusPoint(start_.vec() + holonomy_); }
  TorusPoint at(const Rat& u) const { return TorusPoint(start_.vec() + u * holonomy_); }
  bool is_loop() const { return is_integer(holonomy_.x) && is_integer(holonomy_.y); }

  friend bool operator==(const Segment& a, const Segment& b) {
    return a.start_ == b.start_ && a.holonomy_ == b.holonomy_;
  }

 private:
  TorusPoint start_;
  Vec2 holonomy_{Rat(1), Rat(0)};
};

/// All parameters u in [0,1] with seg.at(u) == pt (two for the shared endpoint of a loop).
inline std::vector<Rat> segment_parameters(const Segment& seg, const TorusPoint& pt) {
  std::vector<Rat> out;
  const Vec2& h = seg.holonomy();
  for (int i = -2; i <= 2; ++i) {
    for (int j = -2; j <= 2; ++j) {
      Vec2 w = pt.vec() + Vec2{Rat(i), Rat(j)} - seg.start().vec();
      if (cross(h, w) != 0) continue;
      Rat u = dot(w, h) / dot(h, h);
      if (u >= 0 && u <= 1 && std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Intersection {
  enum class Kind { Point, Overlap };
  Kind kind = Kind::Point;
  // For Point, a0 == a1 and b0 == b1. For Overlap, [a0,a1] on the first segment
  // corresponds to the parameters b0 -> b1 on the second (b0 may exceed b1).
  Rat a0, a1, b0, b1;
  TorusPoint point;  // the point, or the overlap start
};

struct IntersectionResult {
  std::vector<Intersection> parts;  // empty means disjoint
  bool disjoint() const { return parts.empty(); }
};

/// Exact intersection of two segments on the torus, accounting for wrap-around.
inline IntersectionResult segment_intersection(const Segment& a, const Segment& b) {
  IntersectionResult res;
  const Vec2& ha = a.holonomy();
  const Vec2& hb = b.holonomy();
  Rat c = cross(ha, hb);
  auto have_point = [&](const TorusPoint& p) {
    return std::any_of(res.parts.begin(), res.parts.end(), [&](const Intersection& s) {
      return s.kind == Intersection::Kind::Point && s.point == p;
    });
  };
  // Lifts of b that can meet the lift of a starting at a.start().
  for (int i = -2; i <= 2; ++i) {
    for (int j = -2; j <= 2; ++j) {
      Vec2 b0 = b.start().vec() + Vec2{Rat(i), Rat(j)};
      Vec2 w = b0 - a.start().vec();
      if (c != 0) {
        // a0 + s*ha = b0 + t*hb
        Rat s = cross(w, hb) / c;
        Rat t = cross(w, ha) / c;
        if (s < 0 || s > 1 || t < 0 || t > 1) continue;
        TorusPoint p = a.at(s);
        if (have_point(p)) continue;
        res.parts.push_back({Intersection::Kind::Point, s, s, t, t, p});
        continue;
      }
      if (cross(ha, w) != 0) continue;  // parallel, distinct lines
      Rat n = dot(ha, ha);
      Rat t0 = dot(w, ha) / n;             // parameter of b's start along a
      Rat t1 = dot(w + hb, ha) / n;        // parameter of b's end along a
      Rat lo = std::max(Rat(0), std::min(t0, t1));
      Rat hi = std::min(Rat(1), std::max(t0, t1));
      if (lo > hi) continue;
      auto b_param = [&](const Rat& s) { return (s - t0) / (t1 - t0); };
      if (lo == hi) {
        TorusPoint p = a.at(lo);
        if (have_point(p)) continue;
        Rat tb = b_param(lo);
        res.parts.push_back({Intersection::Kind::Point, lo, lo, tb, tb, p});
      } else {
        bool dup = std::any_of(res.parts.begin(), res.parts.end(), [&](const Intersection& s) {
          return s.kind == Intersection::Kind::Overlap && s.a0 == lo && s.a1 == hi;
        });
        if (!dup) res.parts.push_back({Intersection::Kind::Overlap, lo, hi, b_param(lo), b_param(hi), a.at(lo)});
      }
    }
  }
  std::sort(res.parts.begin(), res.parts.end(), [](const Intersection& x, const Intersection& y) {
    if (x.a0 != y.a0) return x.a0 < y.a0;
    return x.b0 < y.b0;
  });
  return res;
}

/// Primitive directions with |p|+|q| <= max_height in canonical sign, sorted by
/// (height, p, q).
inline std::vector<PrimitiveDirection> enumerate_primitive_directions(std::int64_t max_height) {
  if (max_height < 1) throw InvalidArgument("max_height must be >= 1");
  std::vector<PrimitiveDirection> out;
  for (std::int64_t h = 1; h <= max_height; ++h) {
    std::vector<PrimitiveDirection> level;
    if (h == 1) level.push_back({0, 1});
    for (std::int64_t p = 1; p <= h; ++p) {
      std::int64_t r = h - p;
      if (std::gcd(p, r) != 1) continue;
      if (r == 0) {
        level.push_back({p, 0});
      } else {
        level.push_back({p, -r});
        level.push_back({p, r});
      }
    }
    std::sort(level.begin(), level.end(), [](auto& x, auto& y) { return std::tie(x.p, x.q) < std::tie(y.p, y.q); });
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace tsurf

#endif  // TSURF_GEOMETRY_HPP
