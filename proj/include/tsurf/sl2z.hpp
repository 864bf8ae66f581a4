#ifndef TSURF_SL2Z_HPP
#define TSURF_SL2Z_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tsurf/cut_cover.hpp"
#include "tsurf/origami.hpp"

namespace tsurf {

/// Integer 2x2 matrix [[a,b],[c,d]] with determinant +-1.
struct VeechElement {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static VeechElement make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    std::int64_t det = a * d - b * c;
    if (det != 1 && det != -1) throw InvalidArgument("matrix is not unimodular (det " + std::to_string(det) + ")");
    return {a, b, c, d};
  }
  static VeechElement T() { return {1, 1, 0, 1}; }
  static VeechElement S() { return {0, -1, 1, 0}; }

  std::int64_t det() const { return a * d - b * c; }
  friend VeechElement operator*(const VeechElement& x, const VeechElement& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const VeechElement&, const VeechElement&) = default;

  Vec2 apply(const Vec2& v) const { return {Rat(a) * v.x + Rat(b) * v.y, Rat(c) * v.x + Rat(d) * v.y}; }
  Heading apply(const Heading& h) const { return Heading::make(a * h.p + b * h.q, c * h.p + d * h.q); }
};

enum class Generator { T, Tinv, S, Sinv, D };

inline VeechElement matrix_of(Generator g) {
  switch (g) {
    case Generator::T: return {1, 1, 0, 1};
    case Generator::Tinv: return {1, -1, 0, 1};
    case Generator::S: return {0, -1, 1, 0};
    case Generator::Sinv: return {0, 1, -1, 0};
    case Generator::D: return {1, 0, 0, -1};
  }
  return {};
}

inline Generator inverse_of(Generator g) {
  switch (g) {
    case Generator::T: return Generator::Tinv;
    case Generator::Tinv: return Generator::T;
    case Generator::S: return Generator::Sinv;
    case Generator::Sinv: return Generator::S;
    case Generator::D: return Generator::D;
  }
  return g;
}

/// Word g_1 ... g_r whose matrix product equals m (Euclid on the first column).
inline std::vector<Generator> decompose(VeechElement m) {
  m = VeechElement::make(m.a, m.b, m.c, m.d);
  std::vector<Generator> left;  // left multipliers reducing m to the identity
  auto push = [&](Generator g) {
    left.push_back(g);
    m = matrix_of(g) * m;
  };
  auto shear = [&](std::int64_t k) {
    for (; k > 0; --k) push(Generator::T);
    for (; k < 0; ++k) push(Generator::Tinv);
  };
  while (m.c != 0) {
    Int q = floor_div(Int(m.a), Int(m.c));
    shear(-to_i64(q));
    push(Generator::S);
  }
  if (m.det() == -1) push(Generator::D);
  if (m.a == -1) {
    push(Generator::S);
    push(Generator::S);
  }
  shear(-m.b);
  std::vector<Generator> word;
  for (Generator g : left) word.push_back(inverse_of(g));
  return word;
}

inline Origami act(const Origami& o, Generator g) {
  const Permutation& r = o.right();
  const Permutation& u = o.up();
  bool flag = o.allows_disconnected();
  switch (g) {
    case Generator::T: return Origami::make(r, u * r.inverse(), flag);
    case Generator::Tinv: return Origami::make(r, u * r, flag);
    case Generator::S: return Origami::make(u.inverse(), r, flag);
    case Generator::Sinv: return Origami::make(u, r.inverse(), flag);
    case Generator::D: return Origami::make(r, u.inverse(), flag);
  }
  return o;
}

/// Image origami under m; the rightmost generator of the decomposition acts first.
inline Origami sl2z_act(const Origami& o, const VeechElement& m) {
  auto word = decompose(m);
  Origami out = o;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = act(out, *it);
  return out;
}

/// A point of an origami: square index and position inside the unit square.
struct OrigamiPoint {
  int square = 0;
  Rat x, y;  // in [0,1)
  friend bool operator==(const OrigamiPoint&, const OrigamiPoint&) = default;
};

inline OrigamiPoint act_point(const Origami& o, Generator g, const OrigamiPoint& p) {
  const Permutation& r = o.right();
  const Permutation& u = o.up();
  switch (g) {
    case Generator::T: {
      Rat x = p.x + p.y;
      if (x >= 1) return {r(p.square), x - 1, p.y};
      return {p.square, x, p.y};
    }
    case Generator::Tinv: {
      Rat x = p.x - p.y;
      if (x < 0) return {r.inverse()(p.square), x + 1, p.y};
      return {p.square, x, p.y};
    }
    case Generator::S:
      if (p.y == 0) return {u.inverse()(p.square), Rat(0), p.x};
      return {p.square, 1 - p.y, p.x};
    case Generator::Sinv:
      if (p.x == 0) return {r.inverse()(p.square), p.y, Rat(0)};
      return {p.square, p.y, 1 - p.x};
    case Generator::D:
      if (p.y == 0) return {u.inverse()(p.square), p.x, Rat(0)};
      return {p.square, p.x, 1 - p.y};
  }
  return p;
}

inline OrigamiPoint sl2z_act_point(const Origami& o, const VeechElement& m, OrigamiPoint p) {
  auto word = decompose(m);
  Origami cur = o;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    p = act_point(cur, *it, p);
    cur = act(cur, *it);
  }
  return p;
}

/// Origami of the grid refinement: the 1/M grid squares of every sheet, rescaled
/// to unit size. Square index is sheet*M*M + row*M + column. Cuts must run along
/// grid lines.
inline Origami refine_to_origami(const CutCover& s, int M) {
  if (M < 1) throw InvalidArgument("refinement modulus must be >= 1");
  for (const auto& c : s.cuts()) {
    const Segment& g = c.segment;
    const Vec2& h = g.holonomy();
    if (h.x != 0 && h.y != 0) throw UnsupportedGeometry("cut '" + c.label + "' is not axis-parallel");
    for (const Rat& v : {g.start().x(), g.start().y(), h.x, h.y})
      if (!is_integer(v * M)) throw UnsupportedGeometry("cut '" + c.label + "' is off the 1/" + std::to_string(M) + " grid");
  }
  const int N = s.sheets();
  const int per = M * M;
  auto idx = [&](int sheet, int i, int j) { return sheet * per + ((j % M + M) % M) * M + (i % M + M) % M; };
  auto edge_map = [&](const Vec2& mid, const Vec2& motion) {
    Permutation g(N);
    TorusPoint m(mid);
    for (const auto& c : s.cuts()) {
      if (cross(motion, c.segment.holonomy()) == 0 || segment_parameters(c.segment, m).empty()) continue;
      g = (cross(motion, c.segment.holonomy()) > 0 ? c.perm : c.perm.inverse()) * g;
    }
    return g;
  };
  std::vector<int> r(N * per), u(N * per);
  for (int j = 0; j < M; ++j) {
    for (int i = 0; i < M; ++i) {
      Permutation gr = edge_map({Rat(i + 1, M), Rat(2 * j + 1, 2 * M)}, {Rat(1), Rat(0)});
      Permutation gu = edge_map({Rat(2 * i + 1, 2 * M), Rat(j + 1, M)}, {Rat(0), Rat(1)});
      for (int sh = 0; sh < N; ++sh) {
        r[idx(sh, i, j)] = idx(gr(sh), i + 1, j);
        u[idx(sh, i, j)] = idx(gu(sh), i, j + 1);
      }
    }
  }
  return Origami::make(Permutation::from_images(r), Permutation::from_images(u), s.allows_disconnected());
}

/// The point of from_origami(o) inside square p.square. Points on the bottom or left
/// edge sit on the right-hand side of the "u" or "r" cut.
inline SurfacePoint to_surface_point(const OrigamiPoint& p) {
  return {p.square, TorusPoint(p.x, p.y), p.x == 0 || p.y == 0 ? Side::Right : Side::Left};
}

inline OrigamiPoint refine_point(const SurfacePoint& p, int M) {
  Rat X = p.pos.x() * M, Y = p.pos.y() * M;
  int i = static_cast<int>(to_i64(floor(X))), j = static_cast<int>(to_i64(floor(Y)));
  return {p.sheet * M * M + j * M + i, X - i, Y - j};
}

}  // namespace tsurf

#endif  // TSURF_SL2Z_HPP
