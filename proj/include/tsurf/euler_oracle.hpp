#ifndef TSURF_EULER_ORACLE_HPP
#define TSURF_EULER_ORACLE_HPP

#include <array>
#include <numeric>
#include <vector>

#include "tsurf/cut_cover.hpp"

namespace tsurf {

struct EulerData {
  long long vertices = 0, edges = 0, faces = 0;
  int components = 0;
  int grid = 0;  // refinement modulus M
  long long euler() const { return vertices - edges + faces; }
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace detail

/// Builds the cell complex of the cover on the 1/M grid, each grid square split
/// into four triangles by its diagonals, and counts cells. Cuts must be horizontal,
/// vertical or of slope +-1 with endpoints on the grid.
inline EulerData euler_data(const CutCover& s, int max_grid = 64) {
  Int m = 1;
  for (const auto& c : s.cuts()) {
    const Segment& g = c.segment;
    for (const Rat& v : {g.start().x(), g.start().y(), g.holonomy().x, g.holonomy().y}) m = lcm(m, den(v));
    const Vec2& h = g.holonomy();
    if (!(h.x == 0 || h.y == 0 || abs(h.x) == abs(h.y)))
      throw UnsupportedGeometry("cut '" + c.label + "' has a slope the grid oracle cannot refine");
  }
  if (m > max_grid) throw UnsupportedGeometry("grid 1/" + m.str() + " exceeds the oracle bound");
  const int M = std::max(2, static_cast<int>(m));
  const int N = s.sheets();
  const int tris = 4 * M * M;

  auto tri_index = [&](int i, int j, int k) { return ((((j % M) + M) % M) * M + ((i % M) + M) % M) * 4 + k; };
  // corners of triangle k of square (i,j), in grid units
  auto corners = [&](int i, int j, int k) {
    std::array<Vec2, 4> sq = {Vec2{Rat(i), Rat(j)}, Vec2{Rat(i + 1), Rat(j)}, Vec2{Rat(i + 1), Rat(j + 1)},
                              Vec2{Rat(i), Rat(j + 1)}};
    Vec2 c{Rat(2 * i + 1, 2), Rat(2 * j + 1, 2)};
    return std::array<Vec2, 3>{sq[k], sq[(k + 1) % 4], c};
  };
  auto scaled = [&](const Vec2& v) { return Vec2{v.x / M, v.y / M}; };

  // Sheet map when moving from triangle t1 (apex a1) across the edge p-q.
  auto crossing = [&](const Vec2& p, const Vec2& q, const Vec2& a1) {
    Permutation g(N);
    Vec2 P = scaled(p), Q = scaled(q), A = scaled(a1);
    TorusPoint mid(Rat(1, 2) * (P + Q));
    for (const auto& c : s.cuts()) {
      const Vec2& h = c.segment.holonomy();
      if (cross(h, Q - P) != 0 || segment_parameters(c.segment, mid).empty()) continue;
      g = (cross(h, A - P) > 0 ? c.perm : c.perm.inverse()) * g;
    }
    return g;
  };

  detail::UnionFind corner_uf(tris * N * 3), face_uf(tris * N);
  auto corner_id = [&](int t, int sheet, int c) { return (t * N + sheet) * 3 + c; };
  auto glue = [&](int t1, int t2, const Permutation& g, std::array<std::pair<int, int>, 2> pairs) {
    for (int sh = 0; sh < N; ++sh) {
      face_uf.unite(t1 * N + sh, t2 * N + g(sh));
      for (auto [c1, c2] : pairs) corner_uf.unite(corner_id(t1, sh, c1), corner_id(t2, g(sh), c2));
    }
  };

  for (int j = 0; j < M; ++j) {
    for (int i = 0; i < M; ++i) {
      for (int k = 0; k < 4; ++k) {
        auto c1 = corners(i, j, k);
        // half-diagonal from corner 1 of k to the centre = corner 0 of k+1 to the centre
        glue(tri_index(i, j, k), tri_index(i, j, (k + 1) % 4), crossing(c1[1], c1[2], c1[0]), {{{1, 0}, {2, 2}}});
      }
      auto bottom = corners(i, j, 0);
      glue(tri_index(i, j, 0), tri_index(i, j - 1, 2), crossing(bottom[0], bottom[1], bottom[2]), {{{0, 1}, {1, 0}}});
      auto right = corners(i, j, 1);
      glue(tri_index(i, j, 1), tri_index(i + 1, j, 3), crossing(right[0], right[1], right[2]), {{{0, 1}, {1, 0}}});
    }
  }

  EulerData e;
  e.grid = M;
  for (int x = 0; x < tris * N * 3; ++x)
    if (corner_uf.find(x) == x) ++e.vertices;
  for (int x = 0; x < tris * N; ++x)
    if (face_uf.find(x) == x) ++e.components;
  e.faces = static_cast<long long>(tris) * N;
  e.edges = static_cast<long long>(6) * M * M * N;
  return e;
}

/// Genus from V - E + F = 2 - 2g on the explicit complex; independent of cone data.
inline int euler_genus_oracle(const CutCover& s, int max_grid = 64) {
  EulerData e = euler_data(s, max_grid);
  if (e.components != 1) throw ConnectivityError("oracle complex of '" + s.name() + "' is disconnected");
  long long chi = e.euler();
  if (chi % 2 != 0) throw std::logic_error("odd Euler characteristic");
  return static_cast<int>((2 - chi) / 2);
}

}  // namespace tsurf

#endif  // TSURF_EULER_ORACLE_HPP
