#ifndef TSURF_SEMI_TRANSLATION_HPP
#define TSURF_SEMI_TRANSLATION_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tsurf/cut_cover.hpp"
#include "tsurf/euler_oracle.hpp"
#include "tsurf/origami.hpp"
#include "tsurf/strata.hpp"

namespace tsurf {

enum class Edge { R = 0, T = 1, L = 2, B = 3 };
enum class Corner { BL = 0, BR = 1, TR = 2, TL = 3 };

inline char edge_char(Edge e) { return "RTLB"[static_cast<int>(e)]; }
inline std::string corner_name(Corner c) {
  static const char* names[] = {"BL", "BR", "TR", "TL"};
  return names[static_cast<int>(c)];
}

/// Edge seen on the copy of a cell rotated by 180 degrees.
inline Edge rotated(Edge e) { return static_cast<Edge>((static_cast<int>(e) + 2) % 4); }
inline Corner rotated(Corner c) { return static_cast<Corner>((static_cast<int>(c) + 2) % 4); }

struct EdgeRef {
  int cell = 0;
  Edge edge = Edge::R;
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

struct CornerRef {
  int cell = 0;
  Corner corner = Corner::BL;
  friend bool operator==(const CornerRef&, const CornerRef&) = default;
};

inline std::string to_string(const EdgeRef& e) { return std::to_string(e.cell + 1) + "." + edge_char(e.edge); }
inline std::string to_string(const CornerRef& c) { return std::to_string(c.cell + 1) + "." + corner_name(c.corner); }

struct EdgePair {
  EdgeRef a, b;
  bool flip = false;
};

/// Unit square cells whose edges are paired by translations or half-turns.
/// Edge parameters run bottom to top on R/L edges and left to right on T/B edges;
/// translations preserve the parameter, flips reverse it.
class SemiTranslationComplex {
 public:
  SemiTranslationComplex() = default;

  static SemiTranslationComplex make(int cells, const std::vector<EdgePair>& pairs) {
    if (cells < 1) throw InvalidArgument("complex needs at least one cell");
    SemiTranslationComplex s;
    s.n_ = cells;
    s.partner_.assign(4 * cells, -1);
    s.flip_.assign(4 * cells, false);
    for (const auto& p : pairs) {
      for (const EdgeRef& e : {p.a, p.b})
        if (e.cell < 0 || e.cell >= cells) throw InvalidArgument("cell index out of range in " + to_string(e));
      int ia = index(p.a), ib = index(p.b);
      if (ia == ib) throw ModelError("edge " + to_string(p.a) + " paired with itself");
      if (s.partner_[ia] >= 0 || s.partner_[ib] >= 0)
        throw ModelError("edge paired twice in " + to_string(p.a) + "-" + to_string(p.b));
      bool same = p.a.edge == p.b.edge;
      bool opposite = p.a.edge == rotated(p.b.edge);
      if (p.flip && !same) throw ModelError("flip pair " + to_string(p.a) + "-" + to_string(p.b) + " needs equal edge types");
      if (!p.flip && !opposite)
        throw ModelError("translation pair " + to_string(p.a) + "-" + to_string(p.b) + " needs opposite edge types");
      s.partner_[ia] = ib;
      s.partner_[ib] = ia;
      s.flip_[ia] = s.flip_[ib] = p.flip;
    }
    for (int i = 0; i < 4 * cells; ++i)
      if (s.partner_[i] < 0) throw ModelError("edge " + to_string(edge_of(i)) + " is unpaired");
    detail::UnionFind uf(cells);
    for (int i = 0; i < 4 * cells; ++i) uf.unite(i / 4, s.partner_[i] / 4);
    for (int c = 0; c < cells; ++c)
      if (uf.find(c) != uf.find(0)) throw ConnectivityError("complex is disconnected");
    return s;
  }

  int cells() const { return n_; }
  EdgeRef partner(const EdgeRef& e) const { return edge_of(partner_[index(e)]); }
  bool is_flip(const EdgeRef& e) const { return flip_[index(e)]; }

  friend bool operator==(const SemiTranslationComplex& a, const SemiTranslationComplex& b) {
    return a.n_ == b.n_ && a.partner_ == b.partner_ && a.flip_ == b.flip_;
  }

  /// Each pair once, ordered by the lower edge index.
  std::vector<EdgePair> pairs() const {
    std::vector<EdgePair> out;
    for (int i = 0; i < 4 * n_; ++i)
      if (i < partner_[i]) out.push_back({edge_of(i), edge_of(partner_[i]), flip_[i]});
    return out;
  }

  /// Vertex classes of cell corners, each sorted; classes ordered by first corner.
  std::vector<std::vector<CornerRef>> corner_classes() const {
    detail::UnionFind uf(4 * n_);
    for (int i = 0; i < 4 * n_; ++i) {
      auto [s0, e0] = endpoints(edge_of(i));
      auto [s1, e1] = endpoints(edge_of(partner_[i]));
      if (flip_[i]) std::swap(s1, e1);
      uf.unite(corner_index(s0), corner_index(s1));
      uf.unite(corner_index(e0), corner_index(e1));
    }
    std::vector<std::vector<CornerRef>> out;
    std::vector<int> slot(4 * n_, -1);
    for (int i = 0; i < 4 * n_; ++i) {
      int r = uf.find(i);
      if (slot[r] < 0) {
        slot[r] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[slot[r]].push_back({i / 4, static_cast<Corner>(i % 4)});
    }
    return out;
  }

 private:
  static int index(const EdgeRef& e) { return 4 * e.cell + static_cast<int>(e.edge); }
  static EdgeRef edge_of(int i) { return {i / 4, static_cast<Edge>(i % 4)}; }
  static int corner_index(const CornerRef& c) { return 4 * c.cell + static_cast<int>(c.corner); }

  // (parameter 0 end, parameter 1 end)
  static std::pair<CornerRef, CornerRef> endpoints(const EdgeRef& e) {
    switch (e.edge) {
      case Edge::R: return {{e.cell, Corner::BR}, {e.cell, Corner::TR}};
      case Edge::L: return {{e.cell, Corner::BL}, {e.cell, Corner::TL}};
      case Edge::T: return {{e.cell, Corner::TL}, {e.cell, Corner::TR}};
      case Edge::B: return {{e.cell, Corner::BL}, {e.cell, Corner::BR}};
    }
    return {};
  }

  int n_ = 0;
  std::vector<int> partner_;
  std::vector<bool> flip_;
};

/// Q-stratum from corner walking: a class of c quarter turns has angle c*pi/2.
inline QStratum q_stratum(const SemiTranslationComplex& s) {
  std::vector<int> ls;
  for (const auto& cls : s.corner_classes()) {
    int c = static_cast<int>(cls.size());
    if (c % 2 != 0)
      throw ModelError("vertex at " + to_string(cls.front()) + " has angle " + std::to_string(c) + "pi/2, not a multiple of pi");
    int l = c / 2 - 2;
    if (l != 0) ls.push_back(l);
  }
  return QStratum::make(std::move(ls));
}

struct PiPoint {
  std::vector<CornerRef> corners;
};

/// The vertex of angle pi, if there is exactly one.
inline std::optional<PiPoint> unique_pi_point(const SemiTranslationComplex& s) {
  std::optional<PiPoint> found;
  for (const auto& cls : s.corner_classes()) {
    if (cls.size() != 2) continue;
    if (found) return std::nullopt;
    found = PiPoint{cls};
  }
  return found;
}

struct DoubleCover {
  Origami origami;
  bool connected = true;  // false: the input had trivial holonomy
  /// Square whose lower-left corner lies over the unique pi point, when there is one.
  std::optional<int> pi_square;
};

/// Copy a keeps each cell (index i), copy b holds its half-turn (index n + i).
inline DoubleCover canonical_double_cover(const SemiTranslationComplex& s) {
  const int n = s.cells();
  std::vector<int> r(2 * n, -1), u(2 * n, -1);
  auto record = [&](int c1, Edge e1, int c2) {
    if (e1 == Edge::R) r[c1] = c2;
    if (e1 == Edge::T) u[c1] = c2;
  };
  auto glue = [&](int c1, Edge e1, int c2, Edge e2) {
    record(c1, e1, c2);
    record(c2, e2, c1);
  };
  for (const auto& p : s.pairs()) {
    int i = p.a.cell, j = p.b.cell;
    if (!p.flip) {
      glue(i, p.a.edge, j, p.b.edge);
      glue(n + i, rotated(p.a.edge), n + j, rotated(p.b.edge));
    } else {
      glue(i, p.a.edge, n + j, rotated(p.b.edge));
      glue(n + i, rotated(p.a.edge), j, p.b.edge);
    }
  }
  DoubleCover out;
  auto rp = Permutation::from_images(r), up = Permutation::from_images(u);
  out.connected = generates_transitive(2 * n, {rp, up});
  out.origami = Origami::make(rp, up, !out.connected);
  if (auto pi = unique_pi_point(s)) {
    for (const auto& c : pi->corners) {
      if (c.corner == Corner::BL) out.pi_square = c.cell;
      else if (c.corner == Corner::TR) out.pi_square = n + c.cell;
      if (out.pi_square) break;
    }
  }
  return out;
}

/// Two cells forming a cylinder whose boundary circles are folded by half-turns.
inline SemiTranslationComplex pillowcase() {
  return SemiTranslationComplex::make(2, {{{0, Edge::R}, {1, Edge::L}, false},
                                          {{0, Edge::L}, {1, Edge::R}, false},
                                          {{0, Edge::T}, {1, Edge::T}, true},
                                          {{0, Edge::B}, {1, Edge::B}, true}});
}

inline SemiTranslationComplex torus_complex() {
  return SemiTranslationComplex::make(1, {{{0, Edge::R}, {0, Edge::L}, false}, {{0, Edge::T}, {0, Edge::B}, false}});
}

/// L-shaped complex of n >= 4 cells: a horizontal arm h_0..h_{n-3} (cells 0..n-3)
/// and two cells v1, v2 (n-2, n-1) stacked over and under h_0.
inline SemiTranslationComplex l_complex(int n) {
  if (n < 4) throw InvalidArgument("the L family starts at 4 cells");
  const int arm = n - 2, v1 = n - 2, v2 = n - 1;
  std::vector<EdgePair> p;
  for (int i = 0; i + 1 < arm; ++i) p.push_back({{i, Edge::R}, {i + 1, Edge::L}, false});
  for (int i = 1; i < arm; ++i) p.push_back({{i, Edge::T}, {i, Edge::B}, false});
  p.push_back({{0, Edge::T}, {v1, Edge::B}, false});
  p.push_back({{0, Edge::B}, {v2, Edge::T}, false});
  p.push_back({{0, Edge::L}, {v2, Edge::R}, false});
  p.push_back({{v1, Edge::T}, {v2, Edge::B}, false});
  p.push_back({{arm - 1, Edge::R}, {v1, Edge::R}, true});
  p.push_back({{v1, Edge::L}, {v2, Edge::L}, true});
  return SemiTranslationComplex::make(n, p);
}

/// Random connected complex with a valid angle at every vertex.
inline SemiTranslationComplex random_complex(std::mt19937_64& rng, int max_cells) {
  std::uniform_int_distribution<int> size(1, max_cells);
  while (true) {
    int n = size(rng);
    std::vector<EdgePair> pairs;
    for (Edge first : {Edge::R, Edge::T}) {
      std::vector<EdgeRef> group;
      for (int c = 0; c < n; ++c) {
        group.push_back({c, first});
        group.push_back({c, rotated(first)});
      }
      std::shuffle(group.begin(), group.end(), rng);
      for (std::size_t k = 0; k < group.size(); k += 2)
        pairs.push_back({group[k], group[k + 1], group[k].edge == group[k + 1].edge});
    }
    try {
      auto s = SemiTranslationComplex::make(n, pairs);
      q_stratum(s);
      return s;
    } catch (const ModelError&) {
    }
  }
}

}  // namespace tsurf

#endif  // TSURF_SEMI_TRANSLATION_HPP
