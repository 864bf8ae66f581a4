#ifndef TSURF_PERMUTATION_HPP
#define TSURF_PERMUTATION_HPP

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "tsurf/errors.hpp"

namespace tsurf {

/// Permutation of {0..n-1}. Composition reads right to left: (a * b)(i) = a(b(i)).
/// Text form is cycle notation on 1-based indices, e.g. "(1 2)(3 4)"; "()" is the identity.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n) : map_(n) { std::iota(map_.begin(), map_.end(), 0); }

  static Permutation from_images(std::vector<int> images) {
    int n = static_cast<int>(images.size());
    std::vector<bool> seen(n, false);
    for (int v : images) {
      if (v < 0 || v >= n || seen[v]) throw InvalidArgument("image list is not a permutation");
      seen[v] = true;
    }
    Permutation p;
    p.map_ = std::move(images);
    return p;
  }

  /// Builds from 0-based cycles on n points.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(n, false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        int v = c[i];
        if (v < 0 || v >= n) throw InvalidArgument("cycle entry " + std::to_string(v + 1) + " out of range 1.." + std::to_string(n));
        if (used[v]) throw InvalidArgument("cycle entry " + std::to_string(v + 1) + " repeated");
        used[v] = true;
        img[v] = c[(i + 1) % c.size()];
      }
    }
    return from_images(std::move(img));
  }

  /// The cycle (0 1 ... n-1).
  static Permutation cyclic(int n) {
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    return from_cycles(n, {c});
  }

  static Permutation transposition(int n, int i, int j) { return from_cycles(n, {{i, j}}); }

  /// Parses cycle notation; `n` fixes the degree (fixed points may be omitted).
  static Permutation parse(std::string_view text, int n) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') throw InvalidArgument("expected '(' in cycle notation '" + std::string(text) + "'");
      ++i;
      std::vector<int> cyc;
      while (true) {
        skip_ws();
        if (i >= text.size()) throw InvalidArgument("unterminated cycle in '" + std::string(text) + "'");
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (text[i] == ',') {
          ++i;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw InvalidArgument("bad character in cycle notation '" + std::string(text) + "'");
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
        cyc.push_back(v - 1);
      }
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      skip_ws();
    }
    return from_cycles(n, cycles);
  }

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[i]; }
  const std::vector<int>& images() const { return map_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (map_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation r(size());
    for (int i = 0; i < size(); ++i) r.map_[map_[i]] = i;
    return r;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw InvalidArgument("permutation size mismatch");
    Permutation r(a.size());
    for (int i = 0; i < a.size(); ++i) r.map_[i] = a.map_[b.map_[i]];
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.map_ < b.map_; }

  /// Cycles (0-based), each starting at its smallest element, ordered by that element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(size(), false);
    for (int i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> c;
      for (int j = i; !seen[j]; j = map_[j]) {
        seen[j] = true;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  int cycle_length_of(int i) const {
    int len = 1;
    for (int j = map_[i]; j != i; j = map_[j]) ++len;
    return len;
  }

  /// Cycle lengths, descending.
  std::vector<int> cycle_type() const {
    std::vector<int> t;
    for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
    std::sort(t.rbegin(), t.rend());
    return t;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& c : cycles()) {
      if (c.size() < 2) continue;
      s += "(";
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) s += " ";
        s += std::to_string(c[k] + 1);
      }
      s += ")";
    }
    return s.empty() ? "()" : s;
  }

  /// Embeds this permutation acting on the block {offset..offset+size-1} of {0..total-1}.
  Permutation embedded(int total, int offset) const {
    Permutation r(total);
    for (int i = 0; i < size(); ++i) r.map_[offset + i] = offset + map_[i];
    return r;
  }

 private:
  std::vector<int> map_;
};

/// Number of orbits of the generated group on {0..n-1}.
inline int orbit_count(int n, const std::vector<Permutation>& gens) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (const auto& g : gens) {
    for (int i = 0; i < n; ++i) {
      int a = find(i), b = find(g(i));
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
  }
  return comps;
}

/// True iff the group generated by `gens` acts transitively on {0..n-1}.
inline bool generates_transitive(int n, const std::vector<Permutation>& gens) {
  return n == 0 || orbit_count(n, gens) == 1;
}

}  // namespace tsurf

#endif  // TSURF_PERMUTATION_HPP
