#ifndef TSURF_STRATA_HPP
#define TSURF_STRATA_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tsurf/errors.hpp"

namespace tsurf {

/// Stratum H(k_1..k_n) of translation surfaces; excesses k_i > 0, sorted descending.
class HStratum {
 public:
  HStratum() = default;

  static HStratum make(std::vector<int> excesses) {
    excesses.erase(std::remove(excesses.begin(), excesses.end(), 0), excesses.end());
    for (int k : excesses)
      if (k < 0) throw InvalidArgument("negative cone angle excess");
    if (std::accumulate(excesses.begin(), excesses.end(), 0) % 2 != 0)
      throw InvalidArgument("excess sum must be even");
    std::sort(excesses.rbegin(), excesses.rend());
    HStratum h;
    h.k_ = std::move(excesses);
    return h;
  }

  const std::vector<int>& excesses() const { return k_; }
  int excess_sum() const { return std::accumulate(k_.begin(), k_.end(), 0); }
  /// Combinatorial Gauss-Bonnet: sum k_i = 2g - 2.
  int genus() const { return 1 + excess_sum() / 2; }

  std::string to_string() const {
    std::string s = "H(";
    for (std::size_t i = 0; i < k_.size(); ++i) s += (i ? "," : "") + std::to_string(k_[i]);
    return s + ")";
  }

  friend bool operator==(const HStratum&, const HStratum&) = default;
  friend bool operator<(const HStratum& a, const HStratum& b) { return a.k_ < b.k_; }

 private:
  std::vector<int> k_;
};

/// Stratum Q(l_1..l_n) of semi-translation surfaces; l_j >= -1, l_j != 0, sorted
/// descending, sum = 0 mod 4 and sum >= -4.
class QStratum {
 public:
  QStratum() = default;

  static QStratum make(std::vector<int> ls) {
    for (int l : ls) {
      if (l < -1) throw InvalidArgument("Q-stratum entries must be >= -1");
      if (l == 0) throw InvalidArgument("Q-stratum entries must be nonzero");
    }
    int sum = std::accumulate(ls.begin(), ls.end(), 0);
    if (((sum % 4) + 4) % 4 != 0) throw InvalidArgument("Q-stratum entry sum must be divisible by 4");
    if (sum < -4) throw InvalidArgument("Q-stratum entry sum must be >= -4");
    std::sort(ls.rbegin(), ls.rend());
    QStratum q;
    q.l_ = std::move(ls);
    return q;
  }

  const std::vector<int>& entries() const { return l_; }
  int poles() const { return static_cast<int>(std::count(l_.begin(), l_.end(), -1)); }
  int entry_sum() const { return std::accumulate(l_.begin(), l_.end(), 0); }
  /// Genus of the semi-translation surface itself: sum l_j = 4g - 4.
  int genus() const { return (entry_sum() + 4) / 4; }

  /// e.g. "Q(2,2,-1^4)"; repeated poles are written with an exponent.
  std::string to_string() const {
    std::string s = "Q(";
    bool first = true;
    auto put = [&](const std::string& t) {
      s += (first ? "" : ",") + t;
      first = false;
    };
    for (int l : l_)
      if (l > 0) put(std::to_string(l));
    int m = poles();
    if (m == 1) put("-1");
    if (m > 1) put("-1^" + std::to_string(m));
    return s + ")";
  }

  friend bool operator==(const QStratum&, const QStratum&) = default;
  friend bool operator<(const QStratum& a, const QStratum& b) { return a.l_ < b.l_; }

 private:
  std::vector<int> l_;
};

namespace detail {

/// Parses "X(a,b,c^m,...)" into the entry list; `letter` is 'H' or 'Q'.
inline std::vector<int> parse_stratum_entries(std::string_view text, char letter) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t.size() < 3 || t[0] != letter || t[1] != '(' || t.back() != ')')
    throw InvalidArgument("expected " + std::string(1, letter) + "(...) but got '" + std::string(text) + "'");
  std::string body = t.substr(2, t.size() - 3);
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? body.size() : comma + 1;
    if (item.empty()) throw InvalidArgument("empty entry in '" + std::string(text) + "'");
    int reps = 1;
    if (auto caret = item.find('^'); caret != std::string::npos) {
      reps = std::stoi(item.substr(caret + 1));
      item = item.substr(0, caret);
    }
    int v = std::stoi(item);
    for (int i = 0; i < reps; ++i) out.push_back(v);
  }
  return out;
}

}  // namespace detail

inline HStratum parse_h_stratum(std::string_view text) {
  return HStratum::make(detail::parse_stratum_entries(text, 'H'));
}

inline QStratum parse_q_stratum(std::string_view text) {
  return QStratum::make(detail::parse_stratum_entries(text, 'Q'));
}

/// Stratum of the canonical double cover: even l > 0 gives {l/2, l/2}, odd l > 0
/// gives {l + 1}, poles give nothing.
inline HStratum q_to_h(const QStratum& q) {
  std::vector<int> k;
  for (int l : q.entries()) {
    if (l <= 0) continue;
    if (l % 2 == 0) {
      k.push_back(l / 2);
      k.push_back(l / 2);
    } else {
      k.push_back(l + 1);
    }
  }
  return HStratum::make(std::move(k));
}

/// Strata known to be empty; Q(0) is represented by the entry-free Q().
inline const std::vector<QStratum>& empty_q_strata() {
  static const std::vector<QStratum> list = {QStratum::make({4}), QStratum::make({3, 1}), QStratum::make({1, -1}),
                                             QStratum{}};
  return list;
}

inline bool is_empty_q_stratum(const QStratum& q) {
  const auto& e = empty_q_strata();
  return std::find(e.begin(), e.end(), q) != e.end();
}

struct PreimageOptions {
  int max_poles = 4;
  /// Include strata without poles (their double cover is unbranched).
  bool include_unbranched = false;
};

/// All non-empty Q-strata q with at most `max_poles` poles and q_to_h(q) == h.
inline std::vector<QStratum> h_to_q_preimages(const HStratum& h, PreimageOptions opts = {}) {
  std::map<int, int> counts;
  for (int k : h.excesses()) ++counts[k];
  std::vector<std::pair<int, int>> groups(counts.begin(), counts.end());

  // Each excess k is either an image of odd l = k - 1 (k even) or one half of a
  // pair from even l = 2k.
  std::vector<std::vector<int>> positive_parts;
  std::vector<int> current;
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == groups.size()) {
      positive_parts.push_back(current);
      return;
    }
    auto [k, c] = groups[g];
    for (int pairs = 0; 2 * pairs <= c; ++pairs) {
      int singles = c - 2 * pairs;
      if (singles > 0 && k % 2 != 0) continue;
      std::size_t mark = current.size();
      for (int i = 0; i < pairs; ++i) current.push_back(2 * k);
      for (int i = 0; i < singles; ++i) current.push_back(k - 1);
      rec(g + 1);
      current.resize(mark);
    }
  };
  rec(0);

  std::set<QStratum> found;
  for (const auto& part : positive_parts) {
    int sum = std::accumulate(part.begin(), part.end(), 0);
    for (int m = opts.include_unbranched ? 0 : 1; m <= opts.max_poles; ++m) {
      int total = sum - m;
      if (((total % 4) + 4) % 4 != 0 || total < -4) continue;
      std::vector<int> ls = part;
      ls.insert(ls.end(), m, -1);
      QStratum q = QStratum::make(ls);
      if (is_empty_q_stratum(q)) continue;
      found.insert(q);
    }
  }
  std::vector<QStratum> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const QStratum& a, const QStratum& b) {
    if (a.poles() != b.poles()) return a.poles() < b.poles();
    return b < a;
  });
  return out;
}

/// Lower bound on the number of unit squares tiling a surface in h: sum (k_i + 1).
inline int min_tiles(const HStratum& h) {
  int n = 0;
  for (int k : h.excesses()) n += k + 1;
  return std::max(n, 1);
}

}  // namespace tsurf

#endif  // TSURF_STRATA_HPP
