#ifndef TSURF_BLOCKING_HPP
#define TSURF_BLOCKING_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tsurf/geodesics.hpp"

namespace tsurf {

struct BlockingSet {
  std::vector<TorusPoint> points;
  TorusPoint target;
};

struct BlockingCertificate {
  enum class Verdict { Blocked, Unblocked };
  Verdict verdict = Verdict::Unblocked;
  std::int64_t modulus = 1;
  bool self_blocked = false;  // target is itself in P
  /// residue class (p mod D, q mod D) -> index into P of a point on every line of that class
  std::map<std::pair<std::int64_t, std::int64_t>, int> table;
  std::optional<PrimitiveDirection> witness;
  std::optional<std::pair<std::int64_t, std::int64_t>> open_class;

  bool blocked() const { return verdict == Verdict::Blocked; }
};

/// Smallest primitive vector congruent to (p, q) mod D, in canonical sign.
/// Requires gcd(p, q, D) = 1.
inline PrimitiveDirection lift_residue_class(std::int64_t p, std::int64_t q, std::int64_t D) {
  if (D < 1) throw InvalidArgument("modulus must be positive");
  auto mod = [&](std::int64_t v) { return ((v % D) + D) % D; };
  p = mod(p);
  q = mod(q);
  if (std::gcd(std::gcd(p, q), D) != 1) throw InvalidArgument("residue class is not primitive");
  for (std::int64_t radius = D;; radius *= 2) {
    std::optional<std::pair<std::int64_t, std::int64_t>> best;
    auto key = [](std::int64_t x, std::int64_t y) { return std::make_tuple(std::abs(x) + std::abs(y), x, y); };
    for (std::int64_t x = -radius; x <= radius; ++x) {
      if (mod(x) != p) continue;
      for (std::int64_t y = -radius; y <= radius; ++y) {
        if (mod(y) != q || std::gcd(x, y) != 1) continue;
        if (!best || key(x, y) < key(best->first, best->second)) best = {x, y};
      }
    }
    // vectors of smaller height all lie inside the box once height <= radius
    if (best && std::abs(best->first) + std::abs(best->second) <= radius)
      return PrimitiveDirection::make(best->first, best->second);
  }
}

/// Decides whether every closed torus geodesic through the target meets P. The line
/// of direction (p,q) through the origin contains (a/d, b/d) iff q*a = p*b mod d, which
/// only depends on (p,q) mod D.
inline BlockingCertificate blocks(const BlockingSet& P) {
  if (P.points.empty()) throw InvalidArgument("blocking set is empty");
  BlockingCertificate cert;
  if (std::find(P.points.begin(), P.points.end(), P.target) != P.points.end()) {
    cert.verdict = BlockingCertificate::Verdict::Blocked;
    cert.self_blocked = true;
    return cert;
  }
  struct Rel {
    std::int64_t a, b, d;
  };
  std::vector<Rel> rel;
  std::int64_t D = 1;
  for (const auto& pt : P.points) {
    TorusPoint w(pt.x() - P.target.x(), pt.y() - P.target.y());
    std::int64_t d = to_i64(lcm(den(w.x()), den(w.y())));
    rel.push_back({to_i64(num(w.x() * d)), to_i64(num(w.y() * d)), d});
    D = std::lcm(D, d);
  }
  cert.modulus = D;
  for (std::int64_t q = 0; q < D; ++q) {
    for (std::int64_t p = 0; p < D; ++p) {
      if (std::gcd(std::gcd(p, q), D) != 1) continue;
      int hit = -1;
      for (int i = 0; i < static_cast<int>(rel.size()) && hit < 0; ++i)
        if ((q * rel[i].a - p * rel[i].b) % rel[i].d == 0) hit = i;
      if (hit < 0) {
        cert.verdict = BlockingCertificate::Verdict::Unblocked;
        cert.open_class = {p, q};
        cert.witness = lift_residue_class(p, q, D);
        cert.table.clear();
        return cert;
      }
      cert.table[{p, q}] = hit;
    }
  }
  cert.verdict = BlockingCertificate::Verdict::Blocked;
  return cert;
}

/// Points with coordinate denominators <= bound, outside P, blocked by P.
inline std::set<TorusPoint> blocked_census(const std::vector<TorusPoint>& P, int denominator_bound) {
  if (denominator_bound < 1) throw InvalidArgument("denominator bound must be >= 1");
  std::set<TorusPoint> candidates;
  for (int dx = 1; dx <= denominator_bound; ++dx)
    for (int a = 0; a < dx; ++a)
      for (int dy = 1; dy <= denominator_bound; ++dy)
        for (int b = 0; b < dy; ++b) candidates.insert(TorusPoint(Rat(a, dx), Rat(b, dy)));
  std::set<TorusPoint> out;
  for (const auto& x : candidates) {
    if (std::find(P.begin(), P.end(), x) != P.end()) continue;
    if (blocks({P, x}).blocked()) out.insert(x);
  }
  return out;
}

struct ConeCheck {
  TorusPoint point;
  std::vector<int> cycles;
  bool all_singular() const {
    return !cycles.empty() && std::all_of(cycles.begin(), cycles.end(), [](int c) { return c >= 2; });
  }
};

struct ObliviousVerdict {
  enum class Kind { CertifiedOblivious, NotOblivious, EvidenceOnly };
  Kind kind = Kind::EvidenceOnly;
  std::optional<BlockingCertificate> certificate;
  std::vector<ConeCheck> cone_check;
  std::optional<PrimitiveDirection> direction;  // NotOblivious: closing direction
  std::int64_t searched_height = 0;
  std::string note;  // why a certificate was not issued
};

inline std::string to_string(ObliviousVerdict::Kind k) {
  switch (k) {
    case ObliviousVerdict::Kind::CertifiedOblivious: return "certified-oblivious";
    case ObliviousVerdict::Kind::NotOblivious: return "not-oblivious";
    case ObliviousVerdict::Kind::EvidenceOnly: return "evidence-only";
  }
  return "?";
}

inline ConeCheck cone_check(const CutCover& s, const TorusPoint& p) {
  if (!s.is_vertex(p)) return {p, std::vector<int>(s.sheets(), 1)};
  return {p, s.cone_datum(p).cycles};
}

namespace detail {

inline ObliviousVerdict search_fallback(const CutCover& s, const SurfacePoint& pt, ObliviousVerdict v,
                                        std::int64_t max_height, int jobs) {
  if (v.certificate && v.certificate->witness && is_on_closed_geodesic(s, pt, *v.certificate->witness)) {
    v.kind = ObliviousVerdict::Kind::NotOblivious;
    v.direction = v.certificate->witness;
    return v;
  }
  if (max_height >= 1) {
    if (auto d = find_closing_direction(s, pt, max_height, jobs)) {
      v.kind = ObliviousVerdict::Kind::NotOblivious;
      v.direction = d;
      return v;
    }
  }
  v.kind = ObliviousVerdict::Kind::EvidenceOnly;
  v.searched_height = max_height;
  return v;
}

}  // namespace detail

/// Certificate: P blocks the projection of pt and every preimage of every point
/// of P is a cone point. Falls back to the blocking witness, then to search.
inline ObliviousVerdict verify_oblivious(const CutCover& s, const SurfacePoint& pt, const BlockingSet& P,
                                         std::int64_t max_height = 30, int jobs = 1) {
  if (!(project(pt) == P.target)) throw InvalidArgument("point does not project to the blocking target");
  if (!s.is_regular(pt)) throw InvalidArgument("point " + to_string(pt) + " is a cone point");
  ObliviousVerdict v;
  v.certificate = blocks(P);
  for (const auto& p : P.points) v.cone_check.push_back(cone_check(s, p));
  if (!v.certificate->blocked()) {
    v.note = "P does not block " + to_string(P.target) + "; open class mod " + std::to_string(v.certificate->modulus);
  } else if (v.certificate->self_blocked) {
    v.note = "target lies in P";
  } else {
    for (const auto& c : v.cone_check)
      if (!c.all_singular()) {
        v.note = "a preimage of " + to_string(c.point) + " is regular";
        break;
      }
  }
  if (v.note.empty()) {
    v.kind = ObliviousVerdict::Kind::CertifiedOblivious;
    return v;
  }
  return detail::search_fallback(s, pt, std::move(v), max_height, jobs);
}

/// Vertices over which every point of the cover is a cone point.
inline std::vector<TorusPoint> singular_base_points(const CutCover& s) {
  std::vector<TorusPoint> out;
  for (const auto& d : s.cone_data())
    if (std::all_of(d.cycles.begin(), d.cycles.end(), [](int c) { return c >= 2; })) out.push_back(d.base_point);
  return out;
}

inline ObliviousVerdict oblivious_verdict(const CutCover& s, const SurfacePoint& pt, std::int64_t max_height,
                                          int jobs = 1) {
  auto P = singular_base_points(s);
  if (!P.empty()) return verify_oblivious(s, pt, {P, pt.pos}, max_height, jobs);
  if (!s.is_regular(pt)) throw InvalidArgument("point " + to_string(pt) + " is a cone point");
  ObliviousVerdict v;
  v.note = "no base point has only singular preimages";
  return detail::search_fallback(s, pt, std::move(v), max_height, jobs);
}

}  // namespace tsurf

#endif  // TSURF_BLOCKING_HPP
