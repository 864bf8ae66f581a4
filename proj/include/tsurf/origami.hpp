#ifndef TSURF_ORIGAMI_HPP
#define TSURF_ORIGAMI_HPP

#include <string>
#include <vector>

#include "tsurf/errors.hpp"
#include "tsurf/permutation.hpp"
#include "tsurf/strata.hpp"

namespace tsurf {

/// Square-tiled surface: square i has right neighbour r(i) and top neighbour u(i).
class Origami {
 public:
  Origami() = default;

  static Origami make(Permutation r, Permutation u, bool allow_disconnected = false) {
    if (r.size() == 0) throw InvalidArgument("origami needs at least one square");
    if (r.size() != u.size()) throw InvalidArgument("origami permutations differ in size");
    if (!allow_disconnected && !generates_transitive(r.size(), {r, u}))
      throw ConnectivityError("origami is disconnected");
    Origami o;
    o.r_ = std::move(r);
    o.u_ = std::move(u);
    o.allow_disconnected_ = allow_disconnected;
    return o;
  }

  static Origami torus() { return make(Permutation(1), Permutation(1)); }

  int squares() const { return r_.size(); }
  const Permutation& right() const { return r_; }
  const Permutation& up() const { return u_; }
  bool allows_disconnected() const { return allow_disconnected_; }
  bool connected() const { return generates_transitive(squares(), {r_, u_}); }

  /// u r u^-1 r^-1: the loop around the corner, starting in the square whose
  /// lower-left corner it is.
  Permutation commutator() const { return u_ * r_ * u_.inverse() * r_.inverse(); }

  /// Stratum read directly from the commutator's cycle type.
  HStratum stratum() const {
    std::vector<int> k;
    for (int c : commutator().cycle_type())
      if (c > 1) k.push_back(c - 1);
    return HStratum::make(k);
  }

  friend bool operator==(const Origami& a, const Origami& b) { return a.r_ == b.r_ && a.u_ == b.u_; }

 private:
  Permutation r_{1};
  Permutation u_{1};
  bool allow_disconnected_ = false;
};

}  // namespace tsurf

#endif  // TSURF_ORIGAMI_HPP
