#ifndef TSURF_IO_REPORT_HPP
#define TSURF_IO_REPORT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tsurf/cut_cover.hpp"
#include "tsurf/euler_oracle.hpp"
#include "tsurf/strata.hpp"

namespace tsurf::io {

struct ConeRow {
  TorusPoint point;
  std::vector<int> cycles;
  bool regular = true;
};

struct Analysis {
  std::string name;
  int sheets = 1;
  bool connected = true;
  HStratum stratum;
  int genus = 1;
  int min_tiles = 1;
  std::optional<int> tiles;        // N*M^2 when the cuts lie on the 1/M grid lines
  std::optional<int> euler_genus;  // grid oracle, when it applies
  std::vector<ConeRow> cones;
  std::vector<TorusPoint> marked;
};

inline Analysis analyze(const CutCover& s) {
  Analysis a;
  a.name = s.name();
  a.sheets = s.sheets();
  a.connected = s.connected();
  a.stratum = stratum(s);
  a.genus = a.stratum.genus();
  a.min_tiles = min_tiles(a.stratum);
  Int m = 1;
  bool axis = true;
  for (const auto& c : s.cuts()) {
    const Segment& g = c.segment;
    for (const Rat& v : {g.start().x(), g.start().y(), g.holonomy().x, g.holonomy().y}) m = lcm(m, den(v));
    axis = axis && (g.holonomy().x == 0 || g.holonomy().y == 0);
  }
  if (axis && m <= 1000) a.tiles = s.sheets() * static_cast<int>(m * m);
  if (a.connected) {
    try {
      a.euler_genus = euler_genus_oracle(s);
    } catch (const UnsupportedGeometry&) {
    }
  }
  for (const auto& d : s.cone_data()) a.cones.push_back({d.base_point, d.cycles, d.regular()});
  a.marked.assign(s.marked().begin(), s.marked().end());
  return a;
}

inline std::string join_ints(const std::vector<int>& v, const std::string& sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

inline std::string summary_line(const Analysis& a) {
  std::string s = "stratum " + a.stratum.to_string() + "; genus " + std::to_string(a.genus) + "; min tiles " +
                  std::to_string(a.min_tiles);
  if (a.tiles) s += *a.tiles >= a.min_tiles ? " ✓" : " ✗";
  return s;
}

inline std::string to_text(const Analysis& a) {
  std::ostringstream o;
  o << "surface " << a.name << "\n";
  o << "sheets " << a.sheets << (a.connected ? "" : " (disconnected)") << "\n";
  o << summary_line(a) << "\n";
  if (a.tiles) o << "tiles " << *a.tiles << "\n";
  if (a.euler_genus) o << "euler genus " << *a.euler_genus << "\n";
  o << "cone data\n";
  for (const auto& c : a.cones) {
    std::vector<int> angles;
    for (int k : c.cycles) angles.push_back(2 * k);
    o << "  " << to_string(c.point) << "  cycles " << join_ints(c.cycles) << "  angles " << join_ints(angles, "π,")
      << "π" << (c.regular ? "  regular" : "") << "\n";
  }
  o << "marked";
  for (const auto& m : a.marked) o << " " << to_string(m);
  o << "\n";
  return o.str();
}

struct TableRow {
  HStratum h;
  std::vector<QStratum> preimages;
  std::vector<std::string> footnotes;
};

/// Q-strata over each genus 3 H-stratum, with notes where a bounded enumeration
/// differs from the reference families.
inline std::vector<TableRow> genus3_rows(int pole_bound = 7) {
  std::vector<TableRow> rows;
  for (auto k : std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}) {
    TableRow r{HStratum::make(k), h_to_q_preimages(HStratum::make(k), {pole_bound, false}), {}};
    std::string name = r.h.to_string();
    if (name == "H(4)")
      r.footnotes.push_back("pole counts m must satisfy 3 - m = 0 mod 4 and m <= 7, so m = 3 or 7; the reference "
                            "table writes the exponent as 3n+4");
    if (name == "H(2,2)")
      r.footnotes.push_back("the family Q(4,-1^{4n}) at n = 0 is Q(4), which is empty");
    if (name == "H(1,1,1,1)") {
      r.footnotes.push_back("the unbranched preimage Q(2,2) is omitted");
      r.footnotes.push_back("Q(2,2,-1^8) appears for pole bounds >= 8; the reference row lists Q(2,2,-1^4) only");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::string table_genus3(int pole_bound = 7) {
  std::ostringstream o;
  o << "H-stratum      Q-strata with at most " << pole_bound << " poles\n";
  std::vector<std::string> notes;
  for (const auto& r : genus3_rows(pole_bound)) {
    std::string h = r.h.to_string();
    o << h << std::string(h.size() < 15 ? 15 - h.size() : 1, ' ');
    if (r.preimages.empty()) o << "∅";
    for (std::size_t i = 0; i < r.preimages.size(); ++i) o << (i ? ", " : "") << r.preimages[i].to_string();
    for (const auto& f : r.footnotes) {
      notes.push_back(f);
      o << " [" << notes.size() << "]";
    }
    o << "\n";
  }
  o << "\n";
  for (std::size_t i = 0; i < notes.size(); ++i) o << "[" << i + 1 << "] " << notes[i] << "\n";
  return o.str();
}

}  // namespace tsurf::io

#endif  // TSURF_IO_REPORT_HPP
