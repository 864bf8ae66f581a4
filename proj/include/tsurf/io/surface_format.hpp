#ifndef TSURF_IO_SURFACE_FORMAT_HPP
#define TSURF_IO_SURFACE_FORMAT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tsurf/cut_cover.hpp"
#include "tsurf/origami.hpp"
#include "tsurf/semi_translation.hpp"

namespace tsurf::io {

// Line records, '#' starts a comment:
//   version 1
//   surface <name>
//   sheets <N>
//   disconnected
//   cut <x1> <y1> <x2> <y2> perm=<cycles> label=<text>
//   mark <x> <y>
//   origami <N> r=<cycles> u=<cycles>
//   cells <n>
//   pair <cell>.<R|L|T|B> <cell>.<R|L|T|B> flip=<0|1>
// A cut runs from (x1,y1) to (x2,y2) in the plane; the end may lie outside [0,1)^2.

struct NamedOrigami {
  std::string name = "origami";
  Origami origami;
  friend bool operator==(const NamedOrigami& a, const NamedOrigami& b) {
    return a.name == b.name && a.origami == b.origami;
  }
};

struct NamedComplex {
  std::string name = "complex";
  SemiTranslationComplex complex;
  friend bool operator==(const NamedComplex& a, const NamedComplex& b) {
    return a.name == b.name && a.complex == b.complex;
  }
};

using SurfaceFile = std::variant<CutCover, NamedOrigami, NamedComplex>;

namespace detail {

struct Token {
  std::string text;
  int column = 1;
};

// Splits on blanks outside parentheses so that "perm=(1 2)(3 4)" stays one token.
inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  int depth = 0;
  std::string cur;
  int start = 0;
  for (int i = 0; i <= static_cast<int>(line.size()); ++i) {
    char c = i < static_cast<int>(line.size()) ? line[i] : ' ';
    bool blank = c == ' ' || c == '\t' || c == '\r';
    if (blank && depth == 0) {
      if (!cur.empty()) out.push_back({cur, start + 1});
      cur.clear();
      continue;
    }
    if (cur.empty()) start = i;
    if (c == '(') ++depth;
    if (c == ')') --depth;
    cur += c;
  }
  return out;
}

inline std::string cycles_text(const Permutation& p) { return p.to_string(); }

}  // namespace detail

inline SurfaceFile parse_surface(std::string_view text) {
  std::optional<std::string> name;
  std::optional<int> sheets, cells;
  bool disconnected = false;
  std::vector<Cut> cuts;
  std::vector<int> cut_lines;
  std::set<TorusPoint> marked;
  std::optional<Origami> origami;
  std::vector<EdgePair> pairs;
  int line_no = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = detail::tokenize(raw);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    auto fail = [&](const detail::Token& t, const std::string& msg) { return ParseError(line_no, t.column, msg); };
    auto need = [&](std::size_t n) {
      if (toks.size() != n)
        throw fail(toks[0], "'" + kw + "' expects " + std::to_string(n - 1) + " fields, got " + std::to_string(toks.size() - 1));
    };
    auto rat = [&](const detail::Token& t) {
      try {
        return parse_rat(t.text);
      } catch (const InvalidArgument& e) {
        throw fail(t, e.what());
      }
    };
    auto integer = [&](const detail::Token& t) {
      Rat v = rat(t);
      if (!is_integer(v) || v < 1 || v > 100000) throw fail(t, "expected a positive integer, got '" + t.text + "'");
      return static_cast<int>(to_i64(num(v)));
    };
    auto keyed = [&](const detail::Token& t, const std::string& key) {
      if (t.text.rfind(key + "=", 0) != 0) throw fail(t, "expected '" + key + "=...', got '" + t.text + "'");
      return t.text.substr(key.size() + 1);
    };
    auto perm = [&](const detail::Token& t, const std::string& key, int n) {
      try {
        return Permutation::parse(keyed(t, key), n);
      } catch (const InvalidArgument& e) {
        throw fail(t, e.what());
      }
    };
    auto edge = [&](const detail::Token& t) {
      auto dot = t.text.find('.');
      if (dot == std::string::npos || dot + 2 != t.text.size()) throw fail(t, "expected <cell>.<R|L|T|B>, got '" + t.text + "'");
      std::string sides = "RTLB";
      auto k = sides.find(t.text.back());
      if (k == std::string::npos) throw fail(t, "unknown edge '" + std::string(1, t.text.back()) + "'");
      int c = integer({t.text.substr(0, dot), t.column});
      return EdgeRef{c - 1, static_cast<Edge>(k)};
    };

    if (kw == "version") {
      need(2);
      if (toks[1].text != "1") throw fail(toks[1], "unsupported format version " + toks[1].text);
    } else if (kw == "surface") {
      need(2);
      name = toks[1].text;
    } else if (kw == "sheets") {
      need(2);
      sheets = integer(toks[1]);
    } else if (kw == "disconnected") {
      need(1);
      disconnected = true;
    } else if (kw == "cut") {
      need(7);
      if (!sheets) throw fail(toks[0], "'cut' before 'sheets'");
      Vec2 a{rat(toks[1]), rat(toks[2])}, b{rat(toks[3]), rat(toks[4])};
      Permutation p = perm(toks[5], "perm", *sheets);
      std::string label = keyed(toks[6], "label");
      try {
        cuts.push_back({Segment::make(TorusPoint(a), b - a), p, label});
      } catch (const InvalidArgument& e) {
        throw fail(toks[1], e.what());
      }
      cut_lines.push_back(line_no);
    } else if (kw == "mark") {
      need(3);
      marked.insert(TorusPoint(rat(toks[1]), rat(toks[2])));
    } else if (kw == "origami") {
      need(4);
      int n = integer(toks[1]);
      Permutation r = perm(toks[2], "r", n), u = perm(toks[3], "u", n);
      try {
        origami = Origami::make(r, u, disconnected);
      } catch (const ModelError& e) {
        throw fail(toks[0], e.what());
      }
    } else if (kw == "cells") {
      need(2);
      cells = integer(toks[1]);
    } else if (kw == "pair") {
      need(4);
      std::string f = keyed(toks[3], "flip");
      if (f != "0" && f != "1") throw fail(toks[3], "flip must be 0 or 1");
      pairs.push_back({edge(toks[1]), edge(toks[2]), f == "1"});
    } else {
      throw ParseError(line_no, toks[0].column, "unknown record '" + kw + "'");
    }
  }

  const int end_line = line_no + 1;
  int kinds = (origami ? 1 : 0) + (cells ? 1 : 0) + (sheets ? 1 : 0);
  if (kinds == 0) throw ParseError(end_line, 1, "missing 'sheets', 'origami' or 'cells' record");
  if (kinds > 1) throw ParseError(end_line, 1, "file mixes cover, origami and complex records");
  if (origami) return NamedOrigami{name.value_or("origami"), *origami};
  if (cells) {
    try {
      return NamedComplex{name.value_or("complex"), SemiTranslationComplex::make(*cells, pairs)};
    } catch (const std::exception& e) {
      throw ParseError(end_line, 1, e.what());
    }
  }
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (const TorusPoint& e : {cuts[i].segment.start(), cuts[i].segment.end()})
      if (!marked.count(e))
        throw ParseError(cut_lines[i], 1, "missing 'mark' record for endpoint " + to_string(e) + " of cut '" + cuts[i].label + "'");
  try {
    return CutCover::make(*sheets, cuts, marked, name.value_or("surface"), disconnected);
  } catch (const ModelError& e) {
    throw ParseError(end_line, 1, e.what());
  }
}

inline std::string serialize(const CutCover& s) {
  std::ostringstream o;
  o << "version 1\n";
  o << "surface " << s.name() << "\n";
  o << "sheets " << s.sheets() << "\n";
  if (s.allows_disconnected()) o << "disconnected\n";
  for (const auto& c : s.cuts()) {
    Vec2 a = c.segment.start().vec();
    Vec2 b = a + c.segment.holonomy();
    o << "cut " << to_string(a.x) << " " << to_string(a.y) << " " << to_string(b.x) << " " << to_string(b.y)
      << " perm=" << detail::cycles_text(c.perm) << " label=" << c.label << "\n";
  }
  for (const auto& m : s.marked()) o << "mark " << to_string(m.x()) << " " << to_string(m.y()) << "\n";
  return o.str();
}

inline std::string serialize(const NamedOrigami& o) {
  std::ostringstream out;
  out << "version 1\n";
  out << "surface " << o.name << "\n";
  if (o.origami.allows_disconnected()) out << "disconnected\n";
  out << "origami " << o.origami.squares() << " r=" << detail::cycles_text(o.origami.right())
      << " u=" << detail::cycles_text(o.origami.up()) << "\n";
  return out.str();
}

inline std::string serialize(const NamedComplex& c) {
  std::ostringstream out;
  out << "version 1\n";
  out << "surface " << c.name << "\n";
  out << "cells " << c.complex.cells() << "\n";
  for (const auto& p : c.complex.pairs())
    out << "pair " << to_string(p.a) << " " << to_string(p.b) << " flip=" << (p.flip ? 1 : 0) << "\n";
  return out.str();
}

inline std::string serialize(const SurfaceFile& f) {
  return std::visit([](const auto& v) { return serialize(v); }, f);
}

/// The cover described by a file; origamis become covers branched over the origin.
inline CutCover as_cover(const SurfaceFile& f) {
  if (auto c = std::get_if<CutCover>(&f)) return *c;
  if (auto o = std::get_if<NamedOrigami>(&f)) return from_origami(o->origami, o->name);
  throw InvalidArgument("a semi-translation complex is not a translation cover; run double-cover first");
}

}  // namespace tsurf::io

#endif  // TSURF_IO_SURFACE_FORMAT_HPP
