// tsurf: command line front end for the translation-surface toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tsurf/tsurf.hpp"

using namespace tsurf;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::string format = "text";
  int jobs = 1;
  std::uint64_t seed = 1;
  bool machine() const { return format == "machine"; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// s:x,y with an optional :+ or :- side marker; sheets are 1-based.
SurfacePoint parse_point(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() < 2 || parts.size() > 3) throw InvalidArgument("point must look like s:x,y[:+|:-], got '" + text + "'");
  auto xy = split(parts[1], ',');
  if (xy.size() != 2) throw InvalidArgument("point coordinates must be x,y in '" + text + "'");
  Rat s = parse_rat(parts[0]);
  if (!is_integer(s) || s < 1) throw InvalidArgument("sheet must be a positive integer in '" + text + "'");
  SurfacePoint p{static_cast<int>(to_i64(num(s))) - 1, TorusPoint(parse_rat(xy[0]), parse_rat(xy[1])), Side::Left};
  if (parts.size() == 3) {
    if (parts[2] == "-") p.side = Side::Right;
    else if (parts[2] != "+") throw InvalidArgument("side marker must be + or - in '" + text + "'");
  }
  return p;
}

Heading parse_heading(const std::string& text) {
  auto pq = split(text, ',');
  if (pq.size() != 2) throw InvalidArgument("direction must look like p,q");
  return Heading::make(std::stoll(pq[0]), std::stoll(pq[1]));
}

std::string point_text(const SurfacePoint& p) { return to_string(p); }

json point_json(const TorusPoint& p) { return json::array({to_string(p.x()), to_string(p.y())}); }

io::SurfaceFile load(const std::string& path) { return io::parse_surface(read_file(path)); }

json analysis_json(const io::Analysis& a) {
  json j;
  j["surface"] = a.name;
  j["sheets"] = a.sheets;
  j["connected"] = a.connected;
  j["stratum"] = a.stratum.to_string();
  j["genus"] = a.genus;
  j["min_tiles"] = a.min_tiles;
  j["tiles"] = a.tiles ? json(*a.tiles) : json(nullptr);
  j["euler_genus"] = a.euler_genus ? json(*a.euler_genus) : json(nullptr);
  json cones = json::array();
  for (const auto& c : a.cones) cones.push_back({{"point", point_json(c.point)}, {"cycles", c.cycles}, {"regular", c.regular}});
  j["cone_data"] = cones;
  json marks = json::array();
  for (const auto& m : a.marked) marks.push_back(point_json(m));
  j["marked"] = marks;
  return j;
}

std::string trace_text(const TraceOutcome& t) {
  std::ostringstream o;
  o << "outcome " << to_string(t.kind);
  if (t.closed()) o << " after " << t.periods << " period" << (t.periods == 1 ? "" : "s");
  if (t.kind == TraceOutcome::Kind::HitsConePoint) o << " at " << point_text(t.at) << " time " << to_string(t.time);
  o << "\n";
  for (const auto& e : t.events)
    o << "  t=" << to_string(e.time) << " " << to_string(e.where) << " " << e.what << " sheet " << e.before + 1 << " -> "
      << e.after + 1 << "\n";
  return o.str();
}

json trace_json(const TraceOutcome& t) {
  json j;
  j["outcome"] = to_string(t.kind);
  if (t.closed()) j["periods"] = t.periods;
  if (t.kind == TraceOutcome::Kind::HitsConePoint) {
    j["at"] = point_text(t.at);
    j["time"] = to_string(t.time);
  }
  json ev = json::array();
  for (const auto& e : t.events)
    ev.push_back({{"time", to_string(e.time)}, {"point", point_json(e.where)}, {"what", e.what}, {"from", e.before + 1}, {"to", e.after + 1}});
  j["events"] = ev;
  return j;
}

json verdict_json(const ObliviousVerdict& v) {
  json j;
  j["verdict"] = to_string(v.kind);
  if (v.direction) j["direction"] = to_string(*v.direction);
  if (v.kind == ObliviousVerdict::Kind::EvidenceOnly) j["searched_height"] = v.searched_height;
  if (!v.note.empty()) j["note"] = v.note;
  if (v.certificate) {
    const auto& c = *v.certificate;
    json cj;
    cj["blocked"] = c.blocked();
    cj["modulus"] = c.modulus;
    if (c.self_blocked) cj["self_blocked"] = true;
    if (c.witness) cj["witness"] = to_string(*c.witness);
    json table = json::array();
    for (const auto& [cls, idx] : c.table) table.push_back({{"class", {cls.first, cls.second}}, {"point", idx}});
    cj["table"] = table;
    j["certificate"] = cj;
  }
  json cc = json::array();
  for (const auto& c : v.cone_check) cc.push_back({{"point", point_json(c.point)}, {"cycles", c.cycles}});
  j["cone_check"] = cc;
  return j;
}

std::string verdict_text(const ObliviousVerdict& v, const std::vector<TorusPoint>& P) {
  std::ostringstream o;
  o << "verdict " << to_string(v.kind);
  if (v.direction) o << " direction " << to_string(*v.direction);
  if (v.kind == ObliviousVerdict::Kind::EvidenceOnly) o << " (no closing direction up to height " << v.searched_height << ")";
  o << "\n";
  if (!v.note.empty()) o << "note: " << v.note << "\n";
  if (v.certificate) {
    const auto& c = *v.certificate;
    o << "blocking " << (c.blocked() ? "blocked" : "unblocked") << " modulus " << c.modulus;
    if (c.witness) o << " witness " << to_string(*c.witness);
    o << "\n";
    for (const auto& [cls, idx] : c.table)
      o << "  class (" << cls.first << "," << cls.second << ") -> " << to_string(P[idx]) << "\n";
  }
  for (const auto& c : v.cone_check) o << "  cone check " << to_string(c.point) << " cycles " << io::join_ints(c.cycles) << "\n";
  return o.str();
}

int exit_for(const ObliviousVerdict& v) { return v.kind == ObliviousVerdict::Kind::EvidenceOnly ? 2 : 0; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for branched covers of the square torus"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--jobs", g.jobs, "Worker threads for direction search")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for the complex fuzzer");

  int code = 0;

  // build
  auto* build = app.add_subcommand("build", "Build a named construction");
  std::string build_name, build_out;
  int opt_n = 0, opt_k = 3;
  std::string pair_text = "1,2";
  build->add_option("name", build_name, "slit-pair|double-blocked|cyclic-blocked|even-genus|grid-blocked|l-family|l-complex|pillowcase")
      ->required();
  build->add_option("--n", opt_n, "Size parameter");
  build->add_option("--k", opt_k, "Sheet count for grid-blocked");
  build->add_option("--pair", pair_text, "Sheet pair i,j for even-genus");
  build->add_option("-o,--output", build_out, "Output surface file")->required();
  build->callback([&] {
    auto sidecar = [&](const ConstructionReport& r) {
      json j;
      j["surface"] = r.surface.name();
      j["description"] = r.description;
      j["stratum"] = stratum(r.surface).to_string();
      j["genus"] = genus(r.surface);
      json c = json::array();
      for (const auto& p : r.candidates) c.push_back(point_text(p));
      j["candidates"] = c;
      json b = json::array();
      for (const auto& p : r.blocking_points) b.push_back(point_json(p));
      j["blocking_points"] = b;
      j["notes"] = r.notes;
      write_file(build_out + ".report.json", j.dump(2) + "\n");
      if (!g.machine()) {
        std::cout << "wrote " << build_out << " (" << r.description << ")\n";
        for (const auto& note : r.notes) std::cout << note << "\n";
      } else {
        std::cout << j.dump(2) << "\n";
      }
    };
    if (build_name == "pillowcase" || build_name == "l-complex") {
      io::NamedComplex c{build_name, build_name == "pillowcase" ? pillowcase() : l_complex(opt_n ? opt_n : 4)};
      if (build_name == "l-complex") c.name = "l-complex-" + std::to_string(c.complex.cells());
      write_file(build_out, io::serialize(c));
      std::cout << "wrote " << build_out << " " << q_stratum(c.complex).to_string() << "\n";
      return;
    }
    ConstructionReport r;
    if (build_name == "slit-pair") r = slit_tori_pair();
    else if (build_name == "double-blocked") r = double_blocked();
    else if (build_name == "cyclic-blocked") r = cyclic_blocked(opt_n ? opt_n : 2);
    else if (build_name == "even-genus") {
      auto ij = split(pair_text, ',');
      if (ij.size() != 2) throw InvalidArgument("--pair must be i,j");
      r = add_even_genus_slit(cyclic_blocked(opt_n ? opt_n : 2), std::stoi(ij[0]) - 1, std::stoi(ij[1]) - 1);
    } else if (build_name == "grid-blocked") r = grid_blocked(opt_k, opt_n ? opt_n : 3);
    else if (build_name == "l-family") r = l_family(opt_n ? opt_n : 4);
    else throw InvalidArgument("unknown construction '" + build_name + "'");
    if (r.origami) write_file(build_out, io::serialize(io::NamedOrigami{r.surface.name(), *r.origami}));
    else write_file(build_out, io::serialize(r.surface));
    sidecar(r);
  });

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Stratum, genus and cone data of a surface file");
  std::string in_path;
  analyze->add_option("file", in_path)->required();
  analyze->callback([&] {
    auto f = load(in_path);
    if (auto c = std::get_if<io::NamedComplex>(&f)) {
      QStratum q = q_stratum(c->complex);
      if (g.machine()) {
        json j{{"surface", c->name}, {"cells", c->complex.cells()}, {"q_stratum", q.to_string()},
               {"double_cover_stratum", q_to_h(q).to_string()}, {"unique_pi_point", unique_pi_point(c->complex).has_value()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "surface " << c->name << "\ncells " << c->complex.cells() << "\nstratum " << q.to_string()
                  << "; double cover " << q_to_h(q).to_string() << "\n";
        if (auto pi = unique_pi_point(c->complex)) {
          std::cout << "unique pi point at";
          for (const auto& k : pi->corners) std::cout << " " << to_string(k);
          std::cout << "\n";
        }
      }
      return;
    }
    auto a = io::analyze(io::as_cover(f));
    std::cout << (g.machine() ? analysis_json(a).dump(2) + "\n" : io::to_text(a));
  });

  // trace
  auto* tr = app.add_subcommand("trace", "Trace a straight line from a point");
  std::string point_arg, dir_arg;
  int periods = 0;
  tr->add_option("file", in_path)->required();
  tr->add_option("--point", point_arg, "s:x,y[:+|:-]")->required();
  tr->add_option("--dir", dir_arg, "p,q")->required();
  tr->add_option("--periods", periods, "Period budget (default: sheet count)");
  tr->callback([&] {
    CutCover s = io::as_cover(load(in_path));
    auto out = trace(s, parse_point(point_arg), parse_heading(dir_arg), periods);
    std::cout << (g.machine() ? trace_json(out).dump(2) + "\n" : trace_text(out));
  });

  // search
  auto* search = app.add_subcommand("search", "First closing direction through a point");
  std::int64_t max_height = 30;
  search->add_option("file", in_path)->required();
  search->add_option("--point", point_arg, "s:x,y[:+|:-]")->required();
  search->add_option("--max-height", max_height)->check(CLI::PositiveNumber);
  search->callback([&] {
    CutCover s = io::as_cover(load(in_path));
    auto d = find_closing_direction(s, parse_point(point_arg), max_height, g.jobs);
    if (g.machine()) {
      std::cout << json{{"direction", d ? json(to_string(*d)) : json(nullptr)}, {"max_height", max_height}}.dump(2) << "\n";
    } else if (d) {
      std::cout << "closes in direction " << to_string(*d) << "\n";
    } else {
      std::cout << "no closing direction up to height " << max_height << " (evidence only)\n";
    }
    code = d ? 0 : 2;
  });

  // oblivious verify | census
  auto* obl = app.add_subcommand("oblivious", "Obliviousness certificates and verdicts");
  obl->require_subcommand(1);
  auto* verify = obl->add_subcommand("verify", "Verdict for one point");
  std::string blocking_arg;
  verify->add_option("file", in_path)->required();
  verify->add_option("--point", point_arg, "s:x,y")->required();
  verify->add_option("--max-height", max_height)->check(CLI::PositiveNumber);
  verify->add_option("--blocking", blocking_arg, "x,y;x,y;... (default: base points with only singular preimages)");
  verify->callback([&] {
    CutCover s = io::as_cover(load(in_path));
    SurfacePoint pt = parse_point(point_arg);
    std::vector<TorusPoint> P;
    ObliviousVerdict v;
    if (!blocking_arg.empty()) {
      for (const auto& item : split(blocking_arg, ';')) {
        auto xy = split(item, ',');
        if (xy.size() != 2) throw InvalidArgument("blocking points must be x,y;x,y;...");
        P.emplace_back(parse_rat(xy[0]), parse_rat(xy[1]));
      }
      v = verify_oblivious(s, pt, {P, pt.pos}, max_height, g.jobs);
    } else {
      P = singular_base_points(s);
      v = oblivious_verdict(s, pt, max_height, g.jobs);
    }
    std::cout << (g.machine() ? verdict_json(v).dump(2) + "\n" : verdict_text(v, P));
    code = exit_for(v);
  });
  auto* census = obl->add_subcommand("census", "Verdicts over all regular points of small denominator");
  int denominator = 2;
  census->add_option("file", in_path)->required();
  census->add_option("--denominator", denominator)->check(CLI::PositiveNumber);
  census->add_option("--max-height", max_height)->check(CLI::PositiveNumber);
  census->callback([&] {
    CutCover s = io::as_cover(load(in_path));
    auto P = singular_base_points(s);
    std::set<TorusPoint> base;
    for (int dx = 1; dx <= denominator; ++dx)
      for (int a = 0; a < dx; ++a)
        for (int dy = 1; dy <= denominator; ++dy)
          for (int b = 0; b < dy; ++b) base.insert(TorusPoint(Rat(a, dx), Rat(b, dy)));
    json rows = json::array();
    bool evidence = false;
    if (!g.machine()) {
      std::cout << "blocked base points:";
      if (!P.empty())
        for (const auto& x : blocked_census(P, denominator)) std::cout << " " << to_string(x);
      std::cout << "\n";
    }
    for (const auto& x : base) {
      for (const auto& pt : fiber(s, x)) {
        if (!s.is_regular(pt)) continue;
        auto v = oblivious_verdict(s, pt, max_height, g.jobs);
        evidence = evidence || v.kind == ObliviousVerdict::Kind::EvidenceOnly;
        if (g.machine()) {
          rows.push_back({{"point", point_text(pt)}, {"verdict", to_string(v.kind)},
                          {"direction", v.direction ? json(to_string(*v.direction)) : json(nullptr)}});
        } else {
          std::cout << point_text(pt) << "  " << to_string(v.kind);
          if (v.direction) std::cout << " " << to_string(*v.direction);
          std::cout << "\n";
        }
      }
    }
    if (g.machine()) std::cout << rows.dump(2) << "\n";
    code = evidence ? 2 : 0;
  });

  // double-cover
  auto* dc = app.add_subcommand("double-cover", "Canonical double cover of a semi-translation complex");
  std::string out_path;
  dc->add_option("file", in_path)->required();
  dc->add_option("-o,--output", out_path)->required();
  dc->callback([&] {
    auto f = load(in_path);
    auto c = std::get_if<io::NamedComplex>(&f);
    if (!c) throw InvalidArgument("double-cover expects a cells/pair file");
    DoubleCover d = canonical_double_cover(c->complex);
    write_file(out_path, io::serialize(io::NamedOrigami{c->name + "-double", d.origami}));
    if (!d.connected) std::cerr << "warning: double cover is disconnected (no flip pairs)\n";
    std::cout << "wrote " << out_path << ": " << d.origami.squares() << " squares, " << d.origami.stratum().to_string();
    if (d.pi_square) std::cout << "; pi point lifts to the lower-left corner of square " << *d.pi_square + 1;
    std::cout << "\n";
  });

  // strata
  auto* strata = app.add_subcommand("strata", "Stratum conversions");
  strata->require_subcommand(1);
  std::string stratum_arg;
  int max_poles = 4, pole_bound = 7;
  bool unbranched = false;
  auto* q2h = strata->add_subcommand("q2h", "Stratum of the canonical double cover");
  q2h->add_option("stratum", stratum_arg, "e.g. Q(5,-1)")->required();
  q2h->callback([&] { std::cout << q_to_h(parse_q_stratum(stratum_arg)).to_string() << "\n"; });
  auto* h2q = strata->add_subcommand("h2q", "Q-strata with a given double cover stratum");
  h2q->add_option("stratum", stratum_arg, "e.g. H(2,2)")->required();
  h2q->add_option("--max-poles", max_poles)->check(CLI::NonNegativeNumber);
  h2q->add_flag("--include-unbranched", unbranched);
  h2q->callback([&] {
    auto qs = h_to_q_preimages(parse_h_stratum(stratum_arg), {max_poles, unbranched});
    if (qs.empty()) std::cout << "∅\n";
    for (const auto& q : qs) std::cout << q.to_string() << "\n";
  });
  auto* table3 = strata->add_subcommand("table3", "Q-strata over the genus 3 H-strata");
  table3->add_option("--pole-bound", pole_bound)->check(CLI::NonNegativeNumber);
  table3->callback([&] { std::cout << io::table_genus3(pole_bound); });

  // render
  auto* render = app.add_subcommand("render", "SVG drawing of a surface");
  render->add_option("file", in_path)->required();
  render->add_option("-o,--output", out_path)->required();
  render->add_option("--point", point_arg, "trace start s:x,y");
  render->add_option("--dir", dir_arg, "trace direction p,q");
  render->add_option("--periods", periods);
  render->callback([&] {
    auto f = load(in_path);
    io::SvgOptions opt;
    if (!point_arg.empty()) opt.trace_from = parse_point(point_arg);
    if (!dir_arg.empty()) opt.trace_dir = parse_heading(dir_arg);
    opt.max_periods = periods;
    std::string svg;
    if (auto c = std::get_if<io::NamedComplex>(&f)) svg = io::render_svg(c->complex, opt);
    else svg = io::render_svg(io::as_cover(f), opt);
    write_file(out_path, svg);
  });

  // fuzz
  auto* fuzz = app.add_subcommand("fuzz", "Random complexes: double cover stratum against the Q->H rules");
  int count = 200, max_cells = 6;
  fuzz->add_option("--count", count)->check(CLI::PositiveNumber);
  fuzz->add_option("--max-cells", max_cells)->check(CLI::PositiveNumber);
  fuzz->callback([&] {
    std::mt19937_64 rng(g.seed);
    int bad = 0;
    for (int i = 0; i < count; ++i) {
      auto cx = random_complex(rng, max_cells);
      if (!(canonical_double_cover(cx).origami.stratum() == q_to_h(q_stratum(cx)))) {
        ++bad;
        std::cout << "mismatch:\n" << io::serialize(io::NamedComplex{"fuzz", cx});
      }
    }
    std::cout << count - bad << "/" << count << " complexes consistent\n";
    code = bad ? 1 : 0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}
