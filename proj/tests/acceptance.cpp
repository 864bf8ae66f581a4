// Acceptance run: one PASS/FAIL line per criterion. Tolerances and sample sizes
// are fixed below; the exit status is the number of failed criteria.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "tsurf/tsurf.hpp"

using namespace tsurf;

namespace {

constexpr std::int64_t kBlockHeight = 30;      // direction sweep for the blocking check
constexpr std::int64_t kSampleHeight = 30;     // closing search for sampled points
constexpr std::int64_t kLHeight = 40;          // no closing direction through the L candidate
constexpr std::int64_t kLOtherHeight = 15;     // other L points must close by this height
constexpr std::int64_t kLowGenusHeight = 10;   // genus 1 and 2 samples
constexpr std::int64_t kLiftHeight = 12;       // lifting property suite
constexpr int kSampledPoints = 20;
constexpr int kLowGenusSamples = 25;
constexpr int kLOtherSamples = 12;
constexpr int kLOtherRequired = 10;
constexpr int kFuzzCases = 200;
constexpr int kFuzzMaxCells = 6;
constexpr std::uint64_t kSeed = 20240611;

struct Result {
  bool ok = true;
  std::string detail;
};

struct Check {
  Result r;
  void expect(bool cond, const std::string& what) {
    if (!cond && r.ok) {
      r.ok = false;
      r.detail = what;
    }
  }
};

// Random point with denominators <= 8, not a vertex of s, on a random sheet.
SurfacePoint sample_point(const CutCover& s, std::mt19937_64& rng, bool allow_origin = false) {
  std::uniform_int_distribution<int> den(1, 8), sheet(0, s.sheets() - 1);
  while (true) {
    int dx = den(rng), dy = den(rng);
    TorusPoint p(Rat(std::uniform_int_distribution<int>(0, dx - 1)(rng), dx),
                 Rat(std::uniform_int_distribution<int>(0, dy - 1)(rng), dy));
    if (!allow_origin && p == TorusPoint(0, 0)) continue;
    if (s.is_vertex(p)) continue;
    return {sheet(rng), p, Side::Left};
  }
}

bool all_certified(const ConstructionReport& r, std::int64_t h, int* count = nullptr) {
  int c = 0;
  for (const auto& pt : r.candidates)
    if (oblivious_verdict(r.surface, pt, h).kind == ObliviousVerdict::Kind::CertifiedOblivious) ++c;
  if (count) *count = c;
  return c == static_cast<int>(r.candidates.size());
}

Result c1_blocking() {
  Check ck;
  std::vector<TorusPoint> P = {TorusPoint(0, Rat(1, 2)), TorusPoint(Rat(1, 2), 0), TorusPoint(Rat(1, 2), Rat(1, 2))};
  TorusPoint x(0, 0);
  auto cert = blocks({P, x});
  ck.expect(cert.blocked(), "not blocked");
  ck.expect(cert.modulus == 2, "modulus " + std::to_string(cert.modulus));
  ck.expect(cert.table.size() == 3, "table has " + std::to_string(cert.table.size()) + " classes");
  // Brute force: every (p,q) with gcd 1 and |p|+|q| <= 30 passes through some point of P.
  int swept = 0;
  for (std::int64_t p = 0; p <= kBlockHeight; ++p)
    for (std::int64_t q = -kBlockHeight; q <= kBlockHeight; ++q) {
      if (p + std::abs(q) > kBlockHeight || std::gcd(p, q) != 1 || (p == 0 && q < 0)) continue;
      ++swept;
      bool hit = false;
      for (const auto& b : P) {
        // b - x = t(p,q) + integer vector for some real t: solve on the lifted line.
        Rat wx = b.x() - x.x(), wy = b.y() - x.y();
        hit = hit || is_integer(Rat(q) * wx - Rat(p) * wy);
      }
      ck.expect(hit, "direction (" + std::to_string(p) + "," + std::to_string(q) + ") escapes");
    }
  if (ck.r.ok) ck.r.detail = "D=2, 3 classes, " + std::to_string(swept) + " directions blocked";
  return ck.r;
}

Result c2_double_blocked() {
  Check ck;
  auto r = double_blocked();
  const CutCover& s = r.surface;
  ck.expect(stratum(s) == HStratum::make({1, 1, 1, 1}), "stratum " + stratum(s).to_string());
  int eg = euler_genus_oracle(s);
  ck.expect(genus(s) == 3 && eg == 3, "genus " + std::to_string(genus(s)) + " oracle " + std::to_string(eg));
  ck.expect(r.candidates.size() == 2 && all_certified(r, kSampleHeight), "sheet origins not both certified");
  std::mt19937_64 rng(kSeed);
  int not_obl = 0;
  for (int i = 0; i < kSampledPoints; ++i) {
    SurfacePoint pt = sample_point(s, rng);
    auto v = oblivious_verdict(s, pt, kSampleHeight);
    bool ok = v.kind == ObliviousVerdict::Kind::NotOblivious && v.direction && v.direction->height() <= kSampleHeight;
    ck.expect(ok, to_string(pt) + " got " + to_string(v.kind));
    not_obl += ok;
  }
  if (ck.r.ok) ck.r.detail = "H(1,1,1,1), genus 3, " + std::to_string(not_obl) + "/20 samples not oblivious";
  return ck.r;
}

Result c3_cyclic() {
  Check ck;
  for (int n = 2; n <= 5; ++n) {
    auto r = cyclic_blocked(n);
    ck.expect(stratum(r.surface) == HStratum::make(std::vector<int>(4, n - 1)), "n=" + std::to_string(n) + " stratum");
    ck.expect(genus(r.surface) == 2 * n - 1, "n=" + std::to_string(n) + " genus");
    int c = 0;
    all_certified(r, kSampleHeight, &c);
    ck.expect(c == n && static_cast<int>(r.candidates.size()) == n, "n=" + std::to_string(n) + " certified " + std::to_string(c));
    auto census = blocked_census(singular_base_points(r.surface), 4);
    ck.expect(census == std::set<TorusPoint>{TorusPoint(0, 0)}, "n=" + std::to_string(n) + " census size " +
                                                                     std::to_string(census.size()));
  }
  if (ck.r.ok) ck.r.detail = "n=2..5";
  return ck.r;
}

Result c4_even_genus() {
  Check ck;
  for (int n = 2; n <= 3; ++n) {
    auto base = cyclic_blocked(n);
    auto r = add_even_genus_slit(base, 0, 1);
    ck.expect(genus(r.surface) == 2 * n, "n=" + std::to_string(n) + " genus " + std::to_string(genus(r.surface)));
    int new_ones = 0;
    for (const auto& d : r.surface.cone_data()) {
      if (base.surface.is_vertex(d.base_point)) continue;
      int excess = 0;
      for (int c : d.cycles) excess += c - 1;
      new_ones += excess == 1;
    }
    ck.expect(new_ones == 2, "n=" + std::to_string(n) + " new excess-1 points " + std::to_string(new_ones));
    ck.expect(all_certified(r, kSampleHeight), "n=" + std::to_string(n) + " candidates not certified");
  }
  if (ck.r.ok) ck.r.detail = "genus 4 and 6";
  return ck.r;
}

Result c5_fuzz() {
  Check ck;
  std::mt19937_64 rng(kSeed);
  int good = 0;
  for (int i = 0; i < kFuzzCases; ++i) {
    auto cx = random_complex(rng, kFuzzMaxCells);
    auto dc = canonical_double_cover(cx);
    // Euler oracle on the cover, independent of the corner-walk stratum.
    auto cover = from_origami(dc.origami, "fuzz");
    bool ok = dc.origami.stratum() == q_to_h(q_stratum(cx));
    if (cover.connected()) ok = ok && euler_genus_oracle(cover) == q_to_h(q_stratum(cx)).genus();
    ck.expect(ok, "case " + std::to_string(i) + " " + q_stratum(cx).to_string());
    good += ok;
  }
  if (ck.r.ok) ck.r.detail = std::to_string(good) + "/" + std::to_string(kFuzzCases) + " consistent";
  return ck.r;
}

Result c6_l_family() {
  Check ck;
  std::mt19937_64 rng(kSeed);
  for (int n = 4; n <= 7; ++n) {
    auto r = l_family(n);
    std::string tag = "n=" + std::to_string(n);
    ck.expect(r.origami && r.origami->squares() == 2 * n, tag + " squares");
    const SurfacePoint& x = r.candidates.at(0);
    ck.expect(r.surface.is_regular(x), tag + " candidate is a cone point");
    ck.expect(!find_closing_direction(r.surface, x, kLHeight), tag + " candidate closes");
    int closed = 0;
    for (int i = 0; i < kLOtherSamples; ++i) {
      SurfacePoint pt = sample_point(r.surface, rng);
      closed += find_closing_direction(r.surface, pt, kLOtherHeight).has_value();
    }
    ck.expect(closed >= kLOtherRequired, tag + " only " + std::to_string(closed) + " samples close");
  }
  if (ck.r.ok) ck.r.detail = "n=4..7";
  return ck.r;
}

Result c7_table() {
  Check ck;
  auto rows = io::genus3_rows(7);
  auto row = [&](const std::string& h) -> const io::TableRow& {
    for (const auto& r : rows)
      if (r.h.to_string() == h) return r;
    throw std::logic_error("missing row " + h);
  };
  auto has = [](const io::TableRow& r, const std::string& q) {
    for (const auto& x : r.preimages)
      if (x == parse_q_stratum(q)) return true;
    return false;
  };
  ck.expect(row("H(3,1)").preimages.empty(), "H(3,1) not empty");
  const auto& four = row("H(1,1,1,1)");
  ck.expect(four.preimages.size() == 1 && has(four, "Q(2,2,-1^4)"), "H(1,1,1,1) row");
  const auto& twotwo = row("H(2,2)");
  ck.expect(has(twotwo, "Q(4,-1^4)"), "H(2,2) lacks Q(4,-1^4)");
  for (int m = 2; m <= 7; m += 4) ck.expect(has(twotwo, "Q(1,1,-1^" + std::to_string(m) + ")"), "H(2,2) lacks m=" + std::to_string(m));
  const auto& h4 = row("H(4)");
  ck.expect(!h4.footnotes.empty(), "H(4) footnote missing");
  ck.expect(!h4.preimages.empty(), "H(4) row empty");
  for (const auto& q : h4.preimages) {
    ck.expect(q.poles() % 4 == 3, "H(4) member " + q.to_string());
    ck.expect(q_to_h(q) == HStratum::make({4}), "H(4) member maps elsewhere");
  }
  std::string text = io::table_genus3(7);
  ck.expect(text.find("[1]") != std::string::npos, "table text has no footnotes");
  if (ck.r.ok) ck.r.detail = "rows and H(4) footnote present";
  return ck.r;
}

Result c8_cases() {
  Check ck;
  for (int m = 1; m <= 5; ++m) {
    HStratum a = q_to_h(QStratum::make({-1, 4 * m + 1}));
    HStratum b = q_to_h(QStratum::make({-1, 1, 1, 4 * m - 1}));
    ck.expect(a == HStratum::make({4 * m + 2}), "case I m=" + std::to_string(m) + " " + a.to_string());
    ck.expect(b == HStratum::make({2, 2, 4 * m}), "case II m=" + std::to_string(m) + " " + b.to_string());
    // Gauss-Bonnet: 2g - 2 = sum of excesses.
    ck.expect(2 * (2 * m + 2) - 2 == 4 * m + 2 && a.genus() == 2 * m + 2, "case I genus");
    ck.expect(2 * (2 * m + 3) - 2 == 4 * m + 4 && b.genus() == 2 * m + 3, "case II genus");
  }
  if (ck.r.ok) ck.r.detail = "m=1..5";
  return ck.r;
}

Result c9_low_genus() {
  Check ck;
  std::mt19937_64 rng(kSeed);
  std::vector<CutCover> surfaces = {
      from_origami(Origami::torus(), "torus"),
      from_origami(Origami::make(Permutation::parse("(1 2)", 3), Permutation::parse("(1 3)", 3)), "l-three")};
  for (const auto& s : surfaces) {
    for (int i = 0; i < kLowGenusSamples; ++i) {
      SurfacePoint pt = sample_point(s, rng, true);
      if (s.is_vertex(pt.pos)) continue;
      auto v = oblivious_verdict(s, pt, kLowGenusHeight);
      bool ok = v.kind == ObliviousVerdict::Kind::NotOblivious && v.direction && v.direction->height() <= kLowGenusHeight;
      ck.expect(ok, s.name() + " " + to_string(pt) + " got " + to_string(v.kind));
    }
  }
  if (ck.r.ok) ck.r.detail = "2 x 25 samples not oblivious";
  return ck.r;
}

Result c10_lifting() {
  Check ck;
  std::vector<CutCover> surfaces = {slit_tori_pair().surface, double_blocked().surface, cyclic_blocked(3).surface};
  std::vector<TorusPoint> bases = {TorusPoint(Rat(1, 8), Rat(3, 8)), TorusPoint(Rat(1, 3), Rat(1, 5)),
                                   TorusPoint(Rat(7, 8), Rat(1, 8)), TorusPoint(Rat(2, 3), Rat(5, 7)),
                                   TorusPoint(Rat(1, 8), 0)};
  auto dirs = enumerate_primitive_directions(kLiftHeight);
  long lifted = 0, projected = 0;
  for (const auto& s : surfaces) {
    for (const auto& b : bases) {
      if (s.is_vertex(b)) continue;
      for (const auto& d : dirs) {
        bool avoids = true;
        for (const auto& m : s.marked()) avoids = avoids && !line_hits_point(b, d, m);
        for (int sh = 0; sh < s.sheets(); ++sh) {
          auto t = trace(s, {sh, b, Side::Left}, d);
          if (avoids) {
            ck.expect(t.closed(), s.name() + " " + to_string(b) + " " + to_string(d) + " sheet " + std::to_string(sh + 1));
            ++lifted;
          }
          if (t.closed()) {
            // Endpoint of the projected trajectory after the closing time.
            Vec2 end = b.vec() + Rat(t.periods) * d.vec();
            ck.expect(TorusPoint(end) == b && t.periods >= 1 && t.periods <= s.sheets(), "projection not closed");
            ++projected;
          }
        }
      }
    }
  }
  if (ck.r.ok) ck.r.detail = std::to_string(lifted) + " lifts closed, " + std::to_string(projected) + " projections closed";
  return ck.r;
}

std::vector<Permutation> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_images(v));
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Result c12_sl2z() {
  Check ck;
  std::vector<std::vector<Generator>> words = {{}};
  for (int len = 1; len <= 4; ++len) {
    std::vector<std::vector<Generator>> next;
    for (const auto& w : words)
      if (static_cast<int>(w.size()) == len - 1)
        for (Generator g : {Generator::S, Generator::T}) {
          auto x = w;
          x.push_back(g);
          next.push_back(x);
        }
    words.insert(words.end(), next.begin(), next.end());
  }
  long checked = 0;
  for (int n = 1; n <= 5; ++n) {
    auto perms = all_perms(n);
    for (const auto& r : perms)
      for (const auto& u : perms) {
        if (!generates_transitive(n, {r, u})) continue;
        Origami o = Origami::make(r, u);
        HStratum h = o.stratum();
        for (const auto& w : words) {
          if (w.empty()) continue;
          Origami x = o;
          for (Generator g : w) x = act(x, g);
          ck.expect(x.stratum() == h, "stratum changed on " + r.to_string() + " " + u.to_string());
          ++checked;
        }
      }
  }
  // Trace-level check on the grid refinement of the doubly blocked cover.
  const int M = 4;
  CutCover base = double_blocked().surface;
  Origami o = refine_to_origami(base, M);
  CutCover ref = from_origami(o, "refined");
  ck.expect(ref.connected() && stratum(ref) == stratum(base), "refinement stratum");
  std::vector<VeechElement> mats = {VeechElement::T(), VeechElement::S(), VeechElement::make(2, 1, 1, 1),
                                    VeechElement::make(1, -2, 1, -1), VeechElement::make(3, 2, 1, 1)};
  int images = 0;
  for (const auto& [p, dir] : std::vector<std::pair<SurfacePoint, Heading>>{
           {{0, TorusPoint(Rat(1, 8), 0), Side::Left}, Heading::make(0, 1)},
           {{0, TorusPoint(Rat(1, 8), Rat(3, 8)), Side::Left}, Heading::make(0, 1)},
           {{1, TorusPoint(Rat(3, 8), Rat(1, 8)), Side::Left}, Heading::make(1, 0)}}) {
    ck.expect(is_on_closed_geodesic(base, p, dir), "base point " + to_string(p) + " does not close");
    OrigamiPoint q = refine_point(p, M);
    SurfacePoint rq = to_surface_point(q);
    ck.expect(is_on_closed_geodesic(ref, rq, dir), "refined point does not close");
    for (const auto& m : mats) {
      OrigamiPoint img = sl2z_act_point(o, m, q);
      CutCover moved = from_origami(sl2z_act(o, m), "moved");
      SurfacePoint ip = to_surface_point(img);
      ck.expect(is_on_closed_geodesic(moved, ip, m.apply(dir)), "image of " + to_string(p) + " does not close");
      ++images;
    }
  }
  if (ck.r.ok) ck.r.detail = std::to_string(checked) + " word actions, " + std::to_string(images) + " image traces";
  return ck.r;
}

Result c11_grid() {
  Check ck;
  for (int k = 2; k <= 3; ++k) {
    auto r = grid_blocked(k, 3);
    int c = 0;
    all_certified(r, kSampleHeight, &c);
    ck.expect(c == k, "k=" + std::to_string(k) + " certified " + std::to_string(c));
    ck.expect(genus(r.surface) == euler_genus_oracle(r.surface), "k=" + std::to_string(k) + " oracle genus");
    auto cmp = grid_comparison(k, 3, r.surface);
    ck.expect(!to_string(cmp).empty(), "no comparison");
    if (ck.r.ok) ck.r.detail += (k == 2 ? "" : "; ") + to_string(cmp);
  }
  return ck.r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result c13_determinism() {
  Check ck;
  int files = 0;
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(TSURF_DATA_DIR)) {
    auto ext = e.path().extension();
    if (ext == ".surf" || ext == ".stc") paths.push_back(e.path());
  }
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) {
    auto f = io::parse_surface(slurp(p));
    auto again = io::parse_surface(io::serialize(f));
    ck.expect(again == f, "round trip " + p.filename().string());
    ck.expect(io::serialize(again) == io::serialize(f), "serialize not stable " + p.filename().string());
    std::string a1, a2, r1, r2;
    if (auto c = std::get_if<io::NamedComplex>(&f)) {
      r1 = io::render_svg(c->complex);
      r2 = io::render_svg(std::get<io::NamedComplex>(io::parse_surface(slurp(p))).complex);
    } else {
      CutCover s = io::as_cover(f);
      a1 = io::to_text(io::analyze(s));
      a2 = io::to_text(io::analyze(io::as_cover(io::parse_surface(slurp(p)))));
      r1 = io::render_svg(s);
      r2 = io::render_svg(io::as_cover(io::parse_surface(slurp(p))));
    }
    ck.expect(a1 == a2 && r1 == r2, "output differs " + p.filename().string());
    ++files;
  }
  std::vector<io::SurfaceFile> built = {slit_tori_pair().surface, double_blocked().surface, cyclic_blocked(4).surface,
                                        add_even_genus_slit(cyclic_blocked(3), 1, 2).surface, grid_blocked(2, 3).surface,
                                        io::NamedOrigami{"l", *l_family(5).origami}, io::NamedComplex{"pc", pillowcase()},
                                        io::NamedComplex{"l6", l_complex(6)}};
  for (const auto& f : built) ck.expect(io::parse_surface(io::serialize(f)) == f, "construction round trip");
  ck.expect(files >= 5, "only " + std::to_string(files) + " shipped files");
  if (ck.r.ok) ck.r.detail = std::to_string(files) + " files, " + std::to_string(built.size()) + " constructions";
  return ck.r;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"three half-points block the origin", c1_blocking},
      {"doubly blocked cover", c2_double_blocked},
      {"cyclic blocked covers", c3_cyclic},
      {"even genus slit", c4_even_genus},
      {"double cover strata fuzz", c5_fuzz},
      {"L family oblivious point", c6_l_family},
      {"genus 3 strata table", c7_table},
      {"Q to H case formulas", c8_cases},
      {"no oblivious points in genus 1 and 2", c9_low_genus},
      {"lifting of closed geodesics", c10_lifting},
      {"grid blocked covers", c11_grid},
      {"SL2(Z) action", c12_sl2z},
      {"determinism and round trip", c13_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !r.ok;
    std::cout << "criterion " << i + 1 << ": " << (r.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
              << r.detail << "] " << static_cast<int>(secs * 1000) << " ms" << std::endl;
  }
  return failed;
}
