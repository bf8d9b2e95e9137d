// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tripsys/enumerate.hpp"
#include "tripsys/families.hpp"
#include "tripsys/io.hpp"
#include "tripsys/iso.hpp"
#include "tripsys/turan.hpp"

using namespace tripsys;

namespace {

using F = FamilyName;
using Clock = std::chrono::steady_clock;

// Wall-clock limits in seconds.
constexpr double kClassifySixLimit = 1.0;
constexpr double kSevenLimit = 10.0;
constexpr double kEightLimit = 300.0;
constexpr double kFamilySuiteLimit = 1.0;

const std::vector<Pattern> kM2 = {Pattern::m2()};
const std::vector<Pattern> kM2C3 = {Pattern::m2(), Pattern::c3()};

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class Fn>
double timed(Fn&& fn) {
  auto t0 = Clock::now();
  fn();
  return seconds_since(t0);
}

EnumerationOptions engine(Engine e, int threads = 1, bool allow_large = false) {
  EnumerationOptions o;
  o.engine = e;
  o.threads = threads;
  o.allow_large = allow_large;
  return o;
}

std::set<F> names_of(const Catalog& c, const std::vector<std::size_t>& idx) {
  std::set<F> out;
  for (std::size_t i : idx)
    if (c.entries[i].name) out.insert(*c.entries[i].name);
  return out;
}

std::string join(const std::set<F>& s) {
  std::string out;
  for (F f : s) out += (out.empty() ? "" : ",") + to_string(f);
  return out;
}

std::map<int, Catalog> g_intersecting;

const Catalog& intersecting(int n) {
  auto it = g_intersecting.find(n);
  if (it == g_intersecting.end()) it = g_intersecting.emplace(n, enumerate_maximal_intersecting(n)).first;
  return it->second;
}

// Levels of hierarchy(catalog) against the reference families, matched by identify().
void expect_levels(Check& c, const Catalog& cat, const std::vector<std::set<F>>& want) {
  Hierarchy h = hierarchy(cat);
  const std::string n = "n=" + std::to_string(cat.n);
  c.expect(h.levels.size() == want.size(), n + ": " + std::to_string(h.levels.size()) + " levels");
  for (std::size_t s = 0; s < std::min(h.levels.size(), want.size()); ++s) {
    auto got = names_of(cat, h.levels[s].extremal);
    c.expect(got == want[s] && got.size() == h.levels[s].extremal.size(),
             n + " level " + std::to_string(s + 1) + ": {" + join(got) + "} expected {" +
                 join(want[s]) + "}");
  }
}

Check criterion1(double& secs) {
  Check c;
  Catalog cat;
  secs = timed([&] { cat = enumerate_maximal_intersecting(6); });
  c.expect(cat.labeled_total() == 1024, "labeled total " + std::to_string(cat.labeled_total()));
  c.expect(cat.entries.size() == 13, "classes " + std::to_string(cat.entries.size()));
  std::set<F> got;
  for (const auto& e : cat.entries) {
    c.expect(e.size == 10, "class of size " + std::to_string(e.size));
    c.expect(e.name.has_value(), "unnamed class");
    if (e.name) got.insert(*e.name);
  }
  const std::set<F> want = {F::kSn, F::kK5pad, F::kH1, F::kH2, F::kH3, F::kH4, F::kH5,
                            F::kH6, F::kH7,    F::kH8, F::kH9, F::kH10, F::kH11};
  c.expect(got == want, "names {" + join(got) + "}");
  c.expect(secs < kClassifySixLimit, "time limit");
  g_intersecting.emplace(6, std::move(cat));
  return c;
}

Check criterion2(double& secs7, double& secs8) {
  Check c;
  for (int n : {7, 8}) {
    Catalog cat;
    double s = timed([&] { cat = enumerate_maximal_intersecting(n); });
    (n == 7 ? secs7 : secs8) = s;
    c.expect(s < (n == 7 ? kSevenLimit : kEightLimit), "n=" + std::to_string(n) + " time limit");
    c.expect(cat.entries.size() == 15, "n=" + std::to_string(n) + " classes " + std::to_string(cat.entries.size()));
    expect_levels(c, cat,
                  {{F::kSn},
                   {F::kH1, F::kH2},
                   {F::kH3},
                   {F::kH4, F::kH5, F::kH6},
                   {F::kK5pad, F::kF10, F::kH7, F::kH8, F::kH9, F::kH10, F::kH11},
                   {F::kF7}});
    g_intersecting.emplace(n, std::move(cat));
  }
  return c;
}

Check criterion3() {
  Check c;
  for (int n : {7, 8, 9}) {
    Hierarchy h = hierarchy(intersecting(n));
    const std::vector<std::int64_t> want = {(n - 1) * (n - 2) / 2, 3 * n - 8, 2 * n - 2, n + 4, 10, 7};
    std::vector<std::int64_t> got;
    for (const auto& l : h.levels) got.push_back(l.value);
    c.expect(got == want, "n=" + std::to_string(n) + " level values");
    c.expect(h.levels.size() == 6 && h.terminal, "n=" + std::to_string(n) + " has a level 7");
    for (int s = 1; s <= 7; ++s)
      c.expect(closed_form(n, kM2, s) == (s <= 6 ? std::optional(want[s - 1]) : std::nullopt),
               "closed form n=" + std::to_string(n) + " s=" + std::to_string(s));
  }
  return c;
}

Check criterion4(double& secs10) {
  Check c;
  for (int n = 6; n <= 9; ++n) {
    Catalog cat = enumerate(n, kM2C3, engine(Engine::kMis));
    VerifyReport r = verify(cat);
    c.expect(r.ok(), "n=" + std::to_string(n) + " verify report disagrees");
    Hierarchy h = hierarchy(cat);
    if (n == 6) {
      expect_levels(c, cat, {{F::kSn, F::kK5pad}, {F::kH0}});
      c.expect(h.levels.size() == 2 && h.levels[1].value == 6, "n=6 second level");
    } else {
      expect_levels(c, cat, {{F::kSn}, {F::kK5pad}, {F::kH0}});
      c.expect(h.levels.size() == 3 && h.levels[1].value == std::max(10, n) &&
                   h.levels[2].value == std::min(10, n),
               "n=" + std::to_string(n) + " max/min values");
    }
  }
  // n = 10: formula level and an override enumeration.
  c.expect(closed_form(10, kM2C3, 2) == 10 && !closed_form(10, kM2C3, 3), "n=10 closed form");
  Catalog ten;
  secs10 = timed([&] { ten = enumerate(10, kM2C3, engine(Engine::kMis, 1, true)); });
  expect_levels(c, ten, {{F::kSn}, {F::kK5pad, F::kH0}});
  Hierarchy h = hierarchy(ten);
  c.expect(h.levels.size() == 2 && h.levels[1].value == 10, "n=10 levels");
  return c;
}

Check criterion5(double& secs) {
  Check c;
  secs = timed([&] {
    for (int n = 6; n <= 12; ++n)
      for (F f : kAllFamilies) {
        if (n < min_vertices(f)) continue;
        const std::string tag = to_string(f) + "(" + std::to_string(n) + ")";
        Hypergraph h = build(f, n);
        c.expect(h.size() == size_formula(f, n), tag + " size");
        const bool m2_free = f != F::kM2 && f != F::kKn;
        c.expect(!contains_pattern(h, Pattern::m2()) == m2_free, tag + " M2 flag");
        const bool c3 = contains_pattern(h, Pattern::c3());
        switch (f) {
          case F::kH0:
          case F::kSn:
          case F::kK5pad: c.expect(!c3, tag + " C3 flag"); break;
          case F::kH7:
          case F::kH8:
          case F::kH9:
          case F::kH10:
          case F::kH11:
          case F::kF7:
          case F::kF10:
          case F::kC3: c.expect(c3, tag + " C3 flag"); break;
          default: break;
        }
        int want_tau = 0;
        switch (f) {
          case F::kSn: want_tau = 1; break;
          case F::kH1:
          case F::kH2:
          case F::kH3:
          case F::kH4:
          case F::kH5:
          case F::kH6: want_tau = 2; break;
          case F::kH7:
          case F::kH8:
          case F::kH9:
          case F::kH10:
          case F::kH11:
          case F::kF7:
          case F::kF10: want_tau = 3; break;
          default: break;
        }
        if (want_tau) c.expect(tau(h) == want_tau, tag + " tau");
      }
    for (int n = 6; n <= 12; ++n)
      for (F f : kMaximalFamilies)
        if (n >= min_vertices(f))
          c.expect(is_maximal_intersecting(build(f, n)), to_string(f) + " not maximal");
  });
  c.expect(secs < kFamilySuiteLimit, "time limit");
  return c;
}

Check criterion6(long& checked) {
  Check c;
  checked = 0;
  for (int n = 6; n <= 8; ++n)
    for (const auto& e : intersecting(n).entries) {
      Hypergraph h = e.hypergraph();
      // Covers of size at most k = 3, the range where up(T) lies inside H.
      std::vector<std::uint32_t> small;
      for (std::uint32_t m = 1; m < (1u << n); ++m)
        if (std::popcount(m) <= 3 && is_cover(h, VertexSet(m))) small.push_back(m);
      for (std::uint32_t a : small)
        for (std::uint32_t b : small) c.expect((a & b) != 0, "disjoint covers at n=" + std::to_string(n));
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        VertexSet u(m);
        if (u.size() < 6 || !is_heart(h, u)) continue;
        ++checked;
        c.expect(is_maximal_intersecting(induced(h, u)), "heart not maximal at n=" + std::to_string(n));
      }
    }
  return c;
}

Check criterion7() {
  Check c;
  const std::string six = catalog_to_json(intersecting(6));
  c.expect(six == catalog_to_json(enumerate(6, kM2, engine(Engine::kMis))), "n=6 clique vs mis");
  c.expect(six == catalog_to_json(enumerate(6, kM2, engine(Engine::kOracle))), "n=6 clique vs oracle");
  for (int n = 7; n <= 9; ++n) {
    const std::string ref = catalog_to_json(intersecting(n));
    c.expect(ref == catalog_to_json(enumerate(n, kM2, engine(Engine::kMis))),
             "n=" + std::to_string(n) + " clique vs mis");
    c.expect(ref == catalog_to_json(enumerate(n, kM2, engine(Engine::kClique, 4))),
             "n=" + std::to_string(n) + " thread count changes output");
  }
  return c;
}

Check criterion8() {
  Check c;
  for (int n = 7; n <= 50; ++n) {
    c.expect(hilton_milner_value(n, 3) == 3 * n - 8, "HM n=" + std::to_string(n));
    c.expect(han_kohayakawa_value(n, 3) == 2 * n - 2, "HK n=" + std::to_string(n));
  }
  return c;
}

int report(int id, const std::string& title, const Check& c, const std::string& detail) {
  std::printf("AC%d %s  %s  (%s)\n", id, c.ok ? "PASS" : "FAIL", title.c_str(), detail.c_str());
  for (const auto& note : c.notes) std::printf("      %s\n", note.c_str());
  std::fflush(stdout);
  return c.ok ? 0 : 1;
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

Check guarded(const std::function<Check()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    Check c;
    c.expect(false, std::string("exception: ") + e.what());
    return c;
  }
}

}  // namespace

int main() {
  int failed = 0;
  double t1 = 0, t7 = 0, t8 = 0, t10 = 0, t5 = 0;
  long hearts = 0;

  Check c1 = guarded([&] { return criterion1(t1); });
  failed += report(1, "n=6 classification: 1024 labeled, 13 named classes of size 10", c1,
                   secs(t1) + ", limit " + secs(kClassifySixLimit));

  Check c2 = guarded([&] { return criterion2(t7, t8); });
  failed += report(2, "n=7,8: 15 classes, extremal sets per level", c2,
                   "n=7 " + secs(t7) + " limit " + secs(kSevenLimit) + "; n=8 " + secs(t8) +
                       " limit " + secs(kEightLimit));

  auto t0 = Clock::now();
  Check c3 = guarded(criterion3);
  failed += report(3, "n=7,8,9: level values C(n-1,2),3n-8,2n-2,n+4,10,7; no level 7", c3,
                   secs(seconds_since(t0)));

  t0 = Clock::now();
  Check c4 = guarded([&] { return criterion4(t10); });
  failed += report(4, "{M2,C3} hierarchy n=6..9 and n=10 by override enumeration", c4,
                   secs(seconds_since(t0)) + ", n=10 run " + secs(t10));

  Check c5 = guarded([&] { return criterion5(t5); });
  failed += report(5, "family constructors n=6..12: sizes, freeness, tau, maximality", c5,
                   secs(t5) + ", limit " + secs(kFamilySuiteLimit));

  t0 = Clock::now();
  Check c6 = guarded([&] { return criterion6(hearts); });
  failed += report(6, "covers of size <= 3 pairwise intersect; hearts |U| >= 6 induce maximal families (n=6,7,8)", c6,
                   std::to_string(hearts) + " hearts checked, " + secs(seconds_since(t0)));

  t0 = Clock::now();
  Check c7 = guarded(criterion7);
  failed += report(7, "engine cross-validation: byte-identical catalog JSON", c7,
                   "clique/mis/oracle n=6, clique/mis n=7..9, " + secs(seconds_since(t0)));

  t0 = Clock::now();
  Check c8 = guarded(criterion8);
  failed += report(8, "Hilton-Milner = 3n-8 and Han-Kohayakawa = 2n-2 for 7 <= n <= 50", c8,
                   secs(seconds_since(t0)));

  std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
