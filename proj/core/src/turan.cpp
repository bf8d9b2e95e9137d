#include "tripsys/turan.hpp"

#include <algorithm>
#include <map>

#include "tripsys/errors.hpp"

namespace tripsys {
namespace {

enum class Table { kNone, kM2, kM2C3 };

Table table_for(std::span<const Pattern> forbidden) {
  bool m2 = false, c3 = false, other = false;
  for (const Pattern& p : forbidden) {
    if (p.name() == PatternName::kM2) m2 = true;
    else if (p.name() == PatternName::kC3) c3 = true;
    else other = true;
  }
  if (other || !m2) return Table::kNone;
  return c3 ? Table::kM2C3 : Table::kM2;
}

std::string label(const CatalogEntry& e) { return e.name ? to_string(*e.name) : "?"; }

// Declaration order of the tags; unnamed classes last.
bool by_tag_order(const std::string& a, const std::string& b) {
  auto key = [](const std::string& s) {
    for (std::size_t i = 0; i < kAllFamilies.size(); ++i)
      if (to_string(kAllFamilies[i]) == s) return i;
    return kAllFamilies.size();
  };
  return std::pair(key(a), a) < std::pair(key(b), b);
}

}  // namespace

std::int64_t ekr_value(int n, int k) { return binomial(n - 1, k - 1); }

std::int64_t hilton_milner_value(int n, int k) {
  return binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1;
}

std::int64_t han_kohayakawa_value(int n, int k) {
  return binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) - binomial(n - k - 2, k - 2) + 2;
}

Hierarchy hierarchy(const Catalog& catalog, Containment mode) {
  if (catalog.entries.empty()) throw InvalidArgument("hierarchy of an empty catalog");
  Hierarchy out;
  out.n = catalog.n;
  out.forbidden = catalog.forbidden;

  std::vector<Hypergraph> reps;
  for (const CatalogEntry& e : catalog.entries) {
    Hypergraph h = e.hypergraph();
    if (h.n() != catalog.n) throw InvariantViolation("catalog entry has the wrong vertex count");
    if (!is_maximal_free(h, catalog.forbidden))
      throw InvariantViolation("catalog entry is not a maximal free family:\n" + to_text(e.canonical));
    reps.push_back(std::move(h));
  }
  for (std::size_t i = 1; i < catalog.entries.size(); ++i) {
    const auto& a = catalog.entries[i - 1];
    const auto& b = catalog.entries[i];
    if (a.size < b.size || (a.size == b.size && !(a.canonical < b.canonical)))
      throw InvariantViolation("catalog entries are not sorted or not pairwise non-isomorphic");
  }

  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    const std::int64_t size = catalog.entries[i].size;
    if (out.levels.empty() || out.levels.back().value != size)
      out.levels.push_back({static_cast<int>(out.levels.size()) + 1, size, {}});
    out.levels.back().extremal.push_back(i);
  }

  // An s-extremal family must not sit inside any extremal family of an earlier level.
  for (std::size_t s = 1; s < out.levels.size(); ++s)
    for (std::size_t i : out.levels[s].extremal)
      for (std::size_t t = 0; t < s; ++t)
        for (std::size_t j : out.levels[t].extremal)
          if (contained_in(reps[i], reps[j], mode))
            throw InvariantViolation("level " + std::to_string(s + 1) + " entry is contained in a level " +
                                     std::to_string(t + 1) + " entry");
  return out;
}

std::optional<std::int64_t> closed_form(int n, std::span<const Pattern> forbidden, int s) {
  const Table table = table_for(forbidden);
  if (table == Table::kNone || n < 3 || s < 1) return std::nullopt;
  if (n <= 5) return s == 1 ? std::optional<std::int64_t>(binomial(n, 3)) : std::nullopt;
  if (table == Table::kM2) {
    if (n == 6) return s == 1 ? std::optional<std::int64_t>(10) : std::nullopt;
    switch (s) {
      case 1: return ekr_value(n, 3);
      case 2: return 3 * n - 8;
      case 3: return 2 * n - 2;
      case 4: return n + 4;
      case 5: return 10;
      case 6: return 7;
      default: return std::nullopt;
    }
  }
  if (n == 6) {
    if (s == 1) return 10;
    if (s == 2) return 6;
    return std::nullopt;
  }
  if (s == 1) return ekr_value(n, 3);
  if (n == 10) return s == 2 ? std::optional<std::int64_t>(10) : std::nullopt;
  if (s == 2) return std::max(10, n);
  if (s == 3) return std::min(10, n);
  return std::nullopt;
}

std::vector<ExpectedLevel> expected_levels(int n, std::span<const Pattern> forbidden) {
  using F = FamilyName;
  const Table table = table_for(forbidden);
  if (table == Table::kNone || n < 3) return {};
  if (n <= 5) return {{binomial(n, 3), {F::kKn}}};
  if (table == Table::kM2) {
    if (n == 6)
      return {{10,
               {F::kSn, F::kK5pad, F::kH1, F::kH2, F::kH3, F::kH4, F::kH5, F::kH6, F::kH7, F::kH8,
                F::kH9, F::kH10, F::kH11}}};
    return {
        {ekr_value(n, 3), {F::kSn}},
        {3 * n - 8, {F::kH1, F::kH2}},
        {2 * n - 2, {F::kH3}},
        {n + 4, {F::kH4, F::kH5, F::kH6}},
        {10, {F::kK5pad, F::kF10, F::kH7, F::kH8, F::kH9, F::kH10, F::kH11}},
        {7, {F::kF7}},
    };
  }
  if (n == 6) return {{10, {F::kSn, F::kK5pad}}, {6, {F::kH0}}};
  std::vector<ExpectedLevel> out{{ekr_value(n, 3), {F::kSn}}};
  // The two remaining classes are placed by size; they share a level when n = 10.
  if (n == 10) {
    out.push_back({10, {F::kK5pad, F::kH0}});
  } else if (n < 10) {
    out.push_back({10, {F::kK5pad}});
    out.push_back({n, {F::kH0}});
  } else {
    out.push_back({n, {F::kH0}});
    out.push_back({10, {F::kK5pad}});
  }
  return out;
}

bool VerifyReport::ok() const {
  return std::all_of(levels.begin(), levels.end(), [](const auto& l) { return l.match; }) &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

VerifyReport verify(const Catalog& catalog, Containment mode) {
  const int n = catalog.n;
  if (table_for(catalog.forbidden) == Table::kNone)
    throw InvalidArgument("no reference hierarchy for forbidden set " +
                          format_pattern_list(catalog.forbidden));
  VerifyReport report;
  report.n = n;
  report.forbidden = catalog.forbidden;
  report.catalog = catalog;
  report.hierarchy = hierarchy(catalog, mode);

  const auto expected = expected_levels(n, catalog.forbidden);
  const std::size_t depth = std::max(expected.size(), report.hierarchy.levels.size());
  for (std::size_t i = 0; i < depth; ++i) {
    LevelComparison cmp;
    cmp.s = static_cast<int>(i) + 1;
    cmp.expected = closed_form(n, catalog.forbidden, cmp.s);
    if (i < expected.size()) {
      for (FamilyName f : expected[i].families) cmp.expected_names.push_back(to_string(f));
      if (!cmp.expected || *cmp.expected != expected[i].value)
        cmp.details.push_back("closed form and family table disagree at this level");
    }
    if (i < report.hierarchy.levels.size()) {
      const TuranLevel& level = report.hierarchy.levels[i];
      cmp.computed = level.value;
      for (std::size_t idx : level.extremal) cmp.computed_names.push_back(label(catalog.entries[idx]));
    }
    std::sort(cmp.computed_names.begin(), cmp.computed_names.end(), by_tag_order);
    std::sort(cmp.expected_names.begin(), cmp.expected_names.end(), by_tag_order);
    const auto& want = cmp.expected_names;
    cmp.match = cmp.details.empty() && cmp.computed == cmp.expected && cmp.computed_names == want;
    if (!cmp.match) {
      // Show both sides: unexpected computed classes and expected families that did not appear.
      if (i < report.hierarchy.levels.size())
        for (std::size_t idx : report.hierarchy.levels[i].extremal) {
          const auto& e = catalog.entries[idx];
          if (!e.name || std::find(want.begin(), want.end(), to_string(*e.name)) == want.end())
            cmp.details.push_back("computed " + label(e) + ":\n" + to_text(e.canonical));
        }
      for (const std::string& name : want)
        if (std::find(cmp.computed_names.begin(), cmp.computed_names.end(), name) ==
            cmp.computed_names.end()) {
          FamilyName f = parse_family(name);
          cmp.details.push_back("expected " + name + ":\n" + to_text(canonical_form(build(f, n))));
        }
    }
    report.levels.push_back(std::move(cmp));
  }

  // H0(n) sits inside H1(n)..H5(n).
  if (n >= 6) {
    const Hypergraph h0 = build(FamilyName::kH0, n);
    for (FamilyName f : {FamilyName::kH1, FamilyName::kH2, FamilyName::kH3, FamilyName::kH4,
                         FamilyName::kH5})
      report.checks.push_back({"H0(" + std::to_string(n) + ") embeds into " + to_string(f) + "(" +
                                   std::to_string(n) + ")",
                               embeds_into(h0, build(f, n))});
  }
  // EKR, Hilton-Milner and Han-Kohayakawa values agree with the level values at k = 3.
  if (n >= 7 && table_for(catalog.forbidden) == Table::kM2) {
    report.checks.push_back({"EKR value equals ex^(1)", ekr_value(n, 3) == closed_form(n, catalog.forbidden, 1)});
    report.checks.push_back({"Hilton-Milner value equals ex^(2)",
                             hilton_milner_value(n, 3) == closed_form(n, catalog.forbidden, 2)});
    report.checks.push_back({"Han-Kohayakawa value equals ex^(3)",
                             han_kohayakawa_value(n, 3) == closed_form(n, catalog.forbidden, 3)});
  }
  return report;
}

VerifyReport verify(int n, std::span<const Pattern> forbidden, const EnumerationOptions& options,
                    Containment mode) {
  return verify(enumerate(n, forbidden, options), mode);
}

}  // namespace tripsys
