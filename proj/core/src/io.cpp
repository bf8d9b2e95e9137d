#include "tripsys/io.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "tripsys/errors.hpp"

namespace tripsys {
namespace {

using Json = nlohmann::ordered_json;

Json edges_json(const Hypergraph& h) {
  Json out = Json::array();
  for (const Triple& t : h.edge_list()) out.push_back({t[0], t[1], t[2]});
  return out;
}

Json sets_json(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (VertexSet s : sets) out.push_back(s.members());
  return out;
}

Json forbidden_json(std::span<const Pattern> forbidden) {
  Json out = Json::array();
  for (const Pattern& p : forbidden) out.push_back(to_string(p.name()));
  return out;
}

std::string entry_name(const CatalogEntry& e) { return e.name ? to_string(*e.name) : "?"; }

// Named classes in tag declaration order, unnamed ones last.
std::string level_names(const TuranLevel& level, const Catalog& catalog) {
  std::vector<std::pair<int, std::string>> names;
  for (std::size_t idx : level.extremal) {
    const CatalogEntry& e = catalog.entries[idx];
    names.emplace_back(e.name ? static_cast<int>(*e.name) : static_cast<int>(kAllFamilies.size()),
                       entry_name(e));
  }
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& [key, name] : names) {
    if (!out.empty()) out += ";";
    out += name;
  }
  return out;
}

std::string opt(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

std::string catalog_to_json(const Catalog& catalog) {
  Json j;
  j["n"] = catalog.n;
  j["forbidden"] = forbidden_json(catalog.forbidden);
  Json classes = Json::array();
  for (const CatalogEntry& e : catalog.entries) {
    Json c;
    c["edges"] = edges_json(e.hypergraph());
    c["size"] = e.size;
    c["tau"] = e.tau;
    c["name"] = e.name ? Json(to_string(*e.name)) : Json(nullptr);
    c["labeled_count"] = e.labeled_count;
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  return j.dump(2) + "\n";
}

Catalog catalog_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("catalog JSON: ") + e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    std::vector<Pattern> forbidden;
    for (const auto& p : j.at("forbidden")) forbidden.push_back(parse_pattern(p.get<std::string>()));
    std::map<CanonicalForm, std::int64_t> counts;
    for (const auto& c : j.at("classes")) {
      Hypergraph h(n);
      for (const auto& e : c.at("edges")) h.add(Triple(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()));
      if (h.size() != c.at("size").get<int>()) throw InvalidArgument("catalog JSON: size disagrees with edges");
      counts[canonical_form(h)] += c.at("labeled_count").get<std::int64_t>();
    }
    Catalog cat = make_catalog(n, forbidden, counts);
    if (cat.entries.size() != j.at("classes").size())
      throw InvalidArgument("catalog JSON: classes are not pairwise non-isomorphic");
    return cat;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("catalog JSON: ") + e.what());
  }
}

std::string catalog_to_text(const Catalog& catalog, bool labeled_counts) {
  std::string out = "# n=" + std::to_string(catalog.n) +
                    " forbidden=" + format_pattern_list(catalog.forbidden) +
                    " classes=" + std::to_string(catalog.entries.size());
  if (labeled_counts) out += " labeled=" + std::to_string(catalog.labeled_total());
  out += "\n";
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    const CatalogEntry& e = catalog.entries[i];
    out += "\n# class " + std::to_string(i + 1) + ": name=" + entry_name(e) +
           " size=" + std::to_string(e.size) + " tau=" + std::to_string(e.tau) +
           " two_covers=" + std::to_string(e.two_covers.size());
    if (labeled_counts) out += " labeled_count=" + std::to_string(e.labeled_count);
    out += "\n" + to_text(e.canonical);
  }
  return out;
}

std::string family_to_json(FamilyName name, int n) {
  const Hypergraph h = build(name, n);
  Json j;
  j["tag"] = to_string(name);
  j["n"] = n;
  j["size"] = h.size();
  j["size_formula"] = size_formula(name, n);
  const int t = tau(h);
  j["tau"] = t;
  j["covers"] = sets_json(covers(h, t));
  j["two_covers"] = sets_json(covers(h, 2));
  j["m2_free"] = !contains_pattern(h, Pattern::m2());
  j["c3_free"] = !contains_pattern(h, Pattern::c3());
  j["maximal_intersecting"] = is_intersecting(h) && is_maximal_intersecting(h);
  j["edges"] = edges_json(h);
  return j.dump(2) + "\n";
}

std::string hierarchy_to_text(const Hierarchy& h, const Catalog& catalog) {
  std::string out = "# hierarchy n=" + std::to_string(h.n) +
                    " forbidden=" + format_pattern_list(h.forbidden) + "\n";
  for (const TuranLevel& level : h.levels)
    out += "ex^(" + std::to_string(level.s) + ") = " + std::to_string(level.value) + "  Ex = {" +
           level_names(level, catalog) + "}\n";
  out += "no level " + std::to_string(h.levels.size() + 1) + "\n";
  return out;
}

std::string hierarchy_to_json(const Hierarchy& h, const Catalog& catalog) {
  Json j;
  j["n"] = h.n;
  j["forbidden"] = forbidden_json(h.forbidden);
  Json levels = Json::array();
  for (const TuranLevel& level : h.levels) {
    Json l;
    l["s"] = level.s;
    l["value"] = level.value;
    Json classes = Json::array();
    for (std::size_t idx : level.extremal) {
      const CatalogEntry& e = catalog.entries[idx];
      Json c;
      c["name"] = e.name ? Json(to_string(*e.name)) : Json(nullptr);
      c["edges"] = edges_json(e.hypergraph());
      c["tau"] = e.tau;
      c["labeled_count"] = e.labeled_count;
      classes.push_back(std::move(c));
    }
    l["classes"] = std::move(classes);
    levels.push_back(std::move(l));
  }
  j["levels"] = std::move(levels);
  j["terminal"] = h.terminal;
  return j.dump(2) + "\n";
}

std::string hierarchy_to_csv(const Hierarchy& h, const Catalog& catalog, bool header) {
  std::string out = header ? "n,s,value,num_classes,class_names\n" : "";
  for (const TuranLevel& level : h.levels)
    out += std::to_string(h.n) + "," + std::to_string(level.s) + "," + std::to_string(level.value) +
           "," + std::to_string(level.extremal.size()) + "," + level_names(level, catalog) + "\n";
  return out;
}

std::string report_to_text(const VerifyReport& r) {
  std::string out = "# verify n=" + std::to_string(r.n) +
                    " forbidden=" + format_pattern_list(r.forbidden) +
                    " classes=" + std::to_string(r.catalog.entries.size()) +
                    " labeled=" + std::to_string(r.catalog.labeled_total()) + "\n";
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
  };
  for (const LevelComparison& l : r.levels) {
    out += std::string(l.match ? "[match]    " : "[MISMATCH] ") + "s=" + std::to_string(l.s) +
           " computed=" + opt(l.computed) + " {" + join(l.computed_names) + "}" +
           " expected=" + opt(l.expected) + " {" + join(l.expected_names) + "}\n";
    for (const auto& d : l.details) out += d + (d.ends_with('\n') ? "" : "\n");
  }
  for (const NamedCheck& c : r.checks)
    out += std::string(c.passed ? "[match]    " : "[MISMATCH] ") + c.what + "\n";
  out += r.ok() ? "result: all levels agree\n" : "result: DISAGREEMENT\n";
  return out;
}

std::string report_to_json(const VerifyReport& r) {
  Json j;
  j["n"] = r.n;
  j["forbidden"] = forbidden_json(r.forbidden);
  j["ok"] = r.ok();
  Json levels = Json::array();
  for (const LevelComparison& l : r.levels) {
    Json x;
    x["s"] = l.s;
    x["computed"] = l.computed ? Json(*l.computed) : Json(nullptr);
    x["expected"] = l.expected ? Json(*l.expected) : Json(nullptr);
    x["computed_names"] = l.computed_names;
    x["expected_names"] = l.expected_names;
    x["match"] = l.match;
    x["details"] = l.details;
    levels.push_back(std::move(x));
  }
  j["levels"] = std::move(levels);
  Json checks = Json::array();
  for (const NamedCheck& c : r.checks) checks.push_back({{"what", c.what}, {"passed", c.passed}});
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

}  // namespace tripsys
