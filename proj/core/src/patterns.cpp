#include "tripsys/patterns.hpp"

#include <algorithm>
#include <set>

#include "tripsys/errors.hpp"

namespace tripsys {

Pattern Pattern::m2() { return Pattern(Hypergraph(6, {{0, 1, 2}, {3, 4, 5}}), PatternName::kM2); }

Pattern Pattern::c3() {
  return Pattern(Hypergraph(6, {{0, 5, 1}, {0, 4, 2}, {1, 3, 2}}), PatternName::kC3);
}

Pattern Pattern::p2() { return Pattern(Hypergraph(5, {{0, 1, 2}, {0, 3, 4}}), PatternName::kP2); }

Pattern Pattern::custom(Hypergraph graph) { return Pattern(std::move(graph), PatternName::kCustom); }

std::string to_string(PatternName name) {
  switch (name) {
    case PatternName::kM2: return "M2";
    case PatternName::kC3: return "C3";
    case PatternName::kP2: return "P2";
    case PatternName::kCustom: return "custom";
  }
  return "custom";
}

Pattern parse_pattern(std::string_view token) {
  if (token == "M2") return Pattern::m2();
  if (token == "C3") return Pattern::c3();
  if (token == "P2") return Pattern::p2();
  throw InvalidArgument("unknown pattern '" + std::string(token) + "' (expected M2, C3 or P2)");
}

std::vector<Pattern> parse_pattern_list(std::string_view csv) {
  std::vector<Pattern> out;
  while (!csv.empty()) {
    auto comma = csv.find(',');
    std::string_view tok = csv.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    Pattern p = parse_pattern(tok);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  if (out.empty()) throw InvalidArgument("empty pattern list");
  std::sort(out.begin(), out.end(),
            [](const Pattern& a, const Pattern& b) { return a.name() < b.name(); });
  return out;
}

std::string format_pattern_list(std::span<const Pattern> patterns) {
  std::string out;
  for (const auto& p : patterns) {
    if (!out.empty()) out += ",";
    out += to_string(p.name());
  }
  return out;
}

void for_each_embedding(const Hypergraph& pattern, const Hypergraph& host,
                        const std::function<bool(std::span<const int>)>& visit) {
  const int pn = pattern.n();
  const auto pedges = pattern.edge_list();
  std::vector<int> order = pattern.support().members();
  std::vector<int> pdeg(static_cast<std::size_t>(pn), 0);
  for (int v : order) pdeg[v] = pattern.degree(v);
  // High-degree pattern vertices first: their images are the most constrained.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return pdeg[a] > pdeg[b]; });

  std::vector<int> position(static_cast<std::size_t>(pn), -1);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  // Edges checked once their last vertex (in search order) is placed.
  std::vector<std::vector<Triple>> closing(order.size());
  for (const Triple& t : pedges) {
    int last = std::max({position[t[0]], position[t[1]], position[t[2]]});
    closing[last].push_back(t);
  }

  const int hn = host.n();
  std::vector<int> hdeg(static_cast<std::size_t>(hn), 0);
  const std::uint32_t hsupport = host.support().bits();
  for (int v = 0; v < hn; ++v) hdeg[v] = host.degree(v);

  std::vector<int> image(static_cast<std::size_t>(pn), -1);
  std::uint32_t used = 0;
  bool stop = false;

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      if (!visit(image)) stop = true;
      return;
    }
    const int pv = order[depth];
    for (std::uint32_t cand = hsupport & ~used; cand && !stop; cand &= cand - 1) {
      int hv = std::countr_zero(cand);
      if (hdeg[hv] < pdeg[pv]) continue;
      image[pv] = hv;
      bool ok = true;
      for (const Triple& t : closing[depth]) {
        if (!host.contains(Triple(image[t[0]], image[t[1]], image[t[2]]))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used |= 1u << hv;
        self(self, depth + 1);
        used &= ~(1u << hv);
      }
      image[pv] = -1;
    }
  };
  rec(rec, 0);
}

std::optional<std::vector<int>> find_embedding(const Hypergraph& pattern, const Hypergraph& host) {
  std::optional<std::vector<int>> found;
  for_each_embedding(pattern, host, [&](std::span<const int> img) {
    found.emplace(img.begin(), img.end());
    return false;
  });
  return found;
}

bool contains_m2(const Hypergraph& h) { return !is_intersecting(h); }

bool contains_c3(const Hypergraph& h) {
  const int n = h.n();
  // codeg[a][b]: third vertices completing an edge with a and b.
  std::array<std::array<std::uint32_t, kMaxVertices>, kMaxVertices> codeg{};
  for (const Triple& t : h.edge_list()) {
    codeg[t[0]][t[1]] |= 1u << t[2];
    codeg[t[0]][t[2]] |= 1u << t[1];
    codeg[t[1]][t[2]] |= 1u << t[0];
  }
  // x1 < x2 < x3 are the degree-2 vertices; each pair needs its own private third vertex.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!codeg[a][b]) continue;
      for (int c = b + 1; c < n; ++c) {
        const std::uint32_t xs = (1u << a) | (1u << b) | (1u << c);
        const std::uint32_t yab = codeg[a][b] & ~xs;
        const std::uint32_t yac = codeg[a][c] & ~xs;
        const std::uint32_t ybc = codeg[b][c] & ~xs;
        if (!yab || !yac || !ybc) continue;
        for (std::uint32_t p = yab; p; p &= p - 1) {
          const std::uint32_t y1 = p & (~p + 1);
          for (std::uint32_t q = yac & ~y1; q; q &= q - 1) {
            const std::uint32_t y2 = q & (~q + 1);
            if (ybc & ~(y1 | y2)) return true;
          }
        }
      }
    }
  return false;
}

bool contains_generic(const Hypergraph& h, const Hypergraph& pattern) {
  return find_embedding(pattern, h).has_value();
}

bool contains_pattern(const Hypergraph& h, const Pattern& p) {
  switch (p.name()) {
    case PatternName::kM2: return contains_m2(h);
    case PatternName::kC3: return contains_c3(h);
    default: return contains_generic(h, p.graph());
  }
}

bool is_free(const Hypergraph& h, std::span<const Pattern> forbidden) {
  return std::none_of(forbidden.begin(), forbidden.end(),
                      [&](const Pattern& p) { return contains_pattern(h, p); });
}

bool is_maximal_free(const Hypergraph& h, std::span<const Pattern> forbidden) {
  if (!is_free(h, forbidden)) return false;
  EdgeSet missing = all_triples(h.n()) - h.edges();
  bool ok = true;
  missing.for_each([&](std::size_t r) {
    if (!ok) return;
    Hypergraph g = h;
    g.add(Triple::unrank(static_cast<int>(r)));
    if (is_free(g, forbidden)) ok = false;
  });
  return ok;
}

std::vector<Constraint> forbidden_subfamilies(int n, std::span<const Pattern> forbidden) {
  if (n < 0 || n > kMaxVertices) throw InvalidArgument("vertex count outside [0, 16]");
  Hypergraph complete(n, all_triples(n));
  std::set<Constraint> found;
  for (const Pattern& p : forbidden) {
    if (p.graph().size() > 3) throw InvalidArgument("forbidden patterns may have at most 3 edges");
    if (p.graph().empty()) throw InvalidArgument("forbidden pattern has no edges");
    const auto pedges = p.graph().edge_list();
    for_each_embedding(p.graph(), complete, [&](std::span<const int> img) {
      Constraint c;
      for (const Triple& t : pedges) c.push_back(Triple(img[t[0]], img[t[1]], img[t[2]]).rank());
      std::sort(c.begin(), c.end());
      found.insert(std::move(c));
      return true;
    });
  }
  // Drop copies that contain a smaller copy.
  std::vector<Constraint> out;
  for (const Constraint& c : found) {
    bool minimal = true;
    const std::size_t k = c.size();
    for (std::uint32_t sub = 1; sub + 1 < (1u << k) && minimal; ++sub) {
      Constraint s;
      for (std::size_t i = 0; i < k; ++i)
        if ((sub >> i) & 1u) s.push_back(c[i]);
      if (found.count(s)) minimal = false;
    }
    if (minimal) out.push_back(c);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Constraint& a, const Constraint& b) { return a.size() < b.size(); });
  return out;
}

}  // namespace tripsys
