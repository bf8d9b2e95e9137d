#include "tripsys/families.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "tripsys/errors.hpp"
#include "tripsys/iso.hpp"

namespace tripsys {
namespace {

constexpr int x = 0, y = 1, z = 2, v = 3, w = 4, u = 5;
constexpr int x1 = 0, x2 = 1, x3 = 2, y1 = 3, y2 = 4, y3 = 5, apex = 6;

void add_up(Hypergraph& h, std::initializer_list<int> a) {
  Hypergraph s = up(VertexSet(a), h.n());
  for (const Triple& t : s.edge_list()) h.add(t);
}

void add(Hypergraph& h, std::initializer_list<std::array<int, 3>> edges) {
  for (const auto& e : edges) h.add(Triple(e[0], e[1], e[2]));
}

Hypergraph triangle(int n) {
  Hypergraph h(n);
  add(h, {{x1, y3, x2}, {x1, y2, x3}, {x2, y1, x3}});
  return h;
}

// {x_i, y_i, y_j} over ordered pairs i != j.
void add_a1(Hypergraph& h) {
  add(h, {{x1, y1, y2}, {x1, y1, y3}, {x2, y2, y1}, {x2, y2, y3}, {x3, y3, y1}, {x3, y3, y2}});
}

// {x_i, x_j, y_j} over ordered pairs i != j.
void add_a2(Hypergraph& h) {
  add(h, {{x1, x2, y2}, {x1, x3, y3}, {x2, x1, y1}, {x2, x3, y3}, {x3, x1, y1}, {x3, x2, y2}});
}

void add_a3(Hypergraph& h) {
  add_a1(h);
  h.remove(Triple(x1, y1, y2));
  add(h, {{x2, x3, y3}});
}

void add_a4(Hypergraph& h) {
  add_a1(h);
  h.remove(Triple(x1, y1, y2));
  h.remove(Triple(x1, y1, y3));
  add(h, {{x2, x3, y3}, {x2, x3, y2}});
}

}  // namespace

std::string to_string(FamilyName name) {
  switch (name) {
    case FamilyName::kSn: return "Sn";
    case FamilyName::kKn: return "Kn";
    case FamilyName::kK5pad: return "K5pad";
    case FamilyName::kH0: return "H0";
    case FamilyName::kH1: return "H1";
    case FamilyName::kH2: return "H2";
    case FamilyName::kH3: return "H3";
    case FamilyName::kH4: return "H4";
    case FamilyName::kH5: return "H5";
    case FamilyName::kH6: return "H6";
    case FamilyName::kH7: return "H7";
    case FamilyName::kH8: return "H8";
    case FamilyName::kH9: return "H9";
    case FamilyName::kH10: return "H10";
    case FamilyName::kH11: return "H11";
    case FamilyName::kF7: return "F7";
    case FamilyName::kF10: return "F10";
    case FamilyName::kC3: return "C3";
    case FamilyName::kM2: return "M2";
    case FamilyName::kP2: return "P2";
  }
  return "?";
}

FamilyName parse_family(std::string_view tag) {
  for (FamilyName f : kAllFamilies)
    if (to_string(f) == tag) return f;
  throw InvalidArgument("unknown family tag '" + std::string(tag) + "'");
}

int min_vertices(FamilyName name) {
  switch (name) {
    case FamilyName::kKn: return 3;
    case FamilyName::kK5pad:
    case FamilyName::kP2: return 5;
    case FamilyName::kF7:
    case FamilyName::kF10: return 7;
    default: return 6;
  }
}

Hypergraph build(FamilyName name, int n) {
  if (n < min_vertices(name) || n > kMaxVertices)
    throw InvalidArgument(to_string(name) + " needs " + std::to_string(min_vertices(name)) +
                          " <= n <= 16, got " + std::to_string(n));
  Hypergraph h(n);
  switch (name) {
    case FamilyName::kSn: add_up(h, {x}); break;
    case FamilyName::kKn: h = Hypergraph(n, all_triples(n)); break;
    case FamilyName::kK5pad: h = Hypergraph(n, all_triples(5)); break;
    case FamilyName::kH0:
      add_up(h, {x, y});
      add(h, {{x, z, v}, {y, z, v}});
      break;
    case FamilyName::kH1:
      add_up(h, {x, y});
      add_up(h, {x, z});
      add_up(h, {x, v});
      add(h, {{y, z, v}});
      break;
    case FamilyName::kH2:
      add_up(h, {x, y});
      add_up(h, {x, z});
      add_up(h, {y, z});
      break;
    case FamilyName::kH3:
      add_up(h, {x, y});
      add_up(h, {x, z});
      add(h, {{x, v, w}, {y, z, w}, {y, z, v}});
      break;
    case FamilyName::kH4:
      add_up(h, {x, y});
      add(h, {{x, v, z}, {x, w, z}, {x, v, w}, {y, z, w}, {y, z, v}, {y, v, w}});
      break;
    case FamilyName::kH5:
      add_up(h, {x, y});
      add(h, {{x, v, z}, {x, w, u}, {x, v, w}, {y, z, w}, {y, u, v}, {y, v, w}});
      break;
    case FamilyName::kH6:
      add_up(h, {x, y});
      add(h, {{x, v, z}, {x, w, u}, {x, v, w}, {y, z, w}, {y, u, v}, {x, z, u}});
      break;
    case FamilyName::kH7:
      h = triangle(n);
      add(h, {{x1, x2, x3}});
      add_a1(h);
      break;
    case FamilyName::kH8:
    case FamilyName::kH9:
    case FamilyName::kH10:
    case FamilyName::kH11:
      h = triangle(n);
      add(h, {{y1, y2, y3}});
      if (name == FamilyName::kH8) add_a1(h);
      if (name == FamilyName::kH9) add_a2(h);
      if (name == FamilyName::kH10) add_a3(h);
      if (name == FamilyName::kH11) add_a4(h);
      break;
    case FamilyName::kF7:
      h = triangle(n);
      add(h, {{x1, apex, y1}, {x2, apex, y2}, {x3, apex, y3}, {y1, y2, y3}});
      break;
    case FamilyName::kF10:
      h = triangle(n);
      add(h, {{x1, x2, x3}, {x1, x2, apex}, {x1, apex, x3}, {apex, x2, x3}});
      add(h, {{x1, y1, apex}, {x2, y2, apex}, {x3, y3, apex}});
      break;
    case FamilyName::kC3: h = triangle(n); break;
    case FamilyName::kM2: add(h, {{0, 1, 2}, {3, 4, 5}}); break;
    case FamilyName::kP2: add(h, {{0, 1, 2}, {0, 3, 4}}); break;
  }
  return h;
}

std::int64_t size_formula(FamilyName name, int n) {
  if (n < min_vertices(name) || n > kMaxVertices)
    throw InvalidArgument(to_string(name) + " needs " + std::to_string(min_vertices(name)) +
                          " <= n <= 16, got " + std::to_string(n));
  switch (name) {
    case FamilyName::kSn: return binomial(n - 1, 2);
    case FamilyName::kKn: return binomial(n, 3);
    case FamilyName::kK5pad: return 10;
    case FamilyName::kH0: return n;
    case FamilyName::kH1:
    case FamilyName::kH2: return 3 * n - 8;
    case FamilyName::kH3: return 2 * n - 2;
    case FamilyName::kH4:
    case FamilyName::kH5:
    case FamilyName::kH6: return n + 4;
    case FamilyName::kH7:
    case FamilyName::kH8:
    case FamilyName::kH9:
    case FamilyName::kH10:
    case FamilyName::kH11:
    case FamilyName::kF10: return 10;
    case FamilyName::kF7: return 7;
    case FamilyName::kC3: return 3;
    case FamilyName::kM2:
    case FamilyName::kP2: return 2;
  }
  return 0;
}

std::optional<FamilyName> identify(const Hypergraph& h) {
  struct Known {
    FamilyName name;
    int size;
    CanonicalForm form;
  };
  static std::mutex mu;
  static std::map<int, std::vector<Known>> cache;

  const int n = h.n();
  const std::vector<Known>* known = nullptr;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
      std::vector<Known> list;
      for (FamilyName f : kAllFamilies) {
        if (n < min_vertices(f)) continue;
        Hypergraph g = build(f, n);
        if (g.support().size() > kMaxCanonicalSupport) continue;
        list.push_back({f, g.size(), canonical_form(g)});
      }
      it = cache.emplace(n, std::move(list)).first;
    }
    known = &it->second;
  }
  const int size = h.size();
  std::optional<CanonicalForm> form;
  for (const Known& k : *known) {
    if (k.size != size) continue;
    if (!form) form = canonical_form(h);
    if (*form == k.form) return k.name;
  }
  return std::nullopt;
}

}  // namespace tripsys
