#include "tripsys/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "tripsys/errors.hpp"

namespace tripsys {
namespace {

struct Tables {
  std::array<std::array<int, 3>, kMaxTriples> unrank{};
  std::array<EdgeSet, kMaxTriples> disjoint{};

  Tables() {
    for (int c = 2; c < kMaxVertices; ++c)
      for (int b = 1; b < c; ++b)
        for (int a = 0; a < b; ++a) {
          int r = a + static_cast<int>(binomial(b, 2) + binomial(c, 3));
          unrank[r] = {a, b, c};
        }
    for (int r = 0; r < kMaxTriples; ++r) {
      std::uint32_t m = (1u << unrank[r][0]) | (1u << unrank[r][1]) | (1u << unrank[r][2]);
      for (int s = 0; s < kMaxTriples; ++s) {
        std::uint32_t o = (1u << unrank[s][0]) | (1u << unrank[s][1]) | (1u << unrank[s][2]);
        if ((m & o) == 0) disjoint[r].set(s);
      }
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

void check_n(int n) {
  if (n < 0 || n > kMaxVertices)
    throw InvalidArgument("vertex count " + std::to_string(n) + " outside [0, 16]");
}

std::vector<std::uint32_t> edge_masks(const Hypergraph& h) {
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(h.size()));
  h.edges().for_each([&](std::size_t r) { out.push_back(Triple::unrank(static_cast<int>(r)).mask()); });
  return out;
}

}  // namespace

Triple::Triple(int a, int b, int c) : v_{a, b, c} {
  std::sort(v_.begin(), v_.end());
  if (v_[0] < 0 || v_[2] >= kMaxVertices || v_[0] == v_[1] || v_[1] == v_[2])
    throw InvalidArgument("triple needs three distinct vertices in [0, 16)");
}

Triple Triple::unrank(int rank) {
  if (rank < 0 || rank >= kMaxTriples) throw InvalidArgument("triple rank out of range");
  Triple t;
  t.v_ = tables().unrank[rank];
  return t;
}

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) {
    if (v < 0 || v >= kMaxVertices) throw InvalidArgument("vertex out of range");
    insert(v);
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Hypergraph::Hypergraph(int n) : n_(n) { check_n(n); }

Hypergraph::Hypergraph(int n, const EdgeSet& edges) : n_(n), edges_(edges) {
  check_n(n);
  EdgeSet outside = edges - all_triples(n);
  if (outside.any()) throw InvalidArgument("edge uses a vertex outside [0, n)");
}

Hypergraph::Hypergraph(int n, std::initializer_list<std::array<int, 3>> edges) : Hypergraph(n) {
  for (const auto& e : edges) add(Triple(e[0], e[1], e[2]));
}

void Hypergraph::add(const Triple& t) {
  if (t[2] >= n_) throw InvalidArgument("edge uses a vertex outside [0, n)");
  edges_.set(t.rank());
}

std::vector<Triple> Hypergraph::edge_list() const {
  std::vector<Triple> out;
  out.reserve(static_cast<std::size_t>(size()));
  edges_.for_each([&](std::size_t r) { out.push_back(Triple::unrank(static_cast<int>(r))); });
  return out;
}

VertexSet Hypergraph::support() const {
  std::uint32_t m = 0;
  edges_.for_each([&](std::size_t r) { m |= Triple::unrank(static_cast<int>(r)).mask(); });
  return VertexSet(m);
}

int Hypergraph::degree(int v) const {
  int d = 0;
  edges_.for_each([&](std::size_t r) { d += (Triple::unrank(static_cast<int>(r)).mask() >> v) & 1u; });
  return d;
}

Hypergraph Hypergraph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InvalidArgument("permutation size differs from n");
  std::uint32_t seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n_ || ((seen >> p) & 1u)) throw InvalidArgument("not a permutation of [0, n)");
    seen |= 1u << p;
  }
  Hypergraph out(n_);
  for (const Triple& t : edge_list()) out.add(Triple(perm[t[0]], perm[t[1]], perm[t[2]]));
  return out;
}

const EdgeSet& disjoint_triples(int rank) { return tables().disjoint[rank]; }

EdgeSet all_triples(int n) {
  EdgeSet s;
  s.set_prefix(static_cast<std::size_t>(triple_count(n)));
  return s;
}

Hypergraph up(VertexSet a, int n) {
  check_n(n);
  if (a.size() > 3) throw InvalidArgument("up() needs |A| <= 3");
  if (n < 3) throw InvalidArgument("up() needs n >= 3");
  if ((a.bits() >> n) != 0) throw InvalidArgument("A is not a subset of [0, n)");
  Hypergraph h(n);
  for (int r = 0, m = triple_count(n); r < m; ++r) {
    Triple t = Triple::unrank(r);
    if ((t.mask() & a.bits()) == a.bits()) h.add(t);
  }
  return h;
}

bool is_intersecting(const Hypergraph& h) {
  bool ok = true;
  const EdgeSet& e = h.edges();
  e.for_each([&](std::size_t r) {
    if (ok && e.intersects(disjoint_triples(static_cast<int>(r)))) ok = false;
  });
  return ok;
}

bool is_cover(const Hypergraph& h, VertexSet t) {
  for (std::uint32_t m : edge_masks(h))
    if ((m & t.bits()) == 0) return false;
  return true;
}

std::vector<VertexSet> covers(const Hypergraph& h, int t) {
  const int n = h.n();
  if (t < 0 || t > n) throw InvalidArgument("cover size outside [0, n]");
  std::vector<VertexSet> out;
  const auto masks = edge_masks(h);
  auto test = [&](std::uint32_t s) {
    for (std::uint32_t m : masks)
      if ((m & s) == 0) return false;
    return true;
  };
  if (t == 0) {
    if (masks.empty()) out.emplace_back(0u);
    return out;
  }
  // Gosper's hack walks t-subsets in increasing mask order.
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t s = (1u << t) - 1; s < limit;) {
    if (test(s)) out.emplace_back(s);
    std::uint32_t c = s & (~s + 1);
    std::uint32_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

int tau(const Hypergraph& h) {
  if (h.empty()) throw UndefinedValue("cover number of an empty hypergraph is undefined");
  for (int t = 1; t <= h.n(); ++t)
    if (!covers(h, t).empty()) return t;
  return h.n();  // unreachable: V covers every nonempty family
}

bool is_maximal_intersecting(const Hypergraph& h) {
  if (!is_intersecting(h)) throw InvalidArgument("is_maximal_intersecting needs an intersecting input");
  EdgeSet missing = all_triples(h.n()) - h.edges();
  bool ok = true;
  missing.for_each([&](std::size_t r) {
    if (ok && !h.edges().intersects(disjoint_triples(static_cast<int>(r)))) ok = false;
  });
  return ok;
}

Hypergraph induced(const Hypergraph& h, VertexSet u) {
  if ((u.bits() >> h.n()) != 0) throw InvalidArgument("U is not a subset of [0, n)");
  std::array<int, kMaxVertices> index{};
  int k = 0;
  for (int v : u.members()) index[v] = k++;
  Hypergraph out(k);
  for (const Triple& t : h.edge_list())
    if ((t.mask() & ~u.bits()) == 0) out.add(Triple(index[t[0]], index[t[1]], index[t[2]]));
  return out;
}

bool is_heart(const Hypergraph& h, VertexSet u) {
  const auto masks = edge_masks(h);
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i; j < masks.size(); ++j)
      if ((masks[i] & masks[j] & u.bits()) == 0) return false;
  return true;
}

std::string to_text(const Hypergraph& h) {
  std::string out = "n=" + std::to_string(h.n()) + "\n";
  for (const Triple& t : h.edge_list())
    out += std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + "\n";
  return out;
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  Hypergraph h;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [&](const std::string& why) {
      throw InvalidArgument("line " + std::to_string(lineno) + ": " + why);
    };
    if (n < 0) {
      auto start = line.find_first_not_of(" \t");
      if (line.compare(start, 2, "n=") != 0) fail("expected n=<int>");
      std::string_view num(line.data() + start + 2, line.size() - start - 2);
      while (!num.empty() && (num.back() == '\r' || num.back() == ' ')) num.remove_suffix(1);
      auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
      if (ec != std::errc() || p != num.data() + num.size()) fail("bad vertex count");
      if (n < 0 || n > kMaxVertices) fail("vertex count outside [0, 16]");
      h = Hypergraph(n);
      continue;
    }
    std::istringstream ls(line);
    int a, b, c;
    std::string extra;
    if (!(ls >> a >> b >> c) || (ls >> extra)) fail("expected three vertex indices");
    if (!(a < b && b < c)) fail("edge vertices must be strictly ascending");
    if (a < 0 || c >= n) fail("vertex outside [0, n)");
    Triple t(a, b, c);
    if (h.contains(t)) fail("duplicate edge");
    h.add(t);
  }
  if (n < 0) throw InvalidArgument("missing n=<int> header");
  return h;
}

}  // namespace tripsys
