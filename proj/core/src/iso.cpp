#include "tripsys/iso.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "parallel.hpp"
#include "tripsys/errors.hpp"
#include "tripsys/patterns.hpp"

namespace tripsys {
namespace {

constexpr int kMaxS = kMaxCanonicalSupport;

// Branch-and-bound over labelings of the support. Label k contributes the block of bits
// "is {label a, label b, label k} an edge" for a < b < k in colex order; the canonical labeling
// maximizes the concatenated bit string, i.e. minimizes the sorted rank list.
class Canonizer {
 public:
  explicit Canonizer(const Hypergraph& h) {
    verts_ = h.support().members();
    s_ = static_cast<int>(verts_.size());
    if (s_ > kMaxS)
      throw UnsupportedSize("canonical form needs a support of at most 12 vertices, got " +
                            std::to_string(s_));
    std::array<int, kMaxVertices> local{};
    for (int i = 0; i < s_; ++i) local[verts_[i]] = i;
    for (const Triple& t : h.edge_list()) {
      int a = local[t[0]], b = local[t[1]], c = local[t[2]];
      pair_[a][b] |= 1u << c;
      pair_[b][a] |= 1u << c;
      pair_[a][c] |= 1u << b;
      pair_[c][a] |= 1u << b;
      pair_[b][c] |= 1u << a;
      pair_[c][b] |= 1u << a;
    }
    build_cells();
    build_twins();
  }

  std::vector<int> run() {
    if (s_ > 0) search(0, 0);
    return best_lab_;
  }

  const std::vector<int>& support() const { return verts_; }

 private:
  struct Key {
    int degree;
    std::vector<int> link;  // codegrees, descending
    auto operator<=>(const Key&) const = default;
  };

  void build_cells() {
    std::vector<Key> keys(static_cast<std::size_t>(s_));
    for (int i = 0; i < s_; ++i) {
      int deg2 = 0;
      for (int j = 0; j < s_; ++j) {
        if (j == i) continue;
        int c = std::popcount(pair_[i][j]);
        deg2 += c;
        keys[i].link.push_back(c);
      }
      keys[i].degree = deg2 / 2;
      std::sort(keys[i].link.rbegin(), keys[i].link.rend());
    }
    std::vector<int> order(static_cast<std::size_t>(s_));
    for (int i = 0; i < s_; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] > keys[b]; });
    int cell = -1;
    for (int p = 0; p < s_; ++p) {
      if (p == 0 || keys[order[p]] != keys[order[p - 1]]) ++cell;
      cell_of_vertex_[order[p]] = cell;
      cell_at_pos_[p] = cell;
    }
  }

  // u ~ v when swapping u and v is an automorphism. Such vertices yield identical subtrees
  // while both are unlabeled, so only one of them is branched on.
  void build_twins() {
    for (int i = 0; i < s_; ++i) twin_rep_[i] = i;
    for (int i = 0; i < s_; ++i) {
      if (twin_rep_[i] != i) continue;
      for (int j = i + 1; j < s_; ++j) {
        if (twin_rep_[j] != j || cell_of_vertex_[i] != cell_of_vertex_[j]) continue;
        bool twin = true;
        const std::uint32_t bi = 1u << i, bj = 1u << j;
        for (int k = 0; k < s_ && twin; ++k) {
          if (k == i || k == j) continue;
          twin = (pair_[i][k] & ~bj) == (pair_[j][k] & ~bi);
        }
        if (twin) twin_rep_[j] = i;
      }
    }
  }

  std::uint64_t block(int depth, int v) const {
    std::uint64_t out = 0;
    int idx = 0;
    for (int b = 1; b < depth; ++b)
      for (int a = 0; a < b; ++a, ++idx)
        if ((pair_[lab_[a]][lab_[b]] >> v) & 1u) out |= std::uint64_t{1} << (63 - idx);
    return out;
  }

  // <0, 0, >0 comparing cur_[0..len) against best_[0..len).
  int compare_prefix(int len) const {
    for (int i = 0; i < len; ++i)
      if (cur_[i] != best_[i]) return cur_[i] < best_[i] ? -1 : 1;
    return 0;
  }

  void search(int depth, std::uint32_t used) {
    if (depth == s_) {
      if (!have_best_ || compare_prefix(s_) > 0) {
        best_ = cur_;
        best_lab_.assign(lab_.begin(), lab_.begin() + s_);
        have_best_ = true;
      }
      return;
    }
    const int cell = cell_at_pos_[depth];
    std::array<int, kMaxS> cand{};
    std::array<std::uint64_t, kMaxS> blocks{};
    int nc = 0;
    std::uint32_t reps_seen = 0;
    std::uint64_t top = 0;
    for (int v = 0; v < s_; ++v) {
      if (((used >> v) & 1u) || cell_of_vertex_[v] != cell) continue;
      const std::uint32_t rep = 1u << twin_rep_[v];
      if (reps_seen & rep) continue;
      reps_seen |= rep;
      cand[nc] = v;
      blocks[nc] = block(depth, v);
      top = std::max(top, blocks[nc]);
      ++nc;
    }
    cur_[depth] = top;
    if (have_best_ && compare_prefix(depth + 1) < 0) return;
    for (int i = 0; i < nc; ++i) {
      if (blocks[i] != top) continue;
      lab_[depth] = cand[i];
      cur_[depth] = top;
      search(depth + 1, used | (1u << cand[i]));
      // best_ may have improved; re-check this prefix before trying siblings.
      if (have_best_ && compare_prefix(depth + 1) < 0) return;
    }
  }

  std::vector<int> verts_;
  int s_ = 0;
  std::array<std::array<std::uint32_t, kMaxS>, kMaxS> pair_{};
  std::array<int, kMaxS> cell_of_vertex_{};
  std::array<int, kMaxS> cell_at_pos_{};
  std::array<int, kMaxS> twin_rep_{};
  std::array<int, kMaxS> lab_{};
  std::array<std::uint64_t, kMaxS> cur_{};
  std::array<std::uint64_t, kMaxS> best_{};
  std::vector<int> best_lab_;
  bool have_best_ = false;
};

}  // namespace

Hypergraph CanonicalForm::to_hypergraph() const {
  EdgeSet e;
  for (int r : edges) e.set(static_cast<std::size_t>(r));
  return Hypergraph(n, e);
}

std::vector<int> canonical_labeling(const Hypergraph& h) {
  Canonizer c(h);
  std::vector<int> lab = c.run();
  const auto& verts = c.support();
  std::vector<int> perm(static_cast<std::size_t>(h.n()), -1);
  for (std::size_t p = 0; p < lab.size(); ++p) perm[verts[lab[p]]] = static_cast<int>(p);
  int next = static_cast<int>(lab.size());
  for (int v = 0; v < h.n(); ++v)
    if (perm[v] < 0) perm[v] = next++;
  return perm;
}

CanonicalForm canonical_form(const Hypergraph& h) {
  CanonicalForm f;
  f.n = h.n();
  f.isolated = h.isolated_count();
  Hypergraph g = h.relabeled(canonical_labeling(h));
  g.edges().for_each([&](std::size_t r) { f.edges.push_back(static_cast<int>(r)); });
  return f;
}

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n() || a.size() != b.size()) {
    // Still validate sizes so both inputs obey the same contract.
    canonical_form(a);
    canonical_form(b);
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

std::vector<IsoClass> classify(std::span<const Hypergraph> corpus, int threads) {
  for (const auto& h : corpus)
    if (h.support().size() > kMaxCanonicalSupport)
      throw UnsupportedSize("classify: support larger than 12 vertices");
  std::vector<CanonicalForm> forms(corpus.size());
  detail::parallel_for(corpus.size(), threads,
                       [&](std::size_t, std::size_t i) { forms[i] = canonical_form(corpus[i]); });
  std::map<CanonicalForm, std::int64_t> counts;
  for (auto& f : forms) ++counts[std::move(f)];
  std::vector<IsoClass> out;
  out.reserve(counts.size());
  for (auto& [form, count] : counts) out.push_back({form, count});
  return out;
}

bool embeds_into(const Hypergraph& h, const Hypergraph& g) {
  if (h.support().size() > kMaxCanonicalSupport || g.support().size() > kMaxCanonicalSupport)
    throw UnsupportedSize("embeds_into: support larger than 12 vertices");
  if (h.n() > g.n() || h.size() > g.size()) return false;
  return find_embedding(h, g).has_value();
}

bool contained_in(const Hypergraph& h, const Hypergraph& g, Containment mode) {
  if (mode == Containment::kLabeled) return h.is_subgraph_of(g);
  return embeds_into(h, g);
}

std::string to_text(const CanonicalForm& form) {
  return "isolated=" + std::to_string(form.isolated) + "\n" + to_text(form.to_hypergraph());
}

CanonicalForm parse_canonical_form(std::string_view text) {
  auto nl = text.find('\n');
  std::string_view head = text.substr(0, nl);
  if (head.substr(0, 9) != "isolated=") throw InvalidArgument("expected isolated=<int> header");
  int isolated = std::stoi(std::string(head.substr(9)));
  Hypergraph h = parse_hypergraph(nl == std::string_view::npos ? "" : text.substr(nl + 1));
  if (h.isolated_count() != isolated)
    throw InvalidArgument("isolated count does not match the edge list");
  CanonicalForm f = canonical_form(h);
  if (f.to_hypergraph() != h) throw InvalidArgument("edge list is not in canonical form");
  return f;
}

}  // namespace tripsys
