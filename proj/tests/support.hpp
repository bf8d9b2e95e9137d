#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "tripsys/hypergraph.hpp"

namespace tripsys::gen {

inline Hypergraph random_hypergraph(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  Hypergraph h(n);
  for (int r = 0; r < triple_count(n); ++r)
    if (coin(rng)) h.add(Triple::unrank(r));
  return h;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Random intersecting family grown greedily from a shuffled triple order.
inline Hypergraph random_intersecting(std::mt19937& rng, int n, int max_edges) {
  std::vector<int> order(triple_count(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Hypergraph h(n);
  for (int r : order) {
    if (h.size() >= max_edges) break;
    Triple t = Triple::unrank(r);
    bool ok = true;
    for (const Triple& e : h.edge_list())
      if ((e.mask() & t.mask()) == 0) ok = false;
    if (ok) h.add(t);
  }
  return h;
}

// Every permutation of [0, n); n <= 8 keeps this affordable.
template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    f(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

inline bool brute_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n() || a.size() != b.size()) return false;
  bool found = false;
  for_each_permutation(a.n(), [&](const std::vector<int>& p) {
    if (!found && a.relabeled(p) == b) found = true;
  });
  return found;
}

// Injective maps of h's vertices into g's vertices, tried exhaustively.
inline bool brute_embeds(const Hypergraph& h, const Hypergraph& g) {
  if (h.n() > g.n()) return false;
  Hypergraph padded(g.n(), h.edges());
  bool found = false;
  for_each_permutation(g.n(), [&](const std::vector<int>& p) {
    if (!found && padded.relabeled(p).is_subgraph_of(g)) found = true;
  });
  return found;
}

inline bool brute_intersecting(const Hypergraph& h) {
  auto e = h.edge_list();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if ((e[i].mask() & e[j].mask()) == 0) return false;
  return true;
}

inline bool brute_maximal_intersecting(const Hypergraph& h) {
  if (!brute_intersecting(h)) return false;
  for (int r = 0; r < triple_count(h.n()); ++r) {
    Triple t = Triple::unrank(r);
    if (h.contains(t)) continue;
    Hypergraph g = h;
    g.add(t);
    if (brute_intersecting(g)) return false;
  }
  return true;
}

}  // namespace tripsys::gen
