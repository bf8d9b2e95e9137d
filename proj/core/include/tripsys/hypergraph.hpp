#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tripsys/bits.hpp"

namespace tripsys {

inline constexpr int kMaxVertices = 16;
inline constexpr int kMaxTriples = 560;  // C(16, 3)

// One bit per colex triple rank.
using EdgeSet = BitArray<(kMaxTriples + 63) / 64>;

constexpr std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

constexpr int triple_count(int n) { return static_cast<int>(binomial(n, 3)); }

// A 3-element vertex set, stored ascending.
class Triple {
 public:
  // Sorts the vertices; throws InvalidArgument unless they are distinct and in [0, kMaxVertices).
  Triple(int a, int b, int c);

  // Colex rank C(a,1) + C(b,2) + C(c,3); independent of the vertex count.
  int rank() const {
    return v_[0] + static_cast<int>(binomial(v_[1], 2) + binomial(v_[2], 3));
  }
  static Triple unrank(int rank);

  int operator[](int i) const { return v_[i]; }
  const std::array<int, 3>& vertices() const { return v_; }
  std::uint32_t mask() const { return (1u << v_[0]) | (1u << v_[1]) | (1u << v_[2]); }

  friend bool operator==(const Triple&, const Triple&) = default;

 private:
  Triple() = default;
  std::array<int, 3> v_{};
};

// Subset of [0, n) as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);

  static constexpr VertexSet all(int n) { return VertexSet((1u << n) - 1); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  bool intersects(const Triple& t) const { return (bits_ & t.mask()) != 0; }
  constexpr void insert(int v) { bits_ |= 1u << v; }
  std::vector<int> members() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

// 3-uniform hypergraph on vertices {0, ..., n-1}; edges kept as a bitset over colex ranks,
// so iteration is always in ascending rank order.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(int n);
  Hypergraph(int n, const EdgeSet& edges);
  Hypergraph(int n, std::initializer_list<std::array<int, 3>> edges);

  int n() const { return n_; }
  const EdgeSet& edges() const { return edges_; }
  int size() const { return edges_.count(); }
  bool empty() const { return edges_.none(); }

  bool contains(const Triple& t) const { return edges_.test(t.rank()); }
  void add(const Triple& t);
  void remove(const Triple& t) { edges_.reset(t.rank()); }

  std::vector<Triple> edge_list() const;
  VertexSet support() const;
  int isolated_count() const { return n_ - support().size(); }
  int degree(int v) const;

  // Image under the vertex map v -> perm[v]; perm must be a permutation of [0, n).
  Hypergraph relabeled(std::span<const int> perm) const;

  bool is_subgraph_of(const Hypergraph& other) const {
    return n_ == other.n_ && edges_.is_subset_of(other.edges_);
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  EdgeSet edges_{};
};

// Triples over [0, kMaxVertices) disjoint from the triple of the given rank.
const EdgeSet& disjoint_triples(int rank);

// All triples over [0, n).
EdgeSet all_triples(int n);

Hypergraph up(VertexSet a, int n);
bool is_intersecting(const Hypergraph& h);
bool is_cover(const Hypergraph& h, VertexSet t);
std::vector<VertexSet> covers(const Hypergraph& h, int t);
int tau(const Hypergraph& h);
bool is_maximal_intersecting(const Hypergraph& h);
Hypergraph induced(const Hypergraph& h, VertexSet u);
bool is_heart(const Hypergraph& h, VertexSet u);

// Text interchange format: "n=<int>" then one ascending edge per line, lines in rank order.
std::string to_text(const Hypergraph& h);
Hypergraph parse_hypergraph(std::string_view text);

}  // namespace tripsys
