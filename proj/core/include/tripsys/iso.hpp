#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tripsys/hypergraph.hpp"

namespace tripsys {

inline constexpr int kMaxCanonicalSupport = 12;

// Isomorphism-invariant normal form. Support vertices are first ordered by the invariant
// (degree, descending codegree list), largest first; among labelings 0..s-1 that respect this
// order, the one whose ascending list of colex edge ranks is lexicographically minimal is kept.
// Isolated vertices are only counted (they take the labels s..n-1 when converted back).
struct CanonicalForm {
  int n = 0;
  int isolated = 0;
  std::vector<int> edges;

  Hypergraph to_hypergraph() const;
  int size() const { return static_cast<int>(edges.size()); }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Throws UnsupportedSize when the support exceeds kMaxCanonicalSupport vertices.
CanonicalForm canonical_form(const Hypergraph& h);

// perm[v] is the canonical label of vertex v; h.relabeled(perm) has edge set form.edges.
std::vector<int> canonical_labeling(const Hypergraph& h);

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b);

struct IsoClass {
  CanonicalForm form;
  std::int64_t multiplicity = 0;
};

// Partition by canonical form, sorted by form. threads > 1 fans out the canonicalisation only.
std::vector<IsoClass> classify(std::span<const Hypergraph> corpus, int threads = 1);

// True iff some injective vertex map carries every edge of h onto an edge of g.
bool embeds_into(const Hypergraph& h, const Hypergraph& g);

enum class Containment {
  kIsomorphic,  // h is isomorphic to a sub-3-graph of g
  kLabeled,     // h is literally a subset of g's edges
};
bool contained_in(const Hypergraph& h, const Hypergraph& g, Containment mode);

// "isolated=<k>" followed by the hypergraph text format.
std::string to_text(const CanonicalForm& form);
CanonicalForm parse_canonical_form(std::string_view text);

}  // namespace tripsys
