#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tripsys/families.hpp"
#include "tripsys/hypergraph.hpp"
#include "tripsys/iso.hpp"
#include "tripsys/patterns.hpp"

namespace tripsys {

inline constexpr int kMinEnumerationN = 3;
inline constexpr int kMaxEnumerationN = 9;
// Upper bound with allow_large set; canonical forms stop at 12 support vertices.
inline constexpr int kMaxOverrideN = kMaxCanonicalSupport;

enum class Engine {
  kClique,  // maximal cliques of the "triples intersect" graph (forbidden set must be {M2})
  kMis,     // maximal independent sets of the forbidden-copy constraint hypergraph
  kOracle,  // independent choices from the ten complementary pairs (n = 6, {M2} only)
};

std::string to_string(Engine e);
Engine parse_engine(std::string_view token);

struct EnumerationOptions {
  Engine engine = Engine::kClique;
  int threads = 1;
  bool allow_large = false;
};

struct CatalogEntry {
  CanonicalForm canonical;
  int size = 0;
  int tau = 0;
  std::vector<VertexSet> two_covers;
  std::optional<FamilyName> name;
  std::int64_t labeled_count = 0;

  Hypergraph hypergraph() const { return canonical.to_hypergraph(); }
};

struct Catalog {
  int n = 0;
  std::vector<Pattern> forbidden;
  std::vector<CatalogEntry> entries;  // size descending, then canonical form

  std::int64_t labeled_total() const;
};

Catalog enumerate_maximal_intersecting(int n, const EnumerationOptions& options = {});
Catalog enumerate_maximal_free(int n, std::span<const Pattern> forbidden,
                               const EnumerationOptions& options = {});
Catalog complement_pair_oracle();

// Dispatches on options.engine; throws InvalidArgument when the engine cannot handle the
// forbidden set and UnsupportedSize when n is out of range.
Catalog enumerate(int n, std::span<const Pattern> forbidden, const EnumerationOptions& options);

// Labeled streams in deterministic search order (single-threaded).
using FamilyVisitor = std::function<void(const Hypergraph&)>;
void for_each_maximal_intersecting(int n, const FamilyVisitor& visit, bool allow_large = false);
void for_each_maximal_free(int n, std::span<const Pattern> forbidden, const FamilyVisitor& visit,
                           bool allow_large = false);
void for_each_complement_pair_family(const FamilyVisitor& visit);

// Builds entries (tau, 2-covers, name) from canonical class counts.
Catalog make_catalog(int n, std::span<const Pattern> forbidden,
                     const std::map<CanonicalForm, std::int64_t>& counts);

}  // namespace tripsys
