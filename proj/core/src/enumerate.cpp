#include "tripsys/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "engines.hpp"
#include "tripsys/errors.hpp"

namespace tripsys {
namespace {

void check_range(int n, bool allow_large) {
  const int hi = allow_large ? kMaxOverrideN : kMaxEnumerationN;
  if (n < kMinEnumerationN || n > hi)
    throw UnsupportedSize("enumeration supports " + std::to_string(kMinEnumerationN) +
                          " <= n <= " + std::to_string(hi) + ", got " + std::to_string(n) +
                          (allow_large ? "" : " (larger n needs the override flag)"));
}

bool is_m2_only(std::span<const Pattern> forbidden) {
  return forbidden.size() == 1 && forbidden[0].name() == PatternName::kM2;
}

void check_patterns(std::span<const Pattern> forbidden) {
  if (forbidden.empty()) throw InvalidArgument("empty forbidden set");
  for (const Pattern& p : forbidden)
    if (p.name() != PatternName::kM2 && p.name() != PatternName::kC3)
      throw InvalidArgument("enumeration supports the patterns M2 and C3 only, got " +
                            to_string(p.name()));
}

// Canonicalises labeled families as they stream in, one class map per worker.
class ClassCounter {
 public:
  ClassCounter(int n, int threads) : n_(n), maps_(static_cast<std::size_t>(std::max(threads, 1))) {}

  detail::EdgeSetSink sink() {
    return [this](std::size_t worker, const EdgeSet& e) {
      ++maps_[worker][canonical_form(Hypergraph(n_, e))];
    };
  }

  std::map<CanonicalForm, std::int64_t> merged() {
    std::map<CanonicalForm, std::int64_t> out;
    for (auto& m : maps_)
      for (auto& [form, count] : m) out[form] += count;
    return out;
  }

 private:
  int n_;
  std::vector<std::map<CanonicalForm, std::int64_t>> maps_;
};

const std::vector<Pattern>& m2_only() {
  static const std::vector<Pattern> p{Pattern::m2()};
  return p;
}

}  // namespace

std::string to_string(Engine e) {
  switch (e) {
    case Engine::kClique: return "clique";
    case Engine::kMis: return "mis";
    case Engine::kOracle: return "oracle";
  }
  return "?";
}

Engine parse_engine(std::string_view token) {
  if (token == "clique") return Engine::kClique;
  if (token == "mis") return Engine::kMis;
  if (token == "oracle") return Engine::kOracle;
  throw InvalidArgument("unknown engine '" + std::string(token) + "' (expected clique, mis or oracle)");
}

std::int64_t Catalog::labeled_total() const {
  return std::accumulate(entries.begin(), entries.end(), std::int64_t{0},
                         [](std::int64_t s, const CatalogEntry& e) { return s + e.labeled_count; });
}

Catalog make_catalog(int n, std::span<const Pattern> forbidden,
                     const std::map<CanonicalForm, std::int64_t>& counts) {
  Catalog cat;
  cat.n = n;
  cat.forbidden.assign(forbidden.begin(), forbidden.end());
  for (const auto& [form, count] : counts) {
    CatalogEntry e;
    e.canonical = form;
    Hypergraph h = form.to_hypergraph();
    e.size = h.size();
    e.tau = h.empty() ? 0 : tau(h);
    e.two_covers = covers(h, std::min(2, n));
    e.name = identify(h);
    e.labeled_count = count;
    cat.entries.push_back(std::move(e));
  }
  std::sort(cat.entries.begin(), cat.entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.size != b.size) return a.size > b.size;
    return a.canonical < b.canonical;
  });
  return cat;
}

void for_each_maximal_intersecting(int n, const FamilyVisitor& visit, bool allow_large) {
  check_range(n, allow_large);
  detail::run_clique_engine(n, 1, [&](std::size_t, const EdgeSet& e) { visit(Hypergraph(n, e)); });
}

void for_each_maximal_free(int n, std::span<const Pattern> forbidden, const FamilyVisitor& visit,
                           bool allow_large) {
  check_range(n, allow_large);
  check_patterns(forbidden);
  const auto constraints = forbidden_subfamilies(n, forbidden);
  detail::run_mis_engine(n, constraints, 1,
                         [&](std::size_t, const EdgeSet& e) { visit(Hypergraph(n, e)); });
}

void for_each_complement_pair_family(const FamilyVisitor& visit) {
  constexpr int n = 6;
  // The ten triples through vertex 0; their complements are the other ten.
  std::vector<std::pair<Triple, Triple>> pairs;
  for (int r = 0; r < triple_count(n); ++r) {
    Triple t = Triple::unrank(r);
    if (t[0] != 0) continue;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!((t.mask() >> v) & 1u)) rest.push_back(v);
    pairs.emplace_back(t, Triple(rest[0], rest[1], rest[2]));
  }
  for (std::uint32_t choice = 0; choice < (1u << pairs.size()); ++choice) {
    Hypergraph h(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      h.add((choice >> i) & 1u ? pairs[i].second : pairs[i].first);
    if (!is_maximal_intersecting(h))
      throw InvariantViolation("complement-pair family is not maximal intersecting: " + to_text(h));
    visit(h);
  }
}

Catalog enumerate_maximal_intersecting(int n, const EnumerationOptions& options) {
  check_range(n, options.allow_large);
  ClassCounter counter(n, options.threads);
  detail::run_clique_engine(n, options.threads, counter.sink());
  return make_catalog(n, m2_only(), counter.merged());
}

Catalog enumerate_maximal_free(int n, std::span<const Pattern> forbidden,
                               const EnumerationOptions& options) {
  check_range(n, options.allow_large);
  check_patterns(forbidden);
  std::vector<Pattern> sorted(forbidden.begin(), forbidden.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Pattern& a, const Pattern& b) { return a.name() < b.name(); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const auto constraints = forbidden_subfamilies(n, sorted);
  ClassCounter counter(n, options.threads);
  detail::run_mis_engine(n, constraints, options.threads, counter.sink());
  return make_catalog(n, sorted, counter.merged());
}

Catalog complement_pair_oracle() {
  std::map<CanonicalForm, std::int64_t> counts;
  for_each_complement_pair_family([&](const Hypergraph& h) { ++counts[canonical_form(h)]; });
  return make_catalog(6, m2_only(), counts);
}

Catalog enumerate(int n, std::span<const Pattern> forbidden, const EnumerationOptions& options) {
  check_patterns(forbidden);
  switch (options.engine) {
    case Engine::kClique:
      if (!is_m2_only(forbidden)) throw InvalidArgument("the clique engine handles --forbid M2 only");
      return enumerate_maximal_intersecting(n, options);
    case Engine::kMis:
      return enumerate_maximal_free(n, forbidden, options);
    case Engine::kOracle:
      if (!is_m2_only(forbidden)) throw InvalidArgument("the oracle handles --forbid M2 only");
      if (n != 6) throw UnsupportedSize("the complement-pair oracle exists for n = 6 only");
      return complement_pair_oracle();
  }
  throw InvalidArgument("unknown engine");
}

}  // namespace tripsys
