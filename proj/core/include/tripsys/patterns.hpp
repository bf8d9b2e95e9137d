#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tripsys/hypergraph.hpp"

namespace tripsys {

enum class PatternName { kM2, kC3, kP2, kCustom };

// A small forbidden configuration. Built-in labels:
//   M2: {0,1,2} {3,4,5}
//   C3: x1 x2 x3 y1 y2 y3 = 0..5, edges {x1,y3,x2} {x1,y2,x3} {x2,y1,x3}
//   P2: {0,1,2} {0,3,4}
class Pattern {
 public:
  static Pattern m2();
  static Pattern c3();
  static Pattern p2();
  static Pattern custom(Hypergraph graph);

  const Hypergraph& graph() const { return graph_; }
  PatternName name() const { return name_; }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Pattern(Hypergraph g, PatternName name) : graph_(std::move(g)), name_(name) {}
  Hypergraph graph_;
  PatternName name_;
};

std::string to_string(PatternName name);

// Accepts "M2", "C3", "P2".
Pattern parse_pattern(std::string_view token);
// Comma-separated list such as "M2,C3"; duplicates are dropped, order is normalized.
std::vector<Pattern> parse_pattern_list(std::string_view csv);
std::string format_pattern_list(std::span<const Pattern> patterns);

// Calls visit(image) for each injective map of the pattern's support into the host's vertices
// that carries every pattern edge onto a host edge. image[v] is -1 for vertices outside the
// support. Stops early when visit returns false.
void for_each_embedding(const Hypergraph& pattern, const Hypergraph& host,
                        const std::function<bool(std::span<const int>)>& visit);
std::optional<std::vector<int>> find_embedding(const Hypergraph& pattern, const Hypergraph& host);

bool contains_m2(const Hypergraph& h);
bool contains_c3(const Hypergraph& h);
bool contains_generic(const Hypergraph& h, const Hypergraph& pattern);

bool contains_pattern(const Hypergraph& h, const Pattern& p);
bool is_free(const Hypergraph& h, std::span<const Pattern> forbidden);

// Free, and adding any missing triple creates a forbidden copy.
bool is_maximal_free(const Hypergraph& h, std::span<const Pattern> forbidden);

// Triple ranks of one labeled copy of a pattern, ascending.
using Constraint = std::vector<int>;

// Every labeled copy of every pattern inside the complete triple system on n vertices,
// keeping only inclusion-minimal ones. Ordered by (size, ranks).
std::vector<Constraint> forbidden_subfamilies(int n, std::span<const Pattern> forbidden);

}  // namespace tripsys
