#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "tripsys/hypergraph.hpp"

namespace tripsys {

// Named constructions. Special vertices take the lowest labels in the order they appear in the
// defining formula:
//   x y z v w u                 -> 0 1 2 3 4 5   (Sn centre is 0; H0 uses x y z v)
//   x1 x2 x3 y1 y2 y3, apex z   -> 0 1 2 3 4 5, 6 (triangle based: C3, H7..H11, F7, F10)
// Remaining vertices are isolated unless the formula uses up().
enum class FamilyName {
  kSn, kKn, kK5pad, kH0, kH1, kH2, kH3, kH4, kH5, kH6, kH7, kH8, kH9, kH10, kH11,
  kF7, kF10, kC3, kM2, kP2,
};

inline constexpr std::array<FamilyName, 20> kAllFamilies = {
    FamilyName::kSn,  FamilyName::kKn,  FamilyName::kK5pad, FamilyName::kH0,  FamilyName::kH1,
    FamilyName::kH2,  FamilyName::kH3,  FamilyName::kH4,    FamilyName::kH5,  FamilyName::kH6,
    FamilyName::kH7,  FamilyName::kH8,  FamilyName::kH9,    FamilyName::kH10, FamilyName::kH11,
    FamilyName::kF7,  FamilyName::kF10, FamilyName::kC3,    FamilyName::kM2,  FamilyName::kP2,
};

// The fifteen maximal intersecting families that exist for every n >= 7.
inline constexpr std::array<FamilyName, 15> kMaximalFamilies = {
    FamilyName::kSn, FamilyName::kK5pad, FamilyName::kH1,  FamilyName::kH2,  FamilyName::kH3,
    FamilyName::kH4, FamilyName::kH5,    FamilyName::kH6,  FamilyName::kH7,  FamilyName::kH8,
    FamilyName::kH9, FamilyName::kH10,   FamilyName::kH11, FamilyName::kF7,  FamilyName::kF10,
};

std::string to_string(FamilyName name);
FamilyName parse_family(std::string_view tag);

int min_vertices(FamilyName name);

// Throws InvalidArgument when n < min_vertices(name) or n > kMaxVertices.
Hypergraph build(FamilyName name, int n);
std::int64_t size_formula(FamilyName name, int n);

// First tag (in kAllFamilies order) whose construction on h.n() vertices is isomorphic to h.
std::optional<FamilyName> identify(const Hypergraph& h);

}  // namespace tripsys
