#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tripsys/enumerate.hpp"
#include "tripsys/families.hpp"
#include "tripsys/iso.hpp"

namespace tripsys {

struct TuranLevel {
  int s = 0;
  std::int64_t value = 0;
  std::vector<std::size_t> extremal;  // indices into Catalog::entries
};

struct Hierarchy {
  int n = 0;
  std::vector<Pattern> forbidden;
  std::vector<TuranLevel> levels;
  bool terminal = true;  // no free family avoids every level
};

// Groups the catalog by size, largest first. Before doing so it re-checks that every entry is
// a maximal free family and that no entry is contained in an entry of a lower level; either
// failure throws InvariantViolation. Throws InvalidArgument on an empty catalog.
Hierarchy hierarchy(const Catalog& catalog, Containment mode = Containment::kIsomorphic);

// Closed-form ex^(s)(n; F) for F = {M2} or {M2, C3}; nullopt where the level does not exist
// (or F has no known table).
std::optional<std::int64_t> closed_form(int n, std::span<const Pattern> forbidden, int s);

struct ExpectedLevel {
  std::int64_t value = 0;
  std::vector<FamilyName> families;
};

// Reference extremal families per level. Empty for unsupported F.
std::vector<ExpectedLevel> expected_levels(int n, std::span<const Pattern> forbidden);

// Classical k-uniform extremal values (EKR, Hilton-Milner, Han-Kohayakawa).
std::int64_t ekr_value(int n, int k);
std::int64_t hilton_milner_value(int n, int k);
std::int64_t han_kohayakawa_value(int n, int k);

struct LevelComparison {
  int s = 0;
  std::optional<std::int64_t> computed;
  std::optional<std::int64_t> expected;
  std::vector<std::string> computed_names;  // "?" for unnamed classes
  std::vector<std::string> expected_names;
  bool match = false;
  std::vector<std::string> details;  // canonical forms of mismatching classes
};

struct NamedCheck {
  std::string what;
  bool passed = false;
};

struct VerifyReport {
  int n = 0;
  std::vector<Pattern> forbidden;
  Catalog catalog;
  Hierarchy hierarchy;
  std::vector<LevelComparison> levels;
  std::vector<NamedCheck> checks;

  bool ok() const;
};

// Compares hierarchy(catalog) with closed_form and expected_levels. Disagreements are report
// content, never exceptions. Throws InvalidArgument for forbidden sets without a reference table.
VerifyReport verify(const Catalog& catalog, Containment mode = Containment::kIsomorphic);
VerifyReport verify(int n, std::span<const Pattern> forbidden, const EnumerationOptions& options,
                    Containment mode = Containment::kIsomorphic);

}  // namespace tripsys
