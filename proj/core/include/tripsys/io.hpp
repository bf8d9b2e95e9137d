#pragma once

#include <string>
#include <string_view>

#include "tripsys/enumerate.hpp"
#include "tripsys/families.hpp"
#include "tripsys/turan.hpp"

namespace tripsys {

// {n, forbidden, classes: [{edges, size, tau, name, labeled_count}]}; keys in fixed order.
std::string catalog_to_json(const Catalog& catalog);
Catalog catalog_from_json(std::string_view json);
std::string catalog_to_text(const Catalog& catalog, bool labeled_counts);

std::string family_to_json(FamilyName name, int n);

std::string hierarchy_to_text(const Hierarchy& h, const Catalog& catalog);
std::string hierarchy_to_json(const Hierarchy& h, const Catalog& catalog);
// Columns n,s,value,num_classes,class_names (names joined by ';').
std::string hierarchy_to_csv(const Hierarchy& h, const Catalog& catalog, bool header = true);

std::string report_to_text(const VerifyReport& report);
std::string report_to_json(const VerifyReport& report);

}  // namespace tripsys
