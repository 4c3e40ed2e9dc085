#pragma once

// Itemized numeric consistency checks run by `kuwalls check`.

#include "kuwalls/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kuwalls {

struct CheckItem {
  std::string group;
  CheckResult result;
};

/// Checks that depend on the degree d of Y: Euler matrix, the wall for w,
/// discriminant bounds, Ext tables, catalog entries and class identities.
std::vector<CheckItem> degree_checks(int degree);

/// Degree-independent checks: rotation action and del Pezzo combinatorics.
std::vector<CheckItem> global_checks();

/// Every degree plus the global checks.
std::vector<CheckItem> all_checks();

bool all_passed(const std::vector<CheckItem>& items);

}  // namespace kuwalls
