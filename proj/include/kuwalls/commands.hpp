#pragma once

// Command implementations behind the kuwalls executable. Each returns the
// output document; the executable only parses flags and prints.

#include "kuwalls/serialize.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace kuwalls {

/// Bad flags or arguments; the executable exits with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Catalog name ("O_Y", "I_p", ...), the aliases "v", "w", "O", or four
/// comma-separated rationals "r,c1,c2,c3".
ChernVector parse_class_spec(const FanoContext& ctx, const std::string& spec);

Json cmd_euler(int degree);

struct WallsOptions {
  int degree = 2;
  std::string class_spec = "w";
  Rational beta{-1, 2};
  std::optional<LatticeDenominators> denoms;
  /// Use degree_denominators() instead of default_denominators().
  bool degree_lattice = false;
  std::optional<long> x_bound;
  SearchRules rules;
};

struct WallsResult {
  Json document;
  ChamberReport report;
};

WallsResult cmd_walls(const WallsOptions& options);

struct RootsOptions {
  int dp_degree = 2;
  bool list = false;
  bool pairs = false;
  bool as_line_diff = false;
  bool nef_check = false;
};

Json cmd_roots(const RootsOptions& options);

struct CheckOutcome {
  Json document;
  bool passed = false;
  /// One "name: PASS|FAIL" line per check.
  std::string text;
};

/// nullopt runs every degree plus the degree-independent checks.
CheckOutcome cmd_check(std::optional<int> degree);

Json cmd_catalog(int degree);

Json cmd_self_pairing(int degree, long target, long bound);

}  // namespace kuwalls
