#pragma once

// Named Chern vectors for the objects that appear in the wall-crossing and
// Kuznetsov-component computations, with their lattice classes and the
// Ext-dimension tables they are known to carry.

#include "kuwalls/chern.hpp"
#include "kuwalls/ku_lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kuwalls {

struct ExtFixture {
  std::string label;
  ExtTable table;
  /// Serre symmetry hom^i = hom^{2-i} applies (the object is fixed by the Serre twist).
  bool serre_trivial = false;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  ChernVector chern;
  /// nullopt: the object lies outside Ku(Y).
  std::optional<KuClass> ku_class;
  std::vector<ExtFixture> ext_tables;
  std::string source;
};

/// Throws std::out_of_range("degree out of range") unless 1 <= d <= 5.
std::vector<CatalogEntry> catalog(int degree);

/// Throws std::out_of_range when no entry has that name.
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, const std::string& name);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct EntryVerdict {
  std::string entry;
  std::vector<CheckResult> checks;

  bool passed() const;
};

struct CatalogVerdict {
  int degree = 0;
  std::vector<EntryVerdict> entries;
  /// Degree-specific class identities such as w = 2[Q^dual] - 3[S] on Y_5.
  std::vector<CheckResult> identities;

  bool passed() const;
};

/// Ku-membership at the level of Euler characteristics, Chern/KuClass
/// round-trip, lattice integrality, Ext-table consistency and class identities.
CatalogVerdict verify_catalog(int degree);

}  // namespace kuwalls
