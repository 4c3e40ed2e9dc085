#pragma once

// Numerical walls in the (beta, alpha) half-plane and the search for
// destabilizing subobjects along a vertical line beta = beta0.

#include "kuwalls/chern.hpp"
#include "kuwalls/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kuwalls {

struct WallLocus {
  enum class Kind { semicircle, vertical };

  Kind kind;
  /// Semicircle center, or the abscissa of a vertical wall.
  Rational center_beta;
  /// Zero for vertical walls.
  Rational radius_sq;

  static WallLocus semicircle(Rational center, Rational radius_sq);
  static WallLocus vertical(Rational beta0);

  /// alpha^2 where the wall meets the line beta = const, if it does (alpha > 0).
  std::optional<Rational> alpha_sq_at(const Rational& beta) const;

  friend bool operator==(const WallLocus&, const WallLocus&) = default;
};

std::string to_string(WallLocus::Kind kind);

/// Locus where the tilt slopes of target and other agree. Empty (nullopt) when
/// the truncated classes are proportional or the locus misses alpha > 0.
std::optional<WallLocus> numerical_wall(const FanoContext& ctx, const ChernVector& target,
                                        const ChernVector& other);

/// The lattice steps for twisted Ch1 and Ch2 of candidate subobjects.
struct LatticeDenominators {
  long ch1 = 2;
  long ch2 = 8;

  friend bool operator==(const LatticeDenominators&, const LatticeDenominators&) = default;
};

/// (q, 2q^2) for beta0 = p/q: Ch1 in Z, Ch2 in (1/2)Z before twisting.
LatticeDenominators default_denominators(const Rational& beta0);
/// (q, lcm(2q^2, d)): accounts for Ch2 in (1/lcm(2,d))Z on Y_d.
LatticeDenominators degree_denominators(const FanoContext& ctx, const Rational& beta0);

struct SearchRules {
  /// Torsion targets only: x and z nonzero with equal signs.
  bool same_sign_for_torsion = true;
  /// Keep only the subobject A of each pair {A, target - A}: the one whose
  /// slope exceeds the target's just below the wall.
  bool canonical_side = true;
  /// When set, the untwisted Ch_0, Ch_1, Ch_2 of A must lie on this lattice.
  std::optional<ChernLattice> integral_lattice;

  friend bool operator==(const SearchRules&, const SearchRules&) = default;
};

struct DestabilizerCandidate {
  Integer x;   // Ch0
  Rational y;  // twisted Ch1
  Rational z;  // twisted Ch2
  Rational alpha_sq;  // where the wall meets beta = beta0
  Rational discriminant;
  WallLocus wall;

  /// Ch_{<=2} of the candidate undone from the twist (Ch3 set to 0).
  ChernVector untwisted(const Rational& beta0) const;

  friend bool operator==(const DestabilizerCandidate&, const DestabilizerCandidate&) = default;
};

/// All (x, y, z) with 0 < y < Ch1^beta0(target) on (1/denoms.ch1)Z, z on
/// (1/denoms.ch2)Z and |x| <= x_bound such that
///  - the slope equation at beta0 has a solution alpha^2 > 0,
///  - 0 <= Delta(A) <= Delta(target) and 0 <= Delta(target - A) <= Delta(target),
///  - plus the enabled rules.
/// Sorted lexicographically by (x, y, z).
std::vector<DestabilizerCandidate> destabilizer_search(const FanoContext& ctx,
                                                       const ChernVector& target,
                                                       const Rational& beta0,
                                                       LatticeDenominators denoms, long x_bound,
                                                       const SearchRules& rules = {});

struct WallCrossing {
  WallLocus wall;
  Rational alpha_sq;
  /// alpha itself when alpha^2 is a rational square.
  std::optional<Rational> alpha;
  std::vector<DestabilizerCandidate> candidates;
};

struct DecompositionCheck {
  std::string identity;
  ChernVector lhs;
  ChernVector rhs;
  bool holds = false;
};

struct ChamberReportOptions {
  std::optional<LatticeDenominators> denoms;  // default_denominators(beta0) when unset
  long initial_x_bound = 4;
  long max_x_bound = 256;
  SearchRules rules;
};

struct ChamberReport {
  Rational beta0;
  LatticeDenominators denoms;
  SearchRules rules;
  bool torsion_target = false;
  /// Smallest tested bound after which doubling changed nothing.
  long x_bound = 0;
  bool saturated = false;
  std::vector<DestabilizerCandidate> candidates;
  /// Distinct walls met by beta = beta0, sorted by alpha.
  std::vector<WallCrossing> walls;
  std::optional<DecompositionCheck> decomposition;

  std::size_t chamber_count() const { return walls.size() + 1; }
};

ChamberReport chamber_report(const FanoContext& ctx, const ChernVector& target,
                             const Rational& beta0, const ChamberReportOptions& options = {});

/// Square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

}  // namespace kuwalls
