#pragma once
// Generators, brute-force oracles and property runners shared by the unit
// tests and the acceptance binary.
#include "kuwalls/chern.hpp"
#include "kuwalls/del_pezzo.hpp"
#include "kuwalls/ku_lattice.hpp"
#include "kuwalls/walls.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace kuwalls::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  /// p/q with |p| <= num_bound and 1 <= q <= den_bound.
  Rational rational(long num_bound = 12, long den_bound = 12);
  ChernVector chern(long num_bound = 6, long den_bound = 6);
  /// Ch_k on the lattice of Y_d, Ch3 included.
  ChernVector lattice_chern(const FanoContext& ctx, long bound);
  KuClass ku_class(long bound);
  int degree() { return static_cast<int>(integer(1, 5)); }

 private:
  std::mt19937_64 rng_;
};

/// Outcome of a property run: the number of cases and the first failure, if any.
struct PropertyResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0 && cases > 0; }
};

PropertyResult prop_twist_additivity(long cases, std::uint64_t seed);
PropertyResult prop_discriminant_twist_invariance(long cases, std::uint64_t seed);
PropertyResult prop_ring_axioms(long cases, std::uint64_t seed);
PropertyResult prop_charge_linearity(long cases, std::uint64_t seed);
PropertyResult prop_rotated_is_minus_i_tilt(long cases, std::uint64_t seed);
PropertyResult prop_serre_symmetry(long cases, std::uint64_t seed);
PropertyResult prop_euler_form_matches_chi(long cases, std::uint64_t seed);
/// enumerate_classes agrees with a wider box scan for random (d, k, s), |k| <= 2.
PropertyResult prop_enumeration_saturation(long cases, std::uint64_t seed);

struct OracleHit {
  Integer x;
  Rational y;
  Rational z;
  Rational alpha_sq;
  Rational discriminant;
  friend bool operator==(const OracleHit&, const OracleHit&) = default;
};

std::string to_string(const OracleHit& h);
std::vector<OracleHit> project(const std::vector<DestabilizerCandidate>& found);

/// Destabilizer oracle: scans every lattice triple in a box that provably
/// contains all solutions and re-checks each constraint through slope_tilt,
/// discriminant and twist rather than the closed forms used by the search.
/// Sorted like destabilizer_search.
std::vector<OracleHit> naive_destabilizers(const FanoContext& ctx, const ChernVector& target,
                                           const Rational& beta0, LatticeDenominators denoms,
                                           long x_bound, const SearchRules& rules = {});

/// Closure of the simple roots (resp. the class e_r) under the simple reflections.
std::set<PicVector> weyl_orbit_roots(const DPContext& ctx);
std::set<PicVector> weyl_orbit_lines(const DPContext& ctx);

}  // namespace kuwalls::testing
