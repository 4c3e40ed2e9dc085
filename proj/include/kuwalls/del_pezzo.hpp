#pragma once

// Picard lattices of del Pezzo surfaces: the blowup of P^2 in 9 - d points,
// basis e0 (pullback of a line) and exceptional classes e1..e_{9-d}, with
// intersection form diag(1, -1, ..., -1) and K = -3 e0 + e1 + ... + e_{9-d}.

#include "kuwalls/rational.hpp"

#include <compare>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kuwalls {

struct PicVector {
  long e0 = 0;
  std::vector<long> e;

  friend bool operator==(const PicVector&, const PicVector&) = default;
  friend std::strong_ordering operator<=>(const PicVector& a, const PicVector& b);
};

PicVector operator+(const PicVector& a, const PicVector& b);
PicVector operator-(const PicVector& a, const PicVector& b);
PicVector operator*(long s, const PicVector& a);

std::ostream& operator<<(std::ostream& os, const PicVector& v);
/// Readable form such as "e0 - e1 - e2 - e3".
std::string describe(const PicVector& v);

class DPContext {
 public:
  /// Throws std::out_of_range unless 1 <= dp_degree <= 7.
  explicit DPContext(int dp_degree);

  int dp_degree() const { return degree_; }
  /// Number of exceptional classes, 9 - d.
  int rank() const { return 9 - degree_; }
  const PicVector& canonical() const { return canonical_; }
  /// -K, the hyperplane class of an anticanonical model.
  PicVector anticanonical() const;

  PicVector zero() const;
  /// e_i for 1 <= i <= rank; i == 0 gives e0.
  PicVector basis(int i) const;

 private:
  int degree_;
  PicVector canonical_;
};

/// x.e0 y.e0 - sum x.e_i y.e_i. Throws std::invalid_argument on rank mismatch.
long intersect(const DPContext& ctx, const PicVector& x, const PicVector& y);

bool is_root(const DPContext& ctx, const PicVector& x);
bool is_line(const DPContext& ctx, const PicVector& x);

/// Every D with D.K = k and D^2 = s. Complete: Cauchy-Schwarz on the
/// exceptional coefficients confines e0 to d a^2 + 6ka + k^2 + (9-d)s <= 0.
std::vector<PicVector> enumerate_classes(const DPContext& ctx, long k, long s);

/// Closed interval of e0 allowed by the Cauchy-Schwarz bound; nullopt when empty.
std::optional<std::pair<long, long>> e0_range(const DPContext& ctx, long k, long s);

/// Same equations scanned over e0 in [e0_lo, e0_hi] and |e_i| <= e_bound,
/// pruning only on partial sums of squares. Used to certify the bound above.
std::vector<PicVector> enumerate_in_box(const DPContext& ctx, long k, long s, long e0_lo,
                                        long e0_hi, long e_bound);

/// D.K = 0, D^2 = -2, sorted lexicographically.
std::vector<PicVector> enumerate_roots(const DPContext& ctx);
/// L.K = -1, L^2 = -1, sorted lexicographically.
std::vector<PicVector> enumerate_lines(const DPContext& ctx);

/// Lexicographically first (L1, L2) of disjoint lines with L1 - L2 = D.
/// Throws std::invalid_argument unless D is a root.
std::optional<std::pair<PicVector, PicVector>> root_as_line_difference(const DPContext& ctx,
                                                                       const PicVector& root);

enum class NefPosition { interior, boundary, outside };
std::string to_string(NefPosition p);

/// Nef-cone position on a degree-2 del Pezzo, where the cone is cut out by the
/// 56 lines. Throws std::domain_error for other degrees.
NefPosition nef_position(const DPContext& ctx, const PicVector& d);
NefPosition nef_position(const DPContext& ctx, const PicVector& d,
                         std::span<const PicVector> lines);

/// chi(O_S(D)) = 1 + (D^2 - K.D)/2 on a smooth surface.
Rational surface_chi(const DPContext& ctx, const PicVector& d);

}  // namespace kuwalls
