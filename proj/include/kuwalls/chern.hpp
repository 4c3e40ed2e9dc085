#pragma once

// Chern characters on a Picard-rank-one Fano threefold Y of index two.
//
// Classes are stored as coefficients of (1, H, H^2, H^3) where H is the
// ample generator. Integration uses H^3 = d and H.c2(Y) = 12, which together
// with c1(Y) = 2H give chi(O_Y) = 1.

#include "kuwalls/rational.hpp"

#include <array>
#include <iosfwd>

namespace kuwalls {

struct ChernVector {
  Rational r;   // Ch0
  Rational c1;  // Ch1 / H
  Rational c2;  // Ch2 / H^2
  Rational c3;  // Ch3 / H^3

  static ChernVector zero() { return {0, 0, 0, 0}; }
  static ChernVector unit() { return {1, 0, 0, 0}; }

  const Rational& operator[](int k) const;
  Rational& operator[](int k);

  ChernVector& operator+=(const ChernVector& o);
  ChernVector& operator-=(const ChernVector& o);
  ChernVector& operator*=(const Rational& s);

  friend bool operator==(const ChernVector&, const ChernVector&) = default;
};

ChernVector operator+(ChernVector a, const ChernVector& b);
ChernVector operator-(ChernVector a, const ChernVector& b);
ChernVector operator-(ChernVector a);
ChernVector operator*(const Rational& s, ChernVector a);

std::ostream& operator<<(std::ostream& os, const ChernVector& x);

/// Denominators bounding Ch_k of genuine objects: Ch_k in (1/den[k]) Z.
struct ChernLattice {
  std::array<long, 4> denominators{1, 1, 2, 6};

  /// Checks Ch_0 .. Ch_{components-1}.
  bool contains(const ChernVector& x, int components = 4) const;

  friend bool operator==(const ChernLattice&, const ChernLattice&) = default;
};

class FanoContext {
 public:
  /// Throws std::out_of_range("degree out of range") unless 1 <= d <= 5.
  explicit FanoContext(int degree);

  int degree() const { return degree_; }
  /// H.c2(Y); 12 for every degree.
  int h_c2() const { return h_c2_; }

  /// chi(E) = sum_k weight(k) * Ch_k(E): the Todd class paired against 1, H, H^2, H^3.
  const std::array<Rational, 4>& chi_weights() const { return chi_weights_; }

  /// Ch1 in Z, Ch2 in (1/lcm(2,d)) Z, Ch3 in (1/lcm(6,d)) Z.
  ChernLattice default_lattice() const;

 private:
  int degree_;
  int h_c2_;
  std::array<Rational, 4> chi_weights_;
};

/// Truncated product in H^*(Y, Q): H^k . H^l = H^{k+l}, terms past H^3 dropped.
ChernVector ring_multiply(const ChernVector& x, const ChernVector& y);
ChernVector operator*(const ChernVector& x, const ChernVector& y);

/// exp(t H) = (1, t, t^2/2, t^3/6); Ch(O_Y(n)) = exp_h(n).
ChernVector exp_h(const Rational& t);

/// Ch^beta(x) = x . exp(-beta H).
ChernVector twist(const ChernVector& x, const Rational& beta);

/// Ch(E^dual) = (r, -c1, c2, -c3).
ChernVector dual(const ChernVector& x);

/// Hirzebruch-Riemann-Roch: chi = r + c1 (d+3)/3 + (c2 + c3) d.
Rational hrr_chi(const FanoContext& ctx, const ChernVector& x);

/// Euler pairing chi(x, y) = chi(dual(x) . y).
Rational chi_pair(const FanoContext& ctx, const ChernVector& x, const ChernVector& y);

/// Ch(O_Y(n)).
ChernVector line_bundle(long n);
/// Ch(C_p) = [pt] = H^3 / d.
ChernVector point_class(const FanoContext& ctx);

}  // namespace kuwalls
