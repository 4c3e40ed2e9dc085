#pragma once

// Tilt-stability central charges evaluated on Chern vectors.
//
// Every pairing H^{3-k}.Ch_k contributes a factor H^3 = d, so the charges
// below equal the usual ones up to an overall positive scale. Slopes, walls
// and phases are unaffected by that scale.

#include "kuwalls/chern.hpp"
#include "kuwalls/rational.hpp"

#include <iosfwd>
#include <optional>

namespace kuwalls {

/// The point (alpha, beta) of the upper half-plane, with alpha stored squared.
class StabilityParams {
 public:
  /// Throws std::domain_error unless alpha_sq > 0.
  StabilityParams(Rational alpha_sq, Rational beta);

  const Rational& alpha_sq() const { return alpha_sq_; }
  const Rational& beta() const { return beta_; }

 private:
  Rational alpha_sq_;
  Rational beta_;
};

struct ChargeValue {
  Rational re;
  Rational im;

  friend bool operator==(const ChargeValue&, const ChargeValue&) = default;
};

ChargeValue operator+(const ChargeValue& a, const ChargeValue& b);

/// mu = -Re Z / Im Z, or +infinity when Im Z = 0.
class Slope {
 public:
  static Slope infinite() { return Slope(std::nullopt); }
  static Slope finite(Rational v) { return Slope(std::move(v)); }

  bool is_infinite() const { return !value_; }
  /// Precondition: !is_infinite().
  const Rational& value() const { return *value_; }

  friend bool operator==(const Slope&, const Slope&) = default;
  friend bool operator<(const Slope& a, const Slope& b);

 private:
  explicit Slope(std::optional<Rational> v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);
std::ostream& operator<<(std::ostream& os, const ChargeValue& z);

/// Z_{alpha,beta} = -d Ch2^beta + (alpha^2/2) d Ch0 + i d Ch1^beta.
ChargeValue charge_tilt(const FanoContext& ctx, const StabilityParams& p, const ChernVector& x);

Slope slope_tilt(const FanoContext& ctx, const StabilityParams& p, const ChernVector& x);

/// Z^0_{alpha,beta} = (1/i) Z_{alpha,beta} = d Ch1^beta + i (d Ch2^beta - (alpha^2/2) d Ch0).
ChargeValue charge_rotated(const FanoContext& ctx, const StabilityParams& p, const ChernVector& x);

Slope slope_rotated(const FanoContext& ctx, const StabilityParams& p, const ChernVector& x);

/// Delta = Ch1^2 - 2 Ch0 Ch2 in H-coefficient units; invariant under twist.
Rational discriminant(const ChernVector& x);

/// Mumford slope Ch1/Ch0, +infinity for torsion classes.
Slope slope_mumford(const ChernVector& x);

}  // namespace kuwalls
