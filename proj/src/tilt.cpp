#include "kuwalls/tilt.hpp"

#include <ostream>
#include <stdexcept>

namespace kuwalls {

StabilityParams::StabilityParams(Rational alpha_sq, Rational beta)
    : alpha_sq_(std::move(alpha_sq)), beta_(std::move(beta)) {
  if (alpha_sq_ <= 0) throw std::domain_error("alpha^2 must be positive");
}

ChargeValue operator+(const ChargeValue& a, const ChargeValue& b) {
  return {a.re + b.re, a.im + b.im};
}

bool operator<(const Slope& a, const Slope& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.value() < b.value();
}

std::ostream& operator<<(std::ostream& os, const Slope& s) {
  if (s.is_infinite()) return os << "+inf";
  return os << to_string(s.value());
}

std::ostream& operator<<(std::ostream& os, const ChargeValue& z) {
  return os << to_string(z.re) << " + i*" << to_string(z.im);
}

namespace {

Slope slope_of(const ChargeValue& z) {
  if (z.im == 0) return Slope::infinite();
  return Slope::finite(-z.re / z.im);
}

}  // namespace

ChargeValue charge_tilt(const FanoContext& ctx, const StabilityParams& p, const ChernVector& x) {
  const Rational d(ctx.degree());
  const ChernVector t = twist(x, p.beta());
  return {-d * t.c2 + p.alpha_sq() / 2 * d * t.r, d * t.c1};
}

Slope slope_tilt(const FanoContext& ctx, const StabilityParams& p, const ChernVector& x) {
  return slope_of(charge_tilt(ctx, p, x));
}

ChargeValue charge_rotated(const FanoContext& ctx, const StabilityParams& p,
                           const ChernVector& x) {
  const Rational d(ctx.degree());
  const ChernVector t = twist(x, p.beta());
  return {d * t.c1, d * t.c2 - p.alpha_sq() / 2 * d * x.r};
}

Slope slope_rotated(const FanoContext& ctx, const StabilityParams& p, const ChernVector& x) {
  return slope_of(charge_rotated(ctx, p, x));
}

Rational discriminant(const ChernVector& x) { return x.c1 * x.c1 - 2 * x.r * x.c2; }

Slope slope_mumford(const ChernVector& x) {
  if (x.r == 0) return Slope::infinite();
  return Slope::finite(x.c1 / x.r);
}

}  // namespace kuwalls
