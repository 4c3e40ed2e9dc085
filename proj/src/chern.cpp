#include "kuwalls/chern.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace kuwalls {

const Rational& ChernVector::operator[](int k) const {
  switch (k) {
    case 0: return r;
    case 1: return c1;
    case 2: return c2;
    case 3: return c3;
  }
  throw std::out_of_range("Chern index out of range");
}

Rational& ChernVector::operator[](int k) {
  return const_cast<Rational&>(std::as_const(*this)[k]);
}

ChernVector& ChernVector::operator+=(const ChernVector& o) {
  r += o.r;
  c1 += o.c1;
  c2 += o.c2;
  c3 += o.c3;
  return *this;
}

ChernVector& ChernVector::operator-=(const ChernVector& o) {
  r -= o.r;
  c1 -= o.c1;
  c2 -= o.c2;
  c3 -= o.c3;
  return *this;
}

ChernVector& ChernVector::operator*=(const Rational& s) {
  r *= s;
  c1 *= s;
  c2 *= s;
  c3 *= s;
  return *this;
}

ChernVector operator+(ChernVector a, const ChernVector& b) { return a += b; }
ChernVector operator-(ChernVector a, const ChernVector& b) { return a -= b; }
ChernVector operator-(ChernVector a) { return a *= Rational(-1); }
ChernVector operator*(const Rational& s, ChernVector a) { return a *= s; }

std::ostream& operator<<(std::ostream& os, const ChernVector& x) {
  return os << '(' << to_string(x.r) << ", " << to_string(x.c1) << ", " << to_string(x.c2)
            << ", " << to_string(x.c3) << ')';
}

bool ChernLattice::contains(const ChernVector& x, int components) const {
  for (int k = 0; k < components; ++k) {
    if (!is_integer(x[k] * denominators[k])) return false;
  }
  return true;
}

FanoContext::FanoContext(int degree) : degree_(degree), h_c2_(12) {
  if (degree < 1 || degree > 5) throw std::out_of_range("degree out of range");
  // td(Y) = 1 + H + (4H^2 + c2)/12 + 2H.c2/24.
  const Rational d(degree);
  const Rational hc2(h_c2_);
  chi_weights_ = {
      Rational(2) * hc2 / 24,  // integral of td3
      (4 * d + hc2) / 12,      // H . td2
      d,                       // H^2 . td1 = H^3
      d,                       // H^3
  };
}

ChernLattice FanoContext::default_lattice() const {
  return {{1, 1, std::lcm(2L, static_cast<long>(degree_)), std::lcm(6L, static_cast<long>(degree_))}};
}

ChernVector ring_multiply(const ChernVector& x, const ChernVector& y) {
  ChernVector out = ChernVector::zero();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; i + j < 4; ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

ChernVector operator*(const ChernVector& x, const ChernVector& y) { return ring_multiply(x, y); }

ChernVector exp_h(const Rational& t) {
  const Rational t2 = t * t;
  return {1, t, t2 / 2, t2 * t / 6};
}

ChernVector twist(const ChernVector& x, const Rational& beta) {
  return ring_multiply(x, exp_h(-beta));
}

ChernVector dual(const ChernVector& x) { return {x.r, -x.c1, x.c2, -x.c3}; }

Rational hrr_chi(const FanoContext& ctx, const ChernVector& x) {
  const auto& w = ctx.chi_weights();
  return w[0] * x.r + w[1] * x.c1 + w[2] * x.c2 + w[3] * x.c3;
}

Rational chi_pair(const FanoContext& ctx, const ChernVector& x, const ChernVector& y) {
  return hrr_chi(ctx, ring_multiply(dual(x), y));
}

ChernVector line_bundle(long n) { return exp_h(Rational(n)); }

ChernVector point_class(const FanoContext& ctx) { return {0, 0, 0, Rational(1, ctx.degree())}; }

}  // namespace kuwalls
