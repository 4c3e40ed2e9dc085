#include "kuwalls/ku_lattice.hpp"

#include <cstdlib>
#include <ostream>

namespace kuwalls {

std::ostream& operator<<(std::ostream& os, const KuClass& c) {
  return os << '(' << c.a << ", " << c.b << ')';
}

ChernVector v_vector(const FanoContext& ctx) {
  return {1, 0, Rational(-1, ctx.degree()), 0};
}

ChernVector w_vector(const FanoContext& ctx) {
  return {0, 1, Rational(-1, 2), Rational(1, 6) - Rational(1, ctx.degree())};
}

ChernVector embed(const FanoContext& ctx, const KuClass& c) {
  return Rational(c.a) * v_vector(ctx) + Rational(c.b) * w_vector(ctx);
}

IntMatrix2 euler_matrix(int degree) {
  if (degree < 1 || degree > 5) throw std::out_of_range("degree out of range");
  return {{{-1, -1}, {1 - degree, -degree}}};
}

long euler_form(int degree, const KuClass& p, const KuClass& q) {
  const IntMatrix2 m = euler_matrix(degree);
  return p.a * (m[0][0] * q.a + m[0][1] * q.b) + p.b * (m[1][0] * q.a + m[1][1] * q.b);
}

NotInSpanError::NotInSpanError(int coefficient, Rational residual)
    : std::runtime_error("class not in span of v, w: Ch" + std::to_string(coefficient) +
                         " off by " + to_string(residual)),
      coefficient_(coefficient),
      residual_(std::move(residual)) {}

KuClass KuCoordinates::to_class() const {
  if (!integral) throw std::domain_error("non-integral Ku coordinates");
  return {to_int64(a.get_num()), to_int64(b.get_num())};
}

KuCoordinates class_from_chern(const FanoContext& ctx, const ChernVector& x) {
  // v = (1, 0, ., .) and w = (0, 1, ., .): Ch0 and Ch1 pin the coordinates.
  KuCoordinates out{x.r, x.c1, false};
  const ChernVector fit = out.a * v_vector(ctx) + out.b * w_vector(ctx);
  for (int k = 2; k < 4; ++k) {
    if (fit[k] != x[k]) throw NotInSpanError(k, x[k] - fit[k]);
  }
  out.integral = is_integer(out.a) && is_integer(out.b);
  return out;
}

IntMatrix2 rotation_matrix() {
  // columns: R(v) = -v + w, R(w) = -2v + w
  return {{{-1, -2}, {1, 1}}};
}

IntMatrix2 multiply(const IntMatrix2& m, const IntMatrix2& n) {
  IntMatrix2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out[i][j] = m[i][0] * n[0][j] + m[i][1] * n[1][j];
  }
  return out;
}

KuClass apply(const IntMatrix2& m, const KuClass& c) {
  return {m[0][0] * c.a + m[0][1] * c.b, m[1][0] * c.a + m[1][1] * c.b};
}

std::vector<KuClass> classes_with_self_pairing(int degree, long target, long bound) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  std::vector<KuClass> out;
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      const KuClass c{a, b};
      if (euler_form(degree, c, c) == target) out.push_back(c);
    }
  }
  return out;
}

ExtTable::ExtTable(std::array<long, 4> d) : dims(d) {
  for (long x : dims) {
    if (x < 0) throw std::invalid_argument("negative Ext dimension");
  }
}

long ExtTable::alternating_sum() const { return dims[0] - dims[1] + dims[2] - dims[3]; }

ExtVerdict check_ext_table(int degree, const KuClass& cls, const ExtTable& t,
                           bool serre_trivial_numerics) {
  ExtVerdict v;
  v.alternating_sum = t.alternating_sum();
  v.expected_chi = euler_form(degree, cls, cls);
  v.euler_ok = v.alternating_sum == v.expected_chi;
  v.homological_dimension_ok = t.dims[3] == 0;
  if (serre_trivial_numerics) v.serre_ok = t.dims[0] == t.dims[2];
  return v;
}

}  // namespace kuwalls
