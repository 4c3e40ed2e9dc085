#include "support.hpp"

#include "kuwalls/tilt.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace kuwalls::testing {

long Gen::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Rational Gen::rational(long num_bound, long den_bound) {
  return make_rational(integer(-num_bound, num_bound), integer(1, den_bound));
}

ChernVector Gen::chern(long num_bound, long den_bound) {
  return {rational(num_bound, den_bound), rational(num_bound, den_bound),
          rational(num_bound, den_bound), rational(num_bound, den_bound)};
}

ChernVector Gen::lattice_chern(const FanoContext& ctx, long bound) {
  const auto den = ctx.default_lattice().denominators;
  ChernVector x;
  for (int k = 0; k < 4; ++k) x[k] = make_rational(integer(-bound * den[k], bound * den[k]), den[k]);
  return x;
}

KuClass Gen::ku_class(long bound) { return {integer(-bound, bound), integer(-bound, bound)}; }

namespace {

template <class Check>
PropertyResult run(std::string name, long cases, Check check) {
  PropertyResult out{std::move(name)};
  for (long i = 0; i < cases; ++i) {
    ++out.cases;
    std::string why = check();
    if (!why.empty()) {
      if (out.failures++ == 0) out.first_failure = why;
    }
  }
  return out;
}

std::string show(const ChernVector& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

PropertyResult prop_twist_additivity(long cases, std::uint64_t seed) {
  Gen g(seed);
  return run("twist additivity", cases, [&]() -> std::string {
    auto x = g.chern(), y = g.chern();
    auto a = g.rational(), b = g.rational();
    if (twist(twist(x, a), b) != twist(x, a + b)) return "twist(twist(x,a),b) at " + show(x);
    if (twist(x + y, a) != twist(x, a) + twist(y, a)) return "twist(x+y) at " + show(x);
    return {};
  });
}

PropertyResult prop_discriminant_twist_invariance(long cases, std::uint64_t seed) {
  Gen g(seed);
  return run("discriminant twist invariance", cases, [&]() -> std::string {
    auto x = g.chern();
    auto b = g.rational();
    if (discriminant(twist(x, b)) != discriminant(x)) return "Delta changed at " + show(x);
    return {};
  });
}

PropertyResult prop_ring_axioms(long cases, std::uint64_t seed) {
  Gen g(seed);
  return run("ring axioms", cases, [&]() -> std::string {
    auto x = g.chern(), y = g.chern(), z = g.chern();
    if (x * y != y * x) return "commutativity at " + show(x);
    if ((x * y) * z != x * (y * z)) return "associativity at " + show(x);
    if (x * (y + z) != x * y + x * z) return "distributivity at " + show(x);
    if (ChernVector::unit() * x != x) return "unit at " + show(x);
    auto a = g.rational(), b = g.rational();
    if (exp_h(a) * exp_h(b) != exp_h(a + b)) return "exp_h not multiplicative at " + kuwalls::to_string(a);
    return {};
  });
}

PropertyResult prop_charge_linearity(long cases, std::uint64_t seed) {
  Gen g(seed);
  return run("charge linearity", cases, [&]() -> std::string {
    FanoContext ctx(g.degree());
    auto x = g.chern(), y = g.chern();
    auto s = g.rational();
    StabilityParams p(make_rational(g.integer(1, 20), g.integer(1, 20)), g.rational());
    auto zx = charge_tilt(ctx, p, x), zy = charge_tilt(ctx, p, y);
    if (charge_tilt(ctx, p, x + y) != zx + zy) return "additivity at " + show(x);
    auto zs = charge_tilt(ctx, p, s * x);
    if (zs.re != s * zx.re || zs.im != s * zx.im) return "homogeneity at " + show(x);
    return {};
  });
}

PropertyResult prop_rotated_is_minus_i_tilt(long cases, std::uint64_t seed) {
  Gen g(seed);
  return run("rotated charge = -i tilt charge", cases, [&]() -> std::string {
    FanoContext ctx(g.degree());
    auto x = g.chern();
    StabilityParams p(make_rational(g.integer(1, 20), g.integer(1, 20)), g.rational());
    auto z = charge_tilt(ctx, p, x);
    auto z0 = charge_rotated(ctx, p, x);
    if (z0.re != z.im || z0.im != -z.re) return "mismatch at " + show(x);
    return {};
  });
}

PropertyResult prop_serre_symmetry(long cases, std::uint64_t seed) {
  Gen g(seed);
  return run("Serre duality chi(x,y) = -chi(y, x(-2))", cases, [&]() -> std::string {
    FanoContext ctx(g.degree());
    auto x = g.chern(), y = g.chern();
    if (chi_pair(ctx, x, y) != -chi_pair(ctx, y, x * exp_h(-2))) return "mismatch at " + show(x);
    return {};
  });
}

PropertyResult prop_euler_form_matches_chi(long cases, std::uint64_t seed) {
  Gen g(seed);
  return run("euler_form = chi_pair on embedded classes", cases, [&]() -> std::string {
    int d = g.degree();
    FanoContext ctx(d);
    auto p = g.ku_class(10), q = g.ku_class(10);
    if (Rational(euler_form(d, p, q)) != chi_pair(ctx, embed(ctx, p), embed(ctx, q))) {
      std::ostringstream os;
      os << "d=" << d << " p=" << p << " q=" << q;
      return os.str();
    }
    return {};
  });
}

PropertyResult prop_enumeration_saturation(long cases, std::uint64_t seed) {
  Gen g(seed);
  std::map<std::tuple<int, long, long>, bool> memo;
  return run("enumeration bound saturation", cases, [&]() -> std::string {
    int d = static_cast<int>(g.integer(1, 7));
    // The unpruned scan grows like a ball in 9 - d dimensions; keep it small on E8 and E7.
    long k_max = d == 1 ? 0 : d == 2 ? 1 : 2;
    long k = g.integer(-k_max, k_max), s = g.integer(-3, 2);
    auto key = std::make_tuple(d, k, s);
    auto hit = memo.find(key);
    bool ok;
    if (hit != memo.end()) {
      ok = hit->second;
    } else {
      DPContext ctx(d);
      auto found = enumerate_classes(ctx, k, s);
      auto range = e0_range(ctx, k, s);
      long lo = range ? range->first - 2 : -3;
      long hi = range ? range->second + 2 : 3;
      // sum e_i^2 = e0^2 - s caps every |e_i| inside the widened window.
      long a_max = std::max(std::labs(lo), std::labs(hi));
      long e_bound = 1;
      while (e_bound * e_bound < a_max * a_max - s) ++e_bound;
      auto boxed = enumerate_in_box(ctx, k, s, lo, hi, e_bound);
      std::sort(found.begin(), found.end());
      std::sort(boxed.begin(), boxed.end());
      ok = found == boxed;
      memo.emplace(key, ok);
    }
    if (!ok) {
      return "d=" + std::to_string(d) + " k=" + std::to_string(k) + " s=" + std::to_string(s);
    }
    return {};
  });
}

std::string to_string(const OracleHit& h) {
  return "(" + h.x.get_str() + ", " + kuwalls::to_string(h.y) + ", " + kuwalls::to_string(h.z) +
         ") alpha^2=" + kuwalls::to_string(h.alpha_sq) + " Delta=" + kuwalls::to_string(h.discriminant);
}

std::vector<OracleHit> project(const std::vector<DestabilizerCandidate>& found) {
  std::vector<OracleHit> out;
  for (const auto& c : found) out.push_back({c.x, c.y, c.z, c.alpha_sq, c.discriminant});
  return out;
}

std::vector<OracleHit> naive_destabilizers(const FanoContext& ctx, const ChernVector& target,
                                           const Rational& beta0, LatticeDenominators denoms,
                                           long x_bound, const SearchRules& rules) {
  const auto t = twist(target, beta0);
  const Rational delta_t = discriminant(target);
  const bool torsion = target.r == 0;
  std::vector<OracleHit> out;
  if (t.c1 <= 0 || delta_t < 0) return out;

  // |z| <= (C^2 + Delta)/2 when x != 0, |D - z| <= (C^2 + Delta)/2 when x == 0.
  const Rational z_box = abs(t.c2) + t.c1 * t.c1 + delta_t + 1;
  const long z_steps = to_int64(ceil(z_box * denoms.ch2));
  const long y_steps = to_int64(ceil(t.c1 * denoms.ch1));

  auto charge_gap = [&](const ChernVector& a, const Rational& alpha_sq) {
    StabilityParams p(alpha_sq, beta0);
    auto za = charge_tilt(ctx, p, a), zt = charge_tilt(ctx, p, target);
    return Rational(za.re * zt.im - zt.re * za.im);
  };

  for (long x = -x_bound; x <= x_bound; ++x) {
    for (long iy = 1; iy < y_steps; ++iy) {
      Rational y = make_rational(iy, denoms.ch1);
      if (y >= t.c1) break;
      for (long iz = -z_steps; iz <= z_steps; ++iz) {
        Rational z = make_rational(iz, denoms.ch2);
        if (torsion && rules.same_sign_for_torsion) {
          if (x == 0 || iz == 0 || (x > 0) != (iz > 0)) continue;
        }
        ChernVector a = twist(ChernVector{x, y, z, 0}, -beta0);
        Rational da = discriminant(a), dq = discriminant(target - a);
        if (da < 0 || da > delta_t || dq < 0 || dq > delta_t) continue;
        if (rules.integral_lattice) {
          auto den = rules.integral_lattice->denominators;
          if (!is_integer(a.r * den[0]) || !is_integer(a.c1 * den[1]) || !is_integer(a.c2 * den[2])) {
            continue;
          }
        }
        // The gap is affine in alpha^2; recover its root from two samples.
        Rational f1 = charge_gap(a, 1), f2 = charge_gap(a, 2);
        if (f1 == f2) continue;
        Rational root = 1 - f1 / (f2 - f1);
        if (root <= 0) continue;
        StabilityParams on_wall(root, beta0);
        if (slope_tilt(ctx, on_wall, a) != slope_tilt(ctx, on_wall, target)) continue;
        if (rules.canonical_side) {
          StabilityParams below(root / 2, beta0);
          if (!(slope_tilt(ctx, below, target) < slope_tilt(ctx, below, a))) continue;
        }
        out.push_back({Integer(x), y, z, root, da});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const OracleHit& l, const OracleHit& r) {
    if (l.x != r.x) return l.x < r.x;
    if (l.y != r.y) return l.y < r.y;
    return l.z < r.z;
  });
  return out;
}

namespace {

PicVector reflect(const DPContext& ctx, const PicVector& x, const PicVector& root) {
  return x + intersect(ctx, x, root) * root;
}

std::vector<PicVector> simple_roots(const DPContext& ctx) {
  std::vector<PicVector> out;
  for (int i = 1; i < ctx.rank(); ++i) out.push_back(ctx.basis(i) - ctx.basis(i + 1));
  if (ctx.rank() >= 3) {
    out.push_back(ctx.basis(0) - ctx.basis(1) - ctx.basis(2) - ctx.basis(3));
  }
  return out;
}

std::set<PicVector> orbit_closure(const DPContext& ctx, std::vector<PicVector> seeds) {
  const auto simple = simple_roots(ctx);
  std::set<PicVector> seen(seeds.begin(), seeds.end());
  std::vector<PicVector> todo = seeds;
  while (!todo.empty()) {
    PicVector x = todo.back();
    todo.pop_back();
    for (const auto& r : simple) {
      PicVector y = reflect(ctx, x, r);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

}  // namespace

std::set<PicVector> weyl_orbit_roots(const DPContext& ctx) {
  return orbit_closure(ctx, simple_roots(ctx));
}

std::set<PicVector> weyl_orbit_lines(const DPContext& ctx) {
  return orbit_closure(ctx, {ctx.basis(ctx.rank())});
}

}  // namespace kuwalls::testing
