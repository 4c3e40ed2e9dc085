#include "kuwalls/walls.hpp"

#include "kuwalls/ku_lattice.hpp"
#include "kuwalls/parallel.hpp"
#include "kuwalls/tilt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace kuwalls {

WallLocus WallLocus::semicircle(Rational center, Rational radius_sq) {
  if (radius_sq <= 0) throw std::domain_error("semicircle wall needs positive radius^2");
  return {Kind::semicircle, std::move(center), std::move(radius_sq)};
}

WallLocus WallLocus::vertical(Rational beta0) { return {Kind::vertical, std::move(beta0), 0}; }

std::optional<Rational> WallLocus::alpha_sq_at(const Rational& beta) const {
  if (kind == Kind::vertical) return std::nullopt;
  const Rational offset = beta - center_beta;
  Rational a2 = radius_sq - offset * offset;
  if (a2 <= 0) return std::nullopt;
  return a2;
}

std::string to_string(WallLocus::Kind kind) {
  return kind == WallLocus::Kind::semicircle ? "semicircle" : "vertical";
}

std::optional<WallLocus> numerical_wall(const FanoContext&, const ChernVector& target,
                                        const ChernVector& other) {
  // mu(target) = mu(other) reads k (beta^2 + alpha^2)/2 - m beta + n = 0.
  const Rational k = target.c1 * other.r - other.c1 * target.r;
  const Rational m = target.c2 * other.r - other.c2 * target.r;
  const Rational n = target.c2 * other.c1 - other.c2 * target.c1;
  if (k != 0) {
    Rational center = m / k;
    Rational radius_sq = center * center - 2 * n / k;
    if (radius_sq <= 0) return std::nullopt;
    return WallLocus::semicircle(std::move(center), std::move(radius_sq));
  }
  if (m != 0) return WallLocus::vertical(n / m);
  return std::nullopt;
}

LatticeDenominators default_denominators(const Rational& beta0) {
  const long q = to_int64(beta0.get_den());
  return {q, 2 * q * q};
}

LatticeDenominators degree_denominators(const FanoContext& ctx, const Rational& beta0) {
  const long q = to_int64(beta0.get_den());
  return {q, std::lcm(2 * q * q, static_cast<long>(ctx.degree()))};
}

ChernVector DestabilizerCandidate::untwisted(const Rational& beta0) const {
  auto a = twist(ChernVector{Rational(x), y, z, 0}, -beta0);
  a.c3 = 0;
  return a;
}

namespace {

/// Closed interval of z, either end possibly unbounded.
struct ZRange {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool empty = false;

  /// Intersects with {z : lo_v <= k + c z <= hi_v}.
  void constrain(const Rational& k, const Rational& c, const Rational& lo_v,
                 const Rational& hi_v) {
    if (c == 0) {
      if (k < lo_v || k > hi_v) empty = true;
      return;
    }
    Rational a = (lo_v - k) / c;
    Rational b = (hi_v - k) / c;
    if (a > b) std::swap(a, b);
    if (!lo || a > *lo) lo = a;
    if (!hi || b < *hi) hi = b;
    if (*lo > *hi) empty = true;
  }
};

struct TwistedTarget {
  Rational r, c, d, delta;
};

std::vector<DestabilizerCandidate> search_slice(const FanoContext& ctx, const ChernVector& target,
                                                const TwistedTarget& t, const Rational& beta0,
                                                const LatticeDenominators& denoms,
                                                const SearchRules& rules, long x) {
  std::vector<DestabilizerCandidate> out;
  const Rational xq(x);
  const bool torsion = t.r == 0;
  if (torsion && rules.same_sign_for_torsion && x == 0) return out;

  const long y_steps = to_int64(ceil(t.c * denoms.ch1)) - 1;
  for (long yi = 1; yi <= y_steps; ++yi) {
    const Rational y = make_rational(yi, denoms.ch1);
    const Rational wall_den = xq * t.c - t.r * y;
    if (wall_den == 0) continue;
    if (rules.canonical_side && wall_den < 0) continue;

    ZRange range;
    range.constrain(y * y, -2 * xq, 0, t.delta);
    const Rational rest_c = t.c - y;
    const Rational rest_r = t.r - xq;
    range.constrain(rest_c * rest_c - 2 * rest_r * t.d, 2 * rest_r, 0, t.delta);
    if (range.empty) continue;
    if (!range.lo || !range.hi) {
      throw std::logic_error("unbounded Ch2 range in destabilizer search");
    }
    const long z_lo = to_int64(ceil(*range.lo * denoms.ch2));
    const long z_hi = to_int64(floor(*range.hi * denoms.ch2));
    for (long zi = z_lo; zi <= z_hi; ++zi) {
      const Rational z = make_rational(zi, denoms.ch2);
      if (torsion && rules.same_sign_for_torsion && (zi == 0 || (zi > 0) != (x > 0))) continue;
      Rational alpha_sq = 2 * (z * t.c - t.d * y) / wall_den;
      if (alpha_sq <= 0) continue;

      DestabilizerCandidate cand{Integer(x), y, z, alpha_sq, y * y - 2 * xq * z,
                                 WallLocus::vertical(0)};
      if (rules.integral_lattice && !rules.integral_lattice->contains(cand.untwisted(beta0), 3)) {
        continue;
      }
      auto wall = numerical_wall(ctx, target, cand.untwisted(beta0));
      if (!wall || wall->alpha_sq_at(beta0) != alpha_sq) {
        throw std::logic_error("wall through candidate disagrees with the slope equation");
      }
      cand.wall = *wall;
      out.push_back(std::move(cand));
    }
  }
  return out;
}

}  // namespace

std::vector<DestabilizerCandidate> destabilizer_search(const FanoContext& ctx,
                                                       const ChernVector& target,
                                                       const Rational& beta0,
                                                       LatticeDenominators denoms, long x_bound,
                                                       const SearchRules& rules) {
  if (denoms.ch1 <= 0 || denoms.ch2 <= 0) throw std::invalid_argument("denominators must be positive");
  if (x_bound < 0) throw std::invalid_argument("x bound must be non-negative");

  const ChernVector tw = twist(target, beta0);
  const TwistedTarget t{tw.r, tw.c1, tw.c2, discriminant(tw)};
  if (t.c <= 0 || t.delta < 0) return {};

  const auto slices = parallel_map(static_cast<std::size_t>(2 * x_bound + 1), [&](std::size_t i) {
    return search_slice(ctx, target, t, beta0, denoms, rules, static_cast<long>(i) - x_bound);
  });
  std::vector<DestabilizerCandidate> out;
  for (const auto& s : slices) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  });
  return out;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Rational root(sqrt(num), sqrt(den));
  root.canonicalize();
  return root;
}

ChamberReport chamber_report(const FanoContext& ctx, const ChernVector& target,
                             const Rational& beta0, const ChamberReportOptions& options) {
  ChamberReport report;
  report.beta0 = beta0;
  report.denoms = options.denoms.value_or(default_denominators(beta0));
  report.rules = options.rules;
  report.torsion_target = target.r == 0;

  long bound = std::max(1L, options.initial_x_bound);
  auto current = destabilizer_search(ctx, target, beta0, report.denoms, bound, report.rules);
  while (2 * bound <= options.max_x_bound) {
    auto next = destabilizer_search(ctx, target, beta0, report.denoms, 2 * bound, report.rules);
    if (next == current) {
      report.saturated = true;
      break;
    }
    current = std::move(next);
    bound *= 2;
  }
  report.x_bound = bound;
  report.candidates = current;

  for (const auto& cand : report.candidates) {
    auto it = std::find_if(report.walls.begin(), report.walls.end(),
                           [&](const WallCrossing& w) { return w.wall == cand.wall; });
    if (it == report.walls.end()) {
      report.walls.push_back({cand.wall, cand.alpha_sq, exact_sqrt(cand.alpha_sq), {}});
      it = std::prev(report.walls.end());
    }
    it->candidates.push_back(cand);
  }
  std::sort(report.walls.begin(), report.walls.end(),
            [](const WallCrossing& a, const WallCrossing& b) { return a.alpha_sq < b.alpha_sq; });

  if (target == w_vector(ctx)) {
    // O_Y(-1)[1] -> E_p -> I_p and I_p -> I_{p|S} -> O_Y(-1)[1].
    const ChernVector ideal_point = ChernVector::unit() - point_class(ctx);
    const ChernVector shifted_twist = -line_bundle(-1);
    DecompositionCheck check;
    check.identity = "Ch(I_p) + Ch(O_Y(-1)[1]) = w";
    check.lhs = ideal_point + shifted_twist;
    check.rhs = target;
    check.holds = check.lhs == check.rhs;
    report.decomposition = std::move(check);
  }
  return report;
}

}  // namespace kuwalls
