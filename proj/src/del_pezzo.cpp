#include "kuwalls/del_pezzo.hpp"

#include "kuwalls/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kuwalls {

std::strong_ordering operator<=>(const PicVector& a, const PicVector& b) {
  if (auto c = a.e0 <=> b.e0; c != 0) return c;
  return std::lexicographical_compare_three_way(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
}

namespace {

void require_same_rank(const PicVector& a, const PicVector& b) {
  if (a.e.size() != b.e.size()) throw std::invalid_argument("Picard rank mismatch");
}

long isqrt(long n) {
  if (n < 0) return -1;
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

PicVector operator+(const PicVector& a, const PicVector& b) {
  require_same_rank(a, b);
  PicVector out{a.e0 + b.e0, a.e};
  for (std::size_t i = 0; i < out.e.size(); ++i) out.e[i] += b.e[i];
  return out;
}

PicVector operator-(const PicVector& a, const PicVector& b) { return a + (-1) * b; }

PicVector operator*(long s, const PicVector& a) {
  PicVector out{s * a.e0, a.e};
  for (auto& x : out.e) x *= s;
  return out;
}

std::ostream& operator<<(std::ostream& os, const PicVector& v) {
  os << '(' << v.e0 << ';';
  for (std::size_t i = 0; i < v.e.size(); ++i) os << (i ? "," : "") << v.e[i];
  return os << ')';
}

std::string describe(const PicVector& v) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](long c, const std::string& name) {
    if (c == 0) return;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (std::labs(c) != 1) os << std::labs(c);
    os << name;
    first = false;
  };
  term(v.e0, "e0");
  for (std::size_t i = 0; i < v.e.size(); ++i) term(v.e[i], "e" + std::to_string(i + 1));
  if (first) os << '0';
  return os.str();
}

DPContext::DPContext(int dp_degree) : degree_(dp_degree) {
  if (dp_degree < 1 || dp_degree > 7) throw std::out_of_range("del Pezzo degree out of range");
  canonical_ = PicVector{-3, std::vector<long>(static_cast<std::size_t>(rank()), 1)};
}

PicVector DPContext::anticanonical() const { return (-1) * canonical_; }

PicVector DPContext::zero() const {
  return PicVector{0, std::vector<long>(static_cast<std::size_t>(rank()), 0)};
}

PicVector DPContext::basis(int i) const {
  if (i < 0 || i > rank()) throw std::out_of_range("basis index out of range");
  PicVector out = zero();
  if (i == 0) {
    out.e0 = 1;
  } else {
    out.e[static_cast<std::size_t>(i - 1)] = 1;
  }
  return out;
}

long intersect(const DPContext& ctx, const PicVector& x, const PicVector& y) {
  require_same_rank(x, y);
  if (static_cast<int>(x.e.size()) != ctx.rank()) throw std::invalid_argument("Picard rank mismatch");
  long out = x.e0 * y.e0;
  for (std::size_t i = 0; i < x.e.size(); ++i) out -= x.e[i] * y.e[i];
  return out;
}

bool is_root(const DPContext& ctx, const PicVector& x) {
  return intersect(ctx, x, ctx.canonical()) == 0 && intersect(ctx, x, x) == -2;
}

bool is_line(const DPContext& ctx, const PicVector& x) {
  return intersect(ctx, x, ctx.canonical()) == -1 && intersect(ctx, x, x) == -1;
}

namespace {

// Writing D = a e0 + sum b_i e_i, the equations are
//   sum b_i = -3a - k,   sum b_i^2 = a^2 - s.
struct CoefficientTarget {
  long sum;
  long squares;
};

CoefficientTarget target_for(long a, long k, long s) { return {-3 * a - k, a * a - s}; }

/// Depth-first fill of b with exact sum/squares. When `cauchy_schwarz` is set
/// the remaining coordinates must satisfy sum^2 <= n * squares.
void fill(std::vector<long>& b, std::size_t pos, long sum, long squares, long bound,
          bool cauchy_schwarz, long e0, std::vector<PicVector>& out) {
  const long remaining = static_cast<long>(b.size() - pos);
  if (remaining == 0) {
    if (sum == 0 && squares == 0) out.push_back(PicVector{e0, b});
    return;
  }
  if (squares < 0) return;
  if (cauchy_schwarz && sum * sum > remaining * squares) return;
  if (std::labs(sum) > remaining * bound) return;
  const long reach = std::min(bound, isqrt(squares));
  for (long x = -reach; x <= reach; ++x) {
    b[pos] = x;
    fill(b, pos + 1, sum - x, squares - x * x, bound, cauchy_schwarz, e0, out);
  }
  b[pos] = 0;
}

std::vector<PicVector> scan(const DPContext& ctx, long k, long s, long e0_lo, long e0_hi,
                            long bound, bool cauchy_schwarz) {
  if (e0_hi < e0_lo) return {};
  const auto n = static_cast<std::size_t>(e0_hi - e0_lo + 1);
  auto per_e0 = parallel_map(n, [&](std::size_t i) {
    const long a = e0_lo + static_cast<long>(i);
    const CoefficientTarget t = target_for(a, k, s);
    std::vector<PicVector> found;
    std::vector<long> b(static_cast<std::size_t>(ctx.rank()), 0);
    fill(b, 0, t.sum, t.squares, bound, cauchy_schwarz, a, found);
    return found;
  });
  std::vector<PicVector> out;
  for (auto& chunk : per_e0) out.insert(out.end(), chunk.begin(), chunk.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<std::pair<long, long>> e0_range(const DPContext& ctx, long k, long s) {
  // (3a + k)^2 <= r (a^2 - s)  <=>  d a^2 + 6k a + k^2 + r s <= 0
  const long d = ctx.dp_degree();
  const long r = ctx.rank();
  auto feasible = [&](long a) { return d * a * a + 6 * k * a + k * k + r * s <= 0; };
  const long reach = (6 * std::labs(k) + std::labs(k * k + r * s)) / d + 1;
  std::optional<std::pair<long, long>> range;
  for (long a = -reach; a <= reach; ++a) {
    if (!feasible(a)) continue;
    if (!range) range = std::pair{a, a};
    range->second = a;
  }
  return range;
}

std::vector<PicVector> enumerate_classes(const DPContext& ctx, long k, long s) {
  const auto range = e0_range(ctx, k, s);
  if (!range) return {};
  long bound = 0;
  for (long a : {range->first, range->second}) bound = std::max(bound, isqrt(a * a - s));
  return scan(ctx, k, s, range->first, range->second, bound, true);
}

std::vector<PicVector> enumerate_in_box(const DPContext& ctx, long k, long s, long e0_lo,
                                        long e0_hi, long e_bound) {
  return scan(ctx, k, s, e0_lo, e0_hi, e_bound, false);
}

std::vector<PicVector> enumerate_roots(const DPContext& ctx) { return enumerate_classes(ctx, 0, -2); }

std::vector<PicVector> enumerate_lines(const DPContext& ctx) {
  return enumerate_classes(ctx, -1, -1);
}

std::optional<std::pair<PicVector, PicVector>> root_as_line_difference(const DPContext& ctx,
                                                                       const PicVector& root) {
  if (!is_root(ctx, root)) throw std::invalid_argument("not a root: " + describe(root));
  std::optional<std::pair<PicVector, PicVector>> best;
  for (const auto& l2 : enumerate_lines(ctx)) {
    PicVector l1 = root + l2;
    if (!is_line(ctx, l1) || intersect(ctx, l1, l2) != 0) continue;
    std::pair candidate{std::move(l1), l2};
    if (!best || candidate < *best) best = std::move(candidate);
  }
  return best;
}

std::string to_string(NefPosition p) {
  switch (p) {
    case NefPosition::interior: return "interior";
    case NefPosition::boundary: return "boundary";
    case NefPosition::outside: return "outside";
  }
  return "?";
}

NefPosition nef_position(const DPContext& ctx, const PicVector& d) {
  const auto lines = enumerate_lines(ctx);
  return nef_position(ctx, d, lines);
}

NefPosition nef_position(const DPContext& ctx, const PicVector& d,
                         std::span<const PicVector> lines) {
  if (ctx.dp_degree() != 2) {
    throw std::domain_error("nef test implemented for del Pezzo degree 2 only");
  }
  bool strict = intersect(ctx, d, d) > 0;
  for (const auto& l : lines) {
    const long m = intersect(ctx, d, l);
    if (m < 0) return NefPosition::outside;
    if (m == 0) strict = false;
  }
  if (intersect(ctx, d, d) < 0) return NefPosition::outside;
  return strict ? NefPosition::interior : NefPosition::boundary;
}

Rational surface_chi(const DPContext& ctx, const PicVector& d) {
  return Rational(1) +
         Rational(intersect(ctx, d, d) - intersect(ctx, ctx.canonical(), d)) / Rational(2);
}

}  // namespace kuwalls
