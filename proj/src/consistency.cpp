#include "kuwalls/consistency.hpp"

#include "kuwalls/del_pezzo.hpp"
#include "kuwalls/tilt.hpp"
#include "kuwalls/walls.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kuwalls {

namespace {

std::string matrix_text(const IntMatrix2& m) {
  std::ostringstream os;
  os << "[[" << m[0][0] << ", " << m[0][1] << "], [" << m[1][0] << ", " << m[1][1] << "]]";
  return os.str();
}

void add(std::vector<CheckItem>& out, const std::string& group, std::string name, bool passed,
         std::string detail = {}) {
  out.push_back({group, {std::move(name), passed, std::move(detail)}});
}

}  // namespace

std::vector<CheckItem> degree_checks(int degree) {
  const FanoContext ctx(degree);
  const std::string group = "degree " + std::to_string(degree);
  std::vector<CheckItem> out;

  {
    const ChernVector basis[2] = {v_vector(ctx), w_vector(ctx)};
    IntMatrix2 from_chern{};
    bool integral = true;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const Rational chi = chi_pair(ctx, basis[i], basis[j]);
        integral = integral && is_integer(chi);
        from_chern[i][j] = integral ? to_int64(chi.get_num()) : 0;
      }
    }
    const IntMatrix2 expected = euler_matrix(degree);
    add(out, group, "Euler matrix from Riemann-Roch = [[-1,-1],[1-d,-d]]",
        integral && from_chern == expected, matrix_text(from_chern));
  }

  const ChernVector w = w_vector(ctx);
  const Rational beta0(-1, 2);
  {
    const auto small = destabilizer_search(ctx, w, beta0, {2, 8}, 5);
    const auto large = destabilizer_search(ctx, w, beta0, {2, 8}, 10);
    const bool unique = small.size() == 1 && small[0].x == 1 && small[0].y == Rational(1, 2) &&
                        small[0].z == Rational(1, 8) && small[0].alpha_sq == Rational(1, 4);
    add(out, group, "unique destabilizer (1, 1/2, 1/8) for w at beta = -1/2, alpha^2 = 1/4",
        unique && small == large,
        std::to_string(small.size()) + " candidate(s), stable under doubling: " +
            (small == large ? "yes" : "no"));
    if (!small.empty()) {
      const auto& c = small.front();
      const Rational eight_xz = -8 * Rational(c.x) * c.z;
      add(out, group, "0 <= Delta(A) <= Delta(w) = 1 and -1 <= -8xz <= 3",
          discriminant(w) == 1 && c.discriminant >= 0 && c.discriminant <= 1 && eight_xz >= -1 &&
              eight_xz <= 3,
          "Delta(A) = " + to_string(c.discriminant) + ", -8xz = " + to_string(eight_xz));
    }
  }

  const auto verdict = verify_catalog(degree);
  for (const auto& id : verdict.identities) add(out, group, id.name, id.passed, id.detail);
  for (const auto& e : verdict.entries) {
    std::string failed;
    for (const auto& c : e.checks) {
      if (!c.passed) failed += (failed.empty() ? "" : "; ") + c.name + " (" + c.detail + ")";
    }
    add(out, group, "catalog entry " + e.entry, e.passed(), failed);
  }

  for (const auto& t : {ExtTable({1, degree + 3L, 2, 0}), ExtTable({1, degree + 4L, 3, 0}),
                        ExtTable({1, degree + 1L, 0, 0})}) {
    const auto v = check_ext_table(degree, kClassW, t, false);
    std::ostringstream name;
    name << "Ext table (" << t.dims[0] << ", " << t.dims[1] << ", " << t.dims[2] << ", "
         << t.dims[3] << ") sums to chi(w, w) = -d";
    add(out, group, name.str(), v.passed() && v.alternating_sum == -degree,
        "sum " + std::to_string(v.alternating_sum));
  }

  if (degree == 2) {
    const auto v = check_ext_table(2, kClassW, ExtTable({1, 4, 1, 0}), true);
    add(out, group, "Ext table (1, 4, 1, 0) sums to -2 and is Serre-symmetric", v.passed(),
        "sum " + std::to_string(v.alternating_sum));
    const auto classes = classes_with_self_pairing(2, -2, 10);
    const std::vector<KuClass> expected{{-2, 1}, {0, -1}, {0, 1}, {2, -1}};
    add(out, group, "chi(c, c) = -2 exactly for c = +-w, +-(2v - w)", classes == expected,
        std::to_string(classes.size()) + " classes within |a|,|b| <= 10");
  }
  return out;
}

std::vector<CheckItem> global_checks() {
  std::vector<CheckItem> out;
  const std::string rot = "rotation";
  const IntMatrix2 r = rotation_matrix();
  add(out, rot, "R(v) = w - v", apply(r, kClassV) == KuClass{-1, 1});
  add(out, rot, "R(w) = w - 2v", apply(r, kClassW) == KuClass{-2, 1});
  const IntMatrix2 sq = multiply(r, r);
  add(out, rot, "R^2 = -Id", sq == IntMatrix2{{{-1, 0}, {0, -1}}}, matrix_text(sq));

  struct Expected {
    int d;
    std::size_t roots, lines;
  };
  for (const Expected& e : {Expected{1, 240, 240}, Expected{2, 126, 56}, Expected{3, 72, 27},
                            Expected{4, 40, 16}, Expected{5, 20, 10}}) {
    const DPContext ctx(e.d);
    const auto roots = enumerate_roots(ctx);
    const auto lines = enumerate_lines(ctx);
    add(out, "del Pezzo", "degree " + std::to_string(e.d) + ": " + std::to_string(e.roots) +
                              " roots, " + std::to_string(e.lines) + " lines",
        roots.size() == e.roots && lines.size() == e.lines,
        std::to_string(roots.size()) + " roots, " + std::to_string(lines.size()) + " lines");
  }

  const DPContext dp2(2);
  const auto roots = enumerate_roots(dp2);
  const auto lines = enumerate_lines(dp2);
  const PicVector minus_k = dp2.anticanonical();

  std::size_t decomposed = 0, interior = 0, chi_ok = 0;
  for (const auto& root : roots) {
    if (root_as_line_difference(dp2, root)) ++decomposed;
    if (nef_position(dp2, root - 2 * dp2.canonical(), lines) == NefPosition::interior) ++interior;
    if (surface_chi(dp2, root) == 0 && surface_chi(dp2, root - minus_k) == 0 &&
        surface_chi(dp2, root + minus_k) == 2) {
      ++chi_ok;
    }
  }
  const auto frac = [&](std::size_t k) {
    return std::to_string(k) + "/" + std::to_string(roots.size());
  };
  add(out, "del Pezzo", "every root is a difference of disjoint lines", decomposed == roots.size(),
      frac(decomposed));

  std::set<std::pair<PicVector, PicVector>> pairs;
  bool involution_ok = true;
  for (const auto& l : lines) {
    PicVector partner = minus_k - l;
    if (partner == l || !std::binary_search(lines.begin(), lines.end(), partner)) {
      involution_ok = false;
    }
    pairs.insert(std::minmax(l, partner));
  }
  add(out, "del Pezzo", "lines pair up as (L, -K - L)", involution_ok && pairs.size() == 28,
      std::to_string(pairs.size()) + " pairs");
  add(out, "del Pezzo", "D - 2K in the interior of the nef cone", interior == roots.size(),
      frac(interior));
  add(out, "del Pezzo", "chi(D) = 0, chi(D - H) = 0, chi(D + H) = 2", chi_ok == roots.size(),
      frac(chi_ok));
  return out;
}

std::vector<CheckItem> all_checks() {
  std::vector<CheckItem> out;
  for (int d = 1; d <= 5; ++d) {
    auto items = degree_checks(d);
    out.insert(out.end(), items.begin(), items.end());
  }
  auto items = global_checks();
  out.insert(out.end(), items.begin(), items.end());
  return out;
}

bool all_passed(const std::vector<CheckItem>& items) {
  return std::all_of(items.begin(), items.end(),
                     [](const CheckItem& i) { return i.result.passed; });
}

}  // namespace kuwalls
