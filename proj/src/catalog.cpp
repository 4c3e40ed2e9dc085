#include "kuwalls/catalog.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kuwalls {

namespace {

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

std::vector<CatalogEntry> catalog(int degree) {
  const FanoContext ctx(degree);
  const long d = degree;
  const Rational inv_d(1, d);

  const ChernVector structure = ChernVector::unit();
  const ChernVector point = point_class(ctx);
  const ChernVector ideal_point = structure - point;
  const ChernVector o_minus = line_bundle(-1);
  const ChernVector section = structure - o_minus;  // O_S for S in |H|
  const ChernVector line_sheaf{0, 0, inv_d, 0};     // Ch3 = 0 forced by chi(O_l) = 1
  const ChernVector ideal_line = structure - line_sheaf;
  const ChernVector w = w_vector(ctx);

  std::vector<CatalogEntry> out;
  out.push_back({"O_Y", "structure sheaf", structure, std::nullopt, {}, "exceptional object of D(Y)"});
  out.push_back({"O_Y(1)", "hyperplane bundle", line_bundle(1), std::nullopt, {},
                 "exceptional object of D(Y)"});
  out.push_back({"O_Y(-1)", "dual hyperplane bundle", o_minus, std::nullopt, {}, "line bundle"});
  out.push_back({"O_Y(-1)[1]", "shifted dual hyperplane bundle", -o_minus, std::nullopt, {},
                 "quotient at the wall for w"});
  out.push_back({"C_p", "skyscraper at a point", point, std::nullopt, {}, "[pt] = H^3/d"});
  out.push_back({"I_p", "ideal sheaf of a point", ideal_point, std::nullopt, {},
                 "destabilizing subobject at the wall for w"});
  out.push_back({"O_S", "structure sheaf of a hyperplane section", section, std::nullopt, {},
                 "O_Y(-1) -> O_Y -> O_S"});
  out.push_back({"I_{p|S}", "ideal of a point in a hyperplane section", section - point, kClassW,
                 {{"p smooth on S", ExtTable({1, d + 3, 2, 0}), false},
                  {"p singular on S", ExtTable({1, d + 4, 3, 0}), false}},
                 "Gieseker-stable sheaf of class w"});
  out.push_back({"O_l", "structure sheaf of a line", line_sheaf, std::nullopt, {},
                 "chi(O_l) = 1"});
  out.push_back({"I_l", "ideal sheaf of a line", ideal_line, kClassV, {}, "class v"});
  {
    CatalogEntry ep{"E_p", "extension O_Y(-1)[1] -> E_p -> I_p", ideal_point - o_minus, kClassW,
                    {}, "stable object of class w below the wall"};
    if (degree == 2) {
      ep.ext_tables = {{"p outside the ramification locus", ExtTable({1, 3, 0, 0}), false},
                       {"p on the ramification locus", ExtTable({1, 4, 1, 0}), true}};
    }
    out.push_back(std::move(ep));
  }
  out.push_back({"iota_*O_S(D)", "root of a hyperplane section pushed forward", w, kClassW,
                 {{"D a root", ExtTable({1, d + 1, 0, 0}), false}},
                 "Ch(F) = ([S], D, -[pt]) with D.H = 0"});
  out.push_back({"L_O(I_p(1))", "mutation of I_p(1) through O_Y", ideal_point * exp_h(1) -
                     Rational(d + 1) * structure,
                 KuClass{-d, 1}, {}, "O_Y^{d+1} -> I_p(1) -> L_O(I_p(1))"});
  out.push_back({"L_O(I_l(1))", "mutation of I_l(1) through O_Y",
                 ideal_line * exp_h(1) - Rational(d) * structure, KuClass{1 - d, 1}, {},
                 "O_Y^d -> I_l(1) -> L_O(I_l(1))"});

  if (degree == 4) {
    const ChernVector spinor{2, 1, 0, Rational(-1, 12)};
    out.push_back({"S_pm", "spinor bundle", spinor, std::nullopt, {}, "[S_pm] = 2 + H - H^3/12"});
    out.push_back({"S_pm(-1)", "twisted spinor bundle", spinor * line_bundle(-1), KuClass{2, -1},
                   {}, "point of the genus 2 curve"});
  }
  if (degree == 5) {
    out.push_back({"S", "tautological sub-bundle", {2, -1, Rational(1, 10), Rational(1, 30)},
                   KuClass{2, -1}, {}, "[S] = 2 - H + H^2/10 + H^3/30"});
    out.push_back({"Q_dual", "dual tautological quotient", {3, -1, Rational(-1, 10), Rational(1, 30)},
                   KuClass{3, -1}, {}, "[Q^dual] = 3 - H - H^2/10 + H^3/30"});
  }
  return out;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, const std::string& name) {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const CatalogEntry& e) { return e.name == name; });
  if (it == entries.end()) throw std::out_of_range("no catalog entry named '" + name + "'");
  return *it;
}

bool EntryVerdict::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool CatalogVerdict::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed(); }) &&
         std::all_of(identities.begin(), identities.end(), [](const auto& c) { return c.passed; });
}

namespace {

CheckResult identity(std::string name, const ChernVector& lhs, const ChernVector& rhs) {
  CheckResult r{std::move(name), lhs == rhs, {}};
  r.detail = str(lhs) + (r.passed ? " == " : " != ") + str(rhs);
  return r;
}

}  // namespace

CatalogVerdict verify_catalog(int degree) {
  const FanoContext ctx(degree);
  const auto entries = catalog(degree);
  const ChernVector o0 = line_bundle(0);
  const ChernVector o1 = line_bundle(1);
  const ChernLattice lattice = ctx.default_lattice();

  CatalogVerdict verdict;
  verdict.degree = degree;
  for (const auto& e : entries) {
    EntryVerdict ev{e.name, {}};
    const Rational chi0 = chi_pair(ctx, o0, e.chern);
    const Rational chi1 = chi_pair(ctx, o1, e.chern);
    const bool orthogonal = chi0 == 0 && chi1 == 0;
    const std::string chis =
        "chi(O_Y, E) = " + to_string(chi0) + ", chi(O_Y(1), E) = " + to_string(chi1);
    if (e.ku_class) {
      ev.checks.push_back({"ku_membership", orthogonal, chis});
      try {
        const KuCoordinates coords = class_from_chern(ctx, e.chern);
        const bool ok = coords.integral && coords.to_class() == *e.ku_class &&
                        embed(ctx, *e.ku_class) == e.chern;
        ev.checks.push_back({"class_roundtrip", ok,
                             "(" + to_string(coords.a) + ", " + to_string(coords.b) + ")"});
      } catch (const NotInSpanError& err) {
        ev.checks.push_back({"class_roundtrip", false, err.what()});
      }
      for (const auto& fx : e.ext_tables) {
        const ExtVerdict v = check_ext_table(degree, *e.ku_class, fx.table, fx.serre_trivial);
        ev.checks.push_back({"ext_table: " + fx.label, v.passed(),
                             "alternating sum " + std::to_string(v.alternating_sum) +
                                 ", chi = " + std::to_string(v.expected_chi)});
      }
    } else {
      ev.checks.push_back({"outside_ku_detected", !orthogonal, chis});
    }
    ev.checks.push_back({"integral_lattice", lattice.contains(e.chern), str(e.chern)});
    verdict.entries.push_back(std::move(ev));
  }

  const auto ch = [&](const std::string& n) { return find_entry(entries, n).chern; };
  const ChernVector w = w_vector(ctx);
  const ChernVector v = v_vector(ctx);
  verdict.identities.push_back(
      identity("Ch(I_p) + Ch(O_Y(-1)[1]) = w", ch("I_p") + ch("O_Y(-1)[1]"), w));
  verdict.identities.push_back(
      identity("Ch(I_p) + Ch(O_Y(-1)[1]) = Ch(I_{p|S})", ch("I_p") + ch("O_Y(-1)[1]"), ch("I_{p|S}")));
  verdict.identities.push_back(identity("Ch(I_l) = v", ch("I_l"), v));
  if (degree == 2) {
    const IntMatrix2 rot = rotation_matrix();
    verdict.identities.push_back(identity("R(w) = [L_O(I_p(1))] = w - 2v", ch("L_O(I_p(1))"),
                                          embed(ctx, apply(rot, kClassW))));
    verdict.identities.push_back(identity("R(v) = [L_O(I_l(1))] = w - v", ch("L_O(I_l(1))"),
                                          embed(ctx, apply(rot, kClassV))));
  }
  if (degree == 4) {
    verdict.identities.push_back(
        identity("[S(-1)] = 2v-w", ch("S_pm(-1)"), embed(ctx, KuClass{2, -1})));
  }
  if (degree == 5) {
    verdict.identities.push_back(identity("w = 2[Q^dual]-3[S]",
                                          Rational(2) * ch("Q_dual") - Rational(3) * ch("S"), w));
  }
  return verdict;
}

}  // namespace kuwalls
