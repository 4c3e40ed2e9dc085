#include "doctest.h"

#include "kuwalls/catalog.hpp"
#include "kuwalls/consistency.hpp"
#include "kuwalls/ku_lattice.hpp"

#include <set>
#include <stdexcept>

using namespace kuwalls;

namespace {
Rational q(long n, long d = 1) { return make_rational(n, d); }

const CheckResult* find_check(const std::vector<CheckResult>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}
}  // namespace

TEST_CASE("catalog entries") {
  CHECK_THROWS_AS(catalog(0), std::out_of_range);
  for (int d = 1; d <= 5; ++d) {
    FanoContext ctx(d);
    auto entries = catalog(d);
    CHECK_THROWS_AS(find_entry(entries, "nope"), std::out_of_range);
    std::set<std::string> names;
    for (const auto& e : entries) CHECK(names.insert(e.name).second);

    auto ips = find_entry(entries, "I_{p|S}");
    CHECK(ips.chern == ChernVector{0, 1, q(-1, 2), q(1, 6) - q(1, d)});
    CHECK(ips.ku_class == kClassW);
    CHECK(find_entry(entries, "E_p").chern == w_vector(ctx));
    CHECK(find_entry(entries, "E_p").chern ==
          find_entry(entries, "O_Y(-1)[1]").chern + find_entry(entries, "I_p").chern);
    CHECK(find_entry(entries, "I_l").ku_class == kClassV);
    CHECK(find_entry(entries, "O_Y").ku_class == std::nullopt);
    CHECK(find_entry(entries, "C_p").chern == point_class(ctx));
    // chi(O_l) = 1 forces Ch3(O_l) = 0.
    auto ol = find_entry(entries, "O_l").chern;
    CHECK(ol == ChernVector{0, 0, q(1, d), 0});
    CHECK(hrr_chi(ctx, ol) == 1);
  }
  auto y5 = catalog(5);
  auto s = find_entry(y5, "S").chern, qd = find_entry(y5, "Q_dual").chern;
  CHECK(s == ChernVector{2, -1, q(1, 10), q(1, 30)});
  CHECK(2 * qd - 3 * s == w_vector(FanoContext(5)));
  auto y4 = catalog(4);
  CHECK(find_entry(y4, "S_pm").chern == ChernVector{2, 1, 0, q(-1, 12)});
  CHECK(find_entry(y4, "S_pm(-1)").ku_class == KuClass{2, -1});
  CHECK(chi_pair(FanoContext(4), ChernVector::unit(), find_entry(y4, "S_pm(-1)").chern) == 0);
}

TEST_CASE("Ku membership at the level of chi") {
  for (int d = 1; d <= 5; ++d) {
    FanoContext ctx(d);
    for (const auto& e : catalog(d)) {
      Rational c0 = chi_pair(ctx, ChernVector::unit(), e.chern);
      Rational c1 = chi_pair(ctx, line_bundle(1), e.chern);
      INFO("d=" << d << " " << e.name);
      if (e.ku_class) {
        CHECK(c0 == 0);
        CHECK(c1 == 0);
        CHECK(embed(ctx, *e.ku_class) == e.chern);
      } else {
        CHECK((c0 != 0 || c1 != 0));
      }
    }
    CHECK(chi_pair(ctx, ChernVector::unit(), ChernVector::unit()) == 1);
  }
}

TEST_CASE("verify_catalog") {
  for (int d = 1; d <= 5; ++d) {
    auto v = verify_catalog(d);
    CHECK(v.degree == d);
    CHECK(v.passed());
    for (const auto& e : v.entries) {
      INFO(e.entry);
      CHECK(e.passed());
    }
    CHECK(find_check(v.identities, "Ch(I_p) + Ch(O_Y(-1)[1]) = w") != nullptr);
  }
  CHECK(find_check(verify_catalog(4).identities, "[S(-1)] = 2v-w") != nullptr);
  CHECK(find_check(verify_catalog(5).identities, "w = 2[Q^dual]-3[S]") != nullptr);
  CHECK(find_check(verify_catalog(2).identities, "R(w) = [L_O(I_p(1))] = w - 2v") != nullptr);
}

TEST_CASE("consistency checks") {
  for (int d = 1; d <= 5; ++d) {
    auto items = degree_checks(d);
    CHECK(all_passed(items));
    for (const auto& i : items) {
      INFO(i.group << " " << i.result.name << " " << i.result.detail);
      CHECK(i.result.passed);
    }
  }
  CHECK(all_passed(global_checks()));
  CHECK(all_checks().size() == global_checks().size() + [] {
          std::size_t n = 0;
          for (int d = 1; d <= 5; ++d) n += degree_checks(d).size();
          return n;
        }());
  std::vector<CheckItem> failing{{"x", {"fails", false, ""}}};
  CHECK_FALSE(all_passed(failing));
}
