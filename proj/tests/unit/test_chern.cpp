#include "doctest.h"

#include "kuwalls/chern.hpp"
#include "kuwalls/ku_lattice.hpp"
#include "kuwalls/rational.hpp"
#include "support.hpp"

#include <stdexcept>

using namespace kuwalls;

namespace {
Rational q(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("rational parsing and canonical text") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-1/2") == q(-1, 2));
  CHECK(parse_rational("4/8") == q(1, 2));
  CHECK(to_string(q(4, -8)) == "-1/2");
  CHECK(to_string(q(6, 3)) == "2");
  CHECK(to_string(q(0, 5)) == "0");
  for (const char* bad : {"", "1/0", "a", "1/2/3", "1.5", " 1", "--1"}) {
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  CHECK(floor(q(-1, 2)) == -1);
  CHECK(ceil(q(-1, 2)) == 0);
  CHECK(is_integer(q(4, 2)));
  CHECK_FALSE(is_integer(q(1, 3)));
}

TEST_CASE("degree range") {
  for (int d = 1; d <= 5; ++d) CHECK_NOTHROW(FanoContext{d});
  CHECK_THROWS_AS(FanoContext(0), std::out_of_range);
  CHECK_THROWS_AS(FanoContext(6), std::out_of_range);
  CHECK(FanoContext(3).h_c2() == 12);
}

TEST_CASE("ring_multiply examples") {
  ChernVector w0{0, 1, q(-1, 2), q(1, 6)};
  CHECK(ChernVector::unit() * w0 == w0);
  CHECK(ChernVector{1, -1, q(1, 2), q(-1, 6)} * ChernVector{1, 1, q(1, 2), q(1, 6)} ==
        ChernVector::unit());
  for (int d = 1; d <= 5; ++d) {
    ChernVector v{1, 0, q(-1, d), 0};
    CHECK(v * v == ChernVector{1, 0, q(-2, d), 0});
  }
  CHECK(line_bundle(2) == exp_h(2));
  CHECK(line_bundle(1) * line_bundle(-1) == ChernVector::unit());
}

TEST_CASE("twist examples") {
  for (int d = 1; d <= 5; ++d) {
    FanoContext ctx(d);
    auto t = twist(w_vector(ctx), q(-1, 2));
    CHECK(t.r == 0);
    CHECK(t.c1 == 1);
    CHECK(t.c2 == 0);
  }
  CHECK(twist(ChernVector::unit(), q(-1, 2)) == ChernVector{1, q(1, 2), q(1, 8), q(1, 48)});
  ChernVector x{2, q(1, 3), q(-5, 7), q(1, 11)};
  CHECK(twist(x, 0) == x);
  CHECK(twist(x, 1) == x * exp_h(-1));
}

TEST_CASE("dual examples") {
  CHECK(dual(ChernVector::unit()) == ChernVector::unit());
  for (int d = 1; d <= 5; ++d) {
    FanoContext ctx(d);
    CHECK(dual(w_vector(ctx)) == ChernVector{0, -1, q(-1, 2), q(1, d) - q(1, 6)});
  }
  ChernVector x{2, q(1, 3), q(-5, 7), q(1, 11)};
  CHECK(dual(dual(x)) == x);
}

TEST_CASE("hrr_chi examples") {
  for (int d = 1; d <= 5; ++d) {
    FanoContext ctx(d);
    CHECK(hrr_chi(ctx, ChernVector::unit()) == 1);
    // h^0(O(1)) = d + 2 on index-two Fano threefolds.
    CHECK(hrr_chi(ctx, line_bundle(1)) == d + 2);
    CHECK(hrr_chi(ctx, point_class(ctx)) == 1);
    // Serre duality: chi(O(-1)) = -chi(O(-1)) = 0 and chi(O(-2)) = -chi(O).
    CHECK(hrr_chi(ctx, line_bundle(-1)) == 0);
    CHECK(hrr_chi(ctx, line_bundle(-2)) == -1);
  }
  CHECK(hrr_chi(FanoContext(1), line_bundle(1)) == 3);
  CHECK(hrr_chi(FanoContext(2), line_bundle(1)) == 4);
}

TEST_CASE("chi_pair examples") {
  for (int d = 1; d <= 5; ++d) {
    FanoContext ctx(d);
    CHECK(chi_pair(ctx, v_vector(ctx), v_vector(ctx)) == -1);
    CHECK(chi_pair(ctx, w_vector(ctx), v_vector(ctx)) == 1 - d);
  }
  FanoContext y2(2);
  CHECK(chi_pair(y2, w_vector(y2), w_vector(y2)) == -2);
}

TEST_CASE("lattice membership") {
  FanoContext y3(3);
  auto lat = y3.default_lattice();
  CHECK(lat.denominators == std::array<long, 4>{1, 1, 6, 6});
  CHECK(lat.contains(w_vector(y3)));
  CHECK_FALSE(lat.contains(ChernVector{q(1, 2), 0, 0, 0}));
  CHECK(lat.contains(ChernVector{1, 0, 0, q(1, 7)}, 3));
  CHECK(FanoContext(5).default_lattice().denominators == std::array<long, 4>{1, 1, 10, 30});
}

TEST_CASE("chern properties") {
  using namespace kuwalls::testing;
  for (auto r : {prop_twist_additivity(1000, 11), prop_discriminant_twist_invariance(1000, 12),
                 prop_ring_axioms(1000, 13), prop_serre_symmetry(1000, 14)}) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.passed());
  }
}
