#include <doctest.h>

#include "poscurv/bounds.hpp"

using namespace poscurv;
using namespace poscurv::bounds;

namespace {
Rat dec(const char* s) { return rat_from_decimal(s); }
}

TEST_CASE("s_of") {
  CHECK(s_of(54) == 8);
  CHECK(s_of(74) == 10);
  CHECK(s_of(4) == 2);
  CHECK(s_of(1) == -1);  // floor(log2 1) + floor(log2 3) - 2
  CHECK_THROWS_AS(s_of(0), domain_error);
}

TEST_CASE("f0 base cases and frozen values") {
  CHECK(f0(2) == 2);
  CHECK(f0(38) == 20);
  CHECK(f0(52) == 27);
  CHECK(f0(54) == 5100);     // (2^8 - 1) * 20
  CHECK(f0(74) == 5217300);  // (2^10 - 1) * 5100
  CHECK(f0(100) == BigInt("5337297900", 10));
  CHECK(f0(135) == BigInt("21856234900500", 10));
  CHECK(f0(183) == BigInt("89501281917547500", 10));
  CHECK(f0(247) == BigInt("366507749452357012500", 10));
  CHECK(f0(248) == BigInt("366507749452357012500", 10));
  CHECK(f0(400) == BigInt("120465194041843197386214375", 10));
  // even base range agrees with n/2 + 1
  for (long n = 2; n <= 52; n += 2) CHECK(f0(n) == n / 2 + 1);
}

TEST_CASE("f0 domain") {
  CHECK_THROWS_AS(f0(0), domain_error);
  CHECK_THROWS_AS(f0(1), domain_error);
  CHECK_THROWS_AS(f0(3), domain_error);
  CHECK_THROWS_AS(f0(53), domain_error);
  CHECK_NOTHROW(f0(55));   // odd >= 54 recurses into the even regime
  CHECK_NOTHROW(f0(135));  // needed for kappa_4
}

TEST_CASE("f0 recursion argument stays even and in range") {
  for (long n = 54; n <= 10000; ++n) {
    long arg = f0_recursion_argument(n);
    CHECK(arg % 2 == 0);
    CHECK(arg >= 38);
    CHECK(arg < n);
  }
}

TEST_CASE("exact chain identity 2^{s(n)+2} <= n(n+2)") {
  for (long n = 2; n <= 100000; ++n) {
    BigInt lhs = pow_int(2, static_cast<unsigned long>(s_of(n) + 2));
    CHECK(lhs <= BigInt(n) * (n + 2));
  }
}

TEST_CASE("theorem_a_envelope") {
  Interval e54 = theorem_a_envelope(54, 96);
  Rat frozen = dec("1.61996010134639e18");
  CHECK(e54.lo <= frozen * (1 + dec("1e-13")));
  CHECK(e54.hi >= frozen * (1 - dec("1e-13")));

  Interval e2 = theorem_a_envelope(2, 96);
  Rat frozen2 = dec("10.625220232368");
  CHECK(e2.lo <= frozen2 * (1 + dec("1e-11")));
  CHECK(e2.hi >= frozen2 * (1 - dec("1e-11")));

  // f0(54) = 5100 <= envelope(54).lo
  CHECK(Rat(f0(54)) <= e54.lo);

  CHECK_THROWS_AS(theorem_a_envelope(3, 64), domain_error);
  CHECK_THROWS_AS(theorem_a_envelope(0, 64), domain_error);
}

TEST_CASE("kappa_sequence reproduces the table") {
  auto seq = kappa_sequence(6);
  REQUIRE(seq.size() == 7);
  CHECK(seq[0].n_i == 0);
  CHECK(seq[0].kappa.lo == 1);
  CHECK(seq[0].kappa.hi == 1);
  const long expected_n[7] = {0, 54, 74, 100, 135, 183, 247};
  const char* printed[7] = {nullptr,       "3.14823e-15", "1.45259e-15", "4.80780e-16",
                            "3.40869e-16", "1.10871e-16", "2.15684e-17"};
  for (int i = 1; i <= 6; ++i) {
    CHECK(seq[i].n_i == expected_n[i]);
    CHECK(seq[i].width_ok.is_true());
    CHECK(seq[i].kappa.width() <= Rat(1, pow_int(10, 21)));
    Rat p = dec(printed[i]);
    Rat tol = p / 200000;  // 5e-6 relative
    CHECK(seq[i].kappa.lo <= p + tol);
    CHECK(seq[i].kappa.hi >= p - tol);
    CHECK(seq[i].f0_value == f0(expected_n[i]));
  }
  // strictly decreasing (suggested by the table)
  for (int i = 0; i < 6; ++i) CHECK(seq[i].kappa.lo > seq[i + 1].kappa.hi);
}

TEST_CASE("alpha_constants") {
  auto c4 = alpha_constants(4);
  CHECK(c4.a == Rat(3, 4));
  REQUIRE(c4.b.has_value());
  CHECK(*c4.b == 2);

  auto c3 = alpha_constants(3);
  CHECK(c3.a == Rat(1, 2));
  CHECK_FALSE(c3.b.has_value());  // log term read as 0

  auto c5 = alpha_constants(5);
  CHECK(c5.a == Rat(6, 5));
  CHECK(*c5.b == Rat(4, 3));

  CHECK_THROWS_AS(alpha_constants(2), domain_error);

  // a_alpha * alpha * 2^4 = 3 * 2^alpha exactly
  for (long a = 3; a <= 64; ++a)
    CHECK(alpha_constants(a).a * a * 16 == Rat(3) * Rat(pow_int(2, static_cast<unsigned long>(a))));
  // b_alpha > 1 for alpha >= 4
  for (long a = 4; a <= 64; ++a) CHECK(*alpha_constants(a).b > 1);
}

TEST_CASE("s_alpha exact and enclosure cases") {
  Interval v1 = s_alpha(4, 16, 64);
  CHECK(v1.is_point());
  CHECK(v1.lo == 11);

  Interval v2 = s_alpha(4, 64, 64);
  CHECK(v2.is_point());
  CHECK(v2.lo == 21);

  Interval v3 = s_alpha(3, 6000, 96);
  Rat frozen = dec("1025.93156856932");
  CHECK(v3.lo <= frozen + dec("1e-9"));
  CHECK(v3.hi >= frozen - dec("1e-9"));
  CHECK_FALSE(v3.is_point());

  CHECK_THROWS_AS(s_alpha(2, 16, 64), domain_error);
  CHECK_THROWS_AS(s_alpha(4, 1, 64), domain_error);
}

TEST_CASE("theorem_b_bounds") {
  auto b3 = theorem_b_bounds(3, 100, 64);
  CHECK(b3.components_bound == 51);
  CHECK(b3.betti_sum_bound.is_point());
  CHECK(b3.betti_sum_bound.lo == 51);

  auto b4 = theorem_b_bounds(4, 100, 96);
  CHECK(b4.components_bound == 76);
  Rat frozen = dec("340.293692441");  // 51 (1 + log2 51)
  CHECK(b4.betti_sum_bound.lo <= frozen + dec("1e-6"));
  CHECK(b4.betti_sum_bound.hi >= frozen - dec("1e-6"));

  auto b42 = theorem_b_bounds(4, 2, 64);
  CHECK(b42.components_bound == 2);
  CHECK(b42.betti_sum_bound.is_point());  // 2 * (1 + log2 2) = 4 exactly
  CHECK(b42.betti_sum_bound.lo == 4);

  CHECK_THROWS_AS(theorem_b_bounds(4, 7, 64), domain_error);
}

TEST_CASE("envelope_expr matches direct evaluation") {
  for (long n : {4L, 28L, 100L, 1000L}) {
    Interval direct = envelope_of_base(Rat(n) / 2 + 1, 80);
    Interval via_expr = envelope_expr(Rat(n) / 2 + 1).eval(80);
    // both contain the exact value, so they must overlap
    CHECK(direct.lo <= via_expr.hi);
    CHECK(via_expr.lo <= direct.hi);
  }
}

TEST_CASE("s_alpha_expr agrees with s_alpha") {
  for (long a : {3L, 4L, 7L}) {
    for (long n : {6L, 64L, 1000L}) {
      Interval direct = s_alpha(a, n, 80);
      Interval via_expr = s_alpha_expr(a, Rat(n)).eval(80);
      CHECK(direct.lo <= via_expr.hi);
      CHECK(via_expr.lo <= direct.hi);
    }
  }
}
