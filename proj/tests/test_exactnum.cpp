#include <doctest.h>

#include <random>

#include "oracle_mpfr.hpp"
#include "poscurv/expr.hpp"

using namespace poscurv;

namespace {

Rat dec(const char* s) { return rat_from_decimal(s); }

// enclosure must reach the 30-digit frozen value up to its own rounding
bool contains_frozen(const Interval& enc, const Rat& frozen, const Rat& frozen_err) {
  return enc.lo <= frozen + frozen_err && enc.hi >= frozen - frozen_err;
}

const Rat kTinyErr = dec("1e-28");  // slack for 30-digit frozen decimals

}  // namespace

TEST_CASE("floor_log_exact") {
  CHECK(floor_log_exact(2, 54) == 5);
  CHECK(floor_log_exact(2, 64) == 6);
  CHECK(floor_log_exact(2, 1) == 0);
  CHECK(floor_log_exact(3, 80) == 3);
  CHECK_THROWS_AS(floor_log_exact(2, 0), domain_error);
  CHECK_THROWS_AS(floor_log_exact(1, 5), domain_error);
  // defining property on a grid
  for (long b : {2L, 3L, 5L, 10L}) {
    for (long n = 1; n <= 2000; ++n) {
      long e = floor_log_exact(b, n);
      CHECK(pow_int(b, static_cast<unsigned long>(e)) <= n);
      CHECK(pow_int(b, static_cast<unsigned long>(e + 1)) > n);
    }
  }
}

TEST_CASE("decimal parsing and rendering") {
  CHECK(dec("3.14823e-15") == Rat(BigInt(314823), pow_int(10, 20)));
  CHECK(dec("0.325973") == Rat(325973, 1000000));
  CHECK(dec("-2.5") == Rat(-5, 2));
  CHECK(rat_to_exact_decimal(Rat(1, 8)) == "0.125");
  CHECK(rat_to_exact_decimal(Rat(5100)) == "5100");
  CHECK_THROWS_AS(rat_to_exact_decimal(Rat(1, 3)), domain_error);
  // directed rendering brackets the value
  Rat x(355, 113);
  Rat lo = dec(rat_to_decimal(x, 10, RoundDir::down).c_str());
  Rat hi = dec(rat_to_decimal(x, 10, RoundDir::up).c_str());
  CHECK(lo <= x);
  CHECK(hi >= x);
  CHECK(hi - lo <= dec("1e-8"));
  // BigInt decimal round-trip
  BigInt big("123456789012345678901234567890123456789");
  CHECK(BigInt(big.get_str()) == big);
}

TEST_CASE("interval arithmetic is outward") {
  Interval a(Rat(1, 3), Rat(1, 2));
  Interval b(Rat(-2), Rat(5));
  Interval p = a * b;
  CHECK(p.lo == Rat(-1));
  CHECK(p.hi == Rat(5, 2));
  CHECK_THROWS_AS(a / b, domain_error);
  Interval c = coarsen(Interval(Rat(1, 3), Rat(1, 3)), 10);
  CHECK(c.lo <= Rat(1, 3));
  CHECK(c.hi >= Rat(1, 3));
  CHECK(c.width() <= Rat(2, 1024));
}

TEST_CASE("ln_enclosure spec examples") {
  Interval one = ln_enclosure(Rat(1), dec("1e-10"));
  CHECK(one.lo == 0);
  CHECK(one.hi == 0);

  Interval two = ln_enclosure(Rat(2), dec("1e-10"));
  CHECK(two.width() <= dec("1e-10"));
  CHECK(contains_frozen(two, dec("0.693147180559945309417232121458"), kTinyErr));

  Interval ft = ln_enclosure(Rat(4, 3), dec("1e-10"));
  CHECK(ft.width() <= dec("1e-10"));
  CHECK(contains_frozen(ft, dec("0.287682072451780927439219005994"), kTinyErr));

  CHECK_THROWS_AS(ln_enclosure(Rat(0), Rat(1, 100)), domain_error);
  CHECK_THROWS_AS(ln_enclosure(Rat(-3), Rat(1, 100)), domain_error);
  CHECK_THROWS_AS(ln_enclosure(Rat(2), Rat(0)), domain_error);
}

#ifdef POSCURV_HAVE_MPFR
TEST_CASE("ln enclosure soundness against the MPFR oracle") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<long> num(1, 1000000), den(1, 1000000);
  const Rat w = dec("1e-8");
  for (int rep = 0; rep < 10000; ++rep) {
    Rat x(num(rng), den(rng));
    x.canonicalize();
    if (x > 1000000) continue;
    Interval enc = ln_enclosure(x, w);
    Interval oracle_bracket = oracle::ln_bracket(x);
    CHECK(enc.contains(oracle_bracket));
    CHECK(enc.width() <= w);
  }
  // a few spot widths, tighter and looser
  for (const char* ws : {"1e-4", "1e-16", "1e-24"}) {
    for (int rep = 0; rep < 200; ++rep) {
      Rat x(num(rng), den(rng));
      x.canonicalize();
      Interval enc = ln_enclosure(x, dec(ws));
      CHECK(enc.contains(oracle::ln_bracket(x)));
      CHECK(enc.width() <= dec(ws));
    }
  }
}

TEST_CASE("exp enclosure soundness against the MPFR oracle") {
  std::mt19937_64 rng(77001);
  std::uniform_int_distribution<long> num(-400000, 400000), den(1, 1000);
  for (int rep = 0; rep < 2000; ++rep) {
    Rat x(num(rng), den(rng));
    x.canonicalize();
    Interval enc = exp_point_enclosure(x, 64);
    CHECK(enc.contains(oracle::exp_bracket(x)));
  }
  Interval e0 = exp_point_enclosure(Rat(0), 64);
  CHECK(e0.lo == 1);
  CHECK(e0.hi == 1);
}
#endif

TEST_CASE("ln monotone refinement") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long> num(1, 100000), den(1, 100000);
  for (int rep = 0; rep < 150; ++rep) {
    Rat x(num(rng), den(rng));
    x.canonicalize();
    Rat w = Rat(1, 16);
    Interval prev = ln_enclosure(x, w);
    for (int halving = 0; halving < 24; ++halving) {
      w /= 2;
      Interval cur = ln_enclosure(x, w);
      CHECK(cur.lo >= prev.lo);
      CHECK(cur.hi <= prev.hi);
      prev = cur;
    }
  }
}

TEST_CASE("pow_enclosure spec examples") {
  Interval eight = pow_enclosure(Interval::point(Rat(2)), Interval::point(Rat(3)), 64);
  CHECK(eight.lo == 8);
  CHECK(eight.hi == 8);

  Interval ones = pow_enclosure(Interval::point(Rat(1)),
                                Interval(Rat(-17, 3), Rat(22, 7)), 64);
  CHECK(ones.lo == 1);
  CHECK(ones.hi == 1);

  // 28^{1 + log_{4/3} 28}: the kappa_1 denominator
  Interval l28 = ln_enclosure(Rat(28), dec("1e-30"));
  Interval l43 = ln_4_3_enclosure(100);
  Interval expo = l28 / l43 + Rat(1);
  Interval v = pow_enclosure(Interval::point(Rat(28)), expo, 96);
  Rat frozen = dec("1.61996010134639e18");
  CHECK(v.lo <= frozen * (1 + dec("1e-13")));
  CHECK(v.hi >= frozen * (1 - dec("1e-13")));
  CHECK(v.width() / v.lo <= dec("1e-12"));

  CHECK_THROWS_AS(pow_enclosure(Interval(Rat(-1), Rat(2)), Interval::point(Rat(2)), 64),
                  domain_error);
}

TEST_CASE("certified_compare spec examples") {
  // log_{4/3}(54) vs integers: exact rewrite, no transcendental evaluation
  Expr log54 = Expr::log(Expr::rational(Rat(4, 3)), Expr::integer(54));
  auto c14 = certified_compare(log54, Expr::integer(14), 64);
  REQUIRE(c14.ordering.has_value());
  CHECK(*c14.ordering == Ordering::less);
  CHECK(c14.verdict.is_true());

  auto c13 = certified_compare(log54, Expr::integer(13), 64);
  REQUIRE(c13.ordering.has_value());
  CHECK(*c13.ordering == Ordering::greater);

  auto ceq = certified_compare(Expr::ln(Expr::integer(1)), Expr::integer(0), 64);
  REQUIRE(ceq.ordering.has_value());
  CHECK(*ceq.ordering == Ordering::equal);
  CHECK(ceq.verdict.is_true());
}

TEST_CASE("certified_compare antisymmetry and precision consistency") {
  std::mt19937_64 rng(9002);
  std::uniform_int_distribution<long> small(2, 60);
  for (int rep = 0; rep < 300; ++rep) {
    long a = small(rng), b = small(rng), c = small(rng);
    Expr lhs = Expr::ln(Expr::integer(a)) * Expr::integer(b);
    Expr rhs = Expr::ln(Expr::integer(c)) + Expr::rational(Rat(b, a));
    auto fwd = certified_compare(lhs, rhs, 256);
    auto rev = certified_compare(rhs, lhs, 256);
    REQUIRE(fwd.ordering.has_value());
    REQUIRE(rev.ordering.has_value());
    if (*fwd.ordering == Ordering::less) CHECK(*rev.ordering == Ordering::greater);
    if (*fwd.ordering == Ordering::greater) CHECK(*rev.ordering == Ordering::less);
    if (*fwd.ordering == Ordering::equal) CHECK(*rev.ordering == Ordering::equal);
    // doubling the ceiling never contradicts
    auto fwd2 = certified_compare(lhs, rhs, 512);
    CHECK(*fwd2.ordering == *fwd.ordering);
  }
}

TEST_CASE("log-vs-integer rewrite agrees with interval evaluation") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<long> pq(2, 50), nn(2, 10000), rr(-12, 24);
  int checked = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    long p = pq(rng), q = pq(rng), n = nn(rng), r = rr(rng);
    if (p == q) continue;
    Rat base(p, q);
    base.canonicalize();
    // rewrite path
    auto fast = certified_compare(Expr::log(Expr::rational(base), Expr::integer(n)),
                                  Expr::integer(r), 64);
    // interval path through the ln ratio (different tree shape, no rewrite)
    Expr ratio = Expr::ln(Expr::integer(n)) / Expr::ln(Expr::rational(base));
    auto slow = certified_compare(ratio, Expr::integer(r), 512);
    REQUIRE(fast.ordering.has_value());
    if (slow.ordering.has_value()) {
      CHECK(*fast.ordering == *slow.ordering);
      ++checked;
    } else {
      // interval path can only stall on an exact tie; confirm it
      CHECK(pow_rat(base, r) == n);
    }
  }
  CHECK(checked > 800);
}

TEST_CASE("Expr floor/ceil construction rules") {
  Expr exact = Expr::rational(Rat(7, 2)) + Expr::integer(1);
  CHECK(*Expr::floor(exact).exact_value() == 4);
  CHECK(*Expr::ceil(exact).exact_value() == 5);
  CHECK_THROWS_AS(Expr::floor(Expr::ln(Expr::integer(3))), domain_error);
  CHECK_THROWS_AS(Expr::ceil(Expr::exp(Expr::integer(1))), domain_error);
  CHECK_THROWS_AS(Expr::ln(Expr::integer(-1)), domain_error);
  CHECK_THROWS_AS(Expr::log(Expr::integer(1), Expr::integer(5)), domain_error);
}

TEST_CASE("certified_ceil") {
  // exact path
  auto c1 = certified_ceil(Expr::rational(Rat(7, 2)), 64);
  CHECK(c1.verdict.is_true());
  CHECK(c1.value == 4);
  // transcendental path: 121/6 + 2 log2(121) - 3 has ceiling 32
  Expr x = Expr::rational(Rat(121, 6)) +
           Expr::integer(2) * Expr::log(Expr::integer(2), Expr::integer(121)) - Expr::integer(3);
  auto c2 = certified_ceil(x, 4096);
  CHECK(c2.verdict.is_true());
  CHECK(c2.value == 32);
  // starved ceiling yields Undecided, not a wrong answer
  auto c3 = certified_ceil(x, 4);
  CHECK((c3.verdict.is_undecided() || c3.value == 32));
}

TEST_CASE("exactness propagation") {
  Expr e = (Expr::integer(3) + Expr::rational(Rat(1, 2))) * Expr::integer(4);
  REQUIRE(e.is_exact());
  CHECK(*e.exact_value() == 14);
  CHECK(Expr::pow(Expr::integer(2), Expr::integer(10)).is_exact());
  CHECK(*Expr::pow(Expr::integer(2), Expr::integer(-2)).exact_value() == Rat(1, 4));
  CHECK(*Expr::log(Expr::integer(2), Expr::integer(1024)).exact_value() == 10);
  CHECK(*Expr::log(Expr::rational(Rat(4, 3)), Expr::rational(Rat(16, 9))).exact_value() == 2);
  CHECK(*Expr::log(Expr::integer(2), Expr::rational(Rat(1, 8))).exact_value() == -3);
  CHECK_FALSE(Expr::log(Expr::integer(2), Expr::integer(1000)).is_exact());
}

TEST_CASE("ln over a non-point interval brackets both endpoints") {
  Interval x(Rat(2), Rat(3));
  Interval l = ln_interval(x, 64);
  CHECK(l.lo <= dec("0.693147180559945309417232121458") + kTinyErr);
  CHECK(l.hi >= dec("1.09861228866810969139524523692") - kTinyErr);
  CHECK(l.width() <= dec("0.40547"));  // ln 3 - ln 2 + slack
}

TEST_CASE("exp magnitude guard") {
  CHECK_THROWS_AS(exp_point_enclosure(Rat(pow_int(2, 30)), 64), precision_error);
}

TEST_CASE("directed decimal rendering of negatives") {
  Rat x(-355, 113);
  Rat lo = dec(rat_to_decimal(x, 8, RoundDir::down).c_str());
  Rat hi = dec(rat_to_decimal(x, 8, RoundDir::up).c_str());
  CHECK(lo <= x);
  CHECK(hi >= x);
  CHECK(rat_to_exact_decimal(Rat(-5, 4)) == "-1.25");
}

TEST_CASE("log2_enclosure exact on powers of two") {
  CHECK(log2_enclosure(Rat(1024), 64).is_point());
  CHECK(log2_enclosure(Rat(1024), 64).lo == 10);
  CHECK(log2_enclosure(Rat(1, 32), 64).lo == -5);
  CHECK_FALSE(log2_enclosure(Rat(1000), 64).is_point());
}

TEST_CASE("rational_power_match") {
  long k = 0;
  CHECK(rational_power_match(Rat(2), Rat(1024), k));
  CHECK(k == 10);
  CHECK(rational_power_match(Rat(4, 3), Rat(64, 27), k));
  CHECK(k == 3);
  CHECK(rational_power_match(Rat(4, 3), Rat(27, 64), k));
  CHECK(k == -3);
  CHECK(rational_power_match(Rat(128, 127), Rat(1), k));
  CHECK(k == 0);
  CHECK_FALSE(rational_power_match(Rat(128, 127), Rat(3), k));
  CHECK_FALSE(rational_power_match(Rat(2), Rat(1000), k));
}
