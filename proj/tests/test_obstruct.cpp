#include <doctest.h>

#include <random>

#include "poscurv/obstruct.hpp"

using namespace poscurv;
using namespace poscurv::obstruct;

TEST_CASE("min_rank_theorem_a") {
  CHECK(min_rank_theorem_a(1) == 0);
  CHECK(min_rank_theorem_a(2) == 3);
  CHECK(min_rank_theorem_a(14) == 10);
  CHECK(min_rank_theorem_a(54) == 14);
  CHECK(min_rank_theorem_a(64) == 15);
  CHECK(min_rank_theorem_a(80) == 16);
  CHECK(min_rank_theorem_a(248) == 20);
  CHECK(min_rank_theorem_a(800) == 24);
  CHECK_THROWS_AS(min_rank_theorem_a(0), domain_error);
}

TEST_CASE("min_rank sandwich and monotonicity on even n up to 10^4") {
  long prev = 0;
  for (long n = 2; n <= 10000; n += 2) {
    long r = min_rank_theorem_a(n);
    CHECK(pow_int(4, static_cast<unsigned long>(r)) >=
          BigInt(n) * pow_int(3, static_cast<unsigned long>(r)));
    if (r >= 1)
      CHECK(pow_int(4, static_cast<unsigned long>(r - 1)) <
            BigInt(n) * pow_int(3, static_cast<unsigned long>(r - 1)));
    CHECK(r >= prev);
    prev = r;
  }
}

TEST_CASE("check_euler spec examples") {
  ObstructionQuery q;
  q.n = 54;
  q.rank = 14;
  q.structure = EulerStructure{BigInt(6000)};
  auto e = check_euler(q);
  CHECK(e.applicable.is_true());
  CHECK(e.obstructed.is_true());  // 6000 > f0(54) = 5100

  q.structure = EulerStructure{BigInt(5000)};
  e = check_euler(q);
  CHECK(e.applicable.is_true());
  CHECK(e.obstructed.is_false());

  q.rank = 13;
  q.structure = EulerStructure{BigInt(6000)};
  e = check_euler(q);
  CHECK(e.applicable.is_false());
  CHECK(e.obstructed.is_false());  // below threshold: hard gate

  q.n = 55;
  q.rank = 14;
  e = check_euler(q);
  CHECK(e.applicable.is_false());
  CHECK(e.witness.find("odd") != std::string::npos);

  q.n = 54;
  q.simply_connected = false;
  e = check_euler(q);
  CHECK(e.applicable.is_false());
}

TEST_CASE("check_theorem_b spec examples") {
  auto e = check_theorem_b(64, 21, 4, 4096);
  CHECK(e.applicable.is_true());  // s_4(64) = 21 exactly
  bool found = false;
  for (const auto& [k, v] : e.data)
    if (k == "components_bound") {
      CHECK(v == "49");
      found = true;
    }
  CHECK(found);

  auto e2 = check_theorem_b(64, 20, 4, 4096);
  CHECK(e2.applicable.is_false());

  auto e3 = check_theorem_b(100, 31, 3, 4096);  // s_3(100) ~ 30.84
  CHECK(e3.applicable.is_true());
  for (const auto& [k, v] : e3.data)
    if (k == "components_bound") CHECK(v == "51");
}

TEST_CASE("check_stable_hopf product examples") {
  ObstructionQuery q;
  q.n = 800;
  q.rank = 24;
  q.structure = ProductPower{std::nullopt, BigInt(2), 400};
  auto e = check_stable_hopf(q, 4096);
  CHECK(e.applicable.is_true());
  CHECK(e.obstructed.is_true());  // 400 >= 3 (log2 800)^2 ~ 279

  q.n = 248;
  q.rank = 20;
  q.structure = ProductPower{std::nullopt, BigInt(2), 124};
  e = check_stable_hopf(q, 4096);
  CHECK(e.applicable.is_true());
  CHECK(e.obstructed.is_true());  // direct: 2^124 > f0(248)
  bool direct_fired = false, corollary_fired = true;
  for (const auto& [k, v] : e.data) {
    if (k == "direct_violation") direct_fired = v == "CertTrue";
    if (k == "corollary_violation") corollary_fired = v == "CertTrue";
  }
  CHECK(direct_fired);
  CHECK_FALSE(corollary_fired);  // 124 < 3 (log2 248)^2 ~ 190

  q.structure = ProductPower{std::nullopt, BigInt(2), 1};
  CHECK_THROWS_AS(check_stable_hopf(q, 4096), domain_error);

  // factor given as a space descriptor
  q.n = 248;
  q.rank = 20;
  q.structure = ProductPower{lie::SpaceDescriptor::sphere(2), BigInt(0), 124};
  e = check_stable_hopf(q, 4096);
  CHECK(e.obstructed.is_true());
}

TEST_CASE("check_stable_hopf connected sums") {
  ObstructionQuery q;
  q.n = 12;
  q.rank = 9;  // min_rank(12) = 9
  q.structure = ConnectedSum{BigInt(4), 3};
  auto e = check_stable_hopf(q, 4096);
  CHECK(e.applicable.is_true());
  // chi(M) = 2 + 3*(4-2) = 8 > f0(12) = 7: the direct test fires
  CHECK(bounds::f0(12) == 7);
  CHECK(e.obstructed.is_true());

  q.structure = ConnectedSum{BigInt(3), 2};
  e = check_stable_hopf(q, 4096);
  CHECK(e.obstructed.is_false());  // chi(M) = 4 within [2, 7]

  q.structure = ConnectedSum{BigInt(2), 3};
  CHECK_THROWS_AS(check_stable_hopf(q, 4096), domain_error);

  // chi(N) < 2 is admitted: chi(M) = 2 + k(chi_N - 2) drops below 2
  q.structure = ConnectedSum{BigInt(0), 5};
  e = check_stable_hopf(q, 4096);
  CHECK(e.obstructed.is_true());  // chi(M) = -8 < 2
}

TEST_CASE("check_symmetric_space spec examples") {
  ObstructionQuery q;
  q.n = 1024;
  q.rank = 27;  // 2 log2 1024 + 7 = 27 exactly
  q.structure = SymmetricSpaceStructure{303};
  auto e = check_symmetric_space(q, 4096);
  CHECK(e.applicable.is_true());
  CHECK(e.obstructed.is_true());  // 303 >= 3*100 + 3

  q.structure = SymmetricSpaceStructure{302};
  e = check_symmetric_space(q, 4096);
  CHECK(e.obstructed.is_false());

  q.rank = 26;
  q.structure = SymmetricSpaceStructure{5};
  e = check_symmetric_space(q, 4096);
  CHECK(e.applicable.is_false());
}

TEST_CASE("check_fibration_tower spec examples") {
  ObstructionQuery q;
  q.n = 80;
  q.rank = 16;  // min_rank(80)
  q.structure = FibrationTower{std::vector<BigInt>(40, BigInt(2))};
  auto e = check_fibration_tower(q);
  CHECK(e.applicable.is_true());
  CHECK(e.obstructed.is_true());  // 2^40 > f0(80) = 5739030
  CHECK(bounds::f0(80) == 5739030);

  q.n = 2;
  q.rank = 3;
  q.structure = FibrationTower{{BigInt(2)}};
  e = check_fibration_tower(q);
  CHECK(e.obstructed.is_false());  // chi = 2 <= f0(2) = 2

  q.n = 14;
  q.rank = 7;  // maximal possible, still below min_rank(14) = 10
  q.structure = FibrationTower{{BigInt(2), BigInt(6)}};
  e = check_fibration_tower(q);
  CHECK(e.applicable.is_false());
  CHECK(e.obstructed.is_false());  // 12 > f0(14) = 8 but vacuous
  CHECK(e.witness.find("vacuous") != std::string::npos);

  q.structure = FibrationTower{{BigInt(2), BigInt(1)}};
  CHECK_THROWS_AS(check_fibration_tower(q), domain_error);
}

TEST_CASE("elliptic_genus_vanishing spec examples") {
  ObstructionQuery q;
  q.n = 64;
  q.rank = 15;
  q.structure = EllipticGenusQuery{true, false};
  auto e = elliptic_genus_vanishing(q);
  CHECK(e.applicable.is_true());
  bool found = false;
  for (const auto& [k, v] : e.data)
    if (k == "vanishing_count") {
      CHECK(v == "4");
      found = true;
    }
  CHECK(found);

  q.n = 16;
  q.rank = 10;
  e = elliptic_genus_vanishing(q);
  for (const auto& [k, v] : e.data)
    if (k == "vanishing_count") CHECK(v == "1");

  q.n = 18;
  CHECK_THROWS_AS(elliptic_genus_vanishing(q), domain_error);
  q.n = 16;
  q.structure = EllipticGenusQuery{true, true};
  CHECK_THROWS_AS(elliptic_genus_vanishing(q), domain_error);
}

TEST_CASE("run_query sets the maximal-rank flag but still processes") {
  ObstructionQuery q;
  q.n = 12;
  q.rank = 8;  // floor((12+1)/2) = 6 < 8
  q.structure = EulerStructure{BigInt(100)};
  auto rep = run_query(q);
  CHECK(rep.max_rank_flag);
  CHECK(rep.entries.size() == 1);

  q.rank = 6;
  rep = run_query(q);
  CHECK_FALSE(rep.max_rank_flag);
}

TEST_CASE("gate and monotonicity invariants on a randomized grid") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<long> dn(1, 1000), dr(0, 40);
  std::uniform_int_distribution<long> dchi(-1000000, 1000000);
  for (int rep = 0; rep < 2500; ++rep) {
    ObstructionQuery q;
    q.n = 2 * dn(rng);
    q.rank = dr(rng);
    long chi = dchi(rng);
    q.structure = EulerStructure{BigInt(chi)};
    auto e = check_euler(q);
    if (e.obstructed.is_true()) CHECK(e.applicable.is_true());
    // monotone in chi: raising chi never turns obstructed off
    q.structure = EulerStructure{BigInt(chi) + 1 + (rep % 1000)};
    auto e2 = check_euler(q);
    if (e.obstructed.is_true()) CHECK(e2.obstructed.is_true());
  }
}

TEST_CASE("corollary obstruction implies the direct test on the product grid") {
  for (long chi_n : {2L, 3L, 4L, 6L}) {
    for (long k = 2; k <= 512; k += 5) {
      ObstructionQuery q;
      q.n = 2 * k;
      q.rank = min_rank_theorem_a(q.n);
      q.structure = ProductPower{std::nullopt, BigInt(chi_n), k};
      auto e = check_stable_hopf(q, 512);
      std::string direct, corollary;
      for (const auto& [key, v] : e.data) {
        if (key == "direct_violation") direct = v;
        if (key == "corollary_violation") corollary = v;
      }
      if (corollary == "CertTrue") CHECK(direct == "CertTrue");
    }
  }
}
