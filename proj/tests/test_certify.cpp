#include <doctest.h>

#include <set>

#include "poscurv/certify.hpp"
#include "poscurv/serialize.hpp"

using namespace poscurv;
using namespace poscurv::certify;

TEST_CASE("registry integrity") {
  const auto& reg = claim_registry();
  CHECK(reg.size() == 15);
  std::set<std::string> ids;
  for (const auto& c : reg) {
    CHECK_FALSE(c.quote.empty());
    CHECK_FALSE(c.citation.empty());
    CHECK(c.grid_size > 0);
    CHECK(bool(c.predicate));
    CHECK(bool(c.label));
    ids.insert(c.id);
  }
  CHECK(ids.size() == reg.size());
  for (const char* id : {"T1-n-seq", "T1-kappa", "L2.2-base", "L2.2-extended", "L2.2-chain",
                         "envelope-vs-2pow", "L5.1-1", "L5.1-2", "L5.1-3", "L4.1-exceptions",
                         "griesmer-threshold", "fig-ref-bound", "cor-c-log-ineq",
                         "kappa-monotone", "sphere-power-example"})
    CHECK(ids.count(id) == 1);
  CHECK_THROWS_AS(find_claim("no-such-claim"), domain_error);
}

TEST_CASE("T1-n-seq and T1-kappa pass") {
  auto r1 = run_claim("T1-n-seq", 4096);
  CHECK(r1.pass);
  CHECK(r1.n_true == 6);
  CHECK(r1.n_false == 0);
  CHECK(r1.n_undecided == 0);

  auto r2 = run_claim("T1-kappa", 4096);
  CHECK(r2.pass);
  CHECK(r2.n_true == 6);
}

TEST_CASE("L2.2-base certifies on [54, 72]") {
  auto r = run_claim("L2.2-base", 4096);
  CHECK(r.pass);
  CHECK(r.grid_size == 10);
  CHECK(r.n_true == 10);
}

TEST_CASE("L4.1-exceptions yields exactly the expected failures") {
  auto r = run_claim("L4.1-exceptions", 4096, 4);
  CHECK(r.grid_size == 5880);
  CHECK(r.n_undecided == 0);
  CHECK(r.pass);
  CHECK_FALSE(r.violated);
  std::set<long long> fails(r.false_keys.begin(), r.false_keys.end());
  CHECK(fails.count(126) == 1);
  CHECK(fails.count(131) == 1);
  for (long long k : fails) CHECK((k == 121 || k == 126 || k == 131));
  // the note must flag the n = 121 margin of the delta-subtracted reading
  CHECK(r.note.find("121") != std::string::npos);
  CHECK(r.note.find("0.026") != std::string::npos);
}

TEST_CASE("report-only claims") {
  auto r12 = run_claim("fig-ref-bound", 4096);
  CHECK(r12.pass);
  CHECK(r12.n_false == 0);

  auto r15 = run_claim("sphere-power-example", 4096);
  CHECK(r15.pass);
  CHECK(r15.note.find("[2, 157]") != std::string::npos);
  CHECK(r15.note.find("124") != std::string::npos);
  // CertTrue exactly on k in [2, 157]
  CHECK(r15.n_true == 156);

  auto r14 = run_claim("kappa-monotone", 4096);
  CHECK(r14.pass);
  CHECK(r14.n_true == 6);
}

TEST_CASE("L5.1-1 certifies all-true") {
  auto r = run_claim("L5.1-1", 4096, 4);
  CHECK(r.pass);
  CHECK(r.n_false == 0);
  CHECK(r.n_undecided == 0);
  CHECK(r.grid_size == 3548);
}

TEST_CASE("cor-c-log-ineq certifies all-true") {
  auto r = run_claim("cor-c-log-ineq", 4096, 4);
  CHECK(r.pass);
  CHECK(r.grid_size == 10000);
}

TEST_CASE("precision starvation yields Undecided, never flips") {
  auto starved = run_claim("T1-kappa", 16);
  CHECK(starved.n_false == 0);          // soundness: no wrong verdicts
  CHECK(starved.n_undecided == 6);      // nothing decidable at 16 bits
  CHECK_FALSE(starved.pass);
  CHECK_FALSE(starved.violated);        // inconclusive, not refuted

  auto starved10 = run_claim("L4.1-exceptions", 16);
  CHECK_FALSE(starved10.violated);
  // every decided point agrees with the full-precision run
  CHECK(starved10.n_false <= 3);
}

TEST_CASE("jobs do not change reports") {
  auto a = run_claim("L2.2-base", 4096, 1);
  auto b = run_claim("L2.2-base", 4096, 8);
  CHECK(cli::dump(cli::claim_report_json(a)) == cli::dump(cli::claim_report_json(b)));
}

TEST_CASE("suite aggregation") {
  auto res = run_suite({"T1-n-seq", "L2.2-base"}, 4096, 2);
  CHECK(res.exit_code == 0);
  CHECK(res.reports.size() == 2);

  auto starved = run_suite({"T1-kappa"}, 16);
  CHECK(starved.exit_code == 2);
}

TEST_CASE("report counts always sum to the grid size") {
  for (const char* id : {"T1-kappa", "L2.2-base", "L4.1-exceptions", "sphere-power-example"}) {
    for (unsigned ceiling : {16u, 4096u}) {
      auto r = run_claim(id, ceiling, 2);
      CHECK(r.n_true + r.n_false + r.n_undecided == r.grid_size);
    }
  }
}
