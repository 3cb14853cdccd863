#pragma once

#include <functional>
#include <set>
#include <variant>
#include <vector>

#include "poscurv/verdict.hpp"

// Registry of the finite numerical claims embedded in the article's proofs,
// each executed over its full parameter grid with certified arithmetic.
namespace poscurv::certify {

struct AllTrue {};
struct ExceptionSet {
  std::set<long long> required;  // keys that must come out CertFalse
  std::set<long long> allowed;   // every CertFalse key must lie in here
};
struct ReportOnly {};
using Expectation = std::variant<AllTrue, ExceptionSet, ReportOnly>;

struct ClaimReport {
  std::string id;
  std::size_t grid_size = 0;
  std::size_t n_true = 0, n_false = 0, n_undecided = 0;
  std::vector<std::string> false_points;      // labels, grid order
  std::vector<std::string> undecided_points;  // labels, grid order, capped
  std::vector<long long> false_keys;
  double wall_seconds = 0;
  bool pass = false;      // zero Undecided and expectation satisfied
  bool violated = false;  // proven contradiction of the expectation
  std::string note;
};

// Number of undecided labels retained in a report (counts are always full).
inline constexpr std::size_t kMaxListedPoints = 100;

struct ClaimRecord {
  std::string id;
  std::string citation;  // where the claim lives in the article, e.g. "Table 1"
  std::string quote;     // verbatim source fragment; enforced non-empty
  std::string domain;    // grid description
  Expectation expectation;
  std::size_t grid_size = 0;
  std::function<Verdict(std::size_t, unsigned)> predicate;  // (flat index, ceiling)
  std::function<std::string(std::size_t)> label;
  std::function<long long(std::size_t)> key;                      // exception-set key
  std::function<std::string(const ClaimReport&, unsigned)> note;  // optional
};

const std::vector<ClaimRecord>& claim_registry();
const ClaimRecord& find_claim(const std::string& id);

ClaimReport run_claim(const std::string& id, unsigned precision_ceiling, unsigned jobs = 1);

struct SuiteResult {
  std::vector<ClaimReport> reports;
  int exit_code = 0;  // 0 all pass, 1 expectation violated, 2 Undecided present
};

// Empty id list means the full registry. Results are deterministic and
// independent of the job count: grid points land in preallocated slots.
SuiteResult run_suite(const std::vector<std::string>& ids, unsigned precision_ceiling,
                      unsigned jobs = 1);

}  // namespace poscurv::certify
