#pragma once

#include <json.hpp>

#include "poscurv/certify.hpp"
#include "poscurv/interval.hpp"
#include "poscurv/obstruct.hpp"

// Stable machine-readable output: one OutputEnvelope JSON object per
// invocation, byte-identical for identical inputs. Enclosures are always
// emitted as (lo, hi) pairs with outward-rounded decimal endpoints; exact
// integers are decimal strings. Wall-clock timing never enters the payload.
namespace poscurv::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr int kEndpointDigits = 12;

Json interval_json(const Interval& v, int sig = kEndpointDigits);
Json verdict_json(const Verdict& v);

Json claim_report_json(const certify::ClaimReport& r);
Json suite_payload(const certify::SuiteResult& s);
std::string suite_human_text(const certify::SuiteResult& s);

Json obstruction_payload(const obstruct::ObstructionReport& r);
std::string obstruction_human_text(const obstruct::ObstructionReport& r);

Json table1_payload(int max_i, unsigned precision_ceiling);

struct FigureRow {
  long n = 0;
  std::string f0;
  std::string envelope_lo, envelope_hi;  // kappa-scaled envelope enclosure
  std::string ref_exponential;           // exact decimal of 1.13576e-12 * 2^n
};
// which = 1 uses kappa_1; which = 2 uses kappa_6 and requires start >= 247.
// Any generated odd n < 54 is a domain error (f0 undefined there).
std::vector<FigureRow> figure_rows(int which, long start, long stop, long step,
                                   unsigned precision_ceiling);
std::string figure_csv(const std::vector<FigureRow>& rows);
Json figure_payload(const std::vector<FigureRow>& rows);

// The OutputEnvelope wrapper.
Json envelope(const std::string& command, Json inputs, Json result, Json verdict_summary,
              unsigned precision_bits);
std::string dump(const Json& j);

}  // namespace poscurv::cli
