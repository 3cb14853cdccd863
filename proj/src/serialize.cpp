#include "poscurv/serialize.hpp"

#include <sstream>

#include "poscurv/bounds.hpp"

namespace poscurv::cli {

Json interval_json(const Interval& v, int sig) {
  Json j;
  j["lo"] = rat_to_decimal(v.lo, sig, RoundDir::down);
  j["hi"] = rat_to_decimal(v.hi, sig, RoundDir::up);
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["verdict"] = to_string(v.truth);
  j["precision_bits"] = v.precision_bits;
  return j;
}

Json claim_report_json(const certify::ClaimReport& r) {
  Json j;
  j["id"] = r.id;
  j["grid_size"] = r.grid_size;
  j["cert_true"] = r.n_true;
  j["cert_false"] = r.n_false;
  j["undecided"] = r.n_undecided;
  j["false_points"] = r.false_points;
  j["undecided_points"] = r.undecided_points;  // capped; the count above is full
  j["pass"] = r.pass;
  j["violated"] = r.violated;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json suite_payload(const certify::SuiteResult& s) {
  Json reports = Json::array();
  for (const auto& r : s.reports) reports.push_back(claim_report_json(r));
  Json j;
  j["reports"] = std::move(reports);
  j["exit_code"] = s.exit_code;
  return j;
}

std::string suite_human_text(const certify::SuiteResult& s) {
  std::ostringstream os;
  for (const auto& r : s.reports) {
    os << (r.pass ? "PASS" : (r.violated ? "FAIL" : "UNDECIDED")) << "  " << r.id << "  grid="
       << r.grid_size << " true=" << r.n_true << " false=" << r.n_false
       << " undecided=" << r.n_undecided;
    if (!r.false_points.empty()) {
      os << "  false at:";
      std::size_t shown = 0;
      for (const auto& p : r.false_points) {
        if (++shown > 8) {
          os << " ...";
          break;
        }
        os << " " << p;
      }
    }
    os << "\n";
    if (!r.note.empty()) os << "      note: " << r.note << "\n";
  }
  os << "suite exit " << s.exit_code << "\n";
  return os.str();
}

Json obstruction_payload(const obstruct::ObstructionReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json je;
    je["theorem"] = e.theorem;
    je["applicable"] = verdict_json(e.applicable);
    je["obstructed"] = verdict_json(e.obstructed);
    je["witness"] = e.witness;
    for (const auto& [k, v] : e.data) je[k] = v;
    entries.push_back(std::move(je));
  }
  Json j;
  j["n"] = r.n;
  j["rank"] = r.rank;
  j["max_rank_exceeded"] = r.max_rank_flag;
  j["entries"] = std::move(entries);
  return j;
}

std::string obstruction_human_text(const obstruct::ObstructionReport& r) {
  std::ostringstream os;
  if (r.max_rank_flag)
    os << "warning: rank " << r.rank << " exceeds the maximal symmetry rank floor((n+1)/2) = "
       << (r.n + 1) / 2 << "; no positively curved manifold realizes this query\n";
  for (const auto& e : r.entries) {
    os << e.theorem << ": applicable=" << to_string(e.applicable.truth)
       << " obstructed=" << to_string(e.obstructed.truth) << "\n    " << e.witness << "\n";
  }
  return os.str();
}

Json table1_payload(int max_i, unsigned precision_ceiling) {
  auto seq = bounds::kappa_sequence(max_i, precision_ceiling);
  Json rows = Json::array();
  for (const auto& e : seq) {
    Json row;
    row["i"] = e.index;
    row["n_i"] = e.n_i.get_str();
    row["kappa"] = interval_json(e.kappa);
    row["f0"] = e.f0_value.get_str();
    row["width_certified"] = verdict_json(e.width_ok);
    rows.push_back(std::move(row));
  }
  Json j;
  j["rows"] = std::move(rows);
  return j;
}

std::vector<FigureRow> figure_rows(int which, long start, long stop, long step,
                                   unsigned precision_ceiling) {
  if (which != 1 && which != 2) throw domain_error("figure: which must be 1 or 2");
  if (start < 2) throw domain_error("figure: start must be >= 2");
  if (step < 1) throw domain_error("figure: step must be >= 1");
  if (stop < start) throw domain_error("figure: stop must be >= start");
  if (which == 2 && start < 247)
    throw domain_error("figure 2 uses kappa_6, valid from n_6 = 247 on");
  int kappa_index = which == 1 ? 1 : 6;
  auto seq = bounds::kappa_sequence(kappa_index, precision_ceiling);
  const Interval& kappa = seq[static_cast<std::size_t>(kappa_index)].kappa;
  const Rat ref_coeff(113576, 1);  // 1.13576e-12 = 113576 / 10^17
  const Rat ref_den(pow_int(10, 17));

  std::vector<FigureRow> rows;
  for (long n = start; n <= stop; n += step) {
    if (n < 54 && n % 2 != 0) throw domain_error("figure: f0 is undefined at odd n < 54");
    FigureRow row;
    row.n = n;
    row.f0 = bounds::f0(n).get_str();
    unsigned p = ladder_first(precision_ceiling);
    Interval env = kappa * bounds::envelope_of_base(Rat(n) / 2 + 1, p);
    row.envelope_lo = rat_to_decimal(env.lo, kEndpointDigits, RoundDir::down);
    row.envelope_hi = rat_to_decimal(env.hi, kEndpointDigits, RoundDir::up);
    Rat ref = ref_coeff * Rat(pow_int(2, static_cast<unsigned long>(n))) / ref_den;
    row.ref_exponential = rat_to_exact_decimal(ref);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string figure_csv(const std::vector<FigureRow>& rows) {
  std::ostringstream os;
  os << "n,f0,envelope_lo,envelope_hi,ref_exponential\n";
  for (const auto& r : rows)
    os << r.n << "," << r.f0 << "," << r.envelope_lo << "," << r.envelope_hi << ","
       << r.ref_exponential << "\n";
  return os.str();
}

Json figure_payload(const std::vector<FigureRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["n"] = r.n;
    row["f0"] = r.f0;
    row["envelope_lo"] = r.envelope_lo;
    row["envelope_hi"] = r.envelope_hi;
    row["ref_exponential"] = r.ref_exponential;
    arr.push_back(std::move(row));
  }
  Json j;
  j["rows"] = std::move(arr);
  return j;
}

Json envelope(const std::string& command, Json inputs, Json result, Json verdict_summary,
              unsigned precision_bits) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["result"] = std::move(result);
  j["verdicts"] = std::move(verdict_summary);
  j["precision_ceiling_bits"] = precision_bits;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace poscurv::cli
