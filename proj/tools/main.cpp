// Command-line surface: bound evaluation, certification suite, Table 1 and
// figure-data reproduction, obstruction queries.
//
// Exit codes: 0 success / all pass; 1 refutation or certified obstruction;
// 2 Undecided encountered; 3 usage or domain error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "poscurv/serialize.hpp"

namespace {

using namespace poscurv;

unsigned precision_ceiling_from_env() {
  const char* env = std::getenv("PRECISION_CEILING_BITS");
  if (!env) return bounds::kDefaultPrecisionCeiling;
  long v = std::atol(env);
  if (v < 4 || v > (1 << 22)) throw domain_error("PRECISION_CEILING_BITS out of range");
  return static_cast<unsigned>(v);
}

lie::Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return lie::Family::A;
  if (s == "B" || s == "b") return lie::Family::B;
  if (s == "C" || s == "c") return lie::Family::C;
  if (s == "D" || s == "d") return lie::Family::D;
  if (s == "T" || s == "t" || s == "torus") return lie::Family::torus;
  throw domain_error("unknown group family '" + s + "' (expected A|B|C|D|torus)");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

lie::GroupDescriptor parse_group(const std::string& desc) {
  std::vector<lie::GroupFactor> factors;
  for (const auto& part : split(desc, ',')) {
    auto bits = split(part, ':');
    if (bits.size() != 2) throw domain_error("group factor '" + part + "' is not FAM:RANK");
    factors.push_back(lie::GroupFactor{parse_family(bits[0]), std::stol(bits[1])});
  }
  return lie::GroupDescriptor::product(std::move(factors));
}

lie::SpaceDescriptor parse_space_item(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (s == "CAP2" || s == "CAYLEY") return lie::SpaceDescriptor::cayley_plane();
  if (s.rfind("CP", 0) == 0) return lie::SpaceDescriptor::complex_projective(std::stol(s.substr(2)));
  if (s.rfind("HP", 0) == 0)
    return lie::SpaceDescriptor::quaternionic_projective(std::stol(s.substr(2)));
  if (s.rfind("G", 0) == 0) {
    auto bits = split(s.substr(1), ':');
    if (bits.size() != 2) throw domain_error("grassmannian '" + s + "' is not G<p>:<m>");
    return lie::SpaceDescriptor::real_grassmannian(std::stol(bits[0]), std::stol(bits[1]));
  }
  if (s.rfind("S", 0) == 0) return lie::SpaceDescriptor::sphere(std::stol(s.substr(1)));
  throw domain_error("unknown space '" + s + "' (expected S<d>|CP<m>|HP<m>|CaP2|G<p>:<m>)");
}

lie::SpaceDescriptor parse_space(const std::string& desc) {
  auto parts = split(desc, ',');
  if (parts.size() == 1) return parse_space_item(parts[0]);
  std::vector<lie::SpaceDescriptor> factors;
  for (const auto& p : parts) factors.push_back(parse_space_item(p));
  return lie::SpaceDescriptor::product(std::move(factors));
}

int emit(const cli::Json& env_json) {
  std::cout << cli::dump(env_json);
  return 0;
}

int run_eval(const std::string& what, long n, long alpha, long i, const std::string& group,
             const std::string& space, unsigned ceiling) {
  cli::Json inputs, result;
  unsigned p = std::min(96u, ceiling);
  if (what == "f0") {
    inputs["n"] = n;
    result["n"] = n;
    result["f0"] = bounds::f0(n).get_str();
  } else if (what == "s") {
    inputs["n"] = n;
    result["n"] = n;
    result["s"] = bounds::s_of(n);
  } else if (what == "envelope") {
    inputs["n"] = n;
    result["n"] = n;
    result["envelope"] = cli::interval_json(bounds::theorem_a_envelope(n, p));
  } else if (what == "s-alpha") {
    inputs["alpha"] = alpha;
    inputs["n"] = n;
    Interval v = bounds::s_alpha(alpha, n, p);
    result["alpha"] = alpha;
    result["n"] = n;
    result["s_alpha"] = cli::interval_json(v);
    result["exact"] = v.is_point();
  } else if (what == "kappa") {
    inputs["i"] = i;
    auto seq = bounds::kappa_sequence(static_cast<int>(i), ceiling);
    const auto& e = seq.at(static_cast<std::size_t>(i));
    result["i"] = e.index;
    result["n_i"] = e.n_i.get_str();
    result["kappa"] = cli::interval_json(e.kappa);
    result["f0"] = e.f0_value.get_str();
    if (e.width_ok.is_undecided()) {
      std::cout << cli::dump(cli::envelope("eval kappa", inputs, result,
                                           cli::verdict_json(e.width_ok), ceiling));
      return 2;
    }
  } else if (what == "weyl") {
    inputs["group"] = group;
    result["group"] = group;
    result["weyl_order"] = lie::weyl_order(parse_group(group)).get_str();
  } else if (what == "chi") {
    inputs["space"] = space;
    auto s = parse_space(space);
    result["space"] = space;
    result["chi"] = lie::euler_characteristic(s).get_str();
    result["dim"] = lie::dimension(s);
  } else {
    throw domain_error("unknown eval target '" + what + "'");
  }
  return emit(cli::envelope("eval " + what, inputs, result, cli::Json::object(), ceiling));
}

int run_certify(const std::string& suite, unsigned precision, unsigned jobs, bool json) {
  std::vector<std::string> ids;
  if (suite != "all")
    for (const auto& id : split(suite, ',')) ids.push_back(id);
  certify::SuiteResult res = certify::run_suite(ids, precision, jobs);
  double wall = 0;
  for (const auto& r : res.reports) wall += r.wall_seconds;
  if (json) {
    // --jobs never changes the payload, so it is not echoed
    cli::Json inputs;
    inputs["suite"] = suite;
    cli::Json verdicts;
    verdicts["exit_code"] = res.exit_code;
    std::cout << cli::dump(
        cli::envelope("certify", inputs, cli::suite_payload(res), verdicts, precision));
  } else {
    std::cout << cli::suite_human_text(res);
  }
  std::cerr << "wall time " << wall << " s\n";
  return res.exit_code;
}

int run_figure(int which, const std::string& range, const std::string& format, unsigned ceiling) {
  auto parts = split(range, ':');
  if (parts.size() != 3) throw domain_error("range must be START:STOP:STEP");
  auto rows =
      cli::figure_rows(which, std::stol(parts[0]), std::stol(parts[1]), std::stol(parts[2]), ceiling);
  if (format == "csv") {
    std::cout << cli::figure_csv(rows);
  } else if (format == "json") {
    cli::Json inputs;
    inputs["which"] = which;
    inputs["range"] = range;
    std::cout << cli::dump(cli::envelope("figure", inputs, cli::figure_payload(rows),
                                         cli::Json::object(), ceiling));
  } else {
    throw domain_error("format must be csv or json");
  }
  return 0;
}

int obstruct_exit(const obstruct::ObstructionReport& r) {
  bool any_true = false, any_undecided = false;
  for (const auto& e : r.entries) {
    any_true |= e.obstructed.is_true();
    any_undecided |= e.obstructed.is_undecided() || e.applicable.is_undecided();
  }
  return any_true ? 1 : (any_undecided ? 2 : 0);
}

int run_obstruct(const std::string& kind, const obstruct::ObstructionQuery& q, bool json,
                 unsigned ceiling) {
  obstruct::ObstructionReport rep = obstruct::run_query(q, ceiling);
  if (json) {
    cli::Json inputs;
    inputs["kind"] = kind;
    inputs["n"] = q.n;
    inputs["rank"] = q.rank;
    cli::Json verdicts;
    verdicts["exit_code"] = obstruct_exit(rep);
    std::cout << cli::dump(
        cli::envelope("obstruct " + kind, inputs, cli::obstruction_payload(rep), verdicts, ceiling));
  } else {
    std::cout << cli::obstruction_human_text(rep);
  }
  return obstruct_exit(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified bounds and obstruction checks for positively curved manifolds with "
               "torus symmetry"};
  app.require_subcommand(1);

  unsigned ceiling = 4096;
  try {
    ceiling = precision_ceiling_from_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a single bound or constant");
  std::string eval_what;
  eval->add_option("what", eval_what, "f0|s|envelope|s-alpha|kappa|weyl|chi")->required();
  long n = 0, alpha = 0, idx = 0;
  std::string group, space;
  eval->add_option("--n", n, "dimension / argument");
  eval->add_option("--alpha", alpha, "alpha >= 3");
  eval->add_option("--i", idx, "kappa index");
  eval->add_option("--group", group, "FAM:RANK[,FAM:RANK...]");
  eval->add_option("--space", space, "S<d>|CP<m>|HP<m>|CaP2|G<p>:<m>[,...]");

  // table1
  auto* table1 = app.add_subcommand("table1", "reproduce the (n_i, kappa_i) table");
  long max_i = 6;
  table1->add_option("--max-i", max_i, "largest index (default 6)");

  // certify
  auto* certify_cmd = app.add_subcommand("certify", "run registered claims");
  std::string suite = "all";
  unsigned precision = ceiling, jobs = 1;
  bool certify_json = false;
  certify_cmd->add_option("--suite", suite, "all or ID[,ID...]");
  certify_cmd->add_option("--precision", precision, "precision ceiling in bits");
  certify_cmd->add_option("--jobs", jobs, "parallel workers");
  certify_cmd->add_flag("--json", certify_json, "emit the JSON envelope");

  // figure
  auto* figure = app.add_subcommand("figure", "emit figure data");
  int which = 1;
  std::string range, format = "csv";
  figure->add_option("--which", which, "1 or 2")->required();
  figure->add_option("--range", range, "START:STOP:STEP")->required();
  figure->add_option("--format", format, "csv|json")->required();

  // obstruct
  auto* obstruct_cmd = app.add_subcommand("obstruct", "run obstruction checks");
  std::string okind;
  obstruct_cmd->add_option("kind", okind, "euler|product|connsum|symmspace|tower|genus")
      ->required();
  long on = 0, orank = 0, kfold = 0, ss_rank = 0;
  std::string chi_str = "0", chi_factor_str = "0", fibers;
  bool spin = false, b2b4zero = false, obstruct_json = false;
  obstruct_cmd->add_option("--n", on, "manifold dimension")->required();
  obstruct_cmd->add_option("--rank", orank, "symmetry rank dim T")->required();
  obstruct_cmd->add_option("--chi", chi_str, "Euler characteristic of M");
  obstruct_cmd->add_option("--chi-factor", chi_factor_str, "Euler characteristic of the factor N");
  obstruct_cmd->add_option("--k", kfold, "number of factors/summands");
  obstruct_cmd->add_option("--ss-rank", ss_rank, "rank of the symmetric space");
  obstruct_cmd->add_option("--fibers", fibers, "comma-separated fiber Euler characteristics");
  obstruct_cmd->add_flag("--spin", spin, "M is spin");
  obstruct_cmd->add_flag("--b2b4zero", b2b4zero, "b2(M) = b4(M) = 0");
  obstruct_cmd->add_flag("--json", obstruct_json, "emit the JSON envelope");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << "\n";
    return 3;
  }

  try {
    if (*eval) return run_eval(eval_what, n, alpha, idx, group, space, ceiling);
    if (*table1) {
      cli::Json inputs;
      inputs["max_i"] = max_i;
      cli::Json payload = cli::table1_payload(static_cast<int>(max_i), ceiling);
      bool undecided = false;
      for (const auto& row : payload["rows"])
        undecided |= row["width_certified"]["verdict"] == "Undecided";
      std::cout << cli::dump(
          cli::envelope("table1", inputs, payload, cli::Json::object(), ceiling));
      return undecided ? 2 : 0;
    }
    if (*certify_cmd) return run_certify(suite, precision, jobs, certify_json);
    if (*figure) return run_figure(which, range, format, ceiling);
    if (*obstruct_cmd) {
      obstruct::ObstructionQuery q;
      q.n = on;
      q.rank = orank;
      if (okind == "euler") {
        q.structure = obstruct::EulerStructure{BigInt(chi_str, 10)};
      } else if (okind == "product") {
        q.structure = obstruct::ProductPower{std::nullopt, BigInt(chi_factor_str, 10), kfold};
      } else if (okind == "connsum") {
        q.structure = obstruct::ConnectedSum{BigInt(chi_factor_str, 10), kfold};
      } else if (okind == "symmspace") {
        q.structure = obstruct::SymmetricSpaceStructure{ss_rank};
      } else if (okind == "tower") {
        std::vector<BigInt> chis;
        for (const auto& part : split(fibers, ','))
          if (!part.empty()) chis.emplace_back(part, 10);
        q.structure = obstruct::FibrationTower{std::move(chis)};
      } else if (okind == "genus") {
        q.structure = obstruct::EllipticGenusQuery{spin, b2b4zero};
      } else {
        throw domain_error("unknown obstruct kind '" + okind + "'");
      }
      return run_obstruct(okind, q, obstruct_json, ceiling);
    }
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const precision_error& e) {
    std::cerr << "precision ceiling reached: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
