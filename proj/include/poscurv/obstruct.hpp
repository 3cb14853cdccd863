#pragma once

#include <optional>
#include <variant>

#include "poscurv/bounds.hpp"
#include "poscurv/lie.hpp"

// User-facing obstruction engine: manifold data plus a symmetry rank in,
// theorem-by-theorem certified verdicts out. Applicability is a hard gate:
// below a theorem's rank threshold the engine never claims an obstruction.
namespace poscurv::obstruct {

struct EulerStructure {
  BigInt chi;
};
struct ProductPower {
  std::optional<lie::SpaceDescriptor> factor;  // chi taken from here when set
  BigInt chi_factor;                           // used when factor is empty
  long k = 0;
};
struct ConnectedSum {
  BigInt chi_summand;  // must differ from 2 (nontrivial sum)
  long k = 0;
};
struct SymmetricSpaceStructure {
  long space_rank = 0;
};
struct FibrationTower {
  std::vector<BigInt> fiber_chis;  // each >= 2
};
struct EllipticGenusQuery {
  bool spin = false;
  bool b2_b4_zero = false;  // exactly one of the two flags
};

using Structure = std::variant<EulerStructure, ProductPower, ConnectedSum,
                               SymmetricSpaceStructure, FibrationTower, EllipticGenusQuery>;

struct ObstructionQuery {
  long n = 0;     // manifold dimension
  long rank = 0;  // dim T
  bool simply_connected = true;
  Structure structure;
};

struct TheoremEntry {
  std::string theorem;
  Verdict applicable;
  Verdict obstructed;  // CertTrue only when applicable is CertTrue
  std::string witness;
  std::vector<std::pair<std::string, std::string>> data;
};

struct ObstructionReport {
  long n = 0;
  long rank = 0;
  bool max_rank_flag = false;  // rank > floor((n+1)/2): no such manifold exists
  std::vector<TheoremEntry> entries;
};

// Smallest integer r with r >= log_{4/3} n, decided by 4^r vs n * 3^r.
long min_rank_theorem_a(long n);

TheoremEntry check_euler(const ObstructionQuery& q);
TheoremEntry check_theorem_b(long n, long rank, long alpha, unsigned prec_ceiling);
TheoremEntry check_stable_hopf(const ObstructionQuery& q, unsigned prec_ceiling);
TheoremEntry check_symmetric_space(const ObstructionQuery& q, unsigned prec_ceiling);
TheoremEntry check_fibration_tower(const ObstructionQuery& q);
TheoremEntry elliptic_genus_vanishing(const ObstructionQuery& q);

// Dispatch on the query structure; sets the maximal-rank sanity flag.
ObstructionReport run_query(const ObstructionQuery& q,
                            unsigned prec_ceiling = bounds::kDefaultPrecisionCeiling);

}  // namespace poscurv::obstruct
