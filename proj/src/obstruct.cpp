#include "poscurv/obstruct.hpp"

#include <sstream>

namespace poscurv::obstruct {

namespace {

// Obstruction claims pass through the applicability gate: a violated
// inequality below the threshold is reported but never asserted.
Verdict gated(const Verdict& applicable, const Verdict& violation) {
  if (applicable.is_true()) return violation;
  if (applicable.is_false()) return Verdict::certain(false, applicable.precision_bits);
  if (violation.is_false()) return violation;
  return Verdict::undecided_at(applicable.precision_bits);
}

Verdict v_or(const Verdict& a, const Verdict& b) {
  if (a.is_true() || b.is_true())
    return Verdict::certain(true, std::max(a.precision_bits, b.precision_bits));
  if (a.is_false() && b.is_false())
    return Verdict::certain(false, std::max(a.precision_bits, b.precision_bits));
  return Verdict::undecided_at(std::max(a.precision_bits, b.precision_bits));
}

// Exact test of r >= log_{4/3} n via 4^r vs n * 3^r; n >= 1.
Verdict rank_meets_log43(long rank, long n) {
  if (rank < 0) return Verdict::certain(false, 0);
  return Verdict::certain(pow_int(4, static_cast<unsigned long>(rank)) >=
                              BigInt(n) * pow_int(3, static_cast<unsigned long>(rank)),
                          0);
}

// Common hypothesis gate for the even-dimensional simply connected theorems.
std::optional<TheoremEntry> hypothesis_gate(const ObstructionQuery& q, const char* theorem) {
  if (q.n % 2 != 0) {
    TheoremEntry e{theorem, Verdict::certain(false, 0), Verdict::certain(false, 0),
                   "not applicable: dimension is odd", {}};
    return e;
  }
  if (!q.simply_connected) {
    TheoremEntry e{theorem, Verdict::certain(false, 0), Verdict::certain(false, 0),
                   "not applicable: manifold not simply connected", {}};
    return e;
  }
  return std::nullopt;
}

BigInt chi_power(const BigInt& chi, long k) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), chi.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Expr log2_expr(long n) { return Expr::log(Expr::integer(2), Expr::integer(n)); }

std::string brief(const Interval& v) {
  return "[" + rat_to_decimal(v.lo, 8, RoundDir::down) + ", " +
         rat_to_decimal(v.hi, 8, RoundDir::up) + "]";
}

}  // namespace

long min_rank_theorem_a(long n) {
  if (n < 1) throw domain_error("min_rank_theorem_a: n must be >= 1");
  BigInt p4 = 1, p3n = n;
  long r = 0;
  while (p4 < p3n) {
    p4 *= 4;
    p3n *= 3;
    ++r;
  }
  return r;
}

TheoremEntry check_euler(const ObstructionQuery& q) {
  const auto* s = std::get_if<EulerStructure>(&q.structure);
  if (!s) throw domain_error("check_euler: query structure is not an Euler characteristic");
  if (auto e = hypothesis_gate(q, "euler-vs-f0")) return *e;
  TheoremEntry e;
  e.theorem = "euler-vs-f0";
  e.applicable = rank_meets_log43(q.rank, q.n);
  BigInt bound = bounds::f0(q.n);
  Verdict violation = Verdict::certain(s->chi > bound, 0);
  e.obstructed = gated(e.applicable, violation);
  std::ostringstream os;
  os << "chi(M) = " << s->chi.get_str() << " vs f0(" << q.n << ") = " << bound.get_str()
     << "; rank threshold " << min_rank_theorem_a(q.n) << ", rank = " << q.rank;
  e.witness = os.str();
  e.data.emplace_back("f0", bound.get_str());
  e.data.emplace_back("min_rank", std::to_string(min_rank_theorem_a(q.n)));
  return e;
}

TheoremEntry check_theorem_b(long n, long rank, long alpha, unsigned prec_ceiling) {
  if (n < 2 || n % 2 != 0) throw domain_error("check_theorem_b: n must be even and >= 2");
  if (alpha < 3) throw domain_error("check_theorem_b: alpha must be >= 3");
  TheoremEntry e;
  e.theorem = "linear-rank-bounds";
  e.applicable = certify_ge(Expr::integer(rank), bounds::s_alpha_expr(alpha, Rat(n)),
                            prec_ceiling);
  // This check supplies bounds, not a contradiction: obstruction verdicts
  // come from comparing user Betti data against them.
  e.obstructed = Verdict::certain(false, 0);
  auto b = bounds::theorem_b_bounds(alpha, n, std::min(96u, prec_ceiling));
  Interval sa = bounds::s_alpha(alpha, n, std::min(96u, prec_ceiling));
  std::ostringstream os;
  os << "rank " << rank << " vs s_" << alpha << "(" << n << ") = " << brief(sa)
     << "; components bound " << b.components_bound.get_str() << ", Betti-sum bound "
     << brief(b.betti_sum_bound);
  e.witness = os.str();
  e.data.emplace_back("components_bound", b.components_bound.get_str());
  e.data.emplace_back("betti_sum_lo", rat_to_decimal(b.betti_sum_bound.lo, 12, RoundDir::down));
  e.data.emplace_back("betti_sum_hi", rat_to_decimal(b.betti_sum_bound.hi, 12, RoundDir::up));
  return e;
}

TheoremEntry check_stable_hopf(const ObstructionQuery& q, unsigned prec_ceiling) {
  const auto* pp = std::get_if<ProductPower>(&q.structure);
  const auto* cs = std::get_if<ConnectedSum>(&q.structure);
  if (!pp && !cs) throw domain_error("check_stable_hopf: structure is not product/connected-sum");

  BigInt chi_n;
  long k;
  if (pp) {
    chi_n = pp->factor ? lie::euler_characteristic(*pp->factor) : pp->chi_factor;
    k = pp->k;
  } else {
    chi_n = cs->chi_summand;
    k = cs->k;
    if (chi_n == 2) throw domain_error("connected sum requires chi(N) != 2");
  }
  if (k < 2) throw domain_error("stable Hopf check requires k >= 2");

  if (auto e = hypothesis_gate(q, pp ? "product-power" : "connected-sum")) return *e;

  TheoremEntry e;
  e.theorem = pp ? "product-power" : "connected-sum";
  e.applicable = rank_meets_log43(q.rank, q.n);

  BigInt chi_m = pp ? chi_power(chi_n, k) : 2 + BigInt(k) * (chi_n - 2);
  BigInt f0n = bounds::f0(q.n);
  Verdict direct = Verdict::certain(chi_m < 2 || chi_m > f0n, 0);

  Expr l2n = log2_expr(q.n);
  Expr sq = Expr::integer(3) * l2n * l2n;
  Verdict corollary =
      pp ? certify_ge(Expr::integer(k), sq, prec_ceiling)
         : certify_ge(Expr::integer(k), Expr::pow(Expr::integer(2), sq), prec_ceiling);

  e.obstructed = gated(e.applicable, v_or(corollary, direct));
  std::ostringstream os;
  os << "chi(M) = " << chi_m.get_str() << " vs [2, f0(" << q.n << ") = " << f0n.get_str()
     << "]: " << to_string(direct) << "; corollary bound k " << (pp ? "< 3(log2 n)^2" : "< 2^{3(log2 n)^2}")
     << " violated: " << to_string(corollary);
  e.witness = os.str();
  e.data.emplace_back("chi_M", chi_m.get_str());
  e.data.emplace_back("f0", f0n.get_str());
  e.data.emplace_back("direct_violation", to_string(direct));
  e.data.emplace_back("corollary_violation", to_string(corollary));
  return e;
}

TheoremEntry check_symmetric_space(const ObstructionQuery& q, unsigned prec_ceiling) {
  const auto* ss = std::get_if<SymmetricSpaceStructure>(&q.structure);
  if (!ss) throw domain_error("check_symmetric_space: structure is not a symmetric space");
  if (auto e = hypothesis_gate(q, "symmetric-space-rank")) return *e;

  TheoremEntry e;
  e.theorem = "symmetric-space-rank";
  Expr l2n = log2_expr(q.n);
  e.applicable =
      certify_ge(Expr::integer(q.rank), Expr::integer(2) * l2n + Expr::integer(7), prec_ceiling);
  Expr rank_bound = Expr::integer(3) * l2n * l2n + Expr::integer(3);
  Verdict violation = certify_ge(Expr::integer(ss->space_rank), rank_bound, prec_ceiling);
  e.obstructed = gated(e.applicable, violation);

  Interval spherical = (Expr::integer(3) * l2n * l2n).eval(std::min(96u, prec_ceiling));
  std::ostringstream os;
  os << "space rank " << ss->space_rank << " vs bound 3(log2 n)^2 + 3; spherical factors s < "
     << brief(spherical) << "; rank threshold 2 log2 n + 7";
  e.witness = os.str();
  e.data.emplace_back("spherical_factor_bound_lo",
                      rat_to_decimal(spherical.lo, 12, RoundDir::down));
  e.data.emplace_back("spherical_factor_bound_hi", rat_to_decimal(spherical.hi, 12, RoundDir::up));
  return e;
}

TheoremEntry check_fibration_tower(const ObstructionQuery& q) {
  const auto* ft = std::get_if<FibrationTower>(&q.structure);
  if (!ft) throw domain_error("check_fibration_tower: structure is not a fibration tower");
  if (ft->fiber_chis.empty()) throw domain_error("fibration tower: needs at least one fiber");
  for (const auto& chi : ft->fiber_chis)
    if (chi < 2)
      throw domain_error("fibration tower: equal-rank homogeneous fibers have chi >= 2");
  if (auto e = hypothesis_gate(q, "fibration-tower")) return *e;

  TheoremEntry e;
  e.theorem = "fibration-tower";
  e.applicable = rank_meets_log43(q.rank, q.n);
  BigInt chi_m = 1;
  for (const auto& chi : ft->fiber_chis) chi_m *= chi;
  BigInt f0n = bounds::f0(q.n);
  Verdict violation = Verdict::certain(chi_m > f0n, 0);
  e.obstructed = gated(e.applicable, violation);
  std::ostringstream os;
  os << "chi(M) = prod chi(F_i) = " << chi_m.get_str() << " vs f0(" << q.n
     << ") = " << f0n.get_str() << "; rank threshold " << min_rank_theorem_a(q.n);
  if (e.applicable.is_false() && violation.is_true())
    os << " (inequality violated but rank below threshold: vacuous)";
  e.witness = os.str();
  e.data.emplace_back("chi_M", chi_m.get_str());
  e.data.emplace_back("f0", f0n.get_str());
  return e;
}

TheoremEntry elliptic_genus_vanishing(const ObstructionQuery& q) {
  const auto* eg = std::get_if<EllipticGenusQuery>(&q.structure);
  if (!eg) throw domain_error("elliptic_genus_vanishing: structure is not an elliptic-genus query");
  if (q.n % 4 != 0) throw domain_error("elliptic genus: n must be divisible by 4");
  if (eg->spin == eg->b2_b4_zero)
    throw domain_error("elliptic genus: exactly one of spin / b2=b4=0 must be set");
  if (!q.simply_connected)
    return TheoremEntry{"elliptic-genus", Verdict::certain(false, 0), Verdict::certain(false, 0),
                        "not applicable: manifold not simply connected", {}};

  TheoremEntry e;
  e.theorem = "elliptic-genus";
  e.applicable = rank_meets_log43(q.rank, q.n);
  e.obstructed = Verdict::certain(false, 0);  // a vanishing statement, not an obstruction
  long count = q.n / 16;
  std::ostringstream os;
  os << "first " << count << " elliptic-genus coefficients vanish unless "
     << (eg->spin ? "M has 4-periodic cohomology" : "M is a rational sphere");
  e.witness = os.str();
  e.data.emplace_back("vanishing_count", std::to_string(count));
  e.data.emplace_back("exception", eg->spin ? "4-periodic cohomology" : "rational sphere");
  return e;
}

ObstructionReport run_query(const ObstructionQuery& q, unsigned prec_ceiling) {
  ObstructionReport r;
  r.n = q.n;
  r.rank = q.rank;
  r.max_rank_flag = q.rank > (q.n + 1) / 2;
  struct Visit {
    const ObstructionQuery& q;
    unsigned ceiling;
    std::vector<TheoremEntry>& out;
    void operator()(const EulerStructure&) const { out.push_back(check_euler(q)); }
    void operator()(const ProductPower&) const { out.push_back(check_stable_hopf(q, ceiling)); }
    void operator()(const ConnectedSum&) const { out.push_back(check_stable_hopf(q, ceiling)); }
    void operator()(const SymmetricSpaceStructure&) const {
      out.push_back(check_symmetric_space(q, ceiling));
    }
    void operator()(const FibrationTower&) const { out.push_back(check_fibration_tower(q)); }
    void operator()(const EllipticGenusQuery&) const {
      out.push_back(elliptic_genus_vanishing(q));
    }
  };
  std::visit(Visit{q, prec_ceiling, r.entries}, q.structure);
  return r;
}

}  // namespace poscurv::obstruct
