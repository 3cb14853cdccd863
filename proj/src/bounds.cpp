#include "poscurv/bounds.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace poscurv::bounds {

long s_of(long n) {
  if (n < 1) throw domain_error("s_of: n must be >= 1");
  return floor_log_exact(2, BigInt(n)) + floor_log_exact(2, BigInt(n + 2)) - 2;
}

long f0_recursion_argument(long n) { return 2 * ((3 * n - 4) / 8); }

namespace {

std::shared_mutex g_f0_mu;
std::map<long, BigInt> g_f0_memo;

BigInt f0_impl(long n) {
  if (n < 2 || (n <= 53 && n % 2 != 0))
    throw domain_error("f0: defined for even n in [2,52] and all n >= 54");
  if (n <= 52) return BigInt(n / 2 + 1);
  {
    std::shared_lock lock(g_f0_mu);
    auto it = g_f0_memo.find(n);
    if (it != g_f0_memo.end()) return it->second;
  }
  BigInt factor = pow_int(2, static_cast<unsigned long>(s_of(n))) - 1;
  BigInt value = factor * f0_impl(f0_recursion_argument(n));
  std::unique_lock lock(g_f0_mu);
  return g_f0_memo.emplace(n, std::move(value)).first->second;
}

}  // namespace

BigInt f0(long n) { return f0_impl(n); }

Interval envelope_of_base(const Rat& b, unsigned prec_bits) {
  if (b <= 0) throw domain_error("envelope: base must be positive");
  if (b == 1) return Interval(Rat(1), Rat(1));
  Interval lnb = ln_interval(Interval::point(b), prec_bits + 4);
  Interval l43 = ln_4_3_enclosure(prec_bits + 4);
  Interval expo = coarsen(lnb / l43, prec_bits + 8) + Rat(1);
  return pow_enclosure(Interval::point(b), expo, prec_bits);
}

Interval theorem_a_envelope(long n, unsigned prec_bits) {
  if (n < 2 || n % 2 != 0) throw domain_error("theorem_a_envelope: n must be even and >= 2");
  return envelope_of_base(Rat(n) / 2 + 1, prec_bits);
}

Expr envelope_expr(const Rat& b) {
  Expr base = Expr::rational(b);
  return Expr::pow(base, Expr::integer(1) + Expr::log(Expr::rational(Rat(4, 3)), base));
}

std::vector<KappaEntry> kappa_sequence(int max_i, unsigned precision_ceiling) {
  if (max_i < 0) throw domain_error("kappa_sequence: max_i must be >= 0");
  std::vector<KappaEntry> out;
  out.push_back(KappaEntry{0, BigInt(0), Interval(Rat(1), Rat(1)), BigInt(1),
                           Verdict::certain(true, 0)});
  Rat width_target = Rat(1) / Rat(pow_int(10, kKappaWidthDigits));
  long prev = 0;
  for (int i = 1; i <= max_i; ++i) {
    long ni;
    if (i == 1) {
      ni = 54;
    } else {
      auto reaches = [&](long n) { return prev <= f0_recursion_argument(n); };
      ni = prev + 1;
      while (!reaches(ni)) ++ni;
      if (reaches(ni - 1)) throw std::logic_error("kappa_sequence: minimality check failed");
    }
    KappaEntry e;
    e.index = i;
    e.n_i = ni;
    e.f0_value = f0(ni);
    unsigned p = ladder_first(precision_ceiling);
    while (true) {
      Interval env = envelope_of_base(Rat(ni) / 2 + 1, p);
      e.kappa = Interval::point(Rat(e.f0_value)) / env;
      if (e.kappa.width() <= width_target) {
        e.width_ok = Verdict::certain(true, p);
        break;
      }
      if (p >= precision_ceiling) {
        e.width_ok = Verdict::undecided_at(p);
        break;
      }
      p = ladder_next(p, precision_ceiling);
    }
    out.push_back(std::move(e));
    prev = ni;
  }
  return out;
}

AlphaConstants alpha_constants(long alpha) {
  if (alpha < 3) throw domain_error("alpha_constants: alpha must be >= 3");
  if (alpha > (1 << 20)) throw domain_error("alpha_constants: alpha out of supported range");
  AlphaConstants c;
  c.alpha = alpha;
  c.a = pow_rat(Rat(2), alpha - 4) * 3 / alpha;
  if (alpha > 3) c.b = 1 + Rat(1) / Rat(pow_int(2, static_cast<unsigned long>(alpha - 3)) - 1);
  return c;
}

Interval s_alpha_of(long alpha, const Rat& n, unsigned prec_bits) {
  if (alpha < 3) throw domain_error("s_alpha: alpha must be >= 3");
  if (n < 1) throw domain_error("s_alpha: n must be positive");
  Rat x = n / (2 * alpha);
  Interval l2x = log2_enclosure(x, prec_bits);  // point interval when x = 2^e
  return Interval::point(x) + l2x * Rat(2) + Interval::point(Rat(alpha + 3));
}

Interval s_alpha(long alpha, long n, unsigned prec_bits) {
  if (n < 2) throw domain_error("s_alpha: n must be >= 2");
  return s_alpha_of(alpha, Rat(n), prec_bits);
}

Expr s_alpha_expr(long alpha, const Rat& n) {
  if (alpha < 3) throw domain_error("s_alpha_expr: alpha must be >= 3");
  if (n < 1) throw domain_error("s_alpha_expr: n must be positive");
  Rat x = n / (2 * alpha);
  return Expr::rational(x) + Expr::integer(2) * Expr::log(Expr::integer(2), Expr::rational(x)) +
         Expr::integer(alpha + 3);
}

TheoremBBounds theorem_b_bounds(long alpha, long n, unsigned prec_bits) {
  if (n < 2 || n % 2 != 0) throw domain_error("theorem_b_bounds: n must be even and >= 2");
  AlphaConstants c = alpha_constants(alpha);
  TheoremBBounds out;
  out.components_bound = rat_floor(c.a * n) + 1;
  Rat arg = Rat(n) / 2 + 1;
  if (!c.b) {
    // alpha = 3: sharp bounds, log term read as 0
    out.betti_sum_bound = Interval::point(arg);
    return out;
  }
  Interval logterm = log_base_enclosure(*c.b, arg, prec_bits);
  out.betti_sum_bound = Interval::point(arg) * (logterm + Rat(1));
  return out;
}

}  // namespace poscurv::bounds
