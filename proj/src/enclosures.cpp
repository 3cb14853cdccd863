#include "poscurv/enclosures.hpp"

#include <map>
#include <mutex>

namespace poscurv {

namespace {

Interval scale_div(const Interval& a, long d) {
  // d > 0
  return Interval(a.lo / d, a.hi / d);
}

// Encloses 2*atanh(u) = ln((1+u)/(1-u)) for |u| < 1/2, with the series tail
// bounded by 2|u|^{2N+1} / ((2N+1)(1-u^2)). Width <= target plus grid slop.
Interval atanh_times2(const Rat& u, const Rat& target, unsigned grid) {
  if (u == 0) return Interval();
  Interval U = coarsen(Interval::point(u), grid);
  Interval U2 = coarsen(U * U, grid);
  Rat one_minus = 1 - U2.hi;
  if (one_minus <= 0) throw domain_error("atanh series: |u| too large");
  Interval sum;
  Interval upow = U;  // u^{2j+1}
  long j = 0;
  Rat tail;
  while (true) {
    sum = coarsen(sum + scale_div(upow, 2 * j + 1), grid);
    upow = coarsen(upow * U2, grid);
    ++j;
    tail = upow.abs_hi() / ((2 * j + 1) * one_minus);
    if (2 * tail <= target) break;
    if (j > 1000000) throw precision_error("atanh series failed to converge");
  }
  Rat lo = 2 * sum.lo, hi = 2 * sum.hi;
  if (u > 0)
    hi += 2 * tail;
  else
    lo -= 2 * tail;
  return Interval(lo, hi);
}

// Enclosure of 2*atanh(u) with width <= 2^-bits, for the cached constants.
Interval const_enclosure(const Rat& u, unsigned bits) {
  Rat w = mul_pow2(Rat(1), -static_cast<long>(bits));
  for (int attempt = 0; attempt < 8; ++attempt) {
    unsigned grid = bits + 16 + 16 * static_cast<unsigned>(attempt);
    Interval r = atanh_times2(u, w / 2, grid);
    if (r.width() <= w) return r;
  }
  throw precision_error("constant enclosure failed to reach target width");
}

struct ConstCache {
  std::mutex mu;
  std::map<unsigned, Interval> by_bits;
  Interval get(const Rat& u, unsigned bits) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = by_bits.find(bits);
    if (it != by_bits.end()) return it->second;
    Interval r = const_enclosure(u, bits);
    by_bits.emplace(bits, r);
    return r;
  }
};

ConstCache g_ln2_cache;    // u = 1/3
ConstCache g_ln43_cache;   // u = 1/7

// Single-level ln enclosure: reduce x = 2^k * m with m in (3/4, 3/2], then
// ln x = k ln2 + 2 atanh((m-1)/(m+1)), |u| <= 1/5.
Interval ln_core(const Rat& x, const Rat& w) {
  if (x <= 0) throw domain_error("ln: argument must be positive");
  if (w <= 0) throw domain_error("ln: target width must be positive");
  if (x == 1) return Interval();
  Interval best;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Rat weff = mul_pow2(w, -attempt);
    unsigned grid = width_bits(weff) + 16;
    long k = floor_log2_rat(x);
    Rat m = mul_pow2(x, -k);
    if (2 * m > 3) {
      m /= 2;
      ++k;
    }
    Interval r = atanh_times2((m - 1) / (m + 1), weff / 4, grid);
    if (k != 0) {
      unsigned long ka = static_cast<unsigned long>(k >= 0 ? k : -k);
      unsigned kbits = static_cast<unsigned>(mpz_sizeinbase(BigInt(ka).get_mpz_t(), 2));
      Interval l2 = ln2_enclosure(width_bits(weff) + 2 + kbits);
      r = r + l2 * Rat(k);
    }
    r = coarsen(r, grid);
    if (r.width() <= w) return r;
    best = r;
  }
  throw precision_error("ln enclosure failed to reach target width", best);
}

}  // namespace

Interval ln2_enclosure(unsigned bits) { return g_ln2_cache.get(Rat(1, 3), bits); }
Interval ln_4_3_enclosure(unsigned bits) { return g_ln43_cache.get(Rat(1, 7), bits); }

Interval ln_enclosure(const Rat& x, const Rat& target_width) {
  if (x <= 0) throw domain_error("ln_enclosure: argument must be positive");
  if (target_width <= 0) throw domain_error("ln_enclosure: width must be positive");
  if (x == 1) return Interval();
  // Intersect single-level results over every dyadic width level down to the
  // target: level sets nest as the target shrinks, so refining the width can
  // never move an endpoint outward.
  unsigned g_target = std::max(2u, width_bits(target_width));
  Interval acc = ln_core(x, Rat(1, 4));
  for (unsigned g = 3; g <= g_target; ++g) {
    Interval r = ln_core(x, mul_pow2(Rat(1), -static_cast<long>(g)));
    acc = Interval(std::max(acc.lo, r.lo), std::min(acc.hi, r.hi));
  }
  return acc;
}

Interval ln_interval(const Interval& x, unsigned prec_bits) {
  if (x.lo <= 0) throw domain_error("ln_interval: argument must be strictly positive");
  Rat w = mul_pow2(Rat(1), -static_cast<long>(prec_bits));
  if (x.is_point()) return ln_core(x.lo, w);
  return Interval(ln_core(x.lo, w).lo, ln_core(x.hi, w).hi);
}

Interval exp_point_enclosure(const Rat& x, unsigned prec_bits) {
  if (x == 0) return Interval(Rat(1), Rat(1));
  if (floor_log2_rat(abs(x)) > 24) throw precision_error("exp: argument magnitude out of range");
  for (int attempt = 0; attempt < 8; ++attempt) {
    unsigned grid = prec_bits + 16 + 16 * static_cast<unsigned>(attempt);
    Interval l2 = ln2_enclosure(grid + 16);
    Rat mid = (l2.lo + l2.hi) / 2;
    BigInt kz = rat_floor(x / mid + Rat(1, 2));
    if (!kz.fits_slong_p()) throw precision_error("exp: reduction exponent out of range");
    long k = kz.get_si();
    Interval r = Interval::point(x) - l2 * Rat(kz);
    if (8 * r.abs_hi() > 3) continue;  // |r| <= 3/8 expected; retry tighter
    Interval sum(Rat(1), Rat(1));
    Interval term(Rat(1), Rat(1));
    Rat rmag = r.abs_hi();
    Rat tail;
    long j = 0;
    while (true) {
      ++j;
      term = coarsen(scale_div(term * r, j), grid);
      sum = coarsen(sum + term, grid);
      Rat rho = rmag / (j + 1);
      tail = term.abs_hi() * rho / (1 - rho);
      if (tail <= mul_pow2(Rat(1), -static_cast<long>(prec_bits) - 3)) break;
      if (j > 100000) throw precision_error("exp series failed to converge");
    }
    Interval s(sum.lo - tail, sum.hi + tail);
    if (s.lo <= 0) continue;
    if (s.width() > mul_pow2(s.lo, -static_cast<long>(prec_bits))) continue;
    return Interval(mul_pow2(s.lo, k), mul_pow2(s.hi, k));
  }
  throw precision_error("exp enclosure failed to reach target relative width");
}

Interval exp_interval(const Interval& x, unsigned prec_bits) {
  if (x.is_point()) return exp_point_enclosure(x.lo, prec_bits);
  return Interval(exp_point_enclosure(x.lo, prec_bits).lo,
                  exp_point_enclosure(x.hi, prec_bits).hi);
}

Interval pow_enclosure(const Interval& base, const Interval& exponent, unsigned prec_bits) {
  if (base.lo <= 0) throw domain_error("pow_enclosure: base must be strictly positive");
  if (base.is_point() && exponent.is_point() && exponent.lo.get_den() == 1 &&
      abs(exponent.lo.get_num()) <= 1 << 20) {
    Rat v = pow_rat(base.lo, exponent.lo.get_num().get_si());
    return Interval::point(v);
  }
  Rat emag = exponent.abs_hi();
  unsigned ebits = emag <= 1 ? 0 : static_cast<unsigned>(floor_log2_rat(emag)) + 1;
  Interval lnb = ln_interval(base, prec_bits + 4 + ebits);
  Interval p = coarsen(lnb * exponent, prec_bits + 8);
  return exp_interval(p, prec_bits);
}

Interval log_base_enclosure(const Rat& base, const Rat& arg, unsigned prec_bits) {
  if (base <= 0 || base == 1) throw domain_error("log: base must be positive and != 1");
  if (arg <= 0) throw domain_error("log: argument must be positive");
  long k;
  if (rational_power_match(base, arg, k)) return Interval::point(Rat(k));
  Rat w = mul_pow2(Rat(1), -static_cast<long>(prec_bits) - 4);
  Interval den = ln_core(base, w);
  while (den.contains(0)) {
    w /= 16;
    den = ln_core(base, w);
  }
  Interval num = ln_core(arg, w);
  return coarsen(num / den, prec_bits + 8);
}

Interval log2_enclosure(const Rat& x, unsigned prec_bits) {
  long e;
  if (is_pow2_rat(x, e)) return Interval::point(Rat(e));
  if (x <= 0) throw domain_error("log2: argument must be positive");
  Rat w = mul_pow2(Rat(1), -static_cast<long>(prec_bits) - 4);
  Interval num = ln_core(x, w);
  Interval den = ln2_enclosure(prec_bits + 4);
  return coarsen(num / den, prec_bits + 8);
}

}  // namespace poscurv
