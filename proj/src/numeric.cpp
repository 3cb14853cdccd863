#include "poscurv/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace poscurv {

Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0 && e < 0) throw domain_error("pow_rat: zero base, negative exponent");
  unsigned long a = static_cast<unsigned long>(e >= 0 ? e : -e);
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), a);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), a);
  if (e < 0) mpq_inv(r.get_mpq_t(), r.get_mpq_t());
  r.canonicalize();
  return r;
}

long floor_log_exact(const BigInt& base, const BigInt& n) {
  if (base < 2) throw domain_error("floor_log_exact: base must be >= 2");
  if (n < 1) throw domain_error("floor_log_exact: n must be >= 1");
  if (base == 2) return static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
  long e = 0;
  BigInt p = base;  // base^{e+1}
  while (p <= n) {
    p *= base;
    ++e;
  }
  return e;
}

Rat round_down_dyadic(const Rat& x, unsigned bits) {
  Rat scaled = mul_pow2(x, static_cast<long>(bits));
  return mul_pow2(Rat(rat_floor(scaled)), -static_cast<long>(bits));
}

Rat round_up_dyadic(const Rat& x, unsigned bits) {
  Rat scaled = mul_pow2(x, static_cast<long>(bits));
  return mul_pow2(Rat(rat_ceil(scaled)), -static_cast<long>(bits));
}

long floor_log2_rat(const Rat& x) {
  if (x <= 0) throw domain_error("floor_log2_rat: x must be positive");
  long nb = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2));
  long db = static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  long e = nb - db;  // 2^{e-1} < x < 2^{e+1}
  if (mul_pow2(x, -e) < 1) --e;
  return e;
}

unsigned width_bits(const Rat& w) {
  if (w <= 0) throw domain_error("width_bits: width must be positive");
  long e = floor_log2_rat(w);
  return e >= 0 ? 0u : static_cast<unsigned>(-e);
}

bool is_pow2_rat(const Rat& x, long& e) {
  if (x <= 0) return false;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (mpz_popcount(num.get_mpz_t()) != 1 || mpz_popcount(den.get_mpz_t()) != 1) return false;
  e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
      static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  return true;
}

bool rational_power_match(const Rat& base, const Rat& arg, long& k) {
  if (base <= 0 || base == 1 || arg <= 0) return false;
  if (arg == 1) {
    k = 0;
    return true;
  }
  // Normalize to base > 1 and arg > 1, flipping exponent sign as needed.
  Rat b = base, a = arg;
  bool flip_b = false, flip_a = false;
  if (b < 1) {
    b = 1 / b;
    flip_b = true;
  }
  if (a < 1) {
    a = 1 / a;
    flip_a = true;
  }
  // a = b^j with j >= 1 forces den(a) = den(b)^j (num and den are coprime).
  long j;
  if (b.get_den() == 1) {
    if (a.get_den() != 1) return false;
    j = floor_log_exact(b.get_num(), a.get_num());
  } else {
    j = floor_log_exact(b.get_den(), a.get_den());
    if (pow_int(b.get_den(), static_cast<unsigned long>(j)) != a.get_den()) {
      ++j;  // den could land between powers; try the ceiling once
    }
  }
  for (long cand : {j, j + 1}) {
    if (cand >= 1 && pow_rat(b, cand) == a) {
      k = (flip_b == flip_a) ? cand : -cand;
      return true;
    }
  }
  return false;
}

Rat rat_from_decimal(const std::string& s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
    if (s[i] == '.') {
      if (seen_dot) throw domain_error("rat_from_decimal: bad literal '" + s + "'");
      seen_dot = true;
    } else {
      digits += s[i];
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    }
  }
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    exp10 = std::stol(s.substr(i + 1));
    i = s.size();
  }
  if (!seen_digit || i != s.size()) throw domain_error("rat_from_decimal: bad literal '" + s + "'");
  BigInt num(digits.empty() ? "0" : digits, 10);
  if (neg) num = -num;
  long e = exp10 - frac_digits;
  Rat r(num);
  if (e > 0)
    r *= Rat(pow_int(10, static_cast<unsigned long>(e)));
  else if (e < 0)
    r /= Rat(pow_int(10, static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

namespace {

Rat pow10_rat(long e) {
  Rat r(pow_int(10, static_cast<unsigned long>(e >= 0 ? e : -e)));
  return e >= 0 ? r : Rat(1) / r;
}

// Directed integer scaling: m * 10^exp10 is <= x (down) or >= x (up),
// with |m| having exactly `sig` digits (x != 0).
void scaled_digits(const Rat& x, int sig, RoundDir dir, BigInt& m, long& exp10) {
  Rat ax = abs(x);
  // d with 10^{d-1} <= ax < 10^d
  long d = static_cast<long>(static_cast<double>(floor_log2_rat(ax)) * 0.30103) + 1;
  while (ax >= pow10_rat(d)) ++d;
  while (ax < pow10_rat(d - 1)) --d;
  exp10 = d - sig;
  Rat scaled = x / pow10_rat(exp10);
  m = dir == RoundDir::down ? rat_floor(scaled) : rat_ceil(scaled);
}

}  // namespace

std::string rat_to_decimal(const Rat& x, int sig, RoundDir dir) {
  if (x == 0) return "0";
  BigInt m;
  long exp10;
  scaled_digits(x, sig, dir, m, exp10);
  std::string ds = m.get_str();
  bool neg = ds[0] == '-';
  if (neg) ds = ds.substr(1);
  // rounding may carry to sig+1 digits; fold into the exponent
  if (ds.size() > static_cast<size_t>(sig)) {
    exp10 += static_cast<long>(ds.size()) - sig;
    ds = ds.substr(0, static_cast<size_t>(sig));
  }
  long point_exp = exp10 + static_cast<long>(ds.size()) - 1;  // value = d.ddd * 10^{point_exp}
  std::string out = neg ? "-" : "";
  if (point_exp >= static_cast<long>(ds.size()) - 1 && point_exp <= 17) {
    out += ds + std::string(static_cast<size_t>(point_exp + 1 - static_cast<long>(ds.size())), '0');
  } else if (point_exp >= 0 && point_exp <= 15) {
    out += ds.substr(0, static_cast<size_t>(point_exp + 1)) + "." +
           ds.substr(static_cast<size_t>(point_exp + 1));
  } else if (point_exp < 0 && point_exp >= -4) {
    out += "0." + std::string(static_cast<size_t>(-point_exp - 1), '0') + ds;
  } else {
    out += ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    out += "e" + std::to_string(point_exp);
  }
  return out;
}

std::string rat_to_exact_decimal(const Rat& x) {
  if (x == 0) return "0";
  BigInt den = x.get_den();
  long two = 0, five = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++two;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++five;
  }
  if (den != 1) throw domain_error("rat_to_exact_decimal: non-terminating expansion");
  long shift = std::max(two, five);
  BigInt scaled = x.get_num() * pow_int(10, static_cast<unsigned long>(shift)) / x.get_den();
  std::string ds = scaled.get_str();
  bool neg = ds[0] == '-';
  if (neg) ds = ds.substr(1);
  if (shift == 0) return (neg ? "-" : "") + ds;
  if (ds.size() <= static_cast<size_t>(shift))
    ds = std::string(static_cast<size_t>(shift) - ds.size() + 1, '0') + ds;
  std::string out = ds.substr(0, ds.size() - static_cast<size_t>(shift)) + "." +
                    ds.substr(ds.size() - static_cast<size_t>(shift));
  // trim trailing zeros after the point
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return (neg ? "-" : "") + out;
}

}  // namespace poscurv
