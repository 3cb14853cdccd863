#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

// Exact arithmetic backbone. BigInt/Rat are GMP types: arbitrary magnitude,
// rationals kept canonical (gcd-reduced, positive denominator) by every
// arithmetic operation, decimal round-trips are lossless.
namespace poscurv {

using BigInt = mpz_class;
using Rat = mpq_class;

struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// base^e for e >= 0.
inline BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// (p/q)^e for any integer e; q > 0 and p != 0 when e < 0.
Rat pow_rat(const Rat& base, long e);

// The unique e with base^e <= n < base^{e+1}, by integer comparisons only.
long floor_log_exact(const BigInt& base, const BigInt& n);

// floor/ceil of a rational as integers.
inline BigInt rat_floor(const Rat& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}
inline BigInt rat_ceil(const Rat& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

// x * 2^k, exact.
inline Rat mul_pow2(const Rat& x, long k) {
  Rat r;
  if (k >= 0)
    mpq_mul_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(k));
  else
    mpq_div_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(-k));
  return r;
}

// Largest multiple of 2^-bits that is <= x (round_down) or >= x (round_up).
Rat round_down_dyadic(const Rat& x, unsigned bits);
Rat round_up_dyadic(const Rat& x, unsigned bits);

// The unique e with 2^e <= x < 2^{e+1}, x > 0.
long floor_log2_rat(const Rat& x);

// Number of bits needed to resolve a positive width: smallest g with 2^-g <= w.
unsigned width_bits(const Rat& w);

// True iff x = 2^e for some integer e; e returned.
bool is_pow2_rat(const Rat& x, long& e);

// If arg == base^k for an integer k, return true and set k. base > 0, base != 1,
// arg > 0. Bounded: at most one candidate k is tested.
bool rational_power_match(const Rat& base, const Rat& arg, long& k);

// Parse a decimal literal like "3.14823e-15" or "0.325973" into an exact Rat.
Rat rat_from_decimal(const std::string& s);

// Decimal rendering with `sig` significant digits, rounded toward -inf/+inf.
enum class RoundDir { down, up };
std::string rat_to_decimal(const Rat& x, int sig, RoundDir dir);

// Exact decimal expansion; throws if the denominator has prime factors other
// than 2 and 5 (expansion would not terminate).
std::string rat_to_exact_decimal(const Rat& x);

}  // namespace poscurv
