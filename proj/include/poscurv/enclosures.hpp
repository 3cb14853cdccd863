#pragma once

#include "poscurv/interval.hpp"

// Rigorous enclosures for ln, exp, powers and logs with rational inputs.
// Everything here is a pure function of its arguments; internal constant
// caches are keyed exactly by grid level so results never depend on call
// history or thread interleaving.
namespace poscurv {

// Escalation failure: the target could not be met within the supported range.
struct precision_error : std::runtime_error {
  Interval best;
  explicit precision_error(const std::string& what, Interval b = Interval())
      : std::runtime_error(what), best(std::move(b)) {}
};

// Contains ln(x) with width <= target_width. x > 0. The series tail carries a
// proven remainder bound (argument reduction to (3/4, 3/2], atanh series with
// ratio-bounded tail).
Interval ln_enclosure(const Rat& x, const Rat& target_width);

// ln over an interval, endpoint-directed. x.lo > 0.
Interval ln_interval(const Interval& x, unsigned prec_bits);

// Enclosures of ln 2 and ln(4/3) at grid level `bits` (width <= 2^-bits).
Interval ln2_enclosure(unsigned bits);
Interval ln_4_3_enclosure(unsigned bits);

// Contains e^x; relative width about 2^-prec_bits. |x| <= 2^24.
Interval exp_point_enclosure(const Rat& x, unsigned prec_bits);
Interval exp_interval(const Interval& x, unsigned prec_bits);

// Contains base^e for every base/e in the inputs, via exp(e * ln base).
// base.lo > 0. Point integer powers are computed exactly.
Interval pow_enclosure(const Interval& base, const Interval& exponent, unsigned prec_bits);

// Contains log_base(arg) = ln(arg)/ln(base). base > 0, base != 1, arg > 0.
Interval log_base_enclosure(const Rat& base, const Rat& arg, unsigned prec_bits);

// log2 of a positive rational; exact (point interval) when x is a power of 2.
Interval log2_enclosure(const Rat& x, unsigned prec_bits);

}  // namespace poscurv
