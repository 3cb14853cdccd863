#pragma once

#include <optional>
#include <vector>

#include "poscurv/expr.hpp"

// The named bound functions and constant sequences: s(n), the recursive
// bound f0, the closed-form envelope (n/2+1)^{1+log_{4/3}(n/2+1)}, the
// (n_i, kappa_i) sequence, and the linear-symmetry constants/bounds.
namespace poscurv::bounds {

inline constexpr unsigned kDefaultPrecisionCeiling = 4096;
inline constexpr int kKappaWidthDigits = 21;  // kappa enclosure width <= 10^-21

// s(n) = floor(log2 n) + floor(log2(n+2)) - 2, n >= 1.
long s_of(long n);

// f0(n) = n/2 + 1 for even n in [2, 52];
// f0(n) = (2^{s(n)} - 1) * f0(2*floor((3n-4)/8)) for n >= 54 (any parity; the
// recursion argument is always even). Odd n <= 53 and n < 2 are rejected.
// Memoized; the cache is a deterministic map guarded for concurrent use.
BigInt f0(long n);

// Recursion argument 2*floor((3n-4)/8).
long f0_recursion_argument(long n);

// Enclosure of (n/2+1)^{1+log_{4/3}(n/2+1)} for even n >= 2.
Interval theorem_a_envelope(long n, unsigned prec_bits);

// Envelope at an explicit base b = n/2+1 (rational, so odd n is usable).
Interval envelope_of_base(const Rat& b, unsigned prec_bits);

// The same value as an Expr, for certified comparisons.
Expr envelope_expr(const Rat& b);

struct KappaEntry {
  int index = 0;
  BigInt n_i;
  Interval kappa;
  BigInt f0_value;
  Verdict width_ok;  // Undecided(bits) when the width target was not reached
};

// Entries 0..max_i: n_0 = 0, n_1 = 54, then each n_i minimal with
// n_{i-1} <= 2*floor((3 n_i - 4)/8); kappa_i = f0(n_i)/envelope(n_i).
std::vector<KappaEntry> kappa_sequence(int max_i,
                                       unsigned precision_ceiling = kDefaultPrecisionCeiling);

struct AlphaConstants {
  long alpha = 0;
  Rat a;                 // 3 * 2^{alpha-4} / alpha
  std::optional<Rat> b;  // 1 + 1/(2^{alpha-3}-1); empty at alpha = 3 (log term read as 0)
};
AlphaConstants alpha_constants(long alpha);

// s_alpha(n) = n/(2 alpha) + 2 log2(n/(2 alpha)) + alpha + 3; the result is a
// point interval when n/(2 alpha) is a power of two.
Interval s_alpha(long alpha, long n, unsigned prec_bits);
Interval s_alpha_of(long alpha, const Rat& n, unsigned prec_bits);

// s_alpha as an Expr, for certified comparisons against integer ranks.
Expr s_alpha_expr(long alpha, const Rat& n);

struct TheoremBBounds {
  BigInt components_bound;   // floor(a_alpha * n) + 1
  Interval betti_sum_bound;  // (n/2+1)(1 + log_{b_alpha}(n/2+1)); n/2+1 at alpha = 3
};
TheoremBBounds theorem_b_bounds(long alpha, long n, unsigned prec_bits);

}  // namespace poscurv::bounds
