#pragma once

#include <memory>
#include <optional>

#include "poscurv/enclosures.hpp"
#include "poscurv/verdict.hpp"

namespace poscurv {

struct Comparison;

// Expression tree over exact rational leaves. Subtrees built purely from
// rational-closed operations carry their exact value, computed at
// construction; floor/ceil are only constructible over such subtrees.
// Everything else evaluates to a RigorousInterval at a requested precision.
class Expr {
 public:
  Expr() : Expr(rational(Rat(0))) {}

  static Expr rational(const Rat& v);
  static Expr integer(const BigInt& v);
  static Expr integer(long v) { return integer(BigInt(v)); }

  friend Expr operator+(const Expr& a, const Expr& b) { return binary(Kind::add, a, b); }
  friend Expr operator-(const Expr& a, const Expr& b) { return binary(Kind::sub, a, b); }
  friend Expr operator*(const Expr& a, const Expr& b) { return binary(Kind::mul, a, b); }
  friend Expr operator/(const Expr& a, const Expr& b) { return binary(Kind::div, a, b); }
  friend Expr operator-(const Expr& a);

  static Expr ln(const Expr& x);
  static Expr exp(const Expr& x);
  static Expr pow(const Expr& base, const Expr& exponent);
  static Expr log(const Expr& base, const Expr& arg);
  static Expr floor(const Expr& x);  // requires exact subtree
  static Expr ceil(const Expr& x);   // requires exact subtree

  bool is_exact() const;
  const std::optional<Rat>& exact_value() const;

  // Enclosure of the exact value at the given working precision. Throws
  // indeterminate_eval when a division/log cannot be resolved at this
  // precision (a zero-straddling divisor); callers escalate.
  Interval eval(unsigned prec_bits) const;

  struct indeterminate_eval : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

 private:
  enum class Kind : unsigned char {
    constant, add, sub, mul, div, neg, ln_, exp_, pow_, log_, floor_, ceil_
  };
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr binary(Kind k, const Expr& a, const Expr& b);
  static Expr unary(Kind k, const Expr& a);
  static Interval eval_node(const Node& n, unsigned prec_bits);
  static Interval eval_child(const std::shared_ptr<const Node>& c, unsigned prec_bits);
  friend Comparison certified_compare(const Expr&, const Expr&, unsigned);
  std::shared_ptr<const Node> node_;
};

struct Comparison {
  Verdict verdict;                   // CertTrue when an ordering was certified
  std::optional<Ordering> ordering;  // set iff decided
};

// Three-way certified comparison: exact when both sides are exact rationals;
// a comparison of log_{p/q}(a) against an exact integer r is rewritten to the
// exact rational comparison a vs (p/q)^r; otherwise intervals are evaluated
// at doubling precision (64, 128, ...) until they separate or the ceiling is
// reached.
Comparison certified_compare(const Expr& lhs, const Expr& rhs, unsigned precision_ceiling);

// Certified relations derived from certified_compare.
Verdict certify_le(const Expr& lhs, const Expr& rhs, unsigned ceiling);
Verdict certify_lt(const Expr& lhs, const Expr& rhs, unsigned ceiling);
Verdict certify_ge(const Expr& lhs, const Expr& rhs, unsigned ceiling);
Verdict certify_gt(const Expr& lhs, const Expr& rhs, unsigned ceiling);

// Certified integer ceiling of an expression value: exact for exact subtrees,
// otherwise refined until both interval endpoints share a ceiling.
struct CertifiedInteger {
  Verdict verdict;
  BigInt value;  // meaningful iff verdict.is_true()
};
CertifiedInteger certified_ceil(const Expr& x, unsigned precision_ceiling);

// Standard precision ladder: min(64, ceiling), doubling, clamped to ceiling.
unsigned ladder_first(unsigned ceiling);
unsigned ladder_next(unsigned p, unsigned ceiling);

}  // namespace poscurv
