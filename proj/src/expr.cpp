#include "poscurv/expr.hpp"

namespace poscurv {

struct Expr::Node {
  Kind kind;
  std::shared_ptr<const Node> a, b;
  std::optional<Rat> exact;  // set iff the subtree is rational-closed
};

Expr Expr::rational(const Rat& v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::constant;
  n->exact = v;
  n->exact->canonicalize();  // guard against raw two-argument mpq construction
  return Expr(std::move(n));
}

Expr Expr::integer(const BigInt& v) { return rational(Rat(v)); }

bool Expr::is_exact() const { return node_->exact.has_value(); }
const std::optional<Rat>& Expr::exact_value() const { return node_->exact; }

Expr Expr::binary(Kind k, const Expr& a, const Expr& b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = a.node_;
  n->b = b.node_;
  if (a.is_exact() && b.is_exact()) {
    const Rat& x = *a.exact_value();
    const Rat& y = *b.exact_value();
    switch (k) {
      case Kind::add: n->exact = x + y; break;
      case Kind::sub: n->exact = x - y; break;
      case Kind::mul: n->exact = x * y; break;
      case Kind::div:
        if (y == 0) throw domain_error("Expr: exact division by zero");
        n->exact = x / y;
        break;
      default: break;
    }
  }
  return Expr(std::move(n));
}

Expr Expr::unary(Kind k, const Expr& a) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = a.node_;
  return Expr(std::move(n));
}

Expr operator-(const Expr& a) {
  if (a.is_exact()) return Expr::rational(-*a.exact_value());
  return Expr::unary(Expr::Kind::neg, a);
}

Expr Expr::ln(const Expr& x) {
  if (x.is_exact()) {
    const Rat& v = *x.exact_value();
    if (v <= 0) throw domain_error("Expr::ln: argument must be positive");
    if (v == 1) return rational(Rat(0));
  }
  return unary(Kind::ln_, x);
}

Expr Expr::exp(const Expr& x) {
  if (x.is_exact() && *x.exact_value() == 0) return rational(Rat(1));
  return unary(Kind::exp_, x);
}

Expr Expr::pow(const Expr& base, const Expr& exponent) {
  if (base.is_exact() && exponent.is_exact()) {
    const Rat& e = *exponent.exact_value();
    if (e.get_den() == 1 && abs(e.get_num()) <= 1 << 20) {
      const Rat& b = *base.exact_value();
      long ei = e.get_num().get_si();
      if (b != 0 || ei >= 0) return rational(pow_rat(b, ei));
    }
  }
  return binary(Kind::pow_, base, exponent);
}

Expr Expr::log(const Expr& base, const Expr& arg) {
  if (base.is_exact()) {
    const Rat& b = *base.exact_value();
    if (b <= 0 || b == 1) throw domain_error("Expr::log: base must be positive and != 1");
    if (arg.is_exact()) {
      const Rat& a = *arg.exact_value();
      if (a <= 0) throw domain_error("Expr::log: argument must be positive");
      long k;
      if (rational_power_match(b, a, k)) return rational(Rat(k));
    }
  }
  return binary(Kind::log_, base, arg);
}

Expr Expr::floor(const Expr& x) {
  if (!x.is_exact())
    throw domain_error("Expr::floor is only defined over exact rational subtrees");
  return rational(Rat(rat_floor(*x.exact_value())));
}

Expr Expr::ceil(const Expr& x) {
  if (!x.is_exact())
    throw domain_error("Expr::ceil is only defined over exact rational subtrees");
  return rational(Rat(rat_ceil(*x.exact_value())));
}

Interval Expr::eval_child(const std::shared_ptr<const Node>& c, unsigned p) {
  if (c->exact) return Interval::point(*c->exact);
  return eval_node(*c, p);
}

Interval Expr::eval_node(const Node& n, unsigned p) {
  using K = Expr::Kind;
  switch (n.kind) {
    case K::constant:
      return Interval::point(*n.exact);
    case K::add:
      return coarsen(eval_child(n.a, p) + eval_child(n.b, p), p + 16);
    case K::sub:
      return coarsen(eval_child(n.a, p) - eval_child(n.b, p), p + 16);
    case K::mul:
      return coarsen(eval_child(n.a, p) * eval_child(n.b, p), p + 16);
    case K::div: {
      Interval d = eval_child(n.b, p);
      if (d.contains(0))
        throw Expr::indeterminate_eval("divisor interval contains zero at this precision");
      return coarsen(eval_child(n.a, p) / d, p + 16);
    }
    case K::neg:
      return -eval_child(n.a, p);
    case K::ln_: {
      Interval x = eval_child(n.a, p);
      if (x.lo <= 0)
        throw Expr::indeterminate_eval("ln argument not strictly positive at this precision");
      return ln_interval(x, p);
    }
    case K::exp_:
      return exp_interval(eval_child(n.a, p), p);
    case K::pow_: {
      Interval b = eval_child(n.a, p);
      if (b.lo <= 0)
        throw Expr::indeterminate_eval("pow base not strictly positive at this precision");
      return pow_enclosure(b, eval_child(n.b, p), p);
    }
    case K::log_: {
      Interval b = eval_child(n.a, p);
      Interval a = eval_child(n.b, p);
      if (b.lo <= 0 || a.lo <= 0 || b.contains(1))
        throw Expr::indeterminate_eval("log base/argument unresolved at this precision");
      Interval num = ln_interval(a, p);
      Interval den = ln_interval(b, p);
      if (den.contains(0))
        throw Expr::indeterminate_eval("log base too close to 1 at this precision");
      return coarsen(num / den, p + 16);
    }
    default:
      throw domain_error("Expr: floor/ceil nodes cannot reach evaluation");
  }
}

// Kind::floor_/ceil_ never appear in trees (folded at construction), so
// eval handles the remaining kinds only.
Interval Expr::eval(unsigned prec_bits) const {
  if (node_->exact) return Interval::point(*node_->exact);
  return eval_node(*node_, prec_bits);
}

unsigned ladder_first(unsigned ceiling) { return std::min(64u, ceiling); }
unsigned ladder_next(unsigned p, unsigned ceiling) { return std::min(p * 2, ceiling); }

namespace {

Ordering flip(Ordering o) {
  if (o == Ordering::less) return Ordering::greater;
  if (o == Ordering::greater) return Ordering::less;
  return o;
}

Ordering order_of(int sgn) {
  return sgn < 0 ? Ordering::less : (sgn > 0 ? Ordering::greater : Ordering::equal);
}

}  // namespace

Comparison certified_compare(const Expr& lhs, const Expr& rhs, unsigned precision_ceiling) {
  if (lhs.is_exact() && rhs.is_exact()) {
    int sgn = cmp(*lhs.exact_value(), *rhs.exact_value());
    return Comparison{Verdict::certain(true, 0), order_of(sgn)};
  }

  // Rewrite log_{p/q}(a) vs integer r to the exact comparison a vs (p/q)^r,
  // flipped for bases below 1 (and again when the log sits on the right).
  auto log_vs_int = [](const Expr& logside, const Expr& intside,
                       bool log_on_left) -> std::optional<Comparison> {
    const auto& n = *logside.node_;
    if (n.kind != Expr::Kind::log_ || !n.a->exact || !n.b->exact) return std::nullopt;
    if (!intside.is_exact() || intside.exact_value()->get_den() != 1) return std::nullopt;
    const BigInt& rz = intside.exact_value()->get_num();
    if (!rz.fits_slong_p() || abs(rz) > 1 << 20) return std::nullopt;
    const Rat& base = *n.a->exact;
    const Rat& arg = *n.b->exact;
    Ordering o = order_of(cmp(arg, pow_rat(base, rz.get_si())));
    if (base < 1) o = flip(o);
    if (!log_on_left) o = flip(o);
    return Comparison{Verdict::certain(true, 0), o};
  };
  if (auto c = log_vs_int(lhs, rhs, true)) return *c;
  if (auto c = log_vs_int(rhs, lhs, false)) return *c;

  unsigned p = ladder_first(precision_ceiling);
  while (true) {
    try {
      Interval a = lhs.eval(p);
      Interval b = rhs.eval(p);
      if (a.hi < b.lo) return Comparison{Verdict::certain(true, p), Ordering::less};
      if (a.lo > b.hi) return Comparison{Verdict::certain(true, p), Ordering::greater};
      if (a.is_point() && b.is_point() && a.lo == b.lo)
        return Comparison{Verdict::certain(true, p), Ordering::equal};
    } catch (const Expr::indeterminate_eval&) {
      // retry at higher precision
    }
    if (p >= precision_ceiling) return Comparison{Verdict::undecided_at(p), std::nullopt};
    p = ladder_next(p, precision_ceiling);
  }
}

namespace {

Verdict relation_verdict(const Comparison& c, bool ok_less, bool ok_equal, bool ok_greater) {
  if (!c.ordering) return c.verdict;  // undecided
  bool holds = (*c.ordering == Ordering::less && ok_less) ||
               (*c.ordering == Ordering::equal && ok_equal) ||
               (*c.ordering == Ordering::greater && ok_greater);
  return Verdict::certain(holds, c.verdict.precision_bits);
}

}  // namespace

Verdict certify_le(const Expr& l, const Expr& r, unsigned c) {
  return relation_verdict(certified_compare(l, r, c), true, true, false);
}
Verdict certify_lt(const Expr& l, const Expr& r, unsigned c) {
  return relation_verdict(certified_compare(l, r, c), true, false, false);
}
Verdict certify_ge(const Expr& l, const Expr& r, unsigned c) {
  return relation_verdict(certified_compare(l, r, c), false, true, true);
}
Verdict certify_gt(const Expr& l, const Expr& r, unsigned c) {
  return relation_verdict(certified_compare(l, r, c), false, false, true);
}

CertifiedInteger certified_ceil(const Expr& x, unsigned precision_ceiling) {
  if (x.is_exact())
    return CertifiedInteger{Verdict::certain(true, 0), rat_ceil(*x.exact_value())};
  unsigned p = ladder_first(precision_ceiling);
  while (true) {
    try {
      Interval v = x.eval(p);
      BigInt clo = rat_ceil(v.lo), chi = rat_ceil(v.hi);
      if (clo == chi) return CertifiedInteger{Verdict::certain(true, p), clo};
    } catch (const Expr::indeterminate_eval&) {
    }
    if (p >= precision_ceiling) return CertifiedInteger{Verdict::undecided_at(p), BigInt(0)};
    p = ladder_next(p, precision_ceiling);
  }
}

}  // namespace poscurv
