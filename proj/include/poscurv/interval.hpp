#pragma once

#include <algorithm>
#include <utility>

#include "poscurv/numeric.hpp"

namespace poscurv {

// Enclosure with exact rational endpoints: every operation returns an interval
// containing the exact real result of the operation on any members of the
// input intervals.
struct Interval {
  Rat lo, hi;

  Interval() : lo(0), hi(0) {}
  Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw domain_error("Interval: lo > hi");
  }
  static Interval point(const Rat& v) { return Interval(v, v); }

  Rat width() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool strictly_positive() const { return lo > 0; }
  bool strictly_negative() const { return hi < 0; }

  Interval operator-() const { return Interval(-hi, -lo); }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo - b.hi, a.hi - b.lo);
  }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                    std::max(std::max(p1, p2), std::max(p3, p4)));
  }
  // Divisor must not contain zero.
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains(0)) throw domain_error("Interval division by interval containing zero");
    Rat q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
    return Interval(std::min(std::min(q1, q2), std::min(q3, q4)),
                    std::max(std::max(q1, q2), std::max(q3, q4)));
  }
  friend Interval operator+(const Interval& a, const Rat& b) { return a + Interval::point(b); }
  friend Interval operator*(const Interval& a, const Rat& b) { return a * Interval::point(b); }

  Rat abs_hi() const { return std::max(abs(lo), abs(hi)); }
};

// Outward rounding onto the dyadic grid 2^-bits: grids nest as bits grows, so
// refining the precision never moves an endpoint outward.
inline Interval coarsen(const Interval& x, unsigned bits) {
  return Interval(round_down_dyadic(x.lo, bits), round_up_dyadic(x.hi, bits));
}

}  // namespace poscurv
