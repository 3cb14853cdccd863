#pragma once

#include <string>

namespace poscurv {

// Three-valued certified truth. CertTrue/CertFalse are only emitted when
// interval separation or exact rational arithmetic proves the relation;
// Undecided records the precision ceiling that was reached.
enum class Truth : unsigned char { cert_true, cert_false, undecided };

struct Verdict {
  Truth truth = Truth::undecided;
  unsigned precision_bits = 0;  // bits at decision; ceiling reached when undecided

  static Verdict certain(bool v, unsigned bits = 0) {
    return Verdict{v ? Truth::cert_true : Truth::cert_false, bits};
  }
  static Verdict undecided_at(unsigned bits) { return Verdict{Truth::undecided, bits}; }

  bool is_true() const { return truth == Truth::cert_true; }
  bool is_false() const { return truth == Truth::cert_false; }
  bool is_undecided() const { return truth == Truth::undecided; }

  // Verdict of the negated relation.
  Verdict operator!() const {
    if (is_undecided()) return *this;
    return certain(!is_true(), precision_bits);
  }
};

inline const char* to_string(Truth t) {
  switch (t) {
    case Truth::cert_true: return "CertTrue";
    case Truth::cert_false: return "CertFalse";
    default: return "Undecided";
  }
}
inline std::string to_string(const Verdict& v) { return to_string(v.truth); }

enum class Ordering : unsigned char { less, equal, greater };

inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::less: return "Less";
    case Ordering::equal: return "Equal";
    default: return "Greater";
  }
}

}  // namespace poscurv
