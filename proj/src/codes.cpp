#include "poscurv/codes.hpp"

namespace poscurv::codes {

namespace {

BigInt ceil_div_pow2(const BigInt& w, unsigned long i) {
  BigInt q;
  mpz_cdiv_q_2exp(q.get_mpz_t(), w.get_mpz_t(), i);
  return q;
}

void validate_query(long t, long n, long c) {
  if (t < 1) throw domain_error("codes: t must be >= 1");
  if (n < 2 || n % 2 != 0) throw domain_error("codes: n must be even and >= 2");
  if (c < 0 || c > n || c % 2 != 0) throw domain_error("codes: c must be even in [0, n]");
}

BigInt forcing_weight(long t, long n, long c) {
  return ceil_div_pow2(BigInt(t) * (n - c) + 2, 2);
}

}  // namespace

BigInt griesmer_length(long r, const BigInt& w) {
  if (r < 1) throw domain_error("griesmer_length: r must be >= 1");
  if (w < 1) throw domain_error("griesmer_length: w must be >= 1");
  // terms are 1 from i = ceil(log2 w) on; sum those in closed form
  unsigned long ones_from = mpz_sizeinbase(w.get_mpz_t(), 2);
  if (mpz_popcount(w.get_mpz_t()) == 1) --ones_from;  // exact power of two
  BigInt sum = 0;
  unsigned long head = std::min<unsigned long>(static_cast<unsigned long>(r), ones_from);
  for (unsigned long i = 0; i < head; ++i) sum += ceil_div_pow2(w, i);
  if (static_cast<unsigned long>(r) > ones_from) sum += static_cast<unsigned long>(r) - ones_from;
  return sum;
}

Verdict involution_forcing_check(long t, long n, long c, long r) {
  validate_query(t, n, c);
  if (r < 1) throw domain_error("involution_forcing_check: r must be >= 1");
  BigInt ambient = BigInt(t) * n / 2;
  return Verdict::certain(griesmer_length(r, forcing_weight(t, n, c)) > ambient, 0);
}

long proposition_threshold(long t, long n, long c) {
  validate_query(t, n, c);
  BigInt arg = BigInt(t) * (n - c) + 2;
  return t * c / 2 + floor_log_exact(2, arg);
}

long first_certifying_rank(long t, long n, long c) {
  validate_query(t, n, c);
  BigInt w = forcing_weight(t, n, c);
  BigInt target = BigInt(t) * n / 2;  // need sum > target
  BigInt sum = 0;
  long r = 0;
  while (true) {
    BigInt term = ceil_div_pow2(w, static_cast<unsigned long>(r));
    if (term == 1) {
      // every further dimension adds exactly 1
      BigInt rest = target - sum;
      long extra = rest < 0 ? 0 : static_cast<long>(rest.get_ui()) + 1;
      return r + extra;
    }
    sum += term;
    ++r;
    if (sum > target) return r;
  }
}

}  // namespace poscurv::codes
