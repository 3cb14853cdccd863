#pragma once

#include "poscurv/numeric.hpp"
#include "poscurv/verdict.hpp"

// Griesmer-bound arithmetic and the involution-existence feasibility check.
// Binary linear codes only; everything here is exact integer arithmetic.
namespace poscurv::codes {

// sum_{i=0}^{r-1} ceil(w / 2^i), the minimum length of a binary linear code
// of dimension r whose nonzero codewords all have weight >= w.
BigInt griesmer_length(long r, const BigInt& w);

// CertTrue iff no [tn/2, r] binary code with minimum weight
// W = ceil((t(n-c)+2)/4) exists, i.e. sum_{i<r} ceil(W/2^i) > tn/2; a
// low-codimension involution covering enough fixed points is then forced.
Verdict involution_forcing_check(long t, long n, long c, long r);

// Proof-side rank threshold tc/2 + floor(log2(tn - tc + 2)).
long proposition_threshold(long t, long n, long c);

// Minimal r >= 1 at which involution_forcing_check certifies. The Griesmer
// sum is nondecreasing in r, so the check is monotone and this is its
// exact switching point.
long first_certifying_rank(long t, long n, long c);

}  // namespace poscurv::codes
