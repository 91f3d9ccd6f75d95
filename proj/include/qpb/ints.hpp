#pragma once

#include <gmpxx.h>

namespace qpb {

using Int = mpz_class;
using Rat = mpq_class;

/// Generalized binomial coefficient a(a-1)...(a-k+1)/k! for any integer a.
/// Exact; negative k is rejected.
Int binom(const Int& a, long k);

inline Int binom(long a, long k) { return binom(Int(a), k); }

/// base^e for e >= 0.
Int pow_int(const Int& base, int e);

}  // namespace qpb
