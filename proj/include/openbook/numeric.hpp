#pragma once

#include <gmpxx.h>

namespace openbook {

// Exact arithmetic carriers for the whole library. Rational homotopy rank
// bookkeeping routinely leaves the 64-bit range (free Lie ranks grow like
// B^k/k), so both types are arbitrary precision.
using Integer = mpz_class;
using Rational = mpq_class;

// Binomial coefficient C(n, k) for arbitrary-precision n and small k.
Integer binomial(const Integer& n, unsigned long k);

}  // namespace openbook
