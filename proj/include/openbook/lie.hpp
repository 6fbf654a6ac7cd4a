#pragma once

#include "openbook/graded_ranks.hpp"
#include "openbook/series.hpp"

namespace openbook {

// Ranks of the free graded Lie algebra on a graded set of generators,
// extracted degree by degree from the tensor-algebra identity
//
//   prod_{k odd} (1+t^k)^{l_k} * prod_{k even} (1-t^k)^{-l_k}
//       = 1 / (1 - W(t))   (mod t^{N+1})
//
// where W is the generating function of the generator ranks. Degrees are
// loop-space degrees, so a sphere S^n contributes a generator of degree n-1.
// Each l_k is forced to be a nonnegative integer; a fractional or negative
// value means the arithmetic itself is broken and raises std::logic_error.
GradedRanks free_lie_ranks(const GradedRanks& generators, int truncation_degree);

// Reassembles the product above from given Lie ranks. The support of
// lie_ranks must lie within 1..truncation_degree.
TruncatedSeries pbw_series(const GradedRanks& lie_ranks, int truncation_degree);

// Necklace count (1/k) sum_{d | k} mu(d) m^{k/d}: the degree-k rank of the
// free ungraded Lie algebra on m generators. Serves as an independent check
// on free_lie_ranks for generators concentrated in one even degree.
Integer witt_number(long alphabet_size, long word_length);

// Moebius function, by trial factorization.
int moebius(long n);

namespace detail {
// (1+t^k)^rank for odd k, (1-t^k)^{-rank} for even k, truncated.
TruncatedSeries pbw_factor(int degree, const Integer& rank, int truncation_degree);
}  // namespace detail

}  // namespace openbook
