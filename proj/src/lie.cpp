#include "openbook/lie.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "openbook/numeric.hpp"

namespace openbook {

int moebius(long n) {
    if (n < 1) throw std::invalid_argument("moebius: argument must be >= 1");
    int result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;  // square factor
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

Integer witt_number(long alphabet_size, long word_length) {
    if (alphabet_size < 1 || word_length < 1) {
        throw std::invalid_argument("witt_number: both arguments must be >= 1");
    }
    const Integer m(alphabet_size);
    Integer sum = 0;
    for (long d = 1; d <= word_length; ++d) {
        if (word_length % d != 0) continue;
        const int mu = moebius(d);
        if (mu == 0) continue;
        Integer power;
        mpz_pow_ui(power.get_mpz_t(), m.get_mpz_t(),
                   static_cast<unsigned long>(word_length / d));
        sum += mu * power;
    }
    if (sum % word_length != 0) {
        throw std::logic_error("witt_number: divisor sum is not divisible by the word length");
    }
    Integer result;
    mpz_divexact_ui(result.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(word_length));
    return result;
}

namespace detail {

TruncatedSeries pbw_factor(int degree, const Integer& rank, int truncation_degree) {
    if (degree < 1 || degree > truncation_degree) {
        throw std::invalid_argument("pbw_factor: degree " + std::to_string(degree) +
                                    " is outside 1.." + std::to_string(truncation_degree));
    }
    if (rank < 0) {
        throw std::logic_error("pbw_factor: negative rank at degree " + std::to_string(degree));
    }
    std::vector<Rational> coefficients(static_cast<std::size_t>(truncation_degree) + 1,
                                       Rational(0));
    coefficients[0] = 1;
    // Closed-form truncations: the rank can be astronomically large, so the
    // factor is expanded binomially rather than by repeated multiplication.
    //   odd degree:  (1+t^k)^l     -> sum_j C(l, j)       t^{kj}
    //   even degree: (1-t^k)^{-l}  -> sum_j C(l+j-1, j)   t^{kj}
    const bool odd = degree % 2 != 0;
    for (unsigned long j = 1; static_cast<unsigned long>(degree) * j <=
                              static_cast<unsigned long>(truncation_degree);
         ++j) {
        Integer coefficient =
            odd ? binomial(rank, j) : binomial(rank + static_cast<long>(j) - 1, j);
        if (coefficient == 0) break;  // exhausted (1+t^k)^l with l < j
        coefficients[static_cast<unsigned long>(degree) * j] = Rational(std::move(coefficient));
    }
    return TruncatedSeries(std::move(coefficients));
}

}  // namespace detail

GradedRanks free_lie_ranks(const GradedRanks& generators, int truncation_degree) {
    if (truncation_degree < 1) {
        throw std::invalid_argument("free_lie_ranks: truncation degree must be >= 1, got " +
                                    std::to_string(truncation_degree));
    }
    const int N = truncation_degree;
    const TruncatedSeries w = series_from_ranks(generators, N);
    // Poincaré series of the tensor algebra on the generators.
    TruncatedSeries residual =
        series_reciprocal(series_sub(TruncatedSeries::one(N), w));
    GradedRanks ranks;
    // After dividing out the factors of every degree < k, the residual looks
    // like 1 + l_k t^k + O(t^{k+1}) regardless of the parity of k, so l_k can
    // be read straight off and its factor divided away.
    for (int k = 1; k <= N; ++k) {
        const Rational& coefficient = residual.coefficient(k);
        if (coefficient == 0) continue;
        if (coefficient.get_den() != 1) {
            throw std::logic_error("free_lie_ranks: non-integral rank " + coefficient.get_str() +
                                   " at degree " + std::to_string(k));
        }
        if (coefficient < 0) {
            throw std::logic_error("free_lie_ranks: negative rank " + coefficient.get_str() +
                                   " at degree " + std::to_string(k));
        }
        Integer rank(coefficient.get_num());
        residual = series_div(residual, detail::pbw_factor(k, rank, N));
        ranks.set(k, std::move(rank));
    }
    if (!residual.is_one()) {
        throw std::logic_error("free_lie_ranks: factorization left a nontrivial residual");
    }
    return ranks;
}

TruncatedSeries pbw_series(const GradedRanks& lie_ranks, int truncation_degree) {
    if (truncation_degree < 1) {
        throw std::invalid_argument("pbw_series: truncation degree must be >= 1, got " +
                                    std::to_string(truncation_degree));
    }
    if (lie_ranks.max_degree() > truncation_degree) {
        throw std::invalid_argument("pbw_series: ranks at degree " +
                                    std::to_string(lie_ranks.max_degree()) +
                                    " exceed the truncation degree " +
                                    std::to_string(truncation_degree));
    }
    TruncatedSeries product = TruncatedSeries::one(truncation_degree);
    for (const auto& [degree, rank] : lie_ranks) {
        product = series_mul(product, detail::pbw_factor(degree, rank, truncation_degree));
    }
    return product;
}

}  // namespace openbook
