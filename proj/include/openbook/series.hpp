#pragma once

#include <vector>

#include "openbook/graded_ranks.hpp"
#include "openbook/numeric.hpp"

namespace openbook {

// Truncation degree used by entry points that do not take an explicit one.
inline constexpr int kDefaultTruncation = 40;

// Formal power series over the rationals, truncated at a fixed degree N.
// Exactly N+1 coefficients are stored; degrees above N are undefined rather
// than zero, and every binary operation insists that both operands share the
// same truncation degree. All arithmetic is exact.
class TruncatedSeries {
public:
    // Zero series with the given truncation degree (>= 0).
    explicit TruncatedSeries(int truncation_degree);
    // Takes ownership of the coefficient vector; its size fixes N + 1.
    explicit TruncatedSeries(std::vector<Rational> coefficients);

    static TruncatedSeries constant(const Rational& value, int truncation_degree);
    static TruncatedSeries one(int truncation_degree);

    int truncation_degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    // Degree must lie in 0..N.
    const Rational& coefficient(int degree) const;
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    bool is_zero() const;
    bool is_one() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coefficients_ == b.coefficients_;
    }

private:
    std::vector<Rational> coefficients_;
};

// t^0 coefficient 0, t^d coefficient ranks(d) for 1 <= d <= N; higher
// degrees in ranks are dropped.
TruncatedSeries series_from_ranks(const GradedRanks& ranks, int truncation_degree);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
// Cauchy product truncated at the common degree.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
// Quotient q with q * b = a up to the truncation degree; b must have a
// nonzero constant term.
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);
// Inverse of a, requiring a nonzero constant term.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

}  // namespace openbook
