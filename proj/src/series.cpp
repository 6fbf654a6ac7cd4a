#include "openbook/series.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace openbook {

namespace {

void require_same_truncation(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.truncation_degree() != b.truncation_degree()) {
        throw std::invalid_argument(std::string(op) + ": truncation degrees differ (" +
                                    std::to_string(a.truncation_degree()) + " vs " +
                                    std::to_string(b.truncation_degree()) + ")");
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int truncation_degree) {
    if (truncation_degree < 0) {
        throw std::invalid_argument("series: truncation degree must be >= 0, got " +
                                    std::to_string(truncation_degree));
    }
    coefficients_.assign(static_cast<std::size_t>(truncation_degree) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) {
        throw std::invalid_argument("series: the coefficient vector must cover degree 0");
    }
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, int truncation_degree) {
    TruncatedSeries out(truncation_degree);
    out.coefficients_[0] = value;
    return out;
}

TruncatedSeries TruncatedSeries::one(int truncation_degree) {
    return constant(Rational(1), truncation_degree);
}

const Rational& TruncatedSeries::coefficient(int degree) const {
    if (degree < 0 || degree > truncation_degree()) {
        throw std::out_of_range("series: degree " + std::to_string(degree) + " is outside 0.." +
                                std::to_string(truncation_degree()));
    }
    return coefficients_[static_cast<std::size_t>(degree)];
}

bool TruncatedSeries::is_zero() const {
    for (const Rational& c : coefficients_) {
        if (c != 0) return false;
    }
    return true;
}

bool TruncatedSeries::is_one() const {
    if (coefficients_[0] != 1) return false;
    for (std::size_t i = 1; i < coefficients_.size(); ++i) {
        if (coefficients_[i] != 0) return false;
    }
    return true;
}

TruncatedSeries series_from_ranks(const GradedRanks& ranks, int truncation_degree) {
    if (truncation_degree < 0) {
        throw std::invalid_argument("series: truncation degree must be >= 0, got " +
                                    std::to_string(truncation_degree));
    }
    std::vector<Rational> coefficients(static_cast<std::size_t>(truncation_degree) + 1,
                                       Rational(0));
    for (const auto& [degree, rank] : ranks) {
        if (degree > truncation_degree) break;
        coefficients[static_cast<std::size_t>(degree)] = Rational(rank);
    }
    return TruncatedSeries(std::move(coefficients));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_truncation(a, b, "series_add");
    std::vector<Rational> out = a.coefficients();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coefficients()[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_truncation(a, b, "series_sub");
    std::vector<Rational> out = a.coefficients();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.coefficients()[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_truncation(a, b, "series_mul");
    const std::size_t size = a.coefficients().size();
    std::vector<Rational> out(size, Rational(0));
    for (std::size_t i = 0; i < size; ++i) {
        const Rational& ai = a.coefficients()[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; i + j < size; ++j) {
            const Rational& bj = b.coefficients()[j];
            if (bj == 0) continue;
            out[i + j] += ai * bj;
        }
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_truncation(a, b, "series_div");
    const Rational& b0 = b.coefficients()[0];
    if (b0 == 0) {
        throw std::domain_error("series_div: divisor has zero constant term");
    }
    const std::size_t size = a.coefficients().size();
    std::vector<Rational> q(size, Rational(0));
    for (std::size_t i = 0; i < size; ++i) {
        Rational acc = a.coefficients()[i];
        for (std::size_t j = 0; j < i; ++j) {
            if (q[j] == 0) continue;
            acc -= q[j] * b.coefficients()[i - j];
        }
        q[i] = acc / b0;
    }
    return TruncatedSeries(std::move(q));
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
    return series_div(TruncatedSeries::one(a.truncation_degree()), a);
}

}  // namespace openbook
