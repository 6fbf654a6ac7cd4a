#include "doctest.h"

#include <random>
#include <stdexcept>

#include "openbook/lie.hpp"
#include "oracles.hpp"

using openbook::GradedRanks;
using openbook::Integer;
using openbook::TruncatedSeries;

TEST_CASE("moebius") {
    CHECK(openbook::moebius(1) == 1);
    CHECK(openbook::moebius(2) == -1);
    CHECK(openbook::moebius(4) == 0);
    CHECK(openbook::moebius(6) == 1);
    CHECK(openbook::moebius(30) == -1);
    CHECK(openbook::moebius(45) == 0);
    CHECK_THROWS_AS(openbook::moebius(0), std::invalid_argument);
}

TEST_CASE("witt numbers match the Lyndon enumeration") {
    for (int m = 1; m <= 3; ++m) {
        for (int k = 1; k <= 8; ++k) {
            CHECK(openbook::witt_number(m, k) == Integer(oracles::lyndon_word_count(m, k)));
        }
    }
    CHECK(openbook::witt_number(1, 5) == 0);
    CHECK(openbook::witt_number(3, 2) == 3);
    const long expected_m2[] = {2, 1, 2, 3, 6, 9, 18, 30};
    for (int k = 1; k <= 8; ++k) {
        CHECK(openbook::witt_number(2, k) == expected_m2[k - 1]);
    }
}

TEST_CASE("free Lie ranks on a single generator") {
    // Even loop degree: the generator brackets to zero, nothing else appears.
    CHECK(openbook::free_lie_ranks(GradedRanks{{2, 1}}, 8) == GradedRanks{{2, 1}});
    // Odd loop degree: the self-bracket survives in degree 2 and stops there,
    // matching the rational homotopy of an even sphere.
    CHECK(openbook::free_lie_ranks(GradedRanks{{1, 1}}, 8) == GradedRanks{{1, 1}, {2, 1}});
}

TEST_CASE("free Lie ranks on two odd generators, low degrees") {
    const GradedRanks ranks = openbook::free_lie_ranks(GradedRanks{{1, 2}}, 2);
    CHECK(ranks.rank(1) == 2);
    CHECK(ranks.rank(2) == 3);  // [x,x], [x,y], [y,y]
}

TEST_CASE("free Lie ranks on two even generators are Witt numbers") {
    const GradedRanks ranks = openbook::free_lie_ranks(GradedRanks{{2, 2}}, 12);
    CHECK(ranks ==
          GradedRanks{{2, 2}, {4, 1}, {6, 2}, {8, 3}, {10, 6}, {12, 9}});
    for (int k = 1; k <= 6; ++k) {
        CHECK(ranks.rank(2 * k) == openbook::witt_number(2, k));
    }
}

TEST_CASE("generators concentrated in one even degree scale the Witt table") {
    for (int m = 1; m <= 4; ++m) {
        for (int j = 1; j <= 2; ++j) {
            const int degree = 2 * j;
            const int truncation = 8 * j;
            const GradedRanks ranks =
                openbook::free_lie_ranks(GradedRanks{{degree, m}}, truncation);
            for (int d = 1; d <= truncation; ++d) {
                if (d % degree == 0) {
                    CHECK(ranks.rank(d) == openbook::witt_number(m, d / degree));
                } else {
                    CHECK(ranks.rank(d) == 0);
                }
            }
        }
    }
}

TEST_CASE("pbw_series reassembles single factors") {
    // {1:1} -> 1 + t
    const TruncatedSeries odd = openbook::pbw_series(GradedRanks{{1, 1}}, 4);
    CHECK(odd.coefficient(0) == 1);
    CHECK(odd.coefficient(1) == 1);
    for (int d = 2; d <= 4; ++d) CHECK(odd.coefficient(d) == 0);

    // {2:1} -> geometric expansion of 1/(1 - t^2)
    const TruncatedSeries even = openbook::pbw_series(GradedRanks{{2, 1}}, 6);
    for (int d = 0; d <= 6; ++d) {
        CHECK(even.coefficient(d) == (d % 2 == 0 ? 1 : 0));
    }
}

TEST_CASE("pbw roundtrip on random generator sets") {
    std::mt19937 rng(917);
    std::uniform_int_distribution<int> rank_of(0, 3);
    const int truncation = 30;
    for (int trial = 0; trial < 25; ++trial) {
        GradedRanks generators;
        for (int degree = 1; degree <= 6; ++degree) {
            generators.set(degree, rank_of(rng));
        }
        const TruncatedSeries reassembled =
            openbook::pbw_series(openbook::free_lie_ranks(generators, truncation), truncation);
        const TruncatedSeries target = series_reciprocal(series_sub(
            TruncatedSeries::one(truncation), series_from_ranks(generators, truncation)));
        CHECK(reassembled == target);
    }
}

TEST_CASE("monotonicity under generator inclusion") {
    std::mt19937 rng(4205);
    std::uniform_int_distribution<int> rank_of(0, 2);
    std::uniform_int_distribution<int> bump_of(0, 1);
    const int truncation = 16;
    for (int trial = 0; trial < 10; ++trial) {
        GradedRanks small;
        GradedRanks large;
        for (int degree = 1; degree <= 5; ++degree) {
            const int rank = rank_of(rng);
            small.set(degree, rank);
            large.set(degree, rank + bump_of(rng));
        }
        const GradedRanks small_ranks = openbook::free_lie_ranks(small, truncation);
        const GradedRanks large_ranks = openbook::free_lie_ranks(large, truncation);
        for (int degree = 1; degree <= truncation; ++degree) {
            CHECK(small_ranks.rank(degree) <= large_ranks.rank(degree));
        }
    }
}

TEST_CASE("pbw_series validates its support") {
    CHECK_THROWS_AS(openbook::pbw_series(GradedRanks{{5, 1}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(openbook::free_lie_ranks(GradedRanks{{1, 1}}, 0), std::invalid_argument);
}
