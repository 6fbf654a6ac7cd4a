#pragma once

// Independent brute-force oracles used to cross-check the main algorithms.
// Deliberately naive: these share no code path with the library.

#include <vector>

#include "openbook/graded_ranks.hpp"
#include "openbook/numeric.hpp"

namespace oracles {

// Number of Lyndon words of the given length over an alphabet of the given
// size, counted by enumerating every string and testing it against all of
// its rotations. Feasible only for small inputs.
long lyndon_word_count(int alphabet_size, int length);

// Rational homotopy ranks of a wedge of simply connected spheres through
// max_degree, computed from the basic-product description: one generator of
// pi_{q_w} per Lyndon word w with q_w = 1 + sum(dim_i - 1), plus one of
// pi_{2 q_w - 1} whenever q_w is even.
openbook::GradedRanks hilton_space_ranks(const std::vector<int>& sphere_dims, int max_degree);

// Determinant by cofactor expansion along the first row.
openbook::Integer cofactor_determinant(const std::vector<std::vector<openbook::Integer>>& m);

}  // namespace oracles
