#pragma once

#include <string>
#include <vector>

#include "openbook/numeric.hpp"
#include "openbook/openbook.hpp"
#include "openbook/spaces.hpp"

namespace openbook {

// Exponents (a_1, ..., a_{n+1}) of a Brieskorn polynomial
// z_1^{a_1} + ... + z_{n+1}^{a_{n+1}} with an isolated singularity at 0;
// the link sits in S^{2n+1}.
struct BrieskornExponents {
    std::vector<long> exponents;  // each >= 2
    int n = 0;                    // exponents.size() == n + 1, n >= 1
};

// Validates and fills in n = exponents.size() - 1.
BrieskornExponents make_brieskorn(std::vector<long> exponents);

// Multiplicity (Milnor number) of the singularity: mu = prod(a_i - 1).
Integer brieskorn_multiplicity(const BrieskornExponents& b);

// The page of the fibration: a wedge of mu copies of S^n
// (Contractible when mu = 0, a single sphere when mu = 1).
// Requires n >= 2; the full pipeline wants n >= 3 but smaller model
// experiments are allowed here.
SpaceModel milnor_page(const Integer& mu, int n);

// What the dichotomy forces about the monodromy of the Brieskorn open book
// of S^{2n+1}. When mu >= 2 and n >= 3 the ambient sphere is rationally
// elliptic while the page is a hyperbolic wedge, so the finite-order
// nilpotent hypothesis must fail: either no iterate of h is rationally
// homotopic to the identity, or h acts non-nilpotently on H_*(V; Z). The
// homotopy fibre of the binding inclusion also cannot be rationally a
// sphere. When mu <= 1 or n < 3 there is no obstruction to report.
struct MonodromyConstraintReport {
    Integer mu;
    int n = 0;
    int ambient_dim = 0;  // 2n + 1
    bool obstruction_applies = false;
    std::string summary;
    std::vector<std::string> conclusions;  // empty when no obstruction
    std::string rationale;
};

MonodromyConstraintReport monodromy_constraint_report(const BrieskornExponents& b);

// The variation map Var(h): H_n(V, dV) -> H_n(V), z -> [h(z) - z], written
// in integer bases of the middle homology (free abelian of rank mu).
struct VariationMatrix {
    std::vector<std::vector<Integer>> entries;  // square, size >= 1
    std::size_t size() const { return entries.size(); }
};

// Validates squareness and positive size.
VariationMatrix make_variation(std::vector<std::vector<Integer>> entries);

// Exact determinant by fraction-free (Bareiss) elimination.
Integer variation_determinant(const VariationMatrix& v);

// Kauffman's criterion: the open book closes up to a homotopy sphere iff
// Var is an isomorphism, i.e. det = +-1. Decided exactly.
bool variation_is_iso(const VariationMatrix& v);

// Variation of h # h on the boundary connected sum V # V: the block
// diagonal diag(v, v) on H_n(V) + H_n(V).
VariationMatrix boundary_connected_sum_variation(const VariationMatrix& v);

// Open-book spec of the Brieskorn decomposition of S^{2n+1}: page
// milnor_page(mu, n), monodromy as supplied, all connectivity flags set
// (the binding is simply connected once n >= 3). The fibre of the binding
// inclusion is deliberately left unset — it is not a sphere rationally when
// mu >= 2 and no model of it is known here, so classification on the result
// reports the gap unless the caller fills one in. Requires n >= 3.
OpenBookSpec milnor_openbook_spec(const BrieskornExponents& b,
                                  MonodromyHypothesis monodromy);

}  // namespace openbook
