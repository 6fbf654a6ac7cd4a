#include "openbook/milnor.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace openbook {

BrieskornExponents make_brieskorn(std::vector<long> exponents) {
    if (exponents.size() < 2) {
        throw std::invalid_argument(
            "at least two exponents are required (n >= 1), got " +
            std::to_string(exponents.size()));
    }
    for (long a : exponents) {
        if (a < 2) {
            throw std::invalid_argument("every exponent must be >= 2, got " + std::to_string(a));
        }
    }
    BrieskornExponents b;
    b.n = static_cast<int>(exponents.size()) - 1;
    b.exponents = std::move(exponents);
    return b;
}

Integer brieskorn_multiplicity(const BrieskornExponents& b) {
    if (b.exponents.size() != static_cast<std::size_t>(b.n) + 1) {
        throw std::invalid_argument("exponent count " + std::to_string(b.exponents.size()) +
                                    " does not match n + 1 = " + std::to_string(b.n + 1));
    }
    Integer mu = 1;
    for (long a : b.exponents) {
        if (a < 2) {
            throw std::invalid_argument("every exponent must be >= 2, got " + std::to_string(a));
        }
        mu *= a - 1;
    }
    return mu;
}

SpaceModel milnor_page(const Integer& mu, int n) {
    if (mu < 0) {
        throw std::invalid_argument("multiplicity must be >= 0, got " + mu.get_str());
    }
    if (n < 2) {
        throw std::invalid_argument("the page model needs sphere dimension n >= 2, got " +
                                    std::to_string(n));
    }
    return make_wedge_of_equal_spheres(mu, n);
}

MonodromyConstraintReport monodromy_constraint_report(const BrieskornExponents& b) {
    MonodromyConstraintReport report;
    report.mu = brieskorn_multiplicity(b);
    report.n = b.n;
    report.ambient_dim = 2 * b.n + 1;
    report.obstruction_applies = report.mu >= 2 && b.n >= 3;

    const std::string page_description =
        "a wedge of " + report.mu.get_str() + " copies of S^" + std::to_string(b.n);

    if (!report.obstruction_applies) {
        report.summary = "no obstruction on the monodromy";
        if (report.mu <= 1) {
            report.rationale =
                "the page is " +
                std::string(report.mu == 0 ? "rationally contractible"
                                           : "a single sphere S^" + std::to_string(b.n)) +
                " (multiplicity " + report.mu.get_str() +
                "), hence rationally elliptic, so the dichotomy places no constraint on the "
                "monodromy";
        } else {
            report.rationale =
                "the argument needs n >= 3 so that the binding of the open book of S^" +
                std::to_string(report.ambient_dim) +
                " is simply connected; here n = " + std::to_string(b.n);
        }
        return report;
    }

    report.summary =
        "the monodromy of this open book of S^" + std::to_string(report.ambient_dim) +
        " cannot have a finite-order, nilpotent action";
    report.conclusions = {
        "either no positive iterate of the monodromy is rationally homotopic to the identity "
        "(the monodromy has infinite order on rational homotopy)",
        "or the monodromy acts non-nilpotently on the integral homology of the page",
        "in addition, the homotopy fibre of the binding inclusion is not rationally a sphere",
    };
    report.rationale =
        "S^" + std::to_string(report.ambient_dim) +
        " is rationally elliptic, but the page is " + page_description +
        " with multiplicity " + report.mu.get_str() +
        " >= 2 and therefore rationally hyperbolic; a finite-order monodromy acting nilpotently "
        "would force the page of this open book to be rationally elliptic and the binding "
        "fibre to be rationally a sphere, a contradiction";
    return report;
}

VariationMatrix make_variation(std::vector<std::vector<Integer>> entries) {
    if (entries.empty()) {
        throw std::invalid_argument("the variation matrix must have size >= 1");
    }
    for (const auto& row : entries) {
        if (row.size() != entries.size()) {
            throw std::invalid_argument("the variation matrix must be square: expected " +
                                        std::to_string(entries.size()) + " columns, got " +
                                        std::to_string(row.size()));
        }
    }
    return VariationMatrix{std::move(entries)};
}

Integer variation_determinant(const VariationMatrix& v) {
    auto a = v.entries;  // working copy, mutated in place
    const std::size_t n = a.size();
    if (n == 0) {
        throw std::invalid_argument("the variation matrix must have size >= 1");
    }
    for (const auto& row : a) {
        if (row.size() != n) {
            throw std::invalid_argument("the variation matrix must be square");
        }
    }

    // Fraction-free (Bareiss) elimination: every division is exact, so the
    // result is the exact integer determinant with no rational blow-up.
    Integer previous_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer numerator = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), numerator.get_mpz_t(),
                             previous_pivot.get_mpz_t());
            }
            a[i][k] = 0;
        }
        previous_pivot = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool variation_is_iso(const VariationMatrix& v) {
    const Integer det = variation_determinant(v);
    return det == 1 || det == -1;
}

VariationMatrix boundary_connected_sum_variation(const VariationMatrix& v) {
    const std::size_t n = v.size();
    std::vector<std::vector<Integer>> out(2 * n, std::vector<Integer>(2 * n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i][j] = v.entries[i][j];
            out[n + i][n + j] = v.entries[i][j];
        }
    }
    return VariationMatrix{std::move(out)};
}

OpenBookSpec milnor_openbook_spec(const BrieskornExponents& b, MonodromyHypothesis monodromy) {
    if (b.n < 3) {
        throw std::invalid_argument(
            "the pipeline requires n >= 3 (so that the binding is simply connected), got n = " +
            std::to_string(b.n));
    }
    OpenBookSpec spec;
    spec.ambient_dim = 2 * b.n + 1;
    spec.page = milnor_page(brieskorn_multiplicity(b), b.n);
    // The fibre of the binding inclusion is deliberately left unset: for
    // mu >= 2 it is provably not a sphere rationally and no model of it is
    // known here, so inventing one would be wrong.
    spec.monodromy = std::move(monodromy);
    spec.page_simply_connected = true;
    spec.boundary_nilpotent_connected = true;
    spec.total_simply_connected = true;
    return spec;
}

}  // namespace openbook
