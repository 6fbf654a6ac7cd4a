#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "openbook/graded_ranks.hpp"
#include "openbook/numeric.hpp"

namespace openbook {

// Rational homotopy models for pages, fibres and bindings.

struct Contractible {
    friend bool operator==(const Contractible&, const Contractible&) { return true; }
};

struct Sphere {
    int dim = 0;  // >= 1
    friend bool operator==(const Sphere& a, const Sphere& b) { return a.dim == b.dim; }
};

// Multiset of sphere dimensions, stored as dimension -> multiplicity so that
// wedges produced from large multiplicities stay representable. A singleton
// wedge is semantically the same space as the sphere of that dimension and
// every operation treats the two encodings identically.
struct WedgeOfSpheres {
    std::map<int, Integer> copies;
    Integer total() const;
    int min_dim() const;
    friend bool operator==(const WedgeOfSpheres& a, const WedgeOfSpheres& b) {
        return a.copies == b.copies;
    }
};

// Direct encoding of the rational homotopy ranks of a rationally elliptic
// space; finite support with lowest degree >= 2.
struct EllipticRanks {
    GradedRanks ranks;
    friend bool operator==(const EllipticRanks& a, const EllipticRanks& b) {
        return a.ranks == b.ranks;
    }
};

using SpaceModel = std::variant<Contractible, Sphere, WedgeOfSpheres, EllipticRanks>;

// Validating constructors.
SpaceModel make_sphere(int dim);
// Nonempty; dims >= 1; a singleton normalizes to Sphere.
SpaceModel make_wedge(const std::vector<int>& dims);
// Same, from a dimension -> multiplicity map (distinct name: a braced list
// would otherwise be ambiguous against the vector overload).
SpaceModel make_wedge_counts(std::map<int, Integer> copies);
// mu copies of S^n: Contractible for mu = 0, Sphere for mu = 1.
SpaceModel make_wedge_of_equal_spheres(const Integer& mu, int dim);
SpaceModel make_elliptic(GradedRanks ranks);

bool is_contractible(const SpaceModel& model);
// Sphere(n) or singleton wedge {n}; returns n.
std::optional<int> single_sphere_dimension(const SpaceModel& model);
// True when every sphere dimension in the model is >= 2 (vacuously true for
// Contractible and EllipticRanks).
bool simply_connected_model(const SpaceModel& model);

// Ranks of pi_*(Omega X) tensor Q through the truncation degree.
//   Contractible        -> empty
//   Sphere(n), n odd    -> {n-1: 1}
//   Sphere(n), n even   -> {n-1: 1, 2n-2: 1}
//   WedgeOfSpheres      -> free graded Lie algebra on {d-1: multiplicity}
//   EllipticRanks(r)    -> r shifted down one degree
// S^1 contributes nothing in positive loop degrees; a wedge of two or more
// spheres must have all dimensions >= 2.
GradedRanks loop_ranks(const SpaceModel& model, int truncation_degree);

// Ranks of pi_*(X) tensor Q: the loop ranks shifted up one degree, and the
// stored ranks for EllipticRanks.
GradedRanks space_ranks(const SpaceModel& model, int truncation_degree);

// Shifts every sphere dimension up by k >= 1. Refuses EllipticRanks: the
// suspension of a general elliptic model is not determined by ranks alone.
SpaceModel suspend(const SpaceModel& model, int k);

// Finite total rank? True for Contractible, Sphere, singleton wedges and
// EllipticRanks; false for wedges of two or more simply connected spheres,
// whose free Lie algebra grows exponentially.
bool is_rationally_elliptic(const SpaceModel& model);

enum class GrowthClass { PolynomialOrFinite, Exponential };

struct GrowthReport {
    // partial_sums[d-1] = total rank of pi_* tensor Q through degree d.
    std::vector<Integer> partial_sums;
    GrowthClass classification = GrowthClass::PolynomialOrFinite;
    // 1/R where R is the root in (0,1) of 1 - W(t) for the wedge generating
    // function W; present iff Exponential. Always > 1.
    std::optional<double> growth_base;
};

// Growth analysis for Sphere or WedgeOfSpheres models, truncation >= 10.
// The classification is exact; the base is a bisection root reported to
// relative tolerance 1e-12.
GrowthReport growth_estimate(const SpaceModel& model, int truncation_degree);

}  // namespace openbook
