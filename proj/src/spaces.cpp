#include "openbook/spaces.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "openbook/lie.hpp"

namespace openbook {

Integer WedgeOfSpheres::total() const {
    Integer sum = 0;
    for (const auto& [dim, count] : copies) sum += count;
    return sum;
}

int WedgeOfSpheres::min_dim() const { return copies.empty() ? 0 : copies.begin()->first; }

SpaceModel make_sphere(int dim) {
    if (dim < 1) {
        throw std::invalid_argument("sphere dimension must be >= 1, got " + std::to_string(dim));
    }
    return Sphere{dim};
}

SpaceModel make_wedge_counts(std::map<int, Integer> copies) {
    Integer total = 0;
    for (auto it = copies.begin(); it != copies.end();) {
        if (it->first < 1) {
            throw std::invalid_argument("wedge sphere dimension must be >= 1, got " +
                                        std::to_string(it->first));
        }
        if (it->second < 0) {
            throw std::invalid_argument("wedge multiplicity for dimension " +
                                        std::to_string(it->first) + " must be >= 0, got " +
                                        it->second.get_str());
        }
        if (it->second == 0) {
            it = copies.erase(it);
        } else {
            total += it->second;
            ++it;
        }
    }
    if (total == 0) {
        throw std::invalid_argument("a wedge must contain at least one sphere");
    }
    if (total == 1) return Sphere{copies.begin()->first};
    return WedgeOfSpheres{std::move(copies)};
}

SpaceModel make_wedge(const std::vector<int>& dims) {
    if (dims.empty()) {
        throw std::invalid_argument("a wedge must contain at least one sphere");
    }
    std::map<int, Integer> copies;
    for (int dim : dims) {
        if (dim < 1) {
            throw std::invalid_argument("wedge sphere dimension must be >= 1, got " +
                                        std::to_string(dim));
        }
        copies[dim] += 1;
    }
    return make_wedge_counts(std::move(copies));
}

SpaceModel make_wedge_of_equal_spheres(const Integer& mu, int dim) {
    if (mu < 0) {
        throw std::invalid_argument("sphere count must be >= 0, got " + mu.get_str());
    }
    if (mu == 0) return Contractible{};
    if (dim < 1) {
        throw std::invalid_argument("sphere dimension must be >= 1, got " + std::to_string(dim));
    }
    if (mu == 1) return Sphere{dim};
    return WedgeOfSpheres{{{dim, mu}}};
}

SpaceModel make_elliptic(GradedRanks ranks) {
    if (!ranks.empty() && ranks.min_degree() < 2) {
        throw std::invalid_argument(
            "elliptic ranks must be concentrated in degrees >= 2 (lowest present: " +
            std::to_string(ranks.min_degree()) + ")");
    }
    return EllipticRanks{std::move(ranks)};
}

namespace {

// Model invariants that aggregate construction can bypass.
void check_model(const SpaceModel& model) {
    if (const auto* sphere = std::get_if<Sphere>(&model)) {
        if (sphere->dim < 1) {
            throw std::invalid_argument("sphere dimension must be >= 1, got " +
                                        std::to_string(sphere->dim));
        }
    } else if (const auto* wedge = std::get_if<WedgeOfSpheres>(&model)) {
        Integer total = 0;
        for (const auto& [dim, count] : wedge->copies) {
            if (dim < 1) {
                throw std::invalid_argument("wedge sphere dimension must be >= 1, got " +
                                            std::to_string(dim));
            }
            if (count < 0) {
                throw std::invalid_argument("wedge multiplicity for dimension " +
                                            std::to_string(dim) + " must be >= 0");
            }
            total += count;
        }
        if (total == 0) {
            throw std::invalid_argument("a wedge must contain at least one sphere");
        }
    } else if (const auto* elliptic = std::get_if<EllipticRanks>(&model)) {
        if (!elliptic->ranks.empty() && elliptic->ranks.min_degree() < 2) {
            throw std::invalid_argument("elliptic ranks must be concentrated in degrees >= 2");
        }
    }
}

GradedRanks sphere_space_ranks(int dim, int truncation_degree) {
    GradedRanks out;
    if (dim <= truncation_degree) out.set(dim, 1);
    if (dim % 2 == 0 && 2 * dim - 1 <= truncation_degree) out.set(2 * dim - 1, 1);
    return out;
}

GradedRanks sphere_loop_ranks(int dim, int truncation_degree) {
    GradedRanks out;
    // S^1 carries no rational homotopy in positive loop degrees.
    if (dim >= 2 && dim - 1 <= truncation_degree) out.set(dim - 1, 1);
    if (dim % 2 == 0 && dim >= 2 && 2 * dim - 2 <= truncation_degree) out.set(2 * dim - 2, 1);
    return out;
}

}  // namespace

bool is_contractible(const SpaceModel& model) {
    if (std::holds_alternative<Contractible>(model)) return true;
    if (const auto* elliptic = std::get_if<EllipticRanks>(&model)) {
        return elliptic->ranks.empty();
    }
    return false;
}

std::optional<int> single_sphere_dimension(const SpaceModel& model) {
    if (const auto* sphere = std::get_if<Sphere>(&model)) return sphere->dim;
    if (const auto* wedge = std::get_if<WedgeOfSpheres>(&model)) {
        if (wedge->total() == 1) return wedge->min_dim();
    }
    return std::nullopt;
}

bool simply_connected_model(const SpaceModel& model) {
    if (const auto* sphere = std::get_if<Sphere>(&model)) return sphere->dim >= 2;
    if (const auto* wedge = std::get_if<WedgeOfSpheres>(&model)) return wedge->min_dim() >= 2;
    return true;  // Contractible; EllipticRanks starts in degree >= 2
}

GradedRanks loop_ranks(const SpaceModel& model, int truncation_degree) {
    if (truncation_degree < 1) {
        throw std::invalid_argument("loop_ranks: truncation degree must be >= 1, got " +
                                    std::to_string(truncation_degree));
    }
    check_model(model);
    if (std::holds_alternative<Contractible>(model)) return {};
    if (const auto optional_dim = single_sphere_dimension(model)) {
        return sphere_loop_ranks(*optional_dim, truncation_degree);
    }
    if (const auto* wedge = std::get_if<WedgeOfSpheres>(&model)) {
        if (wedge->min_dim() < 2) {
            throw std::invalid_argument(
                "a wedge of two or more spheres must be simply connected; dimension " +
                std::to_string(wedge->min_dim()) + " entries are not supported");
        }
        GradedRanks generators;
        for (const auto& [dim, count] : wedge->copies) {
            generators.set(dim - 1, count);
        }
        return free_lie_ranks(generators, truncation_degree);
    }
    const auto& elliptic = std::get<EllipticRanks>(model);
    return elliptic.ranks.truncated(truncation_degree + 1).shifted(-1);
}

GradedRanks space_ranks(const SpaceModel& model, int truncation_degree) {
    if (truncation_degree < 2) {
        throw std::invalid_argument("space_ranks: truncation degree must be >= 2, got " +
                                    std::to_string(truncation_degree));
    }
    check_model(model);
    if (std::holds_alternative<Contractible>(model)) return {};
    if (const auto optional_dim = single_sphere_dimension(model)) {
        return sphere_space_ranks(*optional_dim, truncation_degree);
    }
    if (std::holds_alternative<WedgeOfSpheres>(model)) {
        return loop_ranks(model, truncation_degree - 1).shifted(1);
    }
    const auto& elliptic = std::get<EllipticRanks>(model);
    return elliptic.ranks.truncated(truncation_degree);
}

SpaceModel suspend(const SpaceModel& model, int k) {
    if (k < 1) {
        throw std::invalid_argument("suspension count must be >= 1, got " + std::to_string(k));
    }
    check_model(model);
    if (std::holds_alternative<Contractible>(model)) return Contractible{};
    if (const auto* sphere = std::get_if<Sphere>(&model)) return Sphere{sphere->dim + k};
    if (const auto* wedge = std::get_if<WedgeOfSpheres>(&model)) {
        std::map<int, Integer> shifted;
        for (const auto& [dim, count] : wedge->copies) shifted.emplace(dim + k, count);
        return WedgeOfSpheres{std::move(shifted)};
    }
    throw std::invalid_argument(
        "suspension of a model given only by elliptic ranks is not determined by those ranks; "
        "supply a sphere or wedge model instead");
}

bool is_rationally_elliptic(const SpaceModel& model) {
    if (const auto* wedge = std::get_if<WedgeOfSpheres>(&model)) {
        return wedge->total() <= 1;
    }
    return true;
}

GrowthReport growth_estimate(const SpaceModel& model, int truncation_degree) {
    if (!std::holds_alternative<Sphere>(model) && !std::holds_alternative<WedgeOfSpheres>(model)) {
        throw std::invalid_argument(
            "growth_estimate applies to sphere and wedge-of-spheres models only");
    }
    if (truncation_degree < 10) {
        throw std::invalid_argument("growth_estimate: truncation degree must be >= 10, got " +
                                    std::to_string(truncation_degree));
    }
    const GradedRanks ranks = space_ranks(model, truncation_degree);

    GrowthReport report;
    report.partial_sums.reserve(static_cast<std::size_t>(truncation_degree));
    Integer running = 0;
    int nonzero = 0;
    auto it = ranks.begin();
    for (int degree = 1; degree <= truncation_degree; ++degree) {
        while (it != ranks.end() && it->first == degree) {
            running += it->second;
            ++it;
        }
        report.partial_sums.push_back(running);
        if (running > 0) ++nonzero;
    }
    if (nonzero < 3) {
        throw std::invalid_argument(
            "growth_estimate: truncation degree " + std::to_string(truncation_degree) +
            " gives only " + std::to_string(nonzero) +
            " nonzero partial sums; at least 3 are needed for a stable report");
    }

    const bool exponential = !is_rationally_elliptic(model);
    report.classification =
        exponential ? GrowthClass::Exponential : GrowthClass::PolynomialOrFinite;
    if (!exponential) return report;

    // Root in (0,1) of f(t) = 1 - W(t), where W(t) = sum over spheres of
    // t^{dim-1} is the loop-degree generating function of the wedge. f(0) = 1
    // and f(1) = 1 - (number of spheres) < 0, so bisection applies; the
    // reciprocal root is the exponential growth base.
    const auto& wedge = std::get<WedgeOfSpheres>(model);
    const auto f = [&wedge](double t) {
        double sum = 1.0;
        for (const auto& [dim, count] : wedge.copies) {
            sum -= count.get_d() * std::pow(t, dim - 1);
        }
        return sum;
    };
    double lo = 0.0;
    double hi = 1.0;
    for (int iteration = 0; iteration < 2000; ++iteration) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-15 * hi) break;
    }
    report.growth_base = 2.0 / (lo + hi);
    return report;
}

}  // namespace openbook
