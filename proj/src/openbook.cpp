#include "openbook/openbook.hpp"

#include <string>
#include <utility>

namespace openbook {

MonodromyHypothesis make_finite_order(long m, bool nilpotent_action,
                                      NilpotenceEvidence evidence) {
    if (m < 1) {
        throw std::invalid_argument("finite-order monodromy requires m >= 1, got " +
                                    std::to_string(m));
    }
    return FiniteHomotopyOrder{m, nilpotent_action, evidence};
}

bool monodromy_hypothesis_usable(const MonodromyHypothesis& monodromy) {
    if (std::holds_alternative<IdentityOnRationalHomotopy>(monodromy)) return true;
    if (const auto* finite = std::get_if<FiniteHomotopyOrder>(&monodromy)) {
        return finite->order >= 1 && finite->nilpotent_action;
    }
    return false;
}

std::vector<Violation> validate_spec(const OpenBookSpec& spec) {
    std::vector<Violation> violations;
    const auto flag = [&violations](const char* code, std::string message) {
        violations.push_back(Violation{code, std::move(message)});
    };

    if (spec.ambient_dim < 3) {
        flag("ambient_dim_too_small", "the ambient dimension must be at least 3, got " +
                                          std::to_string(spec.ambient_dim));
    }

    if (!spec.fibre.has_value()) {
        flag("fibre_model_missing",
             "no model of the homotopy fibre of the binding inclusion was supplied; rank "
             "computation and classification need one");
    } else {
        if (is_contractible(*spec.fibre)) {
            flag("fibre_rationally_contractible",
                 "the homotopy fibre of the binding inclusion is never rationally contractible: "
                 "the page of an open book has nontrivial top relative cohomology");
        } else if (std::holds_alternative<EllipticRanks>(*spec.fibre)) {
            flag("fibre_not_suspendable",
                 "the fibre is described only by elliptic ranks, which do not determine its "
                 "suspension; supply a sphere or wedge-of-spheres model");
        }
    }

    if (spec.page_simply_connected) {
        if (!simply_connected_model(spec.page)) {
            flag("page_model_not_simply_connected",
                 "the page is asserted simply connected but its model contains a sphere of "
                 "dimension 1");
        }
    } else {
        flag("page_simple_connectivity_not_asserted",
             "the decomposition theorems require a simply connected page; assert "
             "page_simply_connected");
    }

    if (!spec.boundary_nilpotent_connected) {
        flag("binding_not_nilpotent_connected",
             "the binding must be asserted connected and nilpotent; assert "
             "boundary_nilpotent_connected");
    }
    if (!spec.total_simply_connected) {
        flag("ambient_not_simply_connected",
             "the total space must be asserted simply connected; assert total_simply_connected");
    }

    if (std::holds_alternative<UnverifiedMonodromy>(spec.monodromy)) {
        flag("monodromy_unverified",
             "the monodromy hypothesis is unverified; classification needs either the identity "
             "action on rational homotopy or a finite-order iterate together with a nilpotent "
             "action on the page's homotopy");
    } else if (const auto* finite = std::get_if<FiniteHomotopyOrder>(&spec.monodromy)) {
        if (finite->order < 1) {
            flag("monodromy_order_invalid",
                 "finite-order monodromy requires a positive iterate, got m = " +
                     std::to_string(finite->order));
        }
        if (!finite->nilpotent_action) {
            flag("monodromy_action_not_nilpotent",
                 "finite homotopy order alone does not suffice; the monodromy must also act "
                 "nilpotently on the rational homotopy of the page");
        }
    }

    return violations;
}

std::vector<std::string> hypothesis_notes(const OpenBookSpec& spec) {
    std::vector<std::string> notes;
    if (const auto* finite = std::get_if<FiniteHomotopyOrder>(&spec.monodromy)) {
        if (finite->nilpotent_action && finite->evidence == NilpotenceEvidence::Homology) {
            notes.push_back(
                "nilpotence of the monodromy action was asserted at the level of integral "
                "homology; for a simply connected page this forces a nilpotent mapping torus "
                "and hence a nilpotent action on homotopy, which is how it is used here");
        }
    }
    return notes;
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
    std::string message = "open book hypotheses unmet:";
    for (const Violation& violation : violations) {
        message += " ";
        message += violation.code;
        message += ";";
    }
    if (!violations.empty()) message.pop_back();
    return message;
}

}  // namespace

HypothesesUnmet::HypothesesUnmet(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

GradedRanks double_loop_ranks(const SpaceModel& page, const SpaceModel& fibre,
                              int truncation_degree) {
    return loop_ranks(page, truncation_degree) +
           loop_ranks(suspend(fibre, 1), truncation_degree);
}

namespace {

const SpaceModel& validated_fibre(const OpenBookSpec& spec) {
    auto violations = validate_spec(spec);
    if (!violations.empty()) throw HypothesesUnmet(std::move(violations));
    return *spec.fibre;
}

}  // namespace

GradedRanks openbook_loop_ranks(const OpenBookSpec& spec, int truncation_degree) {
    const SpaceModel& fibre = validated_fibre(spec);
    return loop_ranks(spec.page, truncation_degree) +
           loop_ranks(suspend(fibre, 2), truncation_degree);
}

GradedRanks homotopy_ranks(const OpenBookSpec& spec, int truncation_degree) {
    const SpaceModel& fibre = validated_fibre(spec);
    return space_ranks(spec.page, truncation_degree) +
           space_ranks(suspend(fibre, 2), truncation_degree);
}

DichotomyVerdict classify_dichotomy(const OpenBookSpec& spec, int truncation_degree) {
    auto violations = validate_spec(spec);
    if (!violations.empty()) return NotClassifiable{std::move(violations)};

    const bool page_elliptic = is_rationally_elliptic(spec.page);
    const auto sphere_dim = single_sphere_dimension(*spec.fibre);
    if (page_elliptic && sphere_dim.has_value()) {
        const int l = *sphere_dim;
        GradedRanks ranks = space_ranks(spec.page, truncation_degree) +
                            space_ranks(Sphere{l + 2}, truncation_degree);
        return EllipticVerdict{l, std::move(ranks)};
    }
    HyperbolicReason reason;
    if (!page_elliptic && !sphere_dim.has_value()) {
        reason = HyperbolicReason::Both;
    } else if (!page_elliptic) {
        reason = HyperbolicReason::PageHyperbolic;
    } else {
        reason = HyperbolicReason::FibreNotASphere;
    }
    return HyperbolicVerdict{reason};
}

bool grove_halperin_test(bool fibre_is_rational_sphere, bool binding_elliptic) {
    if (!fibre_is_rational_sphere) {
        throw std::invalid_argument(
            "the binding comparison applies only when the fibre is rationally a sphere");
    }
    return binding_elliptic;
}

}  // namespace openbook
