#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "openbook/graded_ranks.hpp"
#include "openbook/spaces.hpp"

namespace openbook {

// Hypothesis on the monodromy h of the open book, abstracted to its action on
// rational homotopy. Either e(h) induces the identity on pi_*(DV) tensor Q,
// or some iterate does while h itself acts nilpotently on pi_*(V). Anything
// weaker must stay Unverified: defaulting to the identity case would let
// genuinely obstructed monodromies (the Milnor pages with mu >= 2) slip
// through with a wrong verdict.
struct IdentityOnRationalHomotopy {
    friend bool operator==(const IdentityOnRationalHomotopy&,
                           const IdentityOnRationalHomotopy&) {
        return true;
    }
};

// Whether the nilpotence claim was made for the action on homotopy groups
// (the hypothesis as stated) or only on integral homology. For the simply
// connected pages handled here the homological form implies the homotopy one
// through nilpotence of the mapping torus, so both are accepted; reports
// carry a note when only the homological claim was supplied.
enum class NilpotenceEvidence { Homotopy, Homology };

struct FiniteHomotopyOrder {
    long order = 1;  // m >= 1 with e(h)_*^m = id
    bool nilpotent_action = false;
    NilpotenceEvidence evidence = NilpotenceEvidence::Homotopy;
    friend bool operator==(const FiniteHomotopyOrder& a, const FiniteHomotopyOrder& b) {
        return a.order == b.order && a.nilpotent_action == b.nilpotent_action &&
               a.evidence == b.evidence;
    }
};

struct UnverifiedMonodromy {
    friend bool operator==(const UnverifiedMonodromy&, const UnverifiedMonodromy&) {
        return true;
    }
};

using MonodromyHypothesis =
    std::variant<IdentityOnRationalHomotopy, FiniteHomotopyOrder, UnverifiedMonodromy>;

// Throws std::invalid_argument if m < 1.
MonodromyHypothesis make_finite_order(long m, bool nilpotent_action,
                                      NilpotenceEvidence evidence = NilpotenceEvidence::Homotopy);

// An open book M = (dV x D^2) u V_h, described at the level of rational
// homotopy models. The fibre is the homotopy fibre of the binding inclusion
// dV -> V; it may be left unset (e.g. by the Brieskorn pipeline, which knows
// the page but refuses to guess the fibre), in which case classification
// reports the gap instead of computing.
//
// The connectivity/nilpotence flags are caller-asserted hypotheses, not
// derived facts: the calculator works with homotopy models, not manifolds,
// so it cannot check them itself. validate_spec makes every assertion
// explicit.
struct OpenBookSpec {
    int ambient_dim = 0;  // dim M, >= 3
    SpaceModel page = Contractible{};
    std::optional<SpaceModel> fibre;
    MonodromyHypothesis monodromy = UnverifiedMonodromy{};
    bool page_simply_connected = false;
    bool boundary_nilpotent_connected = false;
    bool total_simply_connected = false;
};

struct Violation {
    std::string code;     // stable machine-readable identifier
    std::string message;  // human-readable explanation
    friend bool operator==(const Violation& a, const Violation& b) {
        return a.code == b.code && a.message == b.message;
    }
};

// Every hypothesis of the decomposition/dichotomy theorems that the spec
// fails to supply or contradicts; empty means fully validated. Violations
// are data, not errors.
std::vector<Violation> validate_spec(const OpenBookSpec& spec);

// True when the monodromy hypothesis supports rank computation: identity on
// rational homotopy, or finite order with nilpotent action (the iterated
// cover reduction makes the ranks agree with the identity case).
bool monodromy_hypothesis_usable(const MonodromyHypothesis& monodromy);

// Non-blocking caveats worth surfacing alongside a verdict. Currently one:
// nilpotence asserted only on homology, which suffices for simply connected
// pages (the mapping torus is then nilpotent) but is a weaker statement than
// the homotopy-level hypothesis.
std::vector<std::string> hypothesis_notes(const OpenBookSpec& spec);

// Thrown when a rank computation is requested for a spec whose hypotheses
// fail; carries the violation list so callers can report instead of guess.
class HypothesesUnmet : public std::runtime_error {
public:
    explicit HypothesesUnmet(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

// Loop ranks of the double DV: Omega DV = Omega V x Omega Sigma F, so the
// result is loop_ranks(page) + loop_ranks(suspend(fibre, 1)) degreewise.
GradedRanks double_loop_ranks(const SpaceModel& page, const SpaceModel& fibre,
                              int truncation_degree);

// Loop ranks of the open book M: Omega M = Omega V x Omega Sigma^2 F.
// Requires a fully validated spec with a usable monodromy hypothesis;
// throws HypothesesUnmet otherwise.
GradedRanks openbook_loop_ranks(const OpenBookSpec& spec, int truncation_degree);

// Ranks of pi_*(M) tensor Q: space_ranks(page) + space_ranks(suspend(fibre, 2)).
GradedRanks homotopy_ranks(const OpenBookSpec& spec, int truncation_degree);

struct EllipticVerdict {
    int l = 0;  // fibre is rationally S^l
    GradedRanks ranks;
    friend bool operator==(const EllipticVerdict& a, const EllipticVerdict& b) {
        return a.l == b.l && a.ranks == b.ranks;
    }
};

enum class HyperbolicReason { PageHyperbolic, FibreNotASphere, Both };

struct HyperbolicVerdict {
    HyperbolicReason reason = HyperbolicReason::PageHyperbolic;
    friend bool operator==(const HyperbolicVerdict& a, const HyperbolicVerdict& b) {
        return a.reason == b.reason;
    }
};

struct NotClassifiable {
    std::vector<Violation> missing;
    friend bool operator==(const NotClassifiable& a, const NotClassifiable& b) {
        return a.missing == b.missing;
    }
};

using DichotomyVerdict = std::variant<EllipticVerdict, HyperbolicVerdict, NotClassifiable>;

// The dichotomy: under the validated hypotheses, either the page is
// rationally elliptic and the fibre is rationally a sphere S^l — in which
// case M is elliptic with pi_*(M) Q-ranks space_ranks(page) +
// space_ranks(Sphere(l+2)) — or at least one of those fails and M is
// rationally hyperbolic, with the reason recording which. Total function:
// unmet hypotheses come back as NotClassifiable.
DichotomyVerdict classify_dichotomy(const OpenBookSpec& spec, int truncation_degree);

// Comparison against the double-mapping-cylinder ellipticity criterion: when
// the fibre is rationally a sphere, M is rationally elliptic iff the binding
// is. Calling it outside that regime is an error.
bool grove_halperin_test(bool fibre_is_rational_sphere, bool binding_elliptic);

}  // namespace openbook
