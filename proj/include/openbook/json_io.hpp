#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "openbook/graded_ranks.hpp"
#include "openbook/milnor.hpp"
#include "openbook/openbook.hpp"
#include "openbook/spaces.hpp"

namespace openbook::io {

// Ordered so that serialized reports keep their field order and rank tables
// stay in ascending degree order.
using json = nlohmann::ordered_json;

// Malformed input: bad JSON, wrong shapes, out-of-domain values (dimension
// < 1, negative rank, ...). Distinct from validation violations, which are
// semantically well-formed specs that fail the theorems' hypotheses.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Wraps the JSON parser so syntax errors surface as parse_error.
json parse_document(const std::string& text);

// ---- readers ----------------------------------------------------------

// {"kind": "contractible" | "sphere" | "wedge" | "elliptic_ranks", ...}
// sphere: {"dim": n}; wedge: {"dims": [..]} or {"dim_counts": {"3": 2}};
// elliptic_ranks: {"ranks": {"4": 1, ...}}. Singleton wedges normalize
// to spheres.
SpaceModel space_model_from_json(const json& j);

// {"kind": "identity_on_rational_homotopy"}
// | {"kind": "finite_order", "m": int, "nilpotent_action": bool,
//    "nilpotence_evidence": "homotopy" (default) | "homology"}
// | {"kind": "unverified"}
MonodromyHypothesis monodromy_from_json(const json& j);

// {"ambient_dim": n, "page": {...}, "fibre": {...}?, "monodromy": {...}?,
//  "page_simply_connected": bool?, "boundary_nilpotent_connected": bool?,
//  "total_simply_connected": bool?}
// Absent monodromy means unverified (never identity); absent flags mean
// the hypothesis is not asserted; absent fibre stays unset.
OpenBookSpec openbook_spec_from_json(const json& j);

// {"exponents": [a1, ...], "n": int?} — n defaults to len(exponents) - 1
// and must match it when given.
BrieskornExponents brieskorn_from_json(const json& j);

// {"matrix": [[..], ...]} of integers (arbitrary size via strings).
VariationMatrix variation_from_json(const json& j);

// {"generators": {"1": 2, ...}} or the bare degree->rank object.
GradedRanks generators_from_json(const json& j);

// Integer field that may exceed 64 bits: accepts a JSON integer or a
// decimal string.
Integer integer_from_json(const json& j, const std::string& field);

// ---- writers ----------------------------------------------------------

// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as
// decimal strings.
json integer_to_json(const Integer& value);

// {"degree": rank, ...} with degrees as decimal-string keys in ascending
// numeric order.
json ranks_to_json(const GradedRanks& ranks);

json space_model_to_json(const SpaceModel& model);
json monodromy_to_json(const MonodromyHypothesis& monodromy);
json openbook_spec_to_json(const OpenBookSpec& spec);
json violations_to_json(const std::vector<Violation>& violations);
json verdict_to_json(const DichotomyVerdict& verdict);
json growth_report_to_json(const GrowthReport& report);
json monodromy_report_to_json(const MonodromyConstraintReport& report);
json variation_to_json(const VariationMatrix& v);

}  // namespace openbook::io
