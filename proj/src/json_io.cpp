#include "openbook/json_io.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace openbook::io {

namespace {

[[noreturn]] void fail(const std::string& message) { throw parse_error(message); }

std::string where(const std::string& context, const std::string& field) {
    return context.empty() ? field : context + ": " + field;
}

const json* find_field(const json& j, const char* field) {
    if (!j.is_object()) return nullptr;
    const auto it = j.find(field);
    return it == j.end() ? nullptr : &*it;
}

const json& require_field(const json& j, const char* field, const std::string& context) {
    if (!j.is_object()) fail(context + ": expected a JSON object");
    const json* value = find_field(j, field);
    if (value == nullptr) fail(where(context, std::string("missing field '") + field + "'"));
    return *value;
}

long long require_integer_number(const json& j, const std::string& context) {
    if (j.is_number_unsigned()) {
        const std::uint64_t value = j.get<std::uint64_t>();
        if (value > static_cast<std::uint64_t>(std::numeric_limits<long long>::max())) {
            fail(context + ": integer is too large for this field");
        }
        return static_cast<long long>(value);
    }
    if (j.is_number_integer()) return j.get<long long>();
    fail(context + ": expected an integer");
}

int require_int(const json& j, const std::string& context) {
    const long long value = require_integer_number(j, context);
    if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
        fail(context + ": integer is out of range");
    }
    return static_cast<int>(value);
}

bool optional_bool(const json& j, const char* field, bool fallback,
                   const std::string& context) {
    const json* value = find_field(j, field);
    if (value == nullptr) return fallback;
    if (!value->is_boolean()) fail(where(context, std::string("'") + field + "' must be a boolean"));
    return value->get<bool>();
}

std::string require_string(const json& j, const std::string& context) {
    if (!j.is_string()) fail(context + ": expected a string");
    return j.get<std::string>();
}

bool looks_like_decimal_integer(const std::string& text) {
    std::size_t start = text.size() > 0 && (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') return false;
    }
    return true;
}

int parse_degree_key(const std::string& key, const std::string& context) {
    if (!looks_like_decimal_integer(key)) {
        fail(context + ": key '" + key + "' is not a decimal degree");
    }
    try {
        std::size_t consumed = 0;
        const int degree = std::stoi(key, &consumed);
        if (consumed != key.size()) throw std::invalid_argument(key);
        return degree;
    } catch (const std::exception&) {
        fail(context + ": key '" + key + "' is not a representable degree");
    }
}

GradedRanks ranks_object_from_json(const json& j, const std::string& context) {
    if (!j.is_object()) fail(context + ": expected an object mapping degree to rank");
    GradedRanks out;
    for (const auto& [key, value] : j.items()) {
        const int degree = parse_degree_key(key, context);
        if (degree < 1) fail(context + ": degree must be >= 1, got " + key);
        const Integer rank = integer_from_json(value, where(context, "degree " + key));
        if (rank < 0) {
            fail(context + ": rank at degree " + key + " must be >= 0, got " + rank.get_str());
        }
        out.set(degree, rank);
    }
    return out;
}

}  // namespace

json parse_document(const std::string& text) {
    json document = json::parse(text, nullptr, false);
    if (document.is_discarded()) fail("input is not valid JSON");
    return document;
}

Integer integer_from_json(const json& j, const std::string& field) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        const std::string text = j.get<std::string>();
        if (!looks_like_decimal_integer(text)) {
            fail(field + ": '" + text + "' is not a decimal integer");
        }
        try {
            return Integer(text, 10);
        } catch (const std::exception&) {
            fail(field + ": '" + text + "' is not a decimal integer");
        }
    }
    fail(field + ": expected an integer (number or decimal string)");
}

SpaceModel space_model_from_json(const json& j) {
    static const std::string context = "space model";
    const std::string kind = require_string(require_field(j, "kind", context),
                                            where(context, "'kind'"));
    if (kind == "contractible") return Contractible{};
    if (kind == "sphere") {
        const int dim = require_int(require_field(j, "dim", context), where(context, "'dim'"));
        if (dim < 1) fail(where(context, "sphere dimension must be >= 1, got ") +
                          std::to_string(dim));
        return Sphere{dim};
    }
    if (kind == "wedge") {
        std::map<int, Integer> copies;
        if (const json* dims = find_field(j, "dims")) {
            if (!dims->is_array()) fail(where(context, "'dims' must be an array"));
            if (dims->empty()) fail(where(context, "'dims' must be nonempty"));
            for (const json& entry : *dims) {
                const int dim = require_int(entry, where(context, "'dims' entry"));
                if (dim < 1) {
                    fail(where(context, "wedge sphere dimension must be >= 1, got ") +
                         std::to_string(dim));
                }
                copies[dim] += 1;
            }
        } else if (const json* counts = find_field(j, "dim_counts")) {
            if (!counts->is_object()) {
                fail(where(context, "'dim_counts' must map dimension to multiplicity"));
            }
            for (const auto& [key, value] : counts->items()) {
                const int dim = parse_degree_key(key, where(context, "'dim_counts'"));
                if (dim < 1) {
                    fail(where(context, "wedge sphere dimension must be >= 1, got ") + key);
                }
                const Integer count =
                    integer_from_json(value, where(context, "'dim_counts'[" + key + "]"));
                if (count < 0) {
                    fail(where(context, "multiplicity for dimension " + key +
                                            " must be >= 0, got ") +
                         count.get_str());
                }
                if (count > 0) copies[dim] += count;
            }
        } else {
            fail(where(context, "wedge needs 'dims' or 'dim_counts'"));
        }
        try {
            return make_wedge_counts(std::move(copies));
        } catch (const std::invalid_argument& e) {
            fail(where(context, e.what()));
        }
    }
    if (kind == "elliptic_ranks") {
        GradedRanks ranks = ranks_object_from_json(require_field(j, "ranks", context),
                                                   where(context, "'ranks'"));
        try {
            return make_elliptic(std::move(ranks));
        } catch (const std::invalid_argument& e) {
            fail(where(context, e.what()));
        }
    }
    fail(where(context, "unknown kind '" + kind +
                            "' (expected contractible, sphere, wedge, or elliptic_ranks)"));
}

MonodromyHypothesis monodromy_from_json(const json& j) {
    static const std::string context = "monodromy";
    const std::string kind = require_string(require_field(j, "kind", context),
                                            where(context, "'kind'"));
    if (kind == "identity_on_rational_homotopy") return IdentityOnRationalHomotopy{};
    if (kind == "unverified") return UnverifiedMonodromy{};
    if (kind == "finite_order") {
        const long long m = require_integer_number(require_field(j, "m", context),
                                                   where(context, "'m'"));
        if (m < 1) fail(where(context, "'m' must be >= 1, got ") + std::to_string(m));
        if (m > std::numeric_limits<long>::max()) fail(where(context, "'m' is out of range"));
        const json& nilpotent = require_field(j, "nilpotent_action", context);
        if (!nilpotent.is_boolean()) {
            fail(where(context, "'nilpotent_action' must be a boolean"));
        }
        NilpotenceEvidence evidence = NilpotenceEvidence::Homotopy;
        if (const json* field = find_field(j, "nilpotence_evidence")) {
            const std::string text =
                require_string(*field, where(context, "'nilpotence_evidence'"));
            if (text == "homology") {
                evidence = NilpotenceEvidence::Homology;
            } else if (text != "homotopy") {
                fail(where(context, "'nilpotence_evidence' must be 'homotopy' or 'homology'"));
            }
        }
        return FiniteHomotopyOrder{static_cast<long>(m), nilpotent.get<bool>(), evidence};
    }
    fail(where(context, "unknown kind '" + kind +
                            "' (expected identity_on_rational_homotopy, finite_order, or "
                            "unverified)"));
}

OpenBookSpec openbook_spec_from_json(const json& j) {
    static const std::string context = "open book";
    if (!j.is_object()) fail(context + ": expected a JSON object");
    OpenBookSpec spec;
    spec.ambient_dim = require_int(require_field(j, "ambient_dim", context),
                                   where(context, "'ambient_dim'"));
    spec.page = space_model_from_json(require_field(j, "page", context));
    if (const json* fibre = find_field(j, "fibre")) {
        if (!fibre->is_null()) spec.fibre = space_model_from_json(*fibre);
    }
    if (const json* monodromy = find_field(j, "monodromy")) {
        spec.monodromy = monodromy_from_json(*monodromy);
    } else {
        spec.monodromy = UnverifiedMonodromy{};
    }
    spec.page_simply_connected = optional_bool(j, "page_simply_connected", false, context);
    spec.boundary_nilpotent_connected =
        optional_bool(j, "boundary_nilpotent_connected", false, context);
    spec.total_simply_connected = optional_bool(j, "total_simply_connected", false, context);
    return spec;
}

BrieskornExponents brieskorn_from_json(const json& j) {
    static const std::string context = "brieskorn";
    const json& exponents = require_field(j, "exponents", context);
    if (!exponents.is_array()) fail(where(context, "'exponents' must be an array"));
    std::vector<long> values;
    values.reserve(exponents.size());
    for (const json& entry : exponents) {
        const long long a = require_integer_number(entry, where(context, "'exponents' entry"));
        if (a < 2) {
            fail(where(context, "every exponent must be >= 2, got ") + std::to_string(a));
        }
        if (a > std::numeric_limits<long>::max()) {
            fail(where(context, "exponent is out of range"));
        }
        values.push_back(static_cast<long>(a));
    }
    BrieskornExponents b;
    try {
        b = make_brieskorn(std::move(values));
    } catch (const std::invalid_argument& e) {
        fail(where(context, e.what()));
    }
    if (const json* n = find_field(j, "n")) {
        const int given = require_int(*n, where(context, "'n'"));
        if (given != b.n) {
            fail(where(context, "'n' = " + std::to_string(given) +
                                    " does not match the exponent count (expected " +
                                    std::to_string(b.n) + ")"));
        }
    }
    return b;
}

VariationMatrix variation_from_json(const json& j) {
    static const std::string context = "variation";
    const json& matrix = require_field(j, "matrix", context);
    if (!matrix.is_array() || matrix.empty()) {
        fail(where(context, "'matrix' must be a nonempty array of rows"));
    }
    std::vector<std::vector<Integer>> entries;
    entries.reserve(matrix.size());
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        const json& row = matrix[i];
        if (!row.is_array() || row.size() != matrix.size()) {
            fail(where(context, "'matrix' must be square; row " + std::to_string(i) + " has " +
                                    std::to_string(row.is_array() ? row.size() : 0) +
                                    " entries, expected " + std::to_string(matrix.size())));
        }
        std::vector<Integer> out_row;
        out_row.reserve(row.size());
        for (std::size_t k = 0; k < row.size(); ++k) {
            out_row.push_back(integer_from_json(
                row[k], where(context, "'matrix'[" + std::to_string(i) + "][" +
                                           std::to_string(k) + "]")));
        }
        entries.push_back(std::move(out_row));
    }
    return VariationMatrix{std::move(entries)};
}

GradedRanks generators_from_json(const json& j) {
    static const std::string context = "generators";
    if (const json* generators = find_field(j, "generators")) {
        return ranks_object_from_json(*generators, context);
    }
    return ranks_object_from_json(j, context);
}

json integer_to_json(const Integer& value) {
    if (value.fits_slong_p()) return json(value.get_si());
    return json(value.get_str());
}

json ranks_to_json(const GradedRanks& ranks) {
    json out = json::object();
    for (const auto& [degree, rank] : ranks) {
        out[std::to_string(degree)] = integer_to_json(rank);
    }
    return out;
}

json space_model_to_json(const SpaceModel& model) {
    if (std::holds_alternative<Contractible>(model)) {
        return json{{"kind", "contractible"}};
    }
    if (const auto* sphere = std::get_if<Sphere>(&model)) {
        return json{{"kind", "sphere"}, {"dim", sphere->dim}};
    }
    if (const auto* wedge = std::get_if<WedgeOfSpheres>(&model)) {
        // Small wedges list their dimensions explicitly; huge ones (the
        // Brieskorn pages can have astronomically many spheres) fall back to
        // the multiplicity map.
        if (wedge->total() <= 4096) {
            json dims = json::array();
            for (const auto& [dim, count] : wedge->copies) {
                for (Integer i = 0; i < count; ++i) dims.push_back(dim);
            }
            return json{{"kind", "wedge"}, {"dims", std::move(dims)}};
        }
        json counts = json::object();
        for (const auto& [dim, count] : wedge->copies) {
            counts[std::to_string(dim)] = integer_to_json(count);
        }
        return json{{"kind", "wedge"}, {"dim_counts", std::move(counts)}};
    }
    const auto& elliptic = std::get<EllipticRanks>(model);
    return json{{"kind", "elliptic_ranks"}, {"ranks", ranks_to_json(elliptic.ranks)}};
}

json monodromy_to_json(const MonodromyHypothesis& monodromy) {
    if (std::holds_alternative<IdentityOnRationalHomotopy>(monodromy)) {
        return json{{"kind", "identity_on_rational_homotopy"}};
    }
    if (const auto* finite = std::get_if<FiniteHomotopyOrder>(&monodromy)) {
        json out{{"kind", "finite_order"},
                 {"m", finite->order},
                 {"nilpotent_action", finite->nilpotent_action}};
        if (finite->evidence == NilpotenceEvidence::Homology) {
            out["nilpotence_evidence"] = "homology";
        }
        return out;
    }
    return json{{"kind", "unverified"}};
}

json openbook_spec_to_json(const OpenBookSpec& spec) {
    json out{{"ambient_dim", spec.ambient_dim}, {"page", space_model_to_json(spec.page)}};
    if (spec.fibre.has_value()) out["fibre"] = space_model_to_json(*spec.fibre);
    out["monodromy"] = monodromy_to_json(spec.monodromy);
    out["page_simply_connected"] = spec.page_simply_connected;
    out["boundary_nilpotent_connected"] = spec.boundary_nilpotent_connected;
    out["total_simply_connected"] = spec.total_simply_connected;
    return out;
}

json violations_to_json(const std::vector<Violation>& violations) {
    json out = json::array();
    for (const Violation& violation : violations) {
        out.push_back(json{{"code", violation.code}, {"message", violation.message}});
    }
    return out;
}

json verdict_to_json(const DichotomyVerdict& verdict) {
    if (const auto* elliptic = std::get_if<EllipticVerdict>(&verdict)) {
        return json{{"elliptic",
                     json{{"l", elliptic->l}, {"ranks", ranks_to_json(elliptic->ranks)}}}};
    }
    if (const auto* hyperbolic = std::get_if<HyperbolicVerdict>(&verdict)) {
        const char* reason = nullptr;
        switch (hyperbolic->reason) {
            case HyperbolicReason::PageHyperbolic:
                reason = "page_hyperbolic";
                break;
            case HyperbolicReason::FibreNotASphere:
                reason = "fibre_not_a_sphere";
                break;
            case HyperbolicReason::Both:
                reason = "both";
                break;
        }
        return json{{"hyperbolic", json{{"reason", reason}}}};
    }
    const auto& not_classifiable = std::get<NotClassifiable>(verdict);
    return json{
        {"not_classifiable", json{{"missing", violations_to_json(not_classifiable.missing)}}}};
}

json growth_report_to_json(const GrowthReport& report) {
    json sums = json::array();
    for (const Integer& sum : report.partial_sums) sums.push_back(integer_to_json(sum));
    json out{{"classification", report.classification == GrowthClass::Exponential
                                    ? "exponential"
                                    : "polynomial_or_finite"}};
    if (report.growth_base.has_value()) out["growth_base"] = *report.growth_base;
    out["partial_sums"] = std::move(sums);
    return out;
}

json monodromy_report_to_json(const MonodromyConstraintReport& report) {
    json conclusions = json::array();
    for (const std::string& conclusion : report.conclusions) conclusions.push_back(conclusion);
    return json{{"mu", integer_to_json(report.mu)},
                {"n", report.n},
                {"ambient_dim", report.ambient_dim},
                {"obstruction", report.obstruction_applies},
                {"summary", report.summary},
                {"conclusions", std::move(conclusions)},
                {"rationale", report.rationale}};
}

json variation_to_json(const VariationMatrix& v) {
    json rows = json::array();
    for (const auto& row : v.entries) {
        json out_row = json::array();
        for (const Integer& entry : row) out_row.push_back(integer_to_json(entry));
        rows.push_back(std::move(out_row));
    }
    return json{{"matrix", std::move(rows)}};
}

}  // namespace openbook::io
