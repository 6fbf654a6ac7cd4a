#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "openbook/json_io.hpp"
#include "openbook/lie.hpp"
#include "openbook/milnor.hpp"
#include "openbook/openbook.hpp"
#include "openbook/spaces.hpp"

namespace py = pybind11;
using openbook::GradedRanks;
using openbook::Integer;
using openbook::io::json;

namespace {

py::object integer_to_py(const Integer& value) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

Integer integer_from_py(py::handle obj) {
    if (!py::isinstance<py::int_>(obj)) {
        throw py::type_error("expected an integer");
    }
    const std::string text = py::cast<std::string>(py::str(obj));
    return Integer(text, 10);
}

py::dict ranks_to_py(const GradedRanks& ranks) {
    py::dict out;
    for (const auto& [degree, rank] : ranks) {
        out[py::int_(degree)] = integer_to_py(rank);
    }
    return out;
}

GradedRanks ranks_from_py(py::handle obj) {
    if (!py::isinstance<py::dict>(obj)) {
        throw py::type_error("expected a dict mapping degree to rank");
    }
    GradedRanks out;
    for (const auto item : py::cast<py::dict>(obj)) {
        long degree = 0;
        if (py::isinstance<py::int_>(item.first)) {
            degree = py::cast<long>(item.first);
        } else if (py::isinstance<py::str>(item.first)) {
            try {
                degree = std::stol(py::cast<std::string>(item.first));
            } catch (const std::exception&) {
                throw py::value_error("degree key is not an integer");
            }
        } else {
            throw py::type_error("degree keys must be integers");
        }
        if (degree < 1 || degree > 1000000) {
            throw py::value_error("degree " + std::to_string(degree) + " is out of range");
        }
        const Integer rank = integer_from_py(item.second);
        if (rank < 0) throw py::value_error("ranks must be >= 0");
        out.set(static_cast<int>(degree), rank);
    }
    return out;
}

// Document-shaped values (space models, open book specs, reports) cross the
// boundary as plain Python dicts/lists mirroring the JSON schema of the CLI.

json py_to_json(py::handle obj) {
    if (obj.is_none()) return json(nullptr);
    if (py::isinstance<py::bool_>(obj)) return json(py::cast<bool>(obj));
    if (py::isinstance<py::int_>(obj)) {
        // Arbitrary-size integers ride through as decimal strings, exactly as
        // the JSON readers accept them.
        try {
            return json(py::cast<long long>(obj));
        } catch (const py::cast_error&) {
            return json(py::cast<std::string>(py::str(obj)));
        }
    }
    if (py::isinstance<py::float_>(obj)) return json(py::cast<double>(obj));
    if (py::isinstance<py::str>(obj)) return json(py::cast<std::string>(obj));
    if (py::isinstance<py::dict>(obj)) {
        json out = json::object();
        for (const auto item : py::cast<py::dict>(obj)) {
            out[py::cast<std::string>(py::str(item.first))] = py_to_json(item.second);
        }
        return out;
    }
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        json out = json::array();
        for (const auto item : py::cast<py::sequence>(obj)) out.push_back(py_to_json(item));
        return out;
    }
    throw py::type_error("unsupported value in document");
}

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const json& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) {
                out[py::str(key)] = json_to_py(value);
            }
            return out;
        }
        default:
            return py::none();
    }
}

openbook::SpaceModel space_from_py(py::handle obj) {
    return openbook::io::space_model_from_json(py_to_json(obj));
}

openbook::OpenBookSpec spec_from_py(py::handle obj) {
    return openbook::io::openbook_spec_from_json(py_to_json(obj));
}

openbook::BrieskornExponents brieskorn_from_py(py::handle obj) {
    if (py::isinstance<py::dict>(obj)) {
        return openbook::io::brieskorn_from_json(py_to_json(obj));
    }
    std::vector<long> exponents;
    for (const auto item : py::cast<py::sequence>(obj)) {
        exponents.push_back(py::cast<long>(item));
    }
    return openbook::make_brieskorn(std::move(exponents));
}

openbook::VariationMatrix variation_from_py(py::handle obj) {
    if (py::isinstance<py::dict>(obj)) {
        return openbook::io::variation_from_json(py_to_json(obj));
    }
    std::vector<std::vector<Integer>> entries;
    for (const auto row : py::cast<py::sequence>(obj)) {
        std::vector<Integer> out_row;
        for (const auto entry : py::cast<py::sequence>(row)) {
            out_row.push_back(integer_from_py(entry));
        }
        entries.push_back(std::move(out_row));
    }
    return openbook::make_variation(std::move(entries));
}

openbook::MonodromyHypothesis monodromy_from_py(py::handle obj) {
    if (obj.is_none()) return openbook::UnverifiedMonodromy{};
    return openbook::io::monodromy_from_json(py_to_json(obj));
}

py::object classify_to_py(const openbook::OpenBookSpec& spec,
                          const openbook::DichotomyVerdict& verdict) {
    json out = openbook::io::verdict_to_json(verdict);
    out["spec"] = openbook::io::openbook_spec_to_json(spec);
    const auto notes = openbook::hypothesis_notes(spec);
    if (!notes.empty()) out["notes"] = notes;
    return json_to_py(out);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact-arithmetic calculator for rational homotopy ranks of open books: free graded "
        "Lie algebra ranks, loop-space decompositions, the elliptic/hyperbolic dichotomy, and "
        "the Milnor/Brieskorn monodromy obstructions.";

    m.attr("DEFAULT_TRUNCATION") = openbook::kDefaultTruncation;

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const openbook::io::parse_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const openbook::HypothesesUnmet& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "witt_number",
        [](long m_, long k) { return integer_to_py(openbook::witt_number(m_, k)); },
        py::arg("alphabet_size"), py::arg("word_length"),
        "Necklace count (1/k) sum_{d|k} mu(d) m^{k/d}.");

    m.def(
        "moebius", [](long n) { return openbook::moebius(n); }, py::arg("n"),
        "Moebius function.");

    m.def(
        "free_lie_ranks",
        [](py::handle generators, int truncation) {
            return ranks_to_py(openbook::free_lie_ranks(ranks_from_py(generators), truncation));
        },
        py::arg("generators"), py::arg("truncation") = openbook::kDefaultTruncation,
        "Ranks of the free graded Lie algebra on generators {degree: rank}.");

    m.def(
        "space_ranks",
        [](py::handle space, int truncation) {
            return ranks_to_py(openbook::space_ranks(space_from_py(space), truncation));
        },
        py::arg("space"), py::arg("truncation") = openbook::kDefaultTruncation,
        "Ranks of pi_* tensor Q of a space model given as a document dict.");

    m.def(
        "loop_ranks",
        [](py::handle space, int truncation) {
            return ranks_to_py(openbook::loop_ranks(space_from_py(space), truncation));
        },
        py::arg("space"), py::arg("truncation") = openbook::kDefaultTruncation,
        "Ranks of pi_* tensor Q of the loop space of a space model.");

    m.def(
        "suspend",
        [](py::handle space, int k) {
            return json_to_py(
                openbook::io::space_model_to_json(openbook::suspend(space_from_py(space), k)));
        },
        py::arg("space"), py::arg("k") = 1, "Suspend a sphere/wedge model k times.");

    m.def(
        "is_rationally_elliptic",
        [](py::handle space) { return openbook::is_rationally_elliptic(space_from_py(space)); },
        py::arg("space"));

    m.def(
        "growth_estimate",
        [](py::handle space, int truncation) {
            return json_to_py(openbook::io::growth_report_to_json(
                openbook::growth_estimate(space_from_py(space), truncation)));
        },
        py::arg("space"), py::arg("truncation") = openbook::kDefaultTruncation,
        "Partial sums, growth classification, and (when exponential) the growth base.");

    m.def(
        "validate",
        [](py::handle spec) {
            return json_to_py(
                openbook::io::violations_to_json(openbook::validate_spec(spec_from_py(spec))));
        },
        py::arg("spec"), "List the violated hypotheses of an open book spec (empty = valid).");

    m.def(
        "double_loop_ranks",
        [](py::handle page, py::handle fibre, int truncation) {
            return ranks_to_py(openbook::double_loop_ranks(space_from_py(page),
                                                           space_from_py(fibre), truncation));
        },
        py::arg("page"), py::arg("fibre"),
        py::arg("truncation") = openbook::kDefaultTruncation,
        "Loop ranks of the double of the page: loops on page plus loops on the suspended "
        "fibre.");

    m.def(
        "openbook_loop_ranks",
        [](py::handle spec, int truncation) {
            return ranks_to_py(openbook::openbook_loop_ranks(spec_from_py(spec), truncation));
        },
        py::arg("spec"), py::arg("truncation") = openbook::kDefaultTruncation,
        "Loop ranks of the open book; raises ValueError when hypotheses are unmet.");

    m.def(
        "homotopy_ranks",
        [](py::handle spec, int truncation) {
            return ranks_to_py(openbook::homotopy_ranks(spec_from_py(spec), truncation));
        },
        py::arg("spec"), py::arg("truncation") = openbook::kDefaultTruncation,
        "Ranks of pi_*(M) tensor Q of the open book; raises ValueError when hypotheses are "
        "unmet.");

    m.def(
        "classify",
        [](py::handle spec, int truncation) {
            const openbook::OpenBookSpec parsed = spec_from_py(spec);
            return classify_to_py(parsed, openbook::classify_dichotomy(parsed, truncation));
        },
        py::arg("spec"), py::arg("truncation") = openbook::kDefaultTruncation,
        "Dichotomy verdict as a dict with one of the keys 'elliptic', 'hyperbolic', "
        "'not_classifiable'.");

    m.def("grove_halperin_test", &openbook::grove_halperin_test,
          py::arg("fibre_is_rational_sphere"), py::arg("binding_elliptic"),
          "With a rational-sphere fibre, the open book is elliptic iff its binding is.");

    m.def(
        "brieskorn_multiplicity",
        [](py::handle exponents) {
            return integer_to_py(openbook::brieskorn_multiplicity(brieskorn_from_py(exponents)));
        },
        py::arg("exponents"), "Multiplicity prod(a_i - 1) of a Brieskorn singularity.");

    m.def(
        "milnor_page",
        [](py::handle mu, int n) {
            return json_to_py(
                openbook::io::space_model_to_json(openbook::milnor_page(integer_from_py(mu), n)));
        },
        py::arg("mu"), py::arg("n"), "Wedge of mu copies of S^n as a space document.");

    m.def(
        "monodromy_report",
        [](py::handle exponents) {
            return json_to_py(openbook::io::monodromy_report_to_json(
                openbook::monodromy_constraint_report(brieskorn_from_py(exponents))));
        },
        py::arg("exponents"),
        "Obstruction report for the Brieskorn open book with these exponents.");

    m.def(
        "milnor_openbook_spec",
        [](py::handle exponents, py::handle monodromy) {
            return json_to_py(openbook::io::openbook_spec_to_json(openbook::milnor_openbook_spec(
                brieskorn_from_py(exponents), monodromy_from_py(monodromy))));
        },
        py::arg("exponents"), py::arg("monodromy") = py::none(),
        "Open book spec document of the Brieskorn decomposition (fibre left unset).");

    m.def(
        "variation_determinant",
        [](py::handle matrix) {
            return integer_to_py(openbook::variation_determinant(variation_from_py(matrix)));
        },
        py::arg("matrix"), "Exact determinant of a variation matrix.");

    m.def(
        "variation_is_iso",
        [](py::handle matrix) { return openbook::variation_is_iso(variation_from_py(matrix)); },
        py::arg("matrix"), "Kauffman criterion: determinant is +1 or -1.");

    m.def(
        "boundary_connected_sum_variation",
        [](py::handle matrix) {
            const openbook::VariationMatrix doubled =
                openbook::boundary_connected_sum_variation(variation_from_py(matrix));
            py::list rows;
            for (const auto& row : doubled.entries) {
                py::list out_row;
                for (const Integer& entry : row) out_row.append(integer_to_py(entry));
                rows.append(out_row);
            }
            return rows;
        },
        py::arg("matrix"), "Block diagonal diag(v, v): the variation of the doubled monodromy.");
}
