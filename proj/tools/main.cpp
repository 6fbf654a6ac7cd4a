// openbook-rho: command line front end.
//
// Exit codes: 0 success, 1 validation violations or other domain errors,
// 2 malformed input or bad invocation, 3 internal errors.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "openbook/json_io.hpp"
#include "openbook/lie.hpp"
#include "openbook/milnor.hpp"
#include "openbook/openbook.hpp"
#include "openbook/series.hpp"
#include "openbook/spaces.hpp"

namespace {

using openbook::io::json;

enum class Format { Table, Csv, Json };

struct Options {
    std::string input_path;
    int truncation = openbook::kDefaultTruncation;
    Format format = Format::Table;
};

Format parse_format(const std::string& text) {
    if (text == "table") return Format::Table;
    if (text == "csv") return Format::Csv;
    return Format::Json;
}

std::string read_payload(const std::string& input_path) {
    if (input_path.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(input_path, std::ios::binary);
    if (!file) {
        throw openbook::io::parse_error("cannot open input file '" + input_path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void print_json(const json& document) { std::cout << document.dump(2) << "\n"; }

void print_ranks_table(const openbook::GradedRanks& ranks, const std::string& heading) {
    if (!heading.empty()) std::cout << heading << "\n";
    std::cout << "degree  rank\n";
    for (const auto& [degree, rank] : ranks) {
        std::cout << std::left << std::setw(8) << degree << rank.get_str() << "\n";
    }
    std::cout << "total: " << ranks.total().get_str() << "\n";
}

void print_ranks_csv(const openbook::GradedRanks& ranks) {
    std::cout << "degree,rank\n";
    for (const auto& [degree, rank] : ranks) {
        std::cout << degree << "," << rank.get_str() << "\n";
    }
}

void print_violations_text(const std::vector<openbook::Violation>& violations) {
    for (const auto& violation : violations) {
        std::cout << "violation: " << violation.code << " — " << violation.message << "\n";
    }
}

[[noreturn]] void reject_csv(const std::string& command) {
    throw openbook::io::parse_error("csv output is not defined for the " + command +
                                    " command (use table or json)");
}

// ---- ranks ------------------------------------------------------------

int run_ranks(const Options& options, const json& document) {
    if (document.is_object() && document.contains("page")) {
        const openbook::OpenBookSpec spec = openbook::io::openbook_spec_from_json(document);
        openbook::GradedRanks ranks;
        openbook::GradedRanks loop_ranks;
        try {
            ranks = openbook::homotopy_ranks(spec, options.truncation);
            loop_ranks = openbook::openbook_loop_ranks(spec, options.truncation);
        } catch (const openbook::HypothesesUnmet& e) {
            if (options.format == Format::Json) {
                print_json(json{{"violations", openbook::io::violations_to_json(e.violations())},
                                {"spec", openbook::io::openbook_spec_to_json(spec)}});
            } else {
                print_violations_text(e.violations());
            }
            return 1;
        }
        switch (options.format) {
            case Format::Json:
                print_json(json{{"spec", openbook::io::openbook_spec_to_json(spec)},
                                {"truncation", options.truncation},
                                {"ranks", openbook::io::ranks_to_json(ranks)},
                                {"loop_ranks", openbook::io::ranks_to_json(loop_ranks)}});
                break;
            case Format::Csv:
                print_ranks_csv(ranks);
                break;
            case Format::Table:
                print_ranks_table(ranks, "rational homotopy ranks of the open book");
                break;
        }
        return 0;
    }

    const openbook::SpaceModel model = openbook::io::space_model_from_json(document);
    const openbook::GradedRanks ranks = openbook::space_ranks(model, options.truncation);
    switch (options.format) {
        case Format::Json: {
            const openbook::GradedRanks loops = openbook::loop_ranks(model, options.truncation);
            print_json(json{{"space", openbook::io::space_model_to_json(model)},
                            {"truncation", options.truncation},
                            {"ranks", openbook::io::ranks_to_json(ranks)},
                            {"loop_ranks", openbook::io::ranks_to_json(loops)}});
            break;
        }
        case Format::Csv:
            print_ranks_csv(ranks);
            break;
        case Format::Table:
            print_ranks_table(ranks, "rational homotopy ranks");
            break;
    }
    return 0;
}

// ---- classify ----------------------------------------------------------

int run_classify(const Options& options, const json& document) {
    if (options.format == Format::Csv) reject_csv("classify");
    const openbook::OpenBookSpec spec = openbook::io::openbook_spec_from_json(document);
    const openbook::DichotomyVerdict verdict =
        openbook::classify_dichotomy(spec, options.truncation);
    const std::vector<std::string> notes = openbook::hypothesis_notes(spec);
    const auto* not_classifiable = std::get_if<openbook::NotClassifiable>(&verdict);

    if (options.format == Format::Json) {
        json out = openbook::io::verdict_to_json(verdict);
        out["spec"] = openbook::io::openbook_spec_to_json(spec);
        out["truncation"] = options.truncation;
        if (!notes.empty()) out["notes"] = notes;
        print_json(out);
        return not_classifiable == nullptr ? 0 : 1;
    }

    if (not_classifiable != nullptr) {
        std::cout << "verdict: not classifiable\n";
        print_violations_text(not_classifiable->missing);
    } else if (const auto* elliptic = std::get_if<openbook::EllipticVerdict>(&verdict)) {
        std::cout << "verdict: rationally elliptic\n";
        std::cout << "fibre: rationally S^" << elliptic->l << "\n";
        print_ranks_table(elliptic->ranks, "rational homotopy ranks of the open book");
    } else {
        const auto& hyperbolic = std::get<openbook::HyperbolicVerdict>(verdict);
        std::cout << "verdict: rationally hyperbolic\n";
        switch (hyperbolic.reason) {
            case openbook::HyperbolicReason::PageHyperbolic:
                std::cout << "reason: the page is rationally hyperbolic\n";
                break;
            case openbook::HyperbolicReason::FibreNotASphere:
                std::cout << "reason: the binding fibre is not rationally a sphere\n";
                break;
            case openbook::HyperbolicReason::Both:
                std::cout << "reason: the page is rationally hyperbolic and the binding fibre "
                             "is not rationally a sphere\n";
                break;
        }
    }
    for (const std::string& note : notes) std::cout << "note: " << note << "\n";
    return not_classifiable == nullptr ? 0 : 1;
}

// ---- brieskorn ----------------------------------------------------------

int run_brieskorn(const Options& options, const json& document) {
    if (options.format == Format::Csv) reject_csv("brieskorn");
    const openbook::BrieskornExponents exponents = openbook::io::brieskorn_from_json(document);
    const openbook::MonodromyConstraintReport report =
        openbook::monodromy_constraint_report(exponents);

    openbook::MonodromyHypothesis monodromy = openbook::UnverifiedMonodromy{};
    if (document.contains("monodromy")) {
        monodromy = openbook::io::monodromy_from_json(document["monodromy"]);
    }

    if (options.format == Format::Json) {
        json out = openbook::io::monodromy_report_to_json(report);
        if (exponents.n >= 3) {
            out["openbook_spec"] = openbook::io::openbook_spec_to_json(
                openbook::milnor_openbook_spec(exponents, monodromy));
        }
        print_json(out);
        return 0;
    }

    std::cout << "exponents: (";
    for (std::size_t i = 0; i < exponents.exponents.size(); ++i) {
        std::cout << (i == 0 ? "" : ", ") << exponents.exponents[i];
    }
    std::cout << ")\n";
    std::cout << "n: " << report.n << "  (open book of S^" << report.ambient_dim << ")\n";
    std::cout << "multiplicity: " << report.mu.get_str() << "\n";
    std::cout << "page: ";
    if (report.mu == 0) {
        std::cout << "contractible\n";
    } else if (report.mu == 1) {
        std::cout << "S^" << report.n << "\n";
    } else {
        std::cout << "wedge of " << report.mu.get_str() << " copies of S^" << report.n << "\n";
    }
    std::cout << "obstruction: " << (report.obstruction_applies ? "yes" : "no") << "\n";
    std::cout << "summary: " << report.summary << "\n";
    for (const std::string& conclusion : report.conclusions) {
        std::cout << "  - " << conclusion << "\n";
    }
    std::cout << "rationale: " << report.rationale << "\n";
    return 0;
}

// ---- lie-ranks ----------------------------------------------------------

int run_lie_ranks(const Options& options, const json& document) {
    const openbook::GradedRanks generators = openbook::io::generators_from_json(document);
    const openbook::GradedRanks ranks =
        openbook::free_lie_ranks(generators, options.truncation);
    switch (options.format) {
        case Format::Json:
            print_json(json{{"generators", openbook::io::ranks_to_json(generators)},
                            {"truncation", options.truncation},
                            {"lie_ranks", openbook::io::ranks_to_json(ranks)}});
            break;
        case Format::Csv:
            print_ranks_csv(ranks);
            break;
        case Format::Table:
            print_ranks_table(ranks, "free graded Lie algebra ranks");
            break;
    }
    return 0;
}

// ---- variation ----------------------------------------------------------

int run_variation(const Options& options, const json& document) {
    if (options.format == Format::Csv) reject_csv("variation");
    const openbook::VariationMatrix matrix = openbook::io::variation_from_json(document);
    const openbook::Integer det = openbook::variation_determinant(matrix);
    const bool iso = det == 1 || det == -1;
    if (options.format == Format::Json) {
        print_json(json{{"size", matrix.size()},
                        {"determinant", openbook::io::integer_to_json(det)},
                        {"is_isomorphism", iso}});
        return 0;
    }
    std::cout << "size: " << matrix.size() << "\n";
    std::cout << "determinant: " << det.get_str() << "\n";
    std::cout << "is_isomorphism: " << (iso ? "true" : "false") << "\n";
    std::cout << (iso ? "the open book closes up to a homotopy sphere\n"
                      : "the open book is not a homotopy sphere\n");
    return 0;
}

// ---- growth --------------------------------------------------------------

int run_growth(const Options& options, const json& document) {
    const openbook::SpaceModel model = openbook::io::space_model_from_json(document);
    const openbook::GrowthReport report = openbook::growth_estimate(model, options.truncation);
    if (options.format == Format::Json) {
        json out{{"space", openbook::io::space_model_to_json(model)},
                 {"truncation", options.truncation}};
        out.update(openbook::io::growth_report_to_json(report));
        print_json(out);
        return 0;
    }
    if (options.format == Format::Csv) {
        std::cout << "degree,partial_sum\n";
        for (std::size_t i = 0; i < report.partial_sums.size(); ++i) {
            std::cout << (i + 1) << "," << report.partial_sums[i].get_str() << "\n";
        }
        return 0;
    }
    std::cout << "classification: "
              << (report.classification == openbook::GrowthClass::Exponential
                      ? "exponential"
                      : "polynomial or finite")
              << "\n";
    if (report.growth_base.has_value()) {
        std::cout << "growth base: " << std::setprecision(15) << *report.growth_base << "\n";
    }
    std::cout << "partial sums of ranks through degree " << report.partial_sums.size() << ":\n";
    std::cout << "degree  total\n";
    for (std::size_t i = 0; i < report.partial_sums.size(); ++i) {
        std::cout << std::left << std::setw(8) << (i + 1) << report.partial_sums[i].get_str()
                  << "\n";
    }
    return 0;
}

int dispatch(const std::string& command, const Options& options) {
    const std::string payload = read_payload(options.input_path);
    const json document = openbook::io::parse_document(payload);
    if (command == "ranks") return run_ranks(options, document);
    if (command == "classify") return run_classify(options, document);
    if (command == "brieskorn") return run_brieskorn(options, document);
    if (command == "lie-ranks") return run_lie_ranks(options, document);
    if (command == "variation") return run_variation(options, document);
    return run_growth(options, document);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "openbook-rho: exact rational homotopy ranks, ellipticity classification and "
        "monodromy obstructions for open books"};
    app.require_subcommand(1);

    Options options;
    std::string format_name = "table";
    const auto add_common = [&](CLI::App* command) {
        command->add_option("--input", options.input_path,
                            "read the JSON payload from this file instead of standard input");
        command->add_option("--truncation", options.truncation,
                            "truncation degree for rank computations")
            ->check(CLI::Range(2, 10000));
        command->add_option("--format", format_name, "output format")
            ->check(CLI::IsMember({"table", "csv", "json"}));
    };

    add_common(app.add_subcommand(
        "ranks", "rational homotopy ranks of a space model or a full open book"));
    add_common(app.add_subcommand(
        "classify", "run the elliptic/hyperbolic dichotomy on an open book"));
    add_common(app.add_subcommand(
        "brieskorn", "monodromy obstruction report for a Brieskorn open book"));
    add_common(app.add_subcommand(
        "lie-ranks", "ranks of the free graded Lie algebra on given generators"));
    add_common(app.add_subcommand(
        "variation", "Kauffman criterion for a variation matrix"));
    add_common(app.add_subcommand(
        "growth", "growth analysis of a sphere or wedge model"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    options.format = parse_format(format_name);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        return dispatch(command, options);
    } catch (const openbook::io::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const openbook::HypothesesUnmet& e) {
        // Reached when a computation gate rejects the spec outside the paths
        // that render violations themselves.
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
