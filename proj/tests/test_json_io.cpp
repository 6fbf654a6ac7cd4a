#include "doctest.h"

#include <string>
#include <vector>

#include "openbook/json_io.hpp"

namespace io = openbook::io;
using io::json;
using openbook::GradedRanks;
using openbook::Integer;
using openbook::SpaceModel;

TEST_CASE("parse_document rejects broken syntax") {
    CHECK_THROWS_AS(io::parse_document("{\"kind\": "), io::parse_error);
    CHECK_THROWS_AS(io::parse_document(""), io::parse_error);
    CHECK(io::parse_document("{\"dim\": 3}").is_object());
}

TEST_CASE("space models parse from each shape") {
    CHECK(io::space_model_from_json(io::parse_document(R"({"kind": "contractible"})")) ==
          SpaceModel{openbook::Contractible{}});
    CHECK(io::space_model_from_json(io::parse_document(R"({"kind": "sphere", "dim": 5})")) ==
          SpaceModel{openbook::Sphere{5}});

    const auto wedge = io::space_model_from_json(
        io::parse_document(R"({"kind": "wedge", "dims": [3, 3, 4]})"));
    const auto* w = std::get_if<openbook::WedgeOfSpheres>(&wedge);
    REQUIRE(w != nullptr);
    CHECK(w->copies == std::map<int, Integer>{{3, 2}, {4, 1}});

    // Singleton wedges normalize to the sphere model.
    CHECK(io::space_model_from_json(io::parse_document(R"({"kind": "wedge", "dims": [7]})")) ==
          SpaceModel{openbook::Sphere{7}});

    const auto counted = io::space_model_from_json(io::parse_document(
        R"({"kind": "wedge", "dim_counts": {"3": "123456789012345678901", "5": 2}})"));
    const auto* cw = std::get_if<openbook::WedgeOfSpheres>(&counted);
    REQUIRE(cw != nullptr);
    CHECK(cw->copies.at(3) == Integer("123456789012345678901"));
    CHECK(cw->copies.at(5) == 2);

    const auto elliptic = io::space_model_from_json(io::parse_document(
        R"({"kind": "elliptic_ranks", "ranks": {"3": 1, "7": 2}})"));
    CHECK(elliptic == SpaceModel{openbook::EllipticRanks{GradedRanks{{3, 1}, {7, 2}}}});
}

TEST_CASE("space model parsing rejects malformed input") {
    const std::vector<std::string> bad = {
        R"({"dim": 3})",                                 // no kind
        R"({"kind": "ball"})",                           // unknown kind
        R"({"kind": "sphere"})",                         // missing dim
        R"({"kind": "sphere", "dim": 0})",               // out of domain
        R"({"kind": "sphere", "dim": 2.5})",             // not an integer
        R"({"kind": "wedge"})",                          // no dims at all
        R"({"kind": "wedge", "dims": []})",              // empty
        R"({"kind": "wedge", "dims": [3, 0]})",          // bad dimension
        R"({"kind": "wedge", "dim_counts": {"x": 1}})",  // bad degree key
        R"({"kind": "wedge", "dim_counts": {"3": -1}})",
        R"({"kind": "elliptic_ranks", "ranks": {"1": 1}})",  // degree too low
        R"([1, 2, 3])",                                  // not an object
    };
    for (const std::string& text : bad) {
        CAPTURE(text);
        CHECK_THROWS_AS(io::space_model_from_json(io::parse_document(text)), io::parse_error);
    }
}

TEST_CASE("monodromy parsing") {
    CHECK(io::monodromy_from_json(
              io::parse_document(R"({"kind": "identity_on_rational_homotopy"})")) ==
          openbook::MonodromyHypothesis{openbook::IdentityOnRationalHomotopy{}});
    CHECK(io::monodromy_from_json(io::parse_document(R"({"kind": "unverified"})")) ==
          openbook::MonodromyHypothesis{openbook::UnverifiedMonodromy{}});

    const auto finite = io::monodromy_from_json(io::parse_document(
        R"({"kind": "finite_order", "m": 8, "nilpotent_action": true})"));
    const auto* f = std::get_if<openbook::FiniteHomotopyOrder>(&finite);
    REQUIRE(f != nullptr);
    CHECK(f->order == 8);
    CHECK(f->nilpotent_action);
    CHECK(f->evidence == openbook::NilpotenceEvidence::Homotopy);

    const auto homological = io::monodromy_from_json(io::parse_document(
        R"({"kind": "finite_order", "m": 2, "nilpotent_action": true,
            "nilpotence_evidence": "homology"})"));
    CHECK(std::get<openbook::FiniteHomotopyOrder>(homological).evidence ==
          openbook::NilpotenceEvidence::Homology);

    CHECK_THROWS_AS(io::monodromy_from_json(io::parse_document(
                        R"({"kind": "finite_order", "m": 0, "nilpotent_action": true})")),
                    io::parse_error);
    CHECK_THROWS_AS(io::monodromy_from_json(io::parse_document(
                        R"({"kind": "finite_order", "m": 2})")),
                    io::parse_error);
    CHECK_THROWS_AS(io::monodromy_from_json(io::parse_document(R"({"kind": "rotation"})")),
                    io::parse_error);
}

TEST_CASE("open book specs parse with defaults") {
    const auto spec = io::openbook_spec_from_json(io::parse_document(R"({
        "ambient_dim": 5,
        "page": {"kind": "contractible"},
        "fibre": {"kind": "sphere", "dim": 3},
        "monodromy": {"kind": "identity_on_rational_homotopy"},
        "page_simply_connected": true,
        "boundary_nilpotent_connected": true,
        "total_simply_connected": true
    })"));
    CHECK(spec.ambient_dim == 5);
    CHECK(openbook::is_contractible(spec.page));
    REQUIRE(spec.fibre.has_value());
    CHECK(*spec.fibre == SpaceModel{openbook::Sphere{3}});
    CHECK(openbook::validate_spec(spec).empty());

    const auto bare = io::openbook_spec_from_json(io::parse_document(R"({
        "ambient_dim": 5,
        "page": {"kind": "sphere", "dim": 3}
    })"));
    CHECK_FALSE(bare.fibre.has_value());
    CHECK(std::holds_alternative<openbook::UnverifiedMonodromy>(bare.monodromy));
    CHECK_FALSE(bare.page_simply_connected);
    CHECK_FALSE(bare.boundary_nilpotent_connected);
    CHECK_FALSE(bare.total_simply_connected);

    const auto null_fibre = io::openbook_spec_from_json(io::parse_document(R"({
        "ambient_dim": 5,
        "page": {"kind": "sphere", "dim": 3},
        "fibre": null
    })"));
    CHECK_FALSE(null_fibre.fibre.has_value());

    CHECK_THROWS_AS(io::openbook_spec_from_json(io::parse_document(R"({
        "page": {"kind": "sphere", "dim": 3}
    })")),
                    io::parse_error);
    CHECK_THROWS_AS(io::openbook_spec_from_json(io::parse_document(R"({
        "ambient_dim": 5,
        "page": {"kind": "sphere", "dim": 3},
        "page_simply_connected": "yes"
    })")),
                    io::parse_error);
}

TEST_CASE("brieskorn exponents parse and cross-check n") {
    const auto b = io::brieskorn_from_json(
        io::parse_document(R"({"exponents": [3, 2, 2, 2]})"));
    CHECK(b.n == 3);
    CHECK(io::brieskorn_from_json(io::parse_document(R"({"exponents": [3, 3], "n": 1})")).n == 1);
    CHECK_THROWS_AS(
        io::brieskorn_from_json(io::parse_document(R"({"exponents": [3, 3], "n": 2})")),
        io::parse_error);
    CHECK_THROWS_AS(io::brieskorn_from_json(io::parse_document(R"({"exponents": [3, 1]})")),
                    io::parse_error);
    CHECK_THROWS_AS(io::brieskorn_from_json(io::parse_document(R"({"n": 3})")), io::parse_error);
}

TEST_CASE("variation matrices parse") {
    const auto v = io::variation_from_json(
        io::parse_document(R"({"matrix": [[2, 1], [1, 1]]})"));
    CHECK(v.size() == 2);
    CHECK(v.entries[0][0] == 2);

    const auto big = io::variation_from_json(io::parse_document(
        R"({"matrix": [["123456789012345678901234567890"]]})"));
    CHECK(big.entries[0][0] == Integer("123456789012345678901234567890"));

    CHECK_THROWS_AS(io::variation_from_json(
                        io::parse_document(R"({"matrix": [[1, 2], [3]]})")),
                    io::parse_error);
    CHECK_THROWS_AS(io::variation_from_json(io::parse_document(R"({"matrix": []})")),
                    io::parse_error);
    CHECK_THROWS_AS(io::variation_from_json(
                        io::parse_document(R"({"matrix": [[1.5]]})")),
                    io::parse_error);
}

TEST_CASE("generator tables parse from either wrapping") {
    const GradedRanks expected{{1, 2}, {3, 5}};
    CHECK(io::generators_from_json(
              io::parse_document(R"({"generators": {"1": 2, "3": 5}})")) == expected);
    CHECK(io::generators_from_json(io::parse_document(R"({"1": 2, "3": 5})")) == expected);
    CHECK_THROWS_AS(io::generators_from_json(io::parse_document(R"({"0": 1})")),
                    io::parse_error);
    CHECK_THROWS_AS(io::generators_from_json(io::parse_document(R"({"2": -1})")),
                    io::parse_error);
}

TEST_CASE("integers round-trip past 64 bits") {
    const Integer big("340282366920938463463374607431768211457");
    const json encoded = io::integer_to_json(big);
    CHECK(encoded.is_string());
    json wrapper;
    wrapper["value"] = encoded;
    CHECK(io::integer_from_json(wrapper["value"], "value") == big);

    const json small = io::integer_to_json(Integer(42));
    CHECK(small.is_number_integer());
    CHECK(small.get<long long>() == 42);
}

TEST_CASE("rank tables serialize in ascending degree order") {
    GradedRanks ranks;
    ranks.set(12, 3);
    ranks.set(2, 1);
    ranks.set(7, 2);
    const json j = io::ranks_to_json(ranks);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"2", "7", "12"});
}

TEST_CASE("space models round-trip through JSON") {
    const std::vector<SpaceModel> models = {
        openbook::Contractible{},
        openbook::Sphere{4},
        openbook::make_wedge({3, 3, 5}),
        openbook::make_wedge_of_equal_spheres(Integer("98765432109876543210"), 3),
        openbook::make_elliptic(GradedRanks{{3, 1}, {8, 2}}),
    };
    for (const SpaceModel& model : models) {
        CHECK(io::space_model_from_json(io::space_model_to_json(model)) == model);
    }
}

TEST_CASE("monodromy hypotheses round-trip through JSON") {
    const std::vector<openbook::MonodromyHypothesis> hypotheses = {
        openbook::IdentityOnRationalHomotopy{},
        openbook::FiniteHomotopyOrder{8, true},
        openbook::FiniteHomotopyOrder{2, true, openbook::NilpotenceEvidence::Homology},
        openbook::FiniteHomotopyOrder{3, false},
        openbook::UnverifiedMonodromy{},
    };
    for (const auto& monodromy : hypotheses) {
        CHECK(io::monodromy_from_json(io::monodromy_to_json(monodromy)) == monodromy);
    }
}

TEST_CASE("open book specs round-trip through JSON") {
    openbook::OpenBookSpec spec;
    spec.ambient_dim = 7;
    spec.page = openbook::make_wedge({3, 3});
    spec.fibre = openbook::Sphere{3};
    spec.monodromy = openbook::FiniteHomotopyOrder{4, true};
    spec.page_simply_connected = true;
    spec.boundary_nilpotent_connected = true;
    spec.total_simply_connected = true;

    const auto decoded = io::openbook_spec_from_json(io::openbook_spec_to_json(spec));
    CHECK(decoded.ambient_dim == spec.ambient_dim);
    CHECK(decoded.page == spec.page);
    CHECK(decoded.fibre == spec.fibre);
    CHECK(decoded.monodromy == spec.monodromy);
    CHECK(decoded.page_simply_connected == spec.page_simply_connected);
    CHECK(decoded.boundary_nilpotent_connected == spec.boundary_nilpotent_connected);
    CHECK(decoded.total_simply_connected == spec.total_simply_connected);

    // The fibre gap survives the trip too.
    spec.fibre.reset();
    CHECK_FALSE(
        io::openbook_spec_from_json(io::openbook_spec_to_json(spec)).fibre.has_value());
}

TEST_CASE("verdicts serialize to their tagged shapes") {
    const json elliptic = io::verdict_to_json(
        openbook::EllipticVerdict{3, GradedRanks{{5, 1}}});
    REQUIRE(elliptic.contains("elliptic"));
    CHECK(elliptic["elliptic"]["l"] == 3);
    CHECK(elliptic["elliptic"]["ranks"]["5"] == 1);

    const json hyperbolic = io::verdict_to_json(
        openbook::HyperbolicVerdict{openbook::HyperbolicReason::FibreNotASphere});
    REQUIRE(hyperbolic.contains("hyperbolic"));
    CHECK(hyperbolic["hyperbolic"]["reason"] == "fibre_not_a_sphere");

    const json stuck = io::verdict_to_json(openbook::NotClassifiable{
        {openbook::Violation{"fibre_model_missing", "no fibre model supplied"}}});
    REQUIRE(stuck.contains("not_classifiable"));
    REQUIRE(stuck["not_classifiable"]["missing"].is_array());
    CHECK(stuck["not_classifiable"]["missing"][0]["code"] == "fibre_model_missing");
}

TEST_CASE("variation matrices round-trip") {
    const auto v = openbook::make_variation({{2, 1}, {1, 1}});
    const auto again = io::variation_from_json(io::variation_to_json(v));
    CHECK(again.entries == v.entries);
}
