#include <doctest.h>

#include "endscope/covering.hpp"
#include "endscope/error.hpp"
#include "endscope/json_io.hpp"
#include "support.hpp"

using namespace endscope;

TEST_CASE("cardinals") {
    CHECK(cardinal_to_json(Cardinal::aleph(1)) == "aleph:1");
    CHECK(cardinal_from_json(Json("finite:3")) == Cardinal::finite(3));
}

TEST_CASE("report fields") {
    auto bin = support::load_tree("bin.tree");
    auto j = report_to_json(bin, report(bin, 3));
    CHECK(j["name"] == "bin");
    CHECK(j["compact"] == true);
    CHECK(j["lindelofDegree"] == "aleph:0");
    CHECK(j["rothberger"] == false);
    CHECK(j["menger"] == true);
    CHECK(j["scatterRank"].is_null());
    CHECK(j["traces"].size() == 2);
    CHECK(j["traces"][0]["operator"] == "SCATTER");
    CHECK(j["witnesses"]["binary"]["kind"] == "binary");
    CHECK(j["witnesses"]["baire"].is_null());
}

TEST_CASE("reports survive a round trip") {
    for (const auto& p : support::corpus(150, 101)) {
        const auto r = report(p, 2);
        const auto back = report_from_json(report_to_json(p, r));
        CHECK(back.compact == r.compact);
        CHECK(back.lindelof_degree == r.lindelof_degree);
        CHECK(back.extent == r.extent);
        CHECK(back.scattered == r.scattered);
        CHECK(back.rothberger == r.rothberger);
        CHECK(back.menger == r.menger);
        CHECK(back.sigma_compact == r.sigma_compact);
        CHECK(back.scatter_rank == r.scatter_rank);
        CHECK(back.kb_rank == r.kb_rank);
        CHECK(back.binary.has_value() == r.binary.has_value());
        CHECK(back.baire.has_value() == r.baire.has_value());
        // Witnesses read back from text still verify against the input.
        if (back.binary) {
            CHECK(verify_witness(p, *back.binary));
        }
        if (back.baire) {
            CHECK(verify_witness(p, *back.baire));
        }
    }
}

TEST_CASE("witness text is checked") {
    auto baire = support::load_tree("baire.tree");
    auto r = report(baire, 2);
    REQUIRE(r.baire);
    auto j = witness_to_json(*r.baire);
    CHECK(j["width"] == 3);
    auto back = baire_witness_from_json(j);
    CHECK(back.phi == r.baire->phi);
    CHECK(back.t_of == r.baire->t_of);
    j["phi"]["0"] = "e0.0/e0.0";
    CHECK_FALSE(verify_witness(baire, baire_witness_from_json(j)));
    Json broken = witness_to_json(*r.binary);
    broken["map"]["0"] = "e0.";
    CHECK_THROWS_AS(binary_witness_from_json(broken), ParseError);
}
