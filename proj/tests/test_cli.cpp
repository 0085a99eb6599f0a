#include <catch2/catch_amalgamated.hpp>

#include <greenring/cli.hpp>

using namespace greenring;

TEST_CASE("group spec parsing", "[cli]") {
    REQUIRE(parse_group_spec("cyclic:6")->n == 6);
    REQUIRE(parse_group_spec("dihedral:4")->n == 8);
    REQUIRE(parse_group_spec("quaternion")->n == 8);
    REQUIRE(parse_group_spec("sym:4")->n == 24);
    REQUIRE(parse_group_spec("alt:4")->n == 12);
    REQUIRE(parse_group_spec("1")->n == 1);

    auto p = parse_group_spec("perm:(1 2)(3 4)");
    REQUIRE(p->n == 2);
    auto p2 = parse_group_spec("perm:(1 2 3);(1 2)");
    REQUIRE(p2->n == 6); // two generators of S_3, separated by ';'
    REQUIRE(p2->num_classes() == 3);

    auto prod = parse_group_spec("prod:cyclic:2,cyclic:3");
    REQUIRE(prod->n == 6);
    REQUIRE(prod->exponent == 6);
    auto nested = parse_group_spec("prod:[prod:cyclic:2,cyclic:2],cyclic:2");
    REQUIRE(nested->n == 8);
    REQUIRE(nested->exponent == 2);

    REQUIRE_THROWS_AS(parse_group_spec("frobnicate:9"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_group_spec("cyclic:500"), std::invalid_argument);
    REQUIRE(parse_group_spec("cyclic:500", 1000)->n == 500); // the cap is configurable
}

TEST_CASE("omega command", "[cli]") {
    Json r = cli::run_omega("Q", "Qfull", "cyclic:3", 200);
    REQUIRE(r.at("schema") == 1);
    REQUIRE(r.at("count") == 2);
    REQUIRE(r.at("orbits").size() == 2);

    // determinism: identical requests produce byte-identical reports
    Json r2 = cli::run_omega("Q", "Qfull", "cyclic:3", 200);
    REQUIRE(r.dump(2) == r2.dump(2));
}

TEST_CASE("classes and idempotents commands", "[cli]") {
    Json c = cli::run_classes("Q", "cyclic:4", 200);
    REQUIRE(c.at("count") == 3);

    Json i = cli::run_idempotents("Q", "Qfull", "cyclic:3", 200);
    REQUIRE(i.at("count") == 2);
    // values serialize exactly
    REQUIRE(i.at("idempotents")[0].at("values")[0].at("coeffs")[0] == "1");

    REQUIRE_THROWS_AS(cli::run_classes("GF(2)", "cyclic:3", 200), std::invalid_argument);
}

TEST_CASE("chartable command", "[cli]") {
    Json t = cli::run_chartable("sym:3", 200);
    REQUIRE(t.at("degrees") == Json::array({1, 1, 2}));
    REQUIRE(t.at("rows").size() == 3);
    // byte determinism again
    REQUIRE(t.dump() == cli::run_chartable("sym:3", 200).dump());
}

TEST_CASE("ideals command", "[cli]") {
    Json r = cli::run_ideals("Q", "Qfull", "cyclic:3", {1}, {"1", "cyclic:2"}, 200);
    REQUIRE(r.at("omega_count") == 2);
    REQUIRE(r.at("support") == Json::array({1}));
    for (auto& ev : r.at("evaluations")) {
        REQUIRE(ev.at("recovered_support") == Json::array({1}));
        REQUIRE(ev.at("dimension").get<int>() >= 1);
    }
}

TEST_CASE("essential and seeds commands", "[cli]") {
    Json e = cli::run_essential("Qfull", "Q", "cyclic:2", "", 200);
    REQUIRE(e.at("essential_dim") == 0);

    Json e4 = cli::run_essential("Qfull", "Q", "cyclic:4", "", 200);
    REQUIRE(e4.at("essential_dim") == 1);

    Json s = cli::run_seeds("sym:3", 5, 200);
    REQUIRE(s.at("count") == 9);
    REQUIRE_THROWS_AS(cli::run_seeds("cyclic:2", 2, 200), std::invalid_argument);

    Json r3 = cli::run_r3check("cyclic:2", "cyclic:2", "cyclic:2", 200);
    REQUIRE(r3.at("rank") == 8);
    REQUIRE(r3.at("ok") == true);
}

TEST_CASE("verify command", "[cli]") {
    Json v = cli::run_verify("seeds", 0);
    REQUIRE(v.at("ok") == true);
    REQUIRE(v.at("suites").size() == 1);
    REQUIRE(v.at("suites")[0].at("total") == 2);

    Json v2 = cli::run_verify("omega", 6);
    REQUIRE(v2.at("ok") == true);

    REQUIRE_THROWS_AS(cli::run_verify("nonsense", 0), std::invalid_argument);
}
