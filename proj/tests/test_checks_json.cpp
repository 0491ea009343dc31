#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lynmag/json_io.hpp"
#include "lynmag/magnus.hpp"

using namespace lynmag;

namespace {

FormationSpec lpc53() {
    return FormationSpec::make(default_formation_alphabet(2), 3, 5, lower_p_central_j(3));
}

}  // namespace

TEST_CASE("alphabet json round trip") {
    const Alphabet al({"x", "y", "zz"});
    const Json j = alphabet_to_json(al);
    CHECK(j.dump() == R"(["x","y","zz"])");
    CHECK(alphabet_from_json(j) == al);

    CHECK_THROWS_AS(alphabet_from_json(Json::array()), std::invalid_argument);
    CHECK_THROWS_AS(alphabet_from_json(Json::parse(R"(["a", 3])")), std::invalid_argument);
    CHECK_THROWS_AS(alphabet_from_json(Json("x")), std::invalid_argument);
}

TEST_CASE("default formation alphabet") {
    CHECK(default_formation_alphabet(2) == Alphabet({"x", "y"}));
    CHECK(default_formation_alphabet(3).letter(2) == "z");
    CHECK_THROWS_AS(default_formation_alphabet(0), std::invalid_argument);
    CHECK_THROWS_AS(default_formation_alphabet(9), std::invalid_argument);
}

TEST_CASE("polynomial json round trip") {
    const Alphabet al = Alphabet::latin(2);
    const NCPoly f = shuffle(Word::parse(al, "ab"), Word::parse(al, "ab"));
    const Json j = poly_to_json(f);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["word"] == "aabb");
    CHECK(j[0]["coeff"] == "4");
    CHECK(j[1]["word"] == "abab");
    CHECK(j[1]["coeff"] == "2");
    CHECK(poly_from_json(j, al, Ring::integers()) == f);

    // rationals and the empty word survive the trip
    NCPoly g(al, Ring::rationals());
    g.add_term(Word::empty(al), Rational(3, 4));
    g.add_term(Word::parse(al, "ba"), Rational(-2));
    const Json gj = poly_to_json(g);
    CHECK(gj[0]["word"] == "");
    CHECK(gj[0]["coeff"] == "3/4");
    CHECK(gj[1]["coeff"] == "-2");
    CHECK(poly_from_json(gj, al, Ring::rationals()) == g);

    CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"word":"a"}])"), al, Ring::integers()),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        poly_from_json(Json::parse(R"([{"word":"a","coeff":"zzz"}])"), al, Ring::integers()),
        std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(Json("x"), al, Ring::integers()), std::invalid_argument);
}

TEST_CASE("series json carries degree and modulus") {
    const Alphabet al = default_formation_alphabet(2);
    const GroupWord g = GroupWord::parse(al, "x y x^-1 y^-1");
    const Json jz = series_to_json(magnus_expand(g, 2, Ring::integers()));
    CHECK(jz["max_deg"] == 2);
    CHECK(!jz.contains("modulus"));
    REQUIRE(jz["terms"].size() == 3);
    CHECK(jz["terms"][0]["word"] == "");
    CHECK(jz["terms"][1]["word"] == "xy");
    CHECK(jz["terms"][2]["coeff"] == "-1");

    const Json jm = series_to_json(magnus_expand(g, 2, Ring::integers_mod(25)));
    CHECK(jm["modulus"] == "25");
    CHECK(jm["terms"][2]["coeff"] == "24");
}

TEST_CASE("formation json explicit round trip") {
    const FormationSpec spec = lpc53();
    const Json j = formation_to_json(spec);
    CHECK(j["alphabet"].dump() == R"(["x","y"])");
    CHECK(j["n"] == 3);
    CHECK(j["p"] == 5);
    CHECK(j["j"].dump() == "[2,1,0]");
    CHECK(j["L"].dump() == R"(["x","y","xy","xxy","xyy"])");

    const FormationSpec back = formation_from_json(j);
    CHECK(back.alphabet() == spec.alphabet());
    CHECK(back.n() == spec.n());
    CHECK(back.p() == spec.p());
    CHECK(back.j() == spec.j());
    CHECK(back.L() == spec.L());
}

TEST_CASE("formation json presets and defaults") {
    const FormationSpec a =
        formation_from_json(Json::parse(R"({"preset":"lower-p-central","n":3,"p":5})"));
    CHECK(a.alphabet() == default_formation_alphabet(2));  // k defaults to 2
    CHECK(a.j() == std::vector<int>{2, 1, 0});

    const FormationSpec b =
        formation_from_json(Json::parse(R"({"preset":"zassenhaus","n":4,"p":5,"k":2})"));
    CHECK(b.j() == zassenhaus_j(5, 1, 4));  // t defaults to 1

    const FormationSpec c = formation_from_json(
        Json::parse(R"({"preset":"zassenhaus","t":2,"n":4,"p":5,"L":"auto"})"));
    CHECK(c.j() == zassenhaus_j(5, 2, 4));

    const FormationSpec d = formation_from_json(
        Json::parse(R"({"alphabet":["x","y"],"n":3,"p":5,"j":[2,1,0],"L":["x","xy"]})"));
    REQUIRE(d.L().size() == 2);
    CHECK(d.L()[1].str() == "xy");

    CHECK_THROWS_AS(formation_from_json(Json::parse(R"({"preset":"mystery","n":3,"p":5})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(formation_from_json(Json::parse(R"({"n":3,"p":5})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        formation_from_json(Json::parse(R"({"preset":"zassenhaus","j":[1,0],"n":2,"p":3})")),
        std::invalid_argument);
    CHECK_THROWS_AS(formation_from_json(Json::parse(R"({"preset":"lower-p-central","p":5})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(formation_from_json(Json::parse(R"({"j":[2,1,0],"n":3,"p":5,"L":["xx"]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(formation_from_json(Json::parse("[1,2]")), std::invalid_argument);
}

TEST_CASE("fundamental matrix json round trip") {
    const FundamentalMatrix m = fundamental_matrix(lpc53());
    const Json j = fundamental_to_json(m);
    CHECK(j["order"].size() == 5);
    CHECK(j["p"] == 5);
    REQUIRE(j["rows"].size() == 5);
    CHECK(j["rows"][0][0] == 1);

    const FundamentalMatrix back = fundamental_from_json(j);
    CHECK(back.order == m.order);
    CHECK(back.p == m.p);
    CHECK(back.j == m.j);
    CHECK(back.rows == m.rows);

    Json bad = j;
    bad["rows"].erase(0);
    CHECK_THROWS_AS(fundamental_from_json(bad), std::invalid_argument);
    Json noal = j;
    noal.erase("alphabet");
    CHECK_THROWS_AS(fundamental_from_json(noal), std::invalid_argument);
}

TEST_CASE("report serializers expose every field") {
    const IndecReport ir = indec_dimension(Alphabet::latin(2), 4, 5);
    const Json ij = indec_to_json(ir);
    CHECK(ij["degree"] == 4);
    CHECK(ij["word_count"] == 16);
    CHECK(ij["decomposable_rank"] == 13);
    CHECK(ij["indec_dim"] == 3);
    CHECK(ij["lyndon_count"] == 3);
    CHECK(ij["match"] == true);
    CHECK(ij["lyndon_span_ok"] == true);

    const IsomorphismReport rep = isomorphism_report(lpc53());
    const Json rj = isomorphism_to_json(rep);
    CHECK(rj["status"] == "pass");
    REQUIRE(rj["rows"].size() == 3);
    CHECK(rj["rows"][2]["basis"].dump() == R"(["xxy","xyy"])");
    CHECK(rj["hypotheses_met"] == true);
    CHECK(rj["warnings"].empty());
    CHECK(rj["note"].get<std::string>().find("transgression") != std::string::npos);
}

TEST_CASE("check report text and json") {
    CheckReport r;
    r.suite = "demo";
    r.seed = 9;
    r.seconds = 0.25;
    r.params.emplace_back("n", "3");
    r.notes.push_back("sampled");
    const std::string text = r.str();
    CHECK(text.find("check demo: PASS") == 0);
    CHECK(text.find("seed 9") != std::string::npos);
    CHECK(text.find("n = 3") != std::string::npos);
    CHECK(r.exit_code() == 0);

    r.status = "fail";
    r.witnesses.push_back("bad pair");
    CHECK(r.exit_code() == 1);
    CHECK(r.str().find("FAIL") != std::string::npos);
    CHECK(r.str().find("counterexample: bad pair") != std::string::npos);

    const Json j = check_report_to_json(r);
    CHECK(j["suite"] == "demo");
    CHECK(j["status"] == "fail");
    CHECK(j["seed"] == 9);
    CHECK(j["params"]["n"] == "3");
    CHECK(j["witnesses"].dump() == R"(["bad pair"])");
    for (const char* key : {"suite", "status", "seed", "seconds", "params", "notes",
                            "witnesses"})
        CHECK(j.contains(key));
}

TEST_CASE("suite runners pass at desk scale") {
    const CheckReport bin = suite_binomial(1);
    CHECK(bin.status == "pass");
    CHECK(bin.seed == 1);

    const Alphabet xy = default_formation_alphabet(2);
    const CheckReport cfl = suite_cfl(xy, 5, 4, 3, 2);
    CHECK(cfl.status == "pass");

    const CheckReport tri = suite_triangularity(xy, 3, 4);
    CHECK(tri.status == "pass");

    const CheckReport fm = suite_fundamental_matrix(lpc53());
    CHECK(fm.status == "pass");

    const CheckReport lcs = suite_lcs_power(2, 1, 1, {2}, 1 << 20);
    CHECK(lcs.status == "pass");

    const CheckReport img = suite_image(lpc53(), 2, 3);
    CHECK(img.status == "pass");

    const CheckReport rel = suite_shuffle_relations(lpc53(), 3);
    CHECK(rel.status == "pass");

    const CheckReport rad = suite_radford(Alphabet::latin(2), 4);
    CHECK(rad.status == "pass");

    const CheckReport ind = suite_indec(2, 3, {5});
    CHECK(ind.status == "pass");

    const CheckReport iso = suite_isomorphism(lpc53());
    CHECK(iso.status == "pass");

    // n >= p downgrades to a warning, never a silent pass
    const FormationSpec tight =
        FormationSpec::make(default_formation_alphabet(2), 3, 3, lower_p_central_j(3));
    const CheckReport warn = suite_isomorphism(tight);
    CHECK(warn.status == "warning");
    CHECK(warn.exit_code() == 0);
    CHECK(!warn.witnesses.empty());
}

TEST_CASE("suite parameter echoes carry the inputs") {
    const CheckReport r = suite_shuffle_relations(lpc53(), 4);
    bool saw_p = false, saw_pairs = false;
    for (const auto& [k, v] : r.params) {
        if (k == "p" && v == "5")
            saw_p = true;
        if (k == "pairs_checked")
            saw_pairs = true;
    }
    CHECK(saw_p);
    CHECK(saw_pairs);
    REQUIRE(!r.notes.empty());
    CHECK(r.notes[0].find("verified exhaustively") != std::string::npos);
}
