#include "opint/io.hpp"

#include <doctest.h>

using namespace opint;

TEST_CASE("surjections round trip in both forms") {
    for (auto& g : surjections_up_to(4)) {
        CHECK(surjection_from_json(to_json(g)) == g);
        CHECK(surjection_from_json(Json(g.str())) == g);
    }
    CHECK_THROWS_AS(surjection_from_json(Json{{"dom", 2}, {"cod", 2}, {"values", {2, 1}}}), Error);
}

TEST_CASE("categories round trip") {
    auto p = tree_operad(4);
    for (int n = 1; n <= 4; ++n) {
        const auto& c = p.component(n);
        auto back = fincat_from_json(parse_json(to_json(c).dump()));
        CHECK(back.object_count() == c.object_count());
        CHECK(back.morphism_count() == c.morphism_count());
        CHECK(to_json(back) == to_json(c));
    }
}

TEST_CASE("posets are closed under reflexivity and transitivity") {
    auto j = parse_json(R"({"poset": {"elements": ["a", "b", "c"], "le": [["a", "b"], ["b", "c"]]}})");
    auto c = fincat_from_json(j);
    CHECK(c.object_count() == 3);
    CHECK(c.morphism_count() == 6);
    auto a = *c.find_object("a"), cc = *c.find_object("c");
    CHECK(c.hom(a, cc).size() == 1);
    CHECK(c.hom(cc, a).empty());
    auto cyc = parse_json(R"({"poset": {"elements": ["a", "b"], "le": [["a", "b"], ["b", "a"]]}})");
    CHECK_THROWS_AS(fincat_from_json(cyc), Error);
}

TEST_CASE("operads round trip and still validate") {
    for (const auto& p : {nat_operad(4), tree_operad(3), terminal_operad(2)}) {
        CAPTURE(p.name());
        auto j = to_json(p);
        auto back = operad_from_json(parse_json(j.dump()));
        CHECK(to_json(back) == j);
        CHECK(combine(validate_operad(back)) == Verdict::Pass);
    }
}

TEST_CASE("thin operads may omit morphism graphs") {
    auto j = to_json(nat_operad(3));
    for (auto& m : j["mu"]) m.erase("graph_mor");
    auto back = operad_from_json(j);
    CHECK(to_json(back) == to_json(nat_operad(3)));
}

TEST_CASE("malformed text reports its position") {
    try {
        parse_json("{\"a\": [1, 2,, 3]}");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::Input);
        CHECK(std::string(e.what()).find("13") != std::string::npos);
    }
}

TEST_CASE("trees round trip") {
    for (int n = 1; n <= 4; ++n)
        for (auto& t : enumerate_trees(n)) CHECK(tree_from_json(to_json(t)) == t);
    CHECK(to_json(PlanarTree::leaf()) == Json("L"));
    CHECK_THROWS_AS(tree_from_json(Json::array({"L"})), Error);
}

TEST_CASE("certificates and reports serialize") {
    auto cert = roundtrip_operad(nat_operad(2));
    auto j = to_json(cert);
    CHECK(j["status"] == "pass");
    CheckReport r{"x", Verdict::Fail, 3, false, "boom"};
    auto jr = to_json(std::vector<CheckReport>{r});
    CHECK(jr["status"] == "fail");
}
