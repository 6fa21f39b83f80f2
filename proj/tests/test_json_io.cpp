#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zczkit/json_io.hpp"

using namespace zczkit;

namespace {

ZczSpec demo_zcz_spec() {
    ZczSpec spec;
    spec.base.p = 2;
    spec.base.n = 3;
    spec.base.J = {1};
    spec.base.c = {1};
    spec.base.partition.blocks = {{2}, {3}};
    spec.base.linear = {1, 0, 1};
    spec.base.extra_quadratic = Poly::parse("x1*x2 + x1*x3", 2, 3);
    spec.g.c = {1, 1};
    spec.g.e = {0, 0, 0};
    return spec;
}

}  // namespace

TEST_CASE("sequence round trip, nulls preserved") {
    const SncSequence s(3, {0, SncSequence::kNull, 2, 1});
    const Json j = sequence_to_json(s);
    CHECK(j.dump() == R"({"p":3,"length":4,"symbols":[0,null,2,1]})");
    CHECK(sequence_from_json(j) == s);
    Json bad = j;
    bad["length"] = 5;
    CHECK_THROWS_AS(sequence_from_json(bad), std::invalid_argument);
}

TEST_CASE("spec schema parses the documented shape") {
    const auto j = Json::parse(R"({
        "p":2,"n":6,"J":[3],"c":[1],"blocks":[[1,2],[5,4,6]],
        "linear":[0,0,0,0,0,0],"constant":0,
        "extra_quadratic":"x2*x3 + x3*x4"})");
    const CccSpec spec = ccc_spec_from_json(j);
    CHECK(spec.n == 6);
    CHECK(spec.J == std::vector<int>{3});
    CHECK(spec.partition.blocks == std::vector<std::vector<int>>{{1, 2}, {5, 4, 6}});
    REQUIRE(spec.extra_quadratic.has_value());
    CHECK(*spec.extra_quadratic == Poly::parse("x2*x3 + x3*x4", 2, 6));
    CHECK(!spec_json_has_g(j));

    const CodeSet set = build_snc_ccc(spec);
    CHECK(set.K() == 4);
}

TEST_CASE("zcz spec round trip") {
    const ZczSpec spec = demo_zcz_spec();
    const Json j = zcz_spec_to_json(spec);
    CHECK(spec_json_has_g(j));
    const ZczSpec back = zcz_spec_from_json(j);
    CHECK(back.base.linear == spec.base.linear);
    CHECK(back.g.c == spec.g.c);
    CHECK(*back.base.extra_quadratic == *spec.base.extra_quadratic);
    CHECK(build_zcz(back).sequences == build_zcz(spec).sequences);
}

TEST_CASE("set files round trip and stay canonical") {
    const ZczSet set = build_zcz(demo_zcz_spec());
    const Json j = zcz_set_to_json(set);
    const ZczSet back = zcz_set_from_json(j);
    CHECK(back.sequences == set.sequences);
    CHECK(back.zone == set.zone);
    CHECK(back.support == set.support);
    REQUIRE(back.meta.has_value());
    CHECK(back.meta->J == std::vector<int>{1});
    CHECK(zcz_set_to_json(back).dump() == j.dump());  // byte-stable re-emission

    CccSpec cs;
    cs.p = 3;
    cs.n = 2;
    cs.partition.blocks = {{2, 1}};
    const CodeSet code_set = build_ccc(cs);
    const Json cj = code_set_to_json(code_set);
    const CodeSet cback = code_set_from_json(cj);
    CHECK(cback.codes == code_set.codes);
    CHECK(code_set_to_json(cback).dump() == cj.dump());

    CHECK_THROWS_AS(code_set_from_json(j), std::invalid_argument);
    CHECK_THROWS_AS(zcz_set_from_json(cj), std::invalid_argument);
}

TEST_CASE("kind names") {
    for (SetKind k : {SetKind::Ccc, SetKind::SncCcc, SetKind::Mogcs, SetKind::Zcz})
        CHECK(kind_from_name(kind_name(k)) == k);
    CHECK_THROWS_AS(kind_from_name("nope"), std::invalid_argument);
}

TEST_CASE("report JSON carries the documented fields") {
    const ZczSet set = build_zcz(demo_zcz_spec());
    const Json j = report_to_json(verify_zcz(set, 8));
    CHECK(j.at("property") == "zcz");
    CHECK(j.at("pass") == true);
    CHECK(j.at("peak") == 32);
    CHECK(j.at("Z_claimed") == 8);
    CHECK(j.at("Z_measured") == 9);
    CHECK(j.at("witnesses").empty());

    const Json b = bound_to_json(check_bound(3, 18, 81, 3));
    CHECK(b.at("ratio") == "57/81");
    CHECK(b.at("ratio_decimal") == "0.7037");
    CHECK(b.at("classification") == "asymptotically-consistent");
}

TEST_CASE("csv rendering") {
    const SncSequence a(2, {0, SncSequence::kNull, 1});
    ZczSet set{2, 1, {0, 2}, {a}, std::nullopt};
    CHECK(zcz_set_to_csv(set) == "0,,1\n");
}
