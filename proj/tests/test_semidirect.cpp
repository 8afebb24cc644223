#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/config.hpp"
#include "ringlab/graph.hpp"
#include "ringlab/localized.hpp"
#include "ringlab/polynomial.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/ringspec.hpp"
#include "ringlab/semidirect.hpp"
#include "ringlab/subring.hpp"

using namespace ringlab;

namespace {

SemidirectData direct_product_data() {
    SemidirectData d;
    d.m = 2;
    d.ideal = z_mod(2);
    d.e = 1;
    d.L = {0, 0};
    d.Rm = {0, 0};
    return d;
}

SemidirectData zero_mult_data() {
    SemidirectData d;
    d.m = 2;
    d.ideal = zero_mult_ring(3);
    d.e = 0;
    d.L = {0, 2, 1};  // 1/2 acts as negation
    d.Rm = {0, 2, 1};
    return d;
}

SemidirectData t2_data() {
    SemidirectData d;
    d.m = 1;
    d.ideal = parse_ring_spec("tri:gf:2:1:2");
    d.e = *d.ideal.identity();
    d.L.assign(8, 0);
    d.Rm.assign(8, 0);
    return d;
}

LocalizedRational z(int num, int den, int m) {
    return LocalizedRational(mpq_class(num, den), m);
}

}  // namespace

TEST_CASE("unitalization adjoins Z_char") {
    Ring r1 = unitalization(z_mod(2));
    CHECK_EQ(r1.order(), 4);
    REQUIRE(r1.is_unital());
    CHECK_EQ(*r1.identity(), 2u);  // (1, 0) with id k*|R| + a
    CHECK_EQ(r1.characteristic(), 2);
    CHECK(validate_ring(r1).is_ring);
    // the embedding a -> (0, a) keeps ids: products of embedded elements match
    Ring r = z_mod(2);
    for (Elem a = 0; a < 2; ++a)
        for (Elem b = 0; b < 2; ++b) CHECK_EQ(r1.mul(a, b), r.mul(a, b));

    Ring zm = unitalization(zero_mult_ring(3));
    CHECK_EQ(zm.order(), 9);
    CHECK_EQ(zm.characteristic(), 3);
    CHECK_EQ(*zm.identity(), 3u);
    CHECK(validate_ring(zm).is_ring);
    // (0,1)*(0,1) = (0, 0) in the zero-multiplication ideal
    CHECK_EQ(zm.mul(1, 1), 0u);
    // (1,0)*(0,1) = (0,1)
    CHECK_EQ(zm.mul(3, 1), 1u);
}

TEST_CASE("unitalization of a unital ring still adjoins a new identity") {
    Ring r1 = unitalization(z_mod(2));
    CHECK(r1.identity() != 1u);  // the old identity is no longer the identity
    Ring f41 = unitalization(galois_field(2, 2));
    CHECK_EQ(f41.order(), 8);
    CHECK(validate_ring(f41).is_ring);
}

TEST_CASE("the embedding induces a graph isomorphism") {
    for (const char* spec : {"z:4", "z:6", "zmul:4", "gf:2:2", "tri:gf:2:1:2", "mat:gf:2:1:2"}) {
        PropIsoResult res = check_prop_iso(parse_ring_spec(spec));
        CHECK_MESSAGE(res.holds, spec);
        CHECK_EQ(res.vertex_map.size(),
                 compressed_commuting_graph(parse_ring_spec(spec), GenMode::nonunital)
                     .vertex_count());
    }
}

TEST_CASE("natural actions validate; corrupted ones report a witness") {
    Ring z4 = z_mod(4);
    Ring i = z_mod(2);
    ActionTables act = natural_action(z4, i);
    CHECK_EQ(validate_action(z4, i, act), "");

    ActionTables bad = act;
    bad.left[3] = 1 - bad.left[3];  // break additivity somewhere
    CHECK_FALSE(validate_action(z4, i, bad).empty());
}

TEST_CASE("finite semidirect products recover the unitalization") {
    Ring r = zero_mult_ring(3);
    Ring z3 = z_mod(3);
    ActionTables act = natural_action(z3, r);
    Ring sd = semidirect_finite(z3, r, act);
    CHECK_EQ(sd.order(), 9);
    REQUIRE(sd.is_unital());
    CHECK_EQ(*sd.identity(), 3u);  // (1, 0)
    CHECK(validate_ring(sd).is_ring);

    Ring direct = unitalization(r);
    for (Elem a = 0; a < 9; ++a)
        for (Elem b = 0; b < 9; ++b) CHECK_EQ(sd.mul(a, b), direct.mul(a, b));
}

TEST_CASE("semidirect data loads from JSON") {
    SemidirectData d = semidirect_data_from_json(
        R"({"m": 2, "ideal": "z:2", "e": 1, "L": [0, 0], "Rm": [0, 0]})");
    CHECK_EQ(d.m, 2);
    CHECK_EQ(d.ideal.order(), 2);
    CHECK_EQ(d.e, 1u);
    CHECK_EQ(d.L, std::vector<Elem>{0, 0});

    CHECK_THROWS_AS(semidirect_data_from_json("{"), ParseError);
    CHECK_THROWS_AS(semidirect_data_from_json(R"({"m": 2})"), ParseError);
    CHECK_THROWS_AS(semidirect_data_from_json(
                        R"({"m": 2, "ideal": "nosuch:2", "e": 0, "L": [], "Rm": []})"),
                    ParseError);
    CHECK_THROWS_AS(semidirect_data_from_file("no_such_file.json"), ParseError);

    SemidirectData dp = semidirect_data_from_file(std::string(RINGLAB_DATA_DIR) + "/dp.json");
    CHECK_EQ(dp.m, 2);
    CHECK_EQ(dp.e, 1u);
    SemidirectData zm =
        semidirect_data_from_file(std::string(RINGLAB_DATA_DIR) + "/zero_mult_3.json");
    CHECK_EQ(zm.ideal.order(), 3);
    SemidirectData t2 = semidirect_data_from_file(std::string(RINGLAB_DATA_DIR) + "/t2_tight.json");
    CHECK_EQ(t2.ideal.order(), 8);
    CHECK_EQ(t2.e, *t2.ideal.identity());
}

TEST_CASE("semidirect data validation") {
    CHECK(validate_semidirect_data(direct_product_data()).empty());
    CHECK(validate_semidirect_data(zero_mult_data()).empty());
    CHECK(validate_semidirect_data(t2_data()).empty());

    SemidirectData wrong_size = direct_product_data();
    wrong_size.L = {0};
    CHECK_FALSE(validate_semidirect_data(wrong_size).empty());

    SemidirectData bad_e = direct_product_data();
    bad_e.ideal = z_mod(4);
    bad_e.e = 2;  // 2 is not idempotent in Z_4
    bad_e.L = {0, 0, 0, 0};
    bad_e.Rm = {0, 0, 0, 0};
    CHECK_FALSE(validate_semidirect_data(bad_e).empty());

    SemidirectData bad_l = zero_mult_data();
    bad_l.L = {1, 2, 1};  // L(0) != 0 breaks additivity
    CHECK_FALSE(validate_semidirect_data(bad_l).empty());

    SemidirectData bad_m = direct_product_data();
    bad_m.m = 0;
    CHECK_FALSE(validate_semidirect_data(bad_m).empty());

    CHECK_THROWS_AS(SemidirectRing::create(bad_e), PreconditionError);
}

TEST_CASE("semidirect arithmetic in the direct-product presentation") {
    SemidirectRing sd = SemidirectRing::create(direct_product_data());
    CHECK_EQ(sd.identity().z.value(), 1);
    CHECK_EQ(sd.identity().x, 1u);

    // with L = 0 the whole Z[1/2] action vanishes
    CHECK_EQ(sd.act_left(z(1, 2, 2), 1), 0u);
    CHECK_EQ(sd.act_left(z(3, 1, 2), 1), 0u);

    SDElement a = sd.element(z(1, 2, 2), 0);
    SDElement b = sd.element(z(1, 2, 2), 1);
    SDElement ab = sd.mul(a, b);
    CHECK_EQ(ab.z.value(), mpq_class(1, 4));
    CHECK_EQ(ab.x, 0u);

    SDElement sum = sd.add(a, b);
    CHECK_EQ(sum.z.value(), 1);
    CHECK_EQ(sum.x, 1u);

    CHECK_EQ(sd.sub(a, a), sd.zero());
    CHECK_EQ(sd.int_scale(3, b).x, 1u);
    CHECK_EQ(sd.power(b, 2).z.value(), mpq_class(1, 4));

    // q = 3y - 1 maps (1/2, 0) to (1/2, 1): the worked merge witness
    SDElement from = sd.element(z(1, 2, 2), 0);
    SDElement img = sd.eval(IntPolynomial::parse("-1,3"), from);
    CHECK_EQ(img, b);
}

TEST_CASE("semidirect arithmetic in the zero-multiplication presentation") {
    SemidirectRing sd = SemidirectRing::create(zero_mult_data());
    // 1/2 negates, so 1 acts as the identity and 3/2 kills
    CHECK_EQ(sd.act_left(z(1, 2, 2), 1), 2u);
    CHECK_EQ(sd.act_left(z(1, 1, 2), 1), 1u);
    CHECK_EQ(sd.act_left(z(3, 2, 2), 1), 0u);

    SDElement s = sd.element(z(1, 1, 2), 1);
    CHECK_EQ(sd.power(s, 2), sd.element(z(1, 1, 2), 2));
    CHECK_EQ(sd.eval(IntPolynomial::parse("0,0,1"), s), sd.element(z(1, 1, 2), 2));
    // 2y - 1 sends (1, 2) back to (1, 1)
    CHECK_EQ(sd.eval(IntPolynomial::parse("-1,2"), sd.element(z(1, 1, 2), 2)),
             sd.element(z(1, 1, 2), 1));
}

TEST_CASE("element strings") {
    SemidirectRing sd = SemidirectRing::create(zero_mult_data());
    CHECK_EQ(sd.element(z(1, 2, 2), 2).str(), "(1/2, 2)");
    CHECK_EQ(sd.element(z(3, 1, 2), 0).str(), "(3, 0)");
}

TEST_CASE("power maps stabilize") {
    SemidirectRing sd = SemidirectRing::create(direct_product_data());
    Stabilization st = stabilize_power_functions(sd, z(1, 2, 2));
    CHECK(st.u > st.v);
    CHECK(st.v >= 1);
    CHECK_EQ(st.h, IntPolynomial::monomial(1, st.u) - IntPolynomial::monomial(1, st.v));
    // every element (1/2, r) satisfies sigma^u = sigma^v on the ideal part
    for (Elem r = 0; r < 2; ++r) {
        SDElement s = sd.element(z(1, 2, 2), r);
        CHECK_EQ(sd.power(s, st.u).x, sd.power(s, st.v).x);
    }
}

TEST_CASE("exact membership witnesses") {
    SemidirectRing sd = SemidirectRing::create(direct_product_data());
    SDElement a = sd.element(z(1, 2, 2), 0);
    SDElement target = sd.element(z(1, 2, 2), 1);

    auto w = sd_membership_witness(sd, a, target);
    REQUIRE(w.has_value());
    CHECK_EQ(sd.eval(*w, a), target);

    auto back = sd_membership_witness(sd, target, a);
    REQUIRE(back.has_value());
    CHECK_EQ(sd.eval(*back, target), a);

    // (1, 1) generates only integral z-parts
    SDElement one_one = sd.element(z(1, 1, 2), 1);
    CHECK_FALSE(sd_membership_witness(sd, one_one, a).has_value());
    // ... but (1/2, 0) reaches (1, 1)
    auto up = sd_membership_witness(sd, a, one_one);
    REQUIRE(up.has_value());
    CHECK_EQ(sd.eval(*up, a), one_one);
}

TEST_CASE("membership in the zero-multiplication presentation") {
    SemidirectRing sd = SemidirectRing::create(zero_mult_data());
    SDElement a = sd.element(z(1, 2, 2), 1);
    SDElement b = sd.element(z(1, 2, 2), 2);
    auto w = sd_membership_witness(sd, a, b);
    REQUIRE(w.has_value());
    CHECK_EQ(sd.eval(*w, a), b);

    // (1/2, 0) cannot reach (1/2, 1): its ideal parts stay zero
    SDElement c = sd.element(z(1, 2, 2), 0);
    CHECK_FALSE(sd_membership_witness(sd, c, a).has_value());
}

TEST_CASE("bounded witnesses stay inside their box") {
    SemidirectRing sd = SemidirectRing::create(zero_mult_data());
    SDElement a = sd.element(z(1, 2, 2), 1);
    SDElement b = sd.element(z(1, 2, 2), 2);

    auto w = sd_bounded_witness(sd, a, b, 4, 10);
    REQUIRE(w.has_value());
    CHECK_EQ(sd.eval(*w, a), b);
    CHECK(w->degree() <= 4);
    for (const auto& c : w->coeffs()) CHECK(abs(c) <= 10);

    // no degree-0 witness can produce a fractional z-part
    CHECK_FALSE(sd_bounded_witness(sd, a, b, 0, 1000).has_value());
}

TEST_CASE("canonicalize lands on the squarefree representative") {
    SemidirectRing sd = SemidirectRing::create(zero_mult_data());

    SDElement deep = sd.element(z(3, 4, 2), 1);
    CanonicalizeResult res = canonicalize(sd, deep);
    CHECK_EQ(res.canonical.z.value(), mpq_class(1, 2));
    CHECK_EQ(sd.eval(res.to_canonical, deep), res.canonical);
    CHECK_EQ(sd.eval(res.from_canonical, res.canonical), deep);

    SDElement integral = sd.element(z(5, 1, 2), 2);
    CanonicalizeResult res2 = canonicalize(sd, integral);
    CHECK_EQ(res2.canonical.z.value(), 1);
    CHECK_EQ(sd.eval(res2.to_canonical, integral), res2.canonical);
    CHECK_EQ(sd.eval(res2.from_canonical, res2.canonical), integral);

    // already canonical: the chain is trivial
    SDElement fixed = sd.element(z(1, 2, 2), 1);
    CanonicalizeResult res3 = canonicalize(sd, fixed);
    CHECK_EQ(res3.canonical, fixed);
    CHECK_EQ(sd.eval(res3.to_canonical, fixed), fixed);
}

TEST_CASE("the direct-product presentation compresses to three classes") {
    SemidirectRing sd = SemidirectRing::create(direct_product_data());
    Lambda1SDResult res = lambda1_semidirect(sd);
    CHECK_EQ(res.candidates.size(), 4);  // 2 subset products x 2 ideal elements
    CHECK_EQ(res.graph.vertex_count(), 3);
    CHECK(is_complete_with_loops(res.graph));
    CHECK(res.unresolved.empty());
    REQUIRE_EQ(res.merges.size(), 1);
    const SDMerge& m = res.merges[0];
    CHECK_EQ(res.candidates[m.to].z.value(), mpq_class(1, 2));
    CHECK_EQ(res.candidates[m.from].z.value(), mpq_class(1, 2));
    CHECK_EQ(res.vertex_of[m.from], res.vertex_of[m.to]);
    // both witnesses verify
    CHECK_EQ(sd.eval(m.forward, res.candidates[m.from]), res.candidates[m.to]);
    CHECK_EQ(sd.eval(m.backward, res.candidates[m.to]), res.candidates[m.from]);
}

TEST_CASE("the zero-multiplication presentation compresses to four classes") {
    SemidirectRing sd = SemidirectRing::create(zero_mult_data());
    Lambda1SDResult res = lambda1_semidirect(sd);
    CHECK_EQ(res.candidates.size(), 6);
    CHECK_EQ(res.graph.vertex_count(), 4);
    CHECK(is_complete_with_loops(res.graph));
    CHECK(res.unresolved.empty());
    CHECK_EQ(res.merges.size(), 2);
}

TEST_CASE("degree-0 bounds leave fractional merges unresolved") {
    Config cfg = Config::defaults();
    cfg.merge_degree = 0;
    SemidirectRing sd = SemidirectRing::create(direct_product_data(), cfg);
    Lambda1SDResult res = lambda1_semidirect(sd, cfg);
    CHECK_EQ(res.graph.vertex_count(), 4);  // nothing merged
    REQUIRE_EQ(res.unresolved.size(), 1);
    CHECK(res.merges.empty());
    CHECK_FALSE(res.unresolved[0].reason.empty());
}

TEST_CASE("the triangular ideal gives the tight eight-vertex graph") {
    SemidirectRing sd = SemidirectRing::create(t2_data());
    Lambda1SDResult res = lambda1_semidirect(sd);
    CHECK_EQ(res.candidates.size(), 8);
    CHECK_EQ(res.graph.vertex_count(), 8);
    CHECK(res.merges.empty());
    CHECK(res.unresolved.empty());
    CompressedGraph expected = join_graphs(complete_with_loops(2),
                                           disjoint_union(3, complete_with_loops(2)));
    CHECK_EQ(isomorphic(res.graph, expected).status, IsoStatus::isomorphic);
}

TEST_CASE("candidate counts respect the graph budget") {
    Config cfg = Config::defaults();
    cfg.graph_order_limit = 3;
    SemidirectRing sd = SemidirectRing::create(direct_product_data(), cfg);
    CHECK_THROWS_AS(lambda1_semidirect(sd, cfg), BudgetError);  // 4 candidates > 3
}

TEST_CASE("lambda1 reports serialize") {
    SemidirectRing sd = SemidirectRing::create(direct_product_data());
    Lambda1SDResult res = lambda1_semidirect(sd);
    nlohmann::json j = nlohmann::json::parse(lambda1_report_json(res));
    REQUIRE(j.contains("graph"));
    CHECK_EQ(j["candidates"].size(), 4);
    CHECK_EQ(j["merges"].size(), 1);
    CHECK_EQ(j["unresolved"].size(), 0);
    CHECK_EQ(j["vertices"], 3);
    CHECK(j["merges"][0].contains("forward"));
}
