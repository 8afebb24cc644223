#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "ringlab/config.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/ringspec.hpp"

using namespace ringlab;

TEST_CASE("atomic specs") {
    CHECK_EQ(parse_ring_spec("z:6").order(), 6);
    CHECK_EQ(parse_ring_spec("z:1").order(), 1);
    CHECK_EQ(parse_ring_spec("zmul:5").order(), 5);
    CHECK_FALSE(parse_ring_spec("zmul:5").is_unital());
    CHECK_EQ(parse_ring_spec("gf:2:3").order(), 8);
    CHECK_EQ(parse_ring_spec("gf:3:2").order(), 9);
}

TEST_CASE("matrix specs parse the base spec greedily, then the size") {
    Ring t2 = parse_ring_spec("tri:gf:2:1:2");
    CHECK_EQ(t2.order(), 8);
    CHECK_EQ(t2.characteristic(), 2);

    // base gf:2:2 = GF(4), so this is the 2x2 triangular ring over GF(4)
    Ring t2f4 = parse_ring_spec("tri:gf:2:2:2");
    CHECK_EQ(t2f4.order(), 64);
    CHECK_EQ(t2f4.characteristic(), 2);

    Ring m2 = parse_ring_spec("mat:gf:2:1:2");
    CHECK_EQ(m2.order(), 16);
    CHECK_EQ(m2.mul(1, 2) == m2.mul(2, 1), false);

    Ring m2z4 = parse_ring_spec("mat:z:4:2");
    CHECK_EQ(m2z4.order(), 256);
    CHECK_EQ(m2z4.characteristic(), 4);
}

TEST_CASE("product specs") {
    Ring p = parse_ring_spec("prod:z:2,gf:2:2");
    CHECK_EQ(p.order(), 8);
    CHECK_EQ(p.characteristic(), 2);
    CHECK(p.is_unital());

    Ring q = parse_ring_spec("prod:z:2,prod:z:3,z:5");
    CHECK_EQ(q.order(), 30);
    CHECK_EQ(q.characteristic(), 30);
}

TEST_CASE("table specs read a JSON file; the path ends at a comma") {
    std::string path = "ringspec_z2_table.json";
    {
        std::ofstream out(path);
        out << R"({"order": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]], "identity": 1})";
    }
    Ring r = parse_ring_spec("table:" + path);
    CHECK_EQ(r.order(), 2);
    CHECK(r.is_unital());

    Ring p = parse_ring_spec("prod:table:" + path + ",z:3");
    CHECK_EQ(p.order(), 6);

    std::remove(path.c_str());
    CHECK_THROWS_AS(parse_ring_spec("table:" + path), ParseError);
}

TEST_CASE("malformed specs are parse errors") {
    CHECK_THROWS_AS(parse_ring_spec(""), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("z"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("z:"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("nosuch:1"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("gf:2"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("z:4junk"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("prod:z:2"), ParseError);
}

TEST_CASE("semantic violations surface from the constructors") {
    CHECK_THROWS_AS(parse_ring_spec("z:0"), PreconditionError);
    CHECK_THROWS_AS(parse_ring_spec("gf:4:2"), PreconditionError);
    CHECK_THROWS_AS(parse_ring_spec("mat:zmul:2:2"), PreconditionError);
    CHECK_THROWS_AS(parse_ring_spec("z:2000000"), BudgetError);
}

TEST_CASE("descriptors are readable") {
    CHECK_FALSE(parse_ring_spec("z:6").descriptor().empty());
    CHECK_FALSE(parse_ring_spec("tri:gf:2:1:2").descriptor().empty());
}
