#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/graph.hpp"
#include "ringlab/localized.hpp"
#include "ringlab/polynomial.hpp"

using namespace ringlab;

TEST_CASE("localized rationals reduce and carry their modulus") {
    LocalizedRational a(mpq_class(6, 4), 6);
    CHECK_EQ(a.num(), 3);
    CHECK_EQ(a.den(), 2);
    CHECK_EQ(a.modulus(), 6);
    CHECK_EQ(a.str(), "3/2@6");
    CHECK_FALSE(a.is_integer());

    LocalizedRational b(mpq_class(4, 2), 6);
    CHECK(b.is_integer());
    CHECK_EQ(b.str(), "2@6");
}

TEST_CASE("denominators must divide a power of the modulus") {
    CHECK_THROWS_AS(LocalizedRational(mpq_class(1, 3), 2), PreconditionError);
    CHECK_THROWS_AS(LocalizedRational(mpq_class(1, 2), 1), PreconditionError);
    CHECK_NOTHROW(LocalizedRational(mpq_class(5, 12), 6));
    CHECK_NOTHROW(LocalizedRational(mpq_class(1, 8), 2));
    CHECK_THROWS_AS(LocalizedRational(mpq_class(1, 2), 0), PreconditionError);
}

TEST_CASE("parsing") {
    LocalizedRational a = LocalizedRational::parse("5/12@6");
    CHECK_EQ(a.num(), 5);
    CHECK_EQ(a.den(), 12);
    CHECK_EQ(a.modulus(), 6);

    LocalizedRational b = LocalizedRational::parse("3@6");
    CHECK(b.is_integer());

    LocalizedRational c = LocalizedRational::parse("-7/2@2");
    CHECK_EQ(c.num(), -7);

    CHECK_THROWS_AS(LocalizedRational::parse("5/12"), ParseError);
    CHECK_THROWS_AS(LocalizedRational::parse("x@6"), ParseError);
    CHECK_THROWS_AS(LocalizedRational::parse(""), ParseError);
}

TEST_CASE("arithmetic stays in the localization") {
    LocalizedRational a = LocalizedRational::parse("1/2@6");
    LocalizedRational b = LocalizedRational::parse("1/3@6");
    CHECK_EQ((a + b).str(), "5/6@6");
    CHECK_EQ((a - b).str(), "1/6@6");
    CHECK_EQ((a * b).str(), "1/6@6");
    CHECK_EQ((-a).str(), "-1/2@6");

    LocalizedRational other = LocalizedRational::parse("1/2@2");
    CHECK_THROWS_AS((void)(a + other), PreconditionError);
}

TEST_CASE("prime support") {
    CHECK_EQ(prime_support(1), std::vector<mpz_class>{});
    CHECK_EQ(prime_support(12), std::vector<mpz_class>{2, 3});
    CHECK_EQ(prime_support(210), std::vector<mpz_class>{2, 3, 5, 7});
    CHECK_EQ(prime_support(64), std::vector<mpz_class>{2});
    CHECK_THROWS_AS(prime_support(0), PreconditionError);
}

TEST_CASE("class representatives are squarefree unit fractions") {
    CHECK_EQ(class_representative(LocalizedRational::parse("5/12@6")).str(), "1/6@6");
    CHECK_EQ(class_representative(LocalizedRational::parse("3/2@6")).str(), "1/2@6");
    CHECK_EQ(class_representative(LocalizedRational::parse("7@6")).str(), "1@6");
    CHECK_EQ(class_representative(LocalizedRational::parse("0@6")).str(), "1@6");
    CHECK_EQ(class_representative(LocalizedRational::parse("-5/27@6")).str(), "1/3@6");
}

TEST_CASE("membership witnesses exist exactly for compatible denominators") {
    LocalizedRational half = LocalizedRational::parse("1/2@2");

    auto w = membership_witness(half, LocalizedRational::parse("3/4@2"));
    REQUIRE(w.has_value());
    CHECK_EQ(w->eval(half.value()), mpq_class(3, 4));

    auto loop = membership_witness(half, half);
    REQUIRE(loop.has_value());
    CHECK_EQ(loop->eval(half.value()), mpq_class(1, 2));

    // integers generate only integers
    LocalizedRational three = LocalizedRational::parse("3@6");
    CHECK_FALSE(membership_witness(three, LocalizedRational::parse("1/2@6")).has_value());
    auto five = membership_witness(three, LocalizedRational::parse("5@6"));
    REQUIRE(five.has_value());
    CHECK_EQ(five->eval(mpq_class(3)), 5);
}

TEST_CASE("witnesses across mixed denominators") {
    LocalizedRational a = LocalizedRational::parse("5/6@6");
    auto w = membership_witness(a, LocalizedRational::parse("1/6@6"));
    REQUIRE(w.has_value());
    CHECK_EQ(w->eval(a.value()), mpq_class(1, 6));

    // 1/2 generates no element whose denominator needs the prime 3
    LocalizedRational b = LocalizedRational::parse("1/2@6");
    CHECK_FALSE(membership_witness(b, LocalizedRational::parse("1/3@6")).has_value());
    CHECK_FALSE(membership_witness(b, LocalizedRational::parse("1/6@6")).has_value());
    // but 1/6 generates 1/2
    LocalizedRational c = LocalizedRational::parse("1/6@6");
    auto up = membership_witness(c, b);
    REQUIRE(up.has_value());
    CHECK_EQ(up->eval(c.value()), mpq_class(1, 2));

    CHECK_THROWS_AS((void)membership_witness(b, LocalizedRational::parse("1/2@2")),
                    PreconditionError);
}

TEST_CASE("requested bounds are advisory, results are verified") {
    LocalizedRational half = LocalizedRational::parse("1/2@2");
    // force tiny bounds; the search may exceed them but must stay correct
    auto w = membership_witness(half, LocalizedRational::parse("129/64@2"), 0, 1);
    REQUIRE(w.has_value());
    CHECK_EQ(w->eval(mpq_class(1, 2)), mpq_class(129, 64));
}

TEST_CASE("unital graphs of localizations are complete with loops") {
    CompressedGraph g1 = lambda1_localized(1);
    CHECK_EQ(g1.vertex_count(), 1);
    CHECK_EQ(g1.vertex_labels[0], "1");

    CompressedGraph g12 = lambda1_localized(12);
    CHECK_EQ(g12.vertex_count(), 4);
    CHECK(is_complete_with_loops(g12));
    CHECK_EQ(g12.vertex_labels,
             std::vector<std::string>{"1", "1/2", "1/3", "1/6"});

    struct Case {
        unsigned long m;
        std::uint32_t vertices;
    };
    for (Case c : {Case{1, 1}, Case{2, 2}, Case{6, 4}, Case{12, 4}, Case{30, 8}, Case{210, 16}}) {
        CompressedGraph g = lambda1_localized(c.m);
        CHECK_EQ(g.vertex_count(), c.vertices);
        CHECK(is_complete_with_loops(g));
    }
}

TEST_CASE("localization graphs respect the subset budget") {
    Config cfg = Config::defaults();
    cfg.graph_order_limit = 8;
    CHECK_THROWS_AS(lambda1_localized(210, cfg), BudgetError);  // 2^4 = 16 > 8
    CHECK_NOTHROW(lambda1_localized(30, cfg));
}

TEST_CASE("divisor counts") {
    CHECK_EQ(divisor_count(1), 1);
    CHECK_EQ(divisor_count(2), 2);
    CHECK_EQ(divisor_count(12), 6);
    CHECK_EQ(divisor_count(64), 7);
    CHECK_EQ(divisor_count(210), 16);
    CHECK_THROWS_AS(divisor_count(0), PreconditionError);
}
