#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/graph.hpp"

using namespace ringlab;

namespace {

CompressedGraph cycle(std::uint32_t n) {
    CompressedGraph g;
    for (std::uint32_t i = 0; i < n; ++i) g.vertex_labels.push_back(std::to_string(i));
    for (std::uint32_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    g.normalize();
    return g;
}

}  // namespace

TEST_CASE("edges are stored small endpoint first; i == j becomes a loop") {
    CompressedGraph g;
    g.vertex_labels = {"a", "b", "c"};
    g.add_edge(2, 0);
    g.add_edge(1, 1);
    g.normalize();
    CHECK_EQ(g.edges, std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 2}});
    CHECK_EQ(g.loops, std::vector<std::uint32_t>{1});
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.has_loop(1));
    CHECK_FALSE(g.has_loop(0));
}

TEST_CASE("normalize dedupes and validates") {
    CompressedGraph g;
    g.vertex_labels = {"a", "b"};
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    g.add_edge(0, 0);
    g.add_edge(0, 0);
    g.normalize();
    CHECK_EQ(g.edge_count(), 1);
    CHECK_EQ(g.loops.size(), 1);

    CompressedGraph bad;
    bad.vertex_labels = {"a"};
    bad.edges.push_back({0, 3});
    CHECK_THROWS_AS(bad.normalize(), PreconditionError);
}

TEST_CASE("complete graphs with loops") {
    CompressedGraph k4 = complete_with_loops(4);
    CHECK_EQ(k4.vertex_count(), 4);
    CHECK_EQ(k4.edge_count(), 6);
    CHECK_EQ(k4.loops.size(), 4);
    CHECK_EQ(k4.vertex_labels[3], "3");
    CHECK(is_complete_with_loops(k4));

    CHECK_EQ(complete_with_loops(0).vertex_count(), 0);
    CHECK(is_complete_with_loops(complete_with_loops(0)));
    CHECK(is_complete_with_loops(complete_with_loops(1)));
}

TEST_CASE("is_complete_with_loops rejects near misses") {
    CompressedGraph g = complete_with_loops(3);
    g.loops.erase(g.loops.begin());
    CHECK_FALSE(is_complete_with_loops(g));

    CompressedGraph h = complete_with_loops(3);
    h.edges.erase(h.edges.begin());
    CHECK_FALSE(is_complete_with_loops(h));
}

TEST_CASE("join adds all cross edges and keeps loops") {
    CompressedGraph left = complete_with_loops(2);
    CompressedGraph right = disjoint_union(3, complete_with_loops(2));
    CHECK_EQ(right.vertex_count(), 6);
    CHECK_EQ(right.edge_count(), 3);
    CHECK_EQ(right.loops.size(), 6);

    CompressedGraph j = join_graphs(left, right);
    CHECK_EQ(j.vertex_count(), 8);
    // 1 (left) + 3 (right) + 2*6 (cross)
    CHECK_EQ(j.edge_count(), 16);
    CHECK_EQ(j.loops.size(), 8);
    CHECK_EQ(j.vertex_labels[0].substr(0, 2), "L:");
    CHECK_EQ(j.vertex_labels[2].substr(0, 2), "R:");
}

TEST_CASE("degrees ignore loops") {
    CompressedGraph g = complete_with_loops(3);
    CHECK_EQ(g.degrees(), std::vector<std::uint32_t>{2, 2, 2});
}

TEST_CASE("isomorphism finds a certificate") {
    CompressedGraph c4 = cycle(4);
    CompressedGraph c4r;
    c4r.vertex_labels = {"w", "x", "y", "z"};
    // same 4-cycle under the permutation 0->2, 1->0, 2->3, 3->1
    c4r.add_edge(2, 0);
    c4r.add_edge(0, 3);
    c4r.add_edge(3, 1);
    c4r.add_edge(1, 2);
    c4r.normalize();

    IsoResult res = isomorphic(c4, c4r);
    REQUIRE_EQ(res.status, IsoStatus::isomorphic);
    REQUIRE(res.mapping.has_value());
    const auto& f = *res.mapping;
    for (std::uint32_t i = 0; i < 4; ++i)
        for (std::uint32_t j = 0; j < 4; ++j)
            CHECK_EQ(c4.has_edge(i, j), c4r.has_edge(f[i], f[j]));
}

TEST_CASE("isomorphism distinguishes shapes and loops") {
    CompressedGraph path;
    path.vertex_labels = {"0", "1", "2", "3"};
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    path.normalize();
    CHECK_EQ(isomorphic(cycle(4), path).status, IsoStatus::not_isomorphic);

    CompressedGraph k2_loops = complete_with_loops(2);
    CompressedGraph k2_plain;
    k2_plain.vertex_labels = {"0", "1"};
    k2_plain.add_edge(0, 1);
    k2_plain.normalize();
    CHECK_EQ(isomorphic(k2_loops, k2_plain).status, IsoStatus::not_isomorphic);

    CHECK_EQ(isomorphic(cycle(3), cycle(4)).status, IsoStatus::not_isomorphic);
}

TEST_CASE("labels do not matter for isomorphism") {
    CompressedGraph a = complete_with_loops(3);
    CompressedGraph b = complete_with_loops(3);
    b.vertex_labels = {"x", "y", "z"};
    CHECK_EQ(isomorphic(a, b).status, IsoStatus::isomorphic);
}

TEST_CASE("oversized inputs come back undecided") {
    Config cfg = Config::defaults();
    cfg.iso_vertex_limit = 4;
    CHECK_EQ(isomorphic(cycle(5), cycle(5), cfg).status, IsoStatus::undecided);
    CHECK_EQ(isomorphic(cycle(4), cycle(4), cfg).status, IsoStatus::isomorphic);
    // mismatched vertex counts are decided without search
    CHECK_EQ(isomorphic(cycle(5), cycle(6), cfg).status, IsoStatus::not_isomorphic);
}

TEST_CASE("json round-trip") {
    CompressedGraph g = join_graphs(complete_with_loops(1), cycle(3));
    std::string text = emit_json(g);
    CompressedGraph back = parse_graph_json(text);
    CHECK_EQ(back.vertex_labels, g.vertex_labels);
    CHECK_EQ(back.edges, g.edges);
    CHECK_EQ(back.loops, g.loops);

    CHECK_THROWS_AS(parse_graph_json("{"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": ["a"], "edges": [[0]], "loops": []})"),
                    ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": ["a"], "edges": [[0, 7]], "loops": []})"),
                    ParseError);
}

TEST_CASE("dot output") {
    CompressedGraph g = complete_with_loops(2);
    g.vertex_labels = {"1", "1/2"};
    std::string dot = emit_dot(g);
    CHECK_EQ(dot.substr(0, 7), "graph G");
    CHECK(dot.find("v0 [label=\"1\"]") != std::string::npos);
    CHECK(dot.find("v1 [label=\"1/2\"]") != std::string::npos);
    CHECK(dot.find("v0 -- v1;") != std::string::npos);
    CHECK(dot.find("v0 -- v0;") != std::string::npos);
}

TEST_CASE("emit dispatches on the format name") {
    CompressedGraph g = complete_with_loops(2);
    CHECK_EQ(emit(g, "json"), emit_json(g));
    CHECK_EQ(emit(g, "dot"), emit_dot(g));
    CHECK_THROWS_AS(emit(g, "svg"), ParseError);
}
