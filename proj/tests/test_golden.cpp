#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "ringlab/graph.hpp"
#include "ringlab/localized.hpp"
#include "ringlab/ringspec.hpp"
#include "ringlab/subring.hpp"

using namespace ringlab;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream f(std::string(RINGLAB_GOLDEN_DIR) + "/" + name);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

}  // namespace

// The frozen files pin both the graph shape and the byte-level JSON
// encoding; any drift in either shows up as a diff here.
TEST_CASE("graphs match their frozen serializations") {
    CHECK_EQ(emit_json(compressed_commuting_graph(parse_ring_spec("z:4"), GenMode::nonunital)),
             slurp("z4_nonunital.json"));
    CHECK_EQ(emit_json(compressed_commuting_graph(parse_ring_spec("gf:2:6"), GenMode::unital)),
             slurp("gf64_unital.json"));
    CHECK_EQ(
        emit_json(compressed_commuting_graph(parse_ring_spec("tri:gf:2:1:2"), GenMode::nonunital)),
        slurp("t2_nonunital.json"));
    CHECK_EQ(
        emit_json(compressed_commuting_graph(parse_ring_spec("mat:gf:2:1:2"), GenMode::nonunital)),
        slurp("m2_nonunital.json"));
    CHECK_EQ(emit_json(lambda1_localized(30)), slurp("localized_30.json"));
}

TEST_CASE("frozen serializations parse back to the same graphs") {
    for (const char* name : {"z4_nonunital.json", "gf64_unital.json", "t2_nonunital.json",
                             "m2_nonunital.json", "localized_30.json"}) {
        CompressedGraph g = parse_graph_json(slurp(name));
        CHECK_EQ(emit_json(g), slurp(name));
    }
}
