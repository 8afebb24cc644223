#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/graph.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// Sorted, duplicate-free element ids.
using ElementSet = std::vector<Elem>;

enum class GenMode { nonunital, unital };

// Subring generated by a: closure of {a} (plus the identity in unital mode)
// under addition, negation and multiplication, computed by a worklist sweep.
// Unital mode on a ring without identity is an error.
ElementSet generated_subring(const Ring& r, Elem a, GenMode mode);

struct GeneratedClass {
    Elem representative;  // least element id in the class
    ElementSet members;   // elements generating the same subring
    ElementSet subring;   // the subring they all generate
};

// Elements grouped by the subring they generate; classes ordered by
// representative id.
struct ClassPartition {
    Ring ring;
    GenMode mode = GenMode::nonunital;
    std::vector<GeneratedClass> classes;
    std::vector<std::uint32_t> class_of;  // element id -> class index
};

ClassPartition compress_classes(const Ring& r, GenMode mode,
                                const Config& cfg = Config::defaults());

// Vertices = classes labeled by their generated subring; an edge joins two
// classes iff their representatives commute; every vertex carries a loop.
CompressedGraph graph_of_partition(const ClassPartition& p);
CompressedGraph compressed_commuting_graph(const Ring& r, GenMode mode,
                                           const Config& cfg = Config::defaults());

std::string partition_json(const ClassPartition& p);

// "{0,2,4}"
std::string element_set_label(const ElementSet& s);

// All unital subrings reachable as joins of one-generated ones: start from
// the distinct <a>_1, repeatedly close unions of pairs until fixpoint.  The
// join counter caps at cfg.lattice_join_limit; hitting the cap yields a
// partial list with complete = false.
struct UnitalLattice {
    std::vector<ElementSet> subrings;  // sorted by (size, members)
    bool complete = true;
};

UnitalLattice unital_subring_lattice(const Ring& r, const Config& cfg = Config::defaults());

}  // namespace ringlab
