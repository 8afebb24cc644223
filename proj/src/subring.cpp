#include "ringlab/subring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ringlab {

namespace {

// Closure of `seed` under add/neg/mul inside r.  Each element is combined
// with every earlier member exactly once.
ElementSet close_under_ops(const Ring& r, std::vector<Elem> seed) {
    std::vector<bool> in(r.order(), false);
    std::vector<Elem> members;
    std::vector<Elem> frontier;
    auto push = [&](Elem x) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
            frontier.push_back(x);
        }
    };
    for (Elem s : seed) push(s);
    while (!frontier.empty()) {
        Elem x = frontier.back();
        frontier.pop_back();
        push(r.neg(x));
        // members may grow while we walk it; new entries get their own turn
        for (std::size_t i = 0; i < members.size(); ++i) {
            Elem y = members[i];
            push(r.add(x, y));
            push(r.mul(x, y));
            push(r.mul(y, x));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

ElementSet generated_subring(const Ring& r, Elem a, GenMode mode) {
    if (a >= r.order()) throw PreconditionError("element id out of range");
    std::vector<Elem> seed{r.zero(), a};
    if (mode == GenMode::unital) {
        if (!r.is_unital())
            throw PreconditionError("unital generation needs an identity in " + r.descriptor());
        seed.push_back(*r.identity());
    }
    return close_under_ops(r, std::move(seed));
}

ClassPartition compress_classes(const Ring& r, GenMode mode, const Config& cfg) {
    if (r.order() > cfg.graph_order_limit)
        throw BudgetError("compress_classes: " + r.descriptor() + " exceeds graph_order_limit (" +
                          std::to_string(cfg.graph_order_limit) + ")");
    ClassPartition p;
    p.ring = r;
    p.mode = mode;
    p.class_of.assign(r.order(), 0);
    std::map<ElementSet, std::vector<Elem>> by_subring;
    for (Elem a = 0; a < r.order(); ++a)
        by_subring[generated_subring(r, a, mode)].push_back(a);  // ids arrive sorted
    std::vector<const std::pair<const ElementSet, std::vector<Elem>>*> items;
    for (const auto& kv : by_subring) items.push_back(&kv);
    std::sort(items.begin(), items.end(),
              [](auto* x, auto* y) { return x->second.front() < y->second.front(); });
    for (std::size_t i = 0; i < items.size(); ++i) {
        GeneratedClass c;
        c.representative = items[i]->second.front();
        c.members = items[i]->second;
        c.subring = items[i]->first;
        for (Elem e : c.members) p.class_of[e] = static_cast<std::uint32_t>(i);
        p.classes.push_back(std::move(c));
    }
    return p;
}

CompressedGraph graph_of_partition(const ClassPartition& p) {
    CompressedGraph g;
    const Ring& r = p.ring;
    for (const auto& c : p.classes) g.vertex_labels.push_back(element_set_label(c.subring));
    for (std::uint32_t i = 0; i < p.classes.size(); ++i) {
        g.loops.push_back(i);  // an element always commutes with itself
        for (std::uint32_t j = i + 1; j < p.classes.size(); ++j) {
            Elem a = p.classes[i].representative, b = p.classes[j].representative;
            if (r.mul(a, b) == r.mul(b, a)) g.edges.emplace_back(i, j);
        }
    }
    g.normalize();
    return g;
}

CompressedGraph compressed_commuting_graph(const Ring& r, GenMode mode, const Config& cfg) {
    return graph_of_partition(compress_classes(r, mode, cfg));
}

std::string element_set_label(const ElementSet& s) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << "}";
    return out.str();
}

std::string partition_json(const ClassPartition& p) {
    nlohmann::json j;
    j["ring"] = p.ring.descriptor();
    j["mode"] = p.mode == GenMode::unital ? "unital" : "nonunital";
    j["classes"] = nlohmann::json::array();
    for (const auto& c : p.classes)
        j["classes"].push_back({{"representative", c.representative},
                                {"members", c.members},
                                {"subring", c.subring}});
    return j.dump(2) + "\n";
}

UnitalLattice unital_subring_lattice(const Ring& r, const Config& cfg) {
    if (!r.is_unital())
        throw PreconditionError("unital_subring_lattice needs an identity in " + r.descriptor());
    ClassPartition p = compress_classes(r, GenMode::unital, cfg);
    std::set<ElementSet> known;
    for (const auto& c : p.classes) known.insert(c.subring);

    UnitalLattice out;
    std::uint64_t joins = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<ElementSet> snapshot(known.begin(), known.end());
        for (std::size_t i = 0; i < snapshot.size() && out.complete; ++i) {
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                const auto& s = snapshot[i];
                const auto& t = snapshot[j];
                if (std::includes(s.begin(), s.end(), t.begin(), t.end()) ||
                    std::includes(t.begin(), t.end(), s.begin(), s.end()))
                    continue;  // nested: the join is the larger one, already known
                if (++joins > cfg.lattice_join_limit) {
                    out.complete = false;
                    break;
                }
                std::vector<Elem> seed;
                std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(seed));
                ElementSet closed = close_under_ops(r, std::move(seed));
                if (known.insert(std::move(closed)).second) grew = true;
            }
        }
        if (!out.complete) break;
    }
    out.subrings.assign(known.begin(), known.end());
    std::sort(out.subrings.begin(), out.subrings.end(), [](const ElementSet& a, const ElementSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace ringlab
