#include "ringlab/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace ringlab {

bool CompressedGraph::has_edge(std::uint32_t i, std::uint32_t j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

bool CompressedGraph::has_loop(std::uint32_t i) const {
    return std::binary_search(loops.begin(), loops.end(), i);
}

void CompressedGraph::add_edge(std::uint32_t i, std::uint32_t j) {
    if (i == j)
        loops.push_back(i);
    else
        edges.emplace_back(std::min(i, j), std::max(i, j));
}

void CompressedGraph::normalize() {
    std::uint32_t n = vertex_count();
    for (auto& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.second >= n) throw PreconditionError("edge endpoint out of range");
        if (e.first == e.second) {
            loops.push_back(e.first);
            e = {UINT32_MAX, UINT32_MAX};  // drop below
        }
    }
    std::erase_if(edges, [](const auto& e) { return e.first == UINT32_MAX; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto l : loops)
        if (l >= n) throw PreconditionError("loop vertex out of range");
    std::sort(loops.begin(), loops.end());
    loops.erase(std::unique(loops.begin(), loops.end()), loops.end());
}

std::vector<std::uint32_t> CompressedGraph::degrees() const {
    std::vector<std::uint32_t> d(vertex_count(), 0);
    for (const auto& e : edges) {
        ++d[e.first];
        ++d[e.second];
    }
    return d;
}

CompressedGraph complete_with_loops(std::uint32_t n) {
    CompressedGraph g;
    g.vertex_labels.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) g.vertex_labels.push_back(std::to_string(i));
    for (std::uint32_t i = 0; i < n; ++i) {
        g.loops.push_back(i);
        for (std::uint32_t j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    }
    g.normalize();
    return g;
}

CompressedGraph join_graphs(const CompressedGraph& g, const CompressedGraph& h) {
    CompressedGraph out;
    std::uint32_t off = g.vertex_count();
    for (const auto& l : g.vertex_labels) out.vertex_labels.push_back("L:" + l);
    for (const auto& l : h.vertex_labels) out.vertex_labels.push_back("R:" + l);
    out.edges = g.edges;
    for (const auto& e : h.edges) out.edges.emplace_back(e.first + off, e.second + off);
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i)
        for (std::uint32_t j = 0; j < h.vertex_count(); ++j) out.edges.emplace_back(i, j + off);
    out.loops = g.loops;
    for (auto l : h.loops) out.loops.push_back(l + off);
    out.normalize();
    return out;
}

CompressedGraph disjoint_union(std::uint32_t t, const CompressedGraph& g) {
    CompressedGraph out;
    std::uint32_t n = g.vertex_count();
    for (std::uint32_t c = 0; c < t; ++c) {
        std::uint32_t off = c * n;
        for (const auto& l : g.vertex_labels)
            out.vertex_labels.push_back(std::to_string(c) + ":" + l);
        for (const auto& e : g.edges) out.edges.emplace_back(e.first + off, e.second + off);
        for (auto l : g.loops) out.loops.push_back(l + off);
    }
    out.normalize();
    return out;
}

bool is_complete_with_loops(const CompressedGraph& g) {
    std::uint64_t n = g.vertex_count();
    return g.loops.size() == n && g.edges.size() == n * (n - 1) / 2;
}

// ----------------------------------------------------------- isomorphism

namespace {

struct AdjView {
    std::vector<std::uint64_t> rows;  // n <= 64: one mask per vertex
    std::uint64_t loop_mask = 0;
    std::uint32_t n = 0;

    explicit AdjView(const CompressedGraph& g) : n(g.vertex_count()) {
        rows.assign(n, 0);
        for (const auto& e : g.edges) {
            rows[e.first] |= 1ull << e.second;
            rows[e.second] |= 1ull << e.first;
        }
        for (auto l : g.loops) loop_mask |= 1ull << l;
    }
    bool edge(std::uint32_t i, std::uint32_t j) const { return (rows[i] >> j) & 1; }
    bool loop(std::uint32_t i) const { return (loop_mask >> i) & 1; }
};

// Iterated neighborhood refinement.  Color ids are assigned in sorted key
// order so that two isomorphic graphs get identical ids for corresponding
// classes regardless of vertex numbering.
std::vector<std::uint32_t> refine_colors(const AdjView& a) {
    std::vector<std::uint32_t> color(a.n);
    {
        using Key = std::pair<bool, std::uint32_t>;
        std::vector<Key> keys(a.n);
        std::map<Key, std::uint32_t> palette;
        for (std::uint32_t v = 0; v < a.n; ++v) {
            keys[v] = {a.loop(v), static_cast<std::uint32_t>(__builtin_popcountll(a.rows[v]))};
            palette.emplace(keys[v], 0);
        }
        std::uint32_t id = 0;
        for (auto& entry : palette) entry.second = id++;
        for (std::uint32_t v = 0; v < a.n; ++v) color[v] = palette.at(keys[v]);
    }
    for (std::uint32_t round = 0; round < a.n; ++round) {
        using Key = std::pair<std::uint32_t, std::vector<std::uint32_t>>;
        std::vector<Key> keys(a.n);
        std::map<Key, std::uint32_t> palette;
        for (std::uint32_t v = 0; v < a.n; ++v) {
            std::vector<std::uint32_t> sig;
            for (std::uint32_t u = 0; u < a.n; ++u)
                if (a.edge(v, u)) sig.push_back(color[u]);
            std::sort(sig.begin(), sig.end());
            keys[v] = {color[v], std::move(sig)};
            palette.emplace(keys[v], 0);
        }
        std::uint32_t id = 0;
        for (auto& entry : palette) entry.second = id++;
        std::vector<std::uint32_t> next(a.n);
        for (std::uint32_t v = 0; v < a.n; ++v) next[v] = palette.at(keys[v]);
        bool changed = next != color;
        color = std::move(next);
        if (!changed) break;
    }
    return color;
}

std::map<std::uint32_t, std::uint32_t> color_histogram(const std::vector<std::uint32_t>& c) {
    std::map<std::uint32_t, std::uint32_t> h;
    for (auto x : c) ++h[x];
    return h;
}

struct Backtracker {
    const AdjView& ga;
    const AdjView& ha;
    const std::vector<std::uint32_t>& gc;
    const std::vector<std::uint32_t>& hc;
    std::vector<std::uint32_t> order;    // g vertices, small color classes first
    std::vector<std::uint32_t> mapping;  // g -> h or UINT32_MAX
    std::uint64_t used = 0;              // bitmask of taken h vertices
    std::uint64_t steps = 0;
    static constexpr std::uint64_t step_budget = 10'000'000;
    bool exhausted = false;

    bool consistent(std::uint32_t gv, std::uint32_t hv, std::size_t placed) const {
        if (gc[gv] != hc[hv]) return false;
        if (ga.loop(gv) != ha.loop(hv)) return false;
        for (std::size_t i = 0; i < placed; ++i) {
            std::uint32_t gu = order[i];
            if (ga.edge(gv, gu) != ha.edge(hv, mapping[gu])) return false;
        }
        return true;
    }

    bool search(std::size_t idx) {
        if (++steps > step_budget) {
            exhausted = true;
            return false;
        }
        if (idx == order.size()) return true;
        std::uint32_t gv = order[idx];
        for (std::uint32_t hv = 0; hv < ha.n; ++hv) {
            if ((used >> hv) & 1) continue;
            if (!consistent(gv, hv, idx)) continue;
            mapping[gv] = hv;
            used |= 1ull << hv;
            if (search(idx + 1)) return true;
            if (exhausted) return false;
            used &= ~(1ull << hv);
            mapping[gv] = UINT32_MAX;
        }
        return false;
    }
};

}  // namespace

IsoResult isomorphic(const CompressedGraph& g, const CompressedGraph& h, const Config& cfg) {
    IsoResult out;
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() ||
        g.loops.size() != h.loops.size()) {
        out.status = IsoStatus::not_isomorphic;
        return out;
    }
    if (g.vertex_count() > cfg.iso_vertex_limit || g.vertex_count() > 64) {
        out.status = IsoStatus::undecided;
        return out;
    }
    if (g.vertex_count() == 0) {
        out.status = IsoStatus::isomorphic;
        out.mapping = std::vector<std::uint32_t>{};
        return out;
    }
    AdjView ga(g), ha(h);
    auto gc = refine_colors(ga), hc = refine_colors(ha);
    if (color_histogram(gc) != color_histogram(hc)) {
        out.status = IsoStatus::not_isomorphic;
        return out;
    }
    Backtracker bt{ga, ha, gc, hc, {}, {}, 0, 0, false};
    bt.order.resize(g.vertex_count());
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) bt.order[v] = v;
    auto hist = color_histogram(gc);
    std::stable_sort(bt.order.begin(), bt.order.end(), [&](std::uint32_t x, std::uint32_t y) {
        return hist[gc[x]] < hist[gc[y]];
    });
    bt.mapping.assign(g.vertex_count(), UINT32_MAX);
    if (bt.search(0)) {
        out.status = IsoStatus::isomorphic;
        out.mapping = bt.mapping;
    } else if (bt.exhausted) {
        out.status = IsoStatus::undecided;  // step budget ran out: report, don't guess
    } else {
        out.status = IsoStatus::not_isomorphic;
    }
    return out;
}

// ---------------------------------------------------------- serialization

std::string emit_json(const CompressedGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertex_labels;
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges) j["edges"].push_back({e.first, e.second});
    j["loops"] = g.loops;
    return j.dump(2) + "\n";
}

std::string emit_dot(const CompressedGraph& g) {
    auto escape = [](const std::string& s) {
        std::string out;
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out;
    };
    std::ostringstream out;
    out << "graph G {\n";
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        out << "  v" << v << " [label=\"" << escape(g.vertex_labels[v]) << "\"];\n";
    // one sorted stream of edges, loops as self-edges
    std::vector<std::pair<std::uint32_t, std::uint32_t>> all = g.edges;
    for (auto l : g.loops) all.emplace_back(l, l);
    std::sort(all.begin(), all.end());
    for (const auto& e : all) out << "  v" << e.first << " -- v" << e.second << ";\n";
    out << "}\n";
    return out.str();
}

std::string emit(const CompressedGraph& g, const std::string& format) {
    if (format == "json") return emit_json(g);
    if (format == "dot") return emit_dot(g);
    throw ParseError("unknown graph format '" + format + "' (expected dot or json)");
}

CompressedGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
    CompressedGraph g;
    try {
        g.vertex_labels = j.at("vertices").get<std::vector<std::string>>();
        for (const auto& e : j.at("edges")) {
            if (e.size() != 2) throw ParseError("graph edge must be a pair");
            g.edges.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
        }
        g.loops = j.at("loops").get<std::vector<std::uint32_t>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
    try {
        g.normalize();
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
    return g;
}

}  // namespace ringlab
