#include "ringlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "ringlab/graph.hpp"
#include "ringlab/integral.hpp"
#include "ringlab/localized.hpp"
#include "ringlab/ringspec.hpp"
#include "ringlab/subring.hpp"

namespace ringlab {

bool SuiteReport::all_pass() const {
    return std::all_of(items.begin(), items.end(),
                       [](const SuiteItem& it) { return it.status == "pass"; });
}

bool SuiteReport::any_unresolved() const {
    return std::any_of(items.begin(), items.end(),
                       [](const SuiteItem& it) { return it.status == "unresolved"; });
}

int SuiteReport::exit_code() const {
    bool failed = false, open = false;
    for (const SuiteItem& it : items) {
        failed = failed || it.status == "fail";
        open = open || it.status == "unresolved";
    }
    if (failed) return 1;
    if (open) return 4;
    return 0;
}

std::vector<Ring> corpus_rings(const Config& cfg) {
    std::vector<std::string> specs;
    for (int n = 1; n <= 16; ++n) specs.push_back("z:" + std::to_string(n));
    specs.insert(specs.end(), {"gf:2:2", "gf:2:3", "gf:3:2", "tri:gf:2:1:2", "mat:gf:2:1:2",
                               "prod:z:2,z:2", "prod:z:2,gf:2:2", "prod:z:3,z:3",
                               "prod:z:4,z:4"});
    std::vector<Ring> out;
    out.reserve(specs.size());
    for (const std::string& s : specs) out.push_back(parse_ring_spec(s, cfg));
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ms_since(Clock::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

bool iso(const CompressedGraph& g, const CompressedGraph& h, const Config& cfg) {
    return isomorphic(g, h, cfg).status == IsoStatus::isomorphic;
}

CompressedGraph t2_expected() {
    return join_graphs(complete_with_loops(2), disjoint_union(3, complete_with_loops(2)));
}

// ------------------------------------------------------------ paper items

SuiteItem finite_fields_item(const Config& cfg) {
    SuiteItem it{"finite-field-family", "pass", "", 0};
    const std::pair<std::uint64_t, std::uint32_t> cases[] = {
        {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 6}, {2, 8}, {3, 2}, {3, 4}, {5, 2}};
    std::ostringstream detail;
    for (auto [p, n] : cases) {
        auto start = Clock::now();
        Ring f = galois_field(p, n, cfg);
        std::uint32_t d = static_cast<std::uint32_t>(divisor_count(n));
        CompressedGraph unital = compressed_commuting_graph(f, GenMode::unital, cfg);
        CompressedGraph plain = compressed_commuting_graph(f, GenMode::nonunital, cfg);
        bool ok = iso(unital, complete_with_loops(d), cfg) &&
                  iso(plain, complete_with_loops(d + 1), cfg);
        std::uint64_t ms = ms_since(start);
        detail << "gf:" << p << ":" << n << "->K" << d << "/K" << d + 1
               << (ok ? " ok; " : " MISMATCH; ");
        if (!ok) it.status = "fail";
        if (ms >= 5000) {
            it.status = "fail";
            detail << "over 5s; ";
        }
    }
    it.detail = detail.str();
    return it;
}

SuiteItem matrix_rings_item(const Config& cfg) {
    SuiteItem it{"matrix-ring-examples", "pass", "", 0};
    std::ostringstream detail;
    auto start = Clock::now();
    Ring gf2 = galois_field(2, 1, cfg);
    CompressedGraph full = compressed_commuting_graph(matrix_ring(gf2, 2, MatrixShape::full, cfg),
                                                      GenMode::nonunital, cfg);
    bool ok_full = full.vertex_count() == 15;
    CompressedGraph tri = compressed_commuting_graph(
        matrix_ring(gf2, 2, MatrixShape::upper_triangular, cfg), GenMode::nonunital, cfg);
    bool ok_tri = tri.vertex_count() == 8 && iso(tri, t2_expected(), cfg);
    std::uint64_t ms = ms_since(start);
    detail << "mat 2x2: " << full.vertex_count() << " vertices; tri 2x2: " << tri.vertex_count()
           << " vertices, join shape " << (ok_tri ? "ok" : "MISMATCH");
    if (ms >= 5000) detail << "; over 5s";
    if (!ok_full || !ok_tri || ms >= 5000) it.status = "fail";
    it.detail = detail.str();
    return it;
}

SuiteItem localization_item(const Config& cfg) {
    SuiteItem it{"localization-vertex-counts", "pass", "", 0};
    std::ostringstream detail;
    for (unsigned long m : {1ul, 2ul, 6ul, 12ul, 30ul, 210ul}) {
        CompressedGraph g = lambda1_localized(mpz_class(m), cfg);
        std::uint64_t want = std::uint64_t{1} << prime_support(mpz_class(m)).size();
        detail << "m=" << m << ":" << g.vertex_count() << "; ";
        if (g.vertex_count() != want || !is_complete_with_loops(g)) it.status = "fail";
    }
    it.detail = detail.str();
    return it;
}

SuiteItem unitalization_item(const Config& cfg) {
    SuiteItem it{"unitalization-isomorphism", "pass", "", 0};
    std::ostringstream detail;
    auto start = Clock::now();
    std::size_t checked = 0;
    for (const Ring& r : corpus_rings(cfg)) {
        if (!check_prop_iso(r, cfg).holds) {
            it.status = "fail";
            detail << r.descriptor() << " MISMATCH; ";
        }
        ++checked;
    }
    std::uint64_t ms = ms_since(start);
    detail << checked << " rings checked";
    if (ms >= 60000) {
        it.status = "fail";
        detail << " (over 60s)";
    }
    it.detail = detail.str();
    return it;
}

SemidirectData direct_product_data(const Config& cfg) {
    SemidirectData d;
    d.m = 2;
    d.ideal = parse_ring_spec("z:2", cfg);
    d.e = 1;
    d.L = {0, 0};
    d.Rm = {0, 0};
    return d;
}

SemidirectData zero_mult_data(const Config& cfg) {
    SemidirectData d;
    d.m = 2;
    d.ideal = parse_ring_spec("zmul:3", cfg);
    d.e = 0;
    d.L = {0, 2, 1};
    d.Rm = {0, 2, 1};
    return d;
}

SemidirectData t2_tight_data(const Config& cfg) {
    SemidirectData d;
    d.m = 1;
    d.ideal = parse_ring_spec("tri:gf:2:1:2", cfg);
    d.e = *d.ideal.identity();
    d.L.assign(d.ideal.order(), 0);
    d.Rm.assign(d.ideal.order(), 0);
    return d;
}

SuiteItem semidirect_examples_item(const Config& cfg) {
    SuiteItem it{"semidirect-worked-examples", "pass", "", 0};
    std::ostringstream detail;
    bool open = false;
    auto run = [&](const char* name, const SemidirectData& data, std::uint32_t want) {
        SemidirectRing sd = SemidirectRing::create(data, cfg);
        Lambda1SDResult res = lambda1_semidirect(sd, cfg);
        detail << name << ": " << res.graph.vertex_count() << " vertices, " << res.merges.size()
               << " merges, " << res.unresolved.size() << " unresolved; ";
        for (const SDUnresolved& u : res.unresolved) {
            open = true;
            detail << res.candidates[u.first].str() << "~" << res.candidates[u.second].str()
                   << " open; ";
        }
        if (res.unresolved.empty() &&
            !(res.graph.vertex_count() == want && is_complete_with_loops(res.graph)))
            it.status = "fail";
    };
    run("direct-product", direct_product_data(cfg), 3);
    run("zero-mult", zero_mult_data(cfg), 4);
    if (it.status == "pass" && open) it.status = "unresolved";
    it.detail = detail.str();
    return it;
}

SuiteItem semidirect_bound_item(std::uint64_t seed, const Config& cfg) {
    SuiteItem it{"semidirect-vertex-bound", "pass", "", 0};
    std::ostringstream detail;
    std::mt19937_64 rng(seed);
    std::size_t worst_num = 0, worst_den = 1;
    for (int i = 0; i < 50; ++i) {
        SemidirectData d = random_semidirect_data(rng, cfg);
        SemidirectRing sd = SemidirectRing::create(d, cfg);
        Lambda1SDResult res = lambda1_semidirect(sd, cfg);
        std::uint64_t bound =
            (std::uint64_t{1} << prime_support(d.m).size()) * d.ideal.order();
        if (res.graph.vertex_count() > bound) {
            it.status = "fail";
            detail << "instance " << i << " (m=" << d.m.get_str() << ", "
                   << d.ideal.descriptor() << "): " << res.graph.vertex_count() << " > " << bound
                   << "; ";
        }
        if (res.graph.vertex_count() * worst_den > worst_num * bound) {
            worst_num = res.graph.vertex_count();
            worst_den = bound;
        }
    }
    SemidirectRing tight = SemidirectRing::create(t2_tight_data(cfg), cfg);
    Lambda1SDResult res = lambda1_semidirect(tight, cfg);
    bool tight_ok = res.graph.vertex_count() == 8 && iso(res.graph, t2_expected(), cfg);
    if (!tight_ok) it.status = "fail";
    detail << "50 instances within bound (worst " << worst_num << "/" << worst_den
           << "); tight instance: " << res.graph.vertex_count() << " vertices "
           << (tight_ok ? "ok" : "MISMATCH");
    it.detail = detail.str();
    return it;
}

SuiteItem integral_item(std::uint64_t seed, const Config& cfg) {
    SuiteItem it{"integral-annihilators", "pass", "", 0};
    std::ostringstream detail;

    Ring z4 = z_mod(4, cfg);
    IntPolynomial s4 = monic_annihilator(z4, 2, IntPolynomial::parse("0,2,1"), cfg);
    if (!(s4 == IntPolynomial::parse("0,2,1"))) {
        it.status = "fail";
        detail << "z:4 gave " << s4.str() << "; ";
    }
    Ring z6 = z_mod(6, cfg);
    IntPolynomial s6 = monic_annihilator(z6, 3, IntPolynomial::parse("0,3,1"), cfg);
    if (!(s6.is_monic() && s6.degree() <= 2 && z6.eval(s6, 3) == z6.zero())) {
        it.status = "fail";
        detail << "z:6 gave " << s6.str() << "; ";
    }

    std::mt19937_64 rng(seed);
    int good = 0;
    for (int i = 0; i < 100; ++i) {
        AnnihilationInstance inst = random_annihilation_instance(rng, cfg);
        IntPolynomial s = monic_annihilator(inst.ring, inst.a, inst.q, cfg);
        bool ok = s.is_monic() && inst.ring.eval(s, inst.a) == inst.ring.zero();
        if (ok) {
            ++good;
        } else {
            it.status = "fail";
            detail << "instance " << i << " (" << inst.ring.descriptor() << ", a=" << inst.a
                   << ", q=" << inst.q.str() << ") gave " << s.str() << "; ";
        }
    }
    detail << "z:4 -> " << s4.str() << "; z:6 -> " << s6.str() << "; " << good
           << "/100 seeded instances verified";
    it.detail = detail.str();
    return it;
}

SuiteItem lattice_item(const Config& cfg) {
    SuiteItem it{"subring-lattice-bound", "pass", "", 0};
    std::ostringstream detail;
    for (const Ring& r : corpus_rings(cfg)) {
        UnitalLattice lat = unital_subring_lattice(r, cfg);
        std::uint32_t v = compressed_commuting_graph(r, GenMode::unital, cfg).vertex_count();
        bool ok = lat.complete && (v >= 40 || lat.subrings.size() <= (std::uint64_t{1} << v));
        if (!ok) {
            it.status = "fail";
            detail << r.descriptor() << ": " << lat.subrings.size() << " subrings vs 2^" << v
                   << "; ";
        }
    }
    detail << "all corpus rings within 2^|V|";
    it.detail = detail.str();
    return it;
}

// ------------------------------------------------------- properties items

bool commutes(const Ring& r, Elem a, Elem b) { return r.mul(a, b) == r.mul(b, a); }

SuiteItem edge_well_defined_item(const Config& cfg) {
    SuiteItem it{"edge-well-definedness", "pass", "", 0};
    std::ostringstream detail;
    std::vector<Ring> rings = corpus_rings(cfg);
    rings.push_back(parse_ring_spec("gf:2:6", cfg));
    std::size_t pairs = 0;
    for (const Ring& r : rings) {
        for (GenMode mode : {GenMode::nonunital, GenMode::unital}) {
            if (mode == GenMode::unital && !r.is_unital()) continue;
            ClassPartition part = compress_classes(r, mode, cfg);
            for (std::size_t i = 0; i < part.classes.size() && it.status == "pass"; ++i)
                for (std::size_t j = i; j < part.classes.size(); ++j) {
                    bool expected = commutes(r, part.classes[i].representative,
                                             part.classes[j].representative);
                    ++pairs;
                    for (Elem a : part.classes[i].members)
                        for (Elem b : part.classes[j].members)
                            if (commutes(r, a, b) != expected) {
                                it.status = "fail";
                                detail << r.descriptor() << " classes " << i << "," << j
                                       << " split on (" << a << "," << b << "); ";
                            }
                }
        }
    }
    detail << pairs << " class pairs checked across " << rings.size() << " rings";
    it.detail = detail.str();
    return it;
}

std::vector<CompressedGraph> sample_graphs(const Config& cfg) {
    std::vector<CompressedGraph> out;
    for (const Ring& r : corpus_rings(cfg)) {
        out.push_back(compressed_commuting_graph(r, GenMode::nonunital, cfg));
        if (r.is_unital()) out.push_back(compressed_commuting_graph(r, GenMode::unital, cfg));
    }
    out.push_back(lambda1_localized(mpz_class(12), cfg));
    out.push_back(lambda1_localized(mpz_class(30), cfg));
    out.push_back(lambda1_semidirect(SemidirectRing::create(direct_product_data(cfg), cfg), cfg).graph);
    out.push_back(lambda1_semidirect(SemidirectRing::create(zero_mult_data(cfg), cfg), cfg).graph);
    return out;
}

SuiteItem loops_item(const Config& cfg) {
    SuiteItem it{"loop-on-every-vertex", "pass", "", 0};
    std::ostringstream detail;
    std::size_t graphs = 0;
    for (const CompressedGraph& g : sample_graphs(cfg)) {
        ++graphs;
        bool ok = g.loops.size() == g.vertex_count();
        for (std::uint32_t v = 0; ok && v < g.vertex_count(); ++v) ok = g.has_loop(v);
        if (!ok) {
            it.status = "fail";
            detail << "graph " << graphs - 1 << " missing loops; ";
        }
    }
    detail << graphs << " graphs checked";
    it.detail = detail.str();
    return it;
}

CompressedGraph relabel(const CompressedGraph& g, const std::vector<std::uint32_t>& perm) {
    CompressedGraph h;
    h.vertex_labels.resize(g.vertex_count());
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        h.vertex_labels[perm[v]] = g.vertex_labels[v];
    for (auto [a, b] : g.edges) h.add_edge(perm[a], perm[b]);
    for (std::uint32_t v : g.loops) h.add_edge(perm[v], perm[v]);
    h.normalize();
    return h;
}

SuiteItem relabeling_item(std::uint64_t seed, const Config& cfg) {
    SuiteItem it{"relabeling-invariance", "pass", "", 0};
    std::ostringstream detail;
    std::vector<CompressedGraph> bases = {
        compressed_commuting_graph(parse_ring_spec("mat:gf:2:1:2", cfg), GenMode::nonunital, cfg),
        compressed_commuting_graph(parse_ring_spec("tri:gf:2:1:2", cfg), GenMode::nonunital, cfg),
        compressed_commuting_graph(parse_ring_spec("gf:2:6", cfg), GenMode::unital, cfg),
        lambda1_localized(mpz_class(30), cfg)};
    std::mt19937_64 rng(seed);
    int done = 0;
    for (int round = 0; round < 100; ++round) {
        const CompressedGraph& g = bases[round % bases.size()];
        std::vector<std::uint32_t> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CompressedGraph h = relabel(g, perm);
        if (h.edge_count() != g.edge_count() || h.loops.size() != g.loops.size() ||
            !iso(g, h, cfg)) {
            it.status = "fail";
            detail << "shuffle " << round << " broke isomorphism; ";
        } else {
            ++done;
        }
    }
    detail << done << "/100 shuffles isomorphic";
    it.detail = detail.str();
    return it;
}

SuiteItem round_trip_item(const Config& cfg) {
    SuiteItem it{"emit-parse-round-trip", "pass", "", 0};
    std::ostringstream detail;
    std::size_t graphs = 0;
    for (const CompressedGraph& g : sample_graphs(cfg)) {
        ++graphs;
        CompressedGraph back = parse_graph_json(emit_json(g));
        bool ok = back.vertex_labels == g.vertex_labels && back.edges == g.edges &&
                  back.loops == g.loops;
        ok = ok && emit_dot(g).rfind("graph", 0) == 0;
        if (!ok) {
            it.status = "fail";
            detail << "graph " << graphs - 1 << " did not round-trip; ";
        }
    }
    detail << graphs << " graphs round-tripped";
    it.detail = detail.str();
    return it;
}

SuiteItem timed(SuiteItem (*fn)(const Config&), const Config& cfg) {
    auto start = Clock::now();
    SuiteItem it = fn(cfg);
    it.millis = ms_since(start);
    return it;
}

SuiteItem timed_seeded(SuiteItem (*fn)(std::uint64_t, const Config&), std::uint64_t seed,
                       const Config& cfg) {
    auto start = Clock::now();
    SuiteItem it = fn(seed, cfg);
    it.millis = ms_since(start);
    return it;
}

}  // namespace

SemidirectData random_semidirect_data(std::mt19937_64& rng, const Config& cfg) {
    auto pick = [&rng](std::uint64_t n) { return static_cast<std::uint64_t>(rng() % n); };
    SemidirectData d;
    switch (pick(3)) {
        case 0: {  // unital ideal, e = 1, trivial maps
            static const char* const ideals[] = {
                "z:1", "z:2",  "z:3",  "z:4",  "z:5",          "z:6",
                "z:7", "z:8",  "z:9",  "gf:2:2", "gf:2:3",     "gf:3:2",
                "tri:gf:2:1:2", "prod:z:2,z:2", "prod:z:3,z:3", "prod:z:2,z:4"};
            d.ideal = parse_ring_spec(ideals[pick(std::size(ideals))], cfg);
            d.m = 1 + pick(30);
            d.e = *d.ideal.identity();
            d.L.assign(d.ideal.order(), 0);
            d.Rm.assign(d.ideal.order(), 0);
            break;
        }
        case 1: {  // zero multiplication, 1/m acts as multiplication by m^-1
            std::uint64_t c = 1 + pick(9);
            std::uint64_t m = 1 + pick(30);
            while (std::gcd(m, c) != 1) m = 1 + pick(30);
            std::uint64_t lambda = 0;
            for (std::uint64_t k = 0; k < c; ++k)
                if ((k * (m % c)) % c == 1 % c) lambda = k;
            d.ideal = parse_ring_spec("zmul:" + std::to_string(c), cfg);
            d.m = static_cast<unsigned long>(m);
            d.e = 0;
            d.L.resize(c);
            for (Elem x = 0; x < c; ++x) d.L[x] = static_cast<Elem>((x * lambda) % c);
            d.Rm = d.L;
            break;
        }
        default: {  // product of a unital part and a zero-multiplication part
            static const std::pair<const char*, std::uint64_t> combos[] = {
                {"z:2", 2}, {"z:2", 3}, {"z:2", 4}, {"z:3", 3}, {"z:4", 2}, {"gf:2:2", 2}};
            auto [jspec, c] = combos[pick(std::size(combos))];
            std::uint64_t m = 1 + pick(30);
            while (std::gcd(m, c) != 1) m = 1 + pick(30);
            std::uint64_t lambda = 0;
            for (std::uint64_t k = 0; k < c; ++k)
                if ((k * (m % c)) % c == 1 % c) lambda = k;
            Ring j = parse_ring_spec(jspec, cfg);
            Ring zc = parse_ring_spec("zmul:" + std::to_string(c), cfg);
            d.ideal = parse_ring_spec(std::string("prod:") + jspec + ",zmul:" + std::to_string(c),
                                      cfg);
            d.m = static_cast<unsigned long>(m);
            d.e = product_encode(j, zc, *j.identity(), 0);
            d.L.resize(d.ideal.order());
            for (Elem x = 0; x < d.ideal.order(); ++x) {
                auto [xj, xc] = product_decode(j, zc, x);
                d.L[x] = product_encode(j, zc, 0, static_cast<Elem>((xc * lambda) % c));
            }
            d.Rm = d.L;
            break;
        }
    }
    return d;
}

AnnihilationInstance random_annihilation_instance(std::mt19937_64& rng, const Config& cfg) {
    auto pick = [&rng](std::uint64_t n) { return static_cast<std::uint64_t>(rng() % n); };
    static const char* const specs[] = {"z:2",     "z:3",     "z:4",          "z:6",
                                        "z:8",     "z:9",     "z:12",         "z:16",
                                        "gf:2:2",  "gf:2:3",  "gf:3:2",       "tri:gf:2:1:2",
                                        "mat:gf:2:1:2", "prod:z:4,z:4", "prod:z:2,gf:2:2",
                                        "prod:z:6,z:2"};
    AnnihilationInstance inst;
    inst.ring = parse_ring_spec(specs[pick(std::size(specs))], cfg);
    inst.a = static_cast<Elem>(pick(inst.ring.order()));

    // powers repeat in a finite ring: x^u - x^v annihilates a
    std::vector<Elem> seen{inst.ring.pow(inst.a, 1)};
    std::size_t u = 1, v = 0;
    for (;;) {
        Elem next = inst.ring.mul(seen.back(), inst.a);
        auto close = std::find(seen.begin(), seen.end(), next);
        if (close != seen.end()) {
            u = seen.size() + 1;
            v = static_cast<std::size_t>(close - seen.begin()) + 1;
            break;
        }
        seen.push_back(next);
    }
    IntPolynomial base =
        IntPolynomial::monomial(1, u) - IntPolynomial::monomial(1, v);

    mpz_class ch(static_cast<unsigned long>(inst.ring.characteristic()));
    for (;;) {
        IntPolynomial h = IntPolynomial::monomial(1, pick(3));
        for (std::size_t t = 0; t < static_cast<std::size_t>(h.degree()); ++t)
            h = h + IntPolynomial::monomial(static_cast<long>(pick(7)) - 3, t);
        mpz_class scale(static_cast<unsigned long>(1 + pick(5)));
        IntPolynomial q = (base * h).scaled(scale);
        for (std::size_t t = 0; t < static_cast<std::size_t>(q.degree()); ++t)
            q = q + IntPolynomial::monomial(ch * (static_cast<long>(pick(9)) - 4), t);
        if (content(q) != 1) continue;
        if (inst.ring.eval(q, inst.a) != inst.ring.zero())
            throw std::logic_error("generated instance does not annihilate");
        inst.q = q;
        return inst;
    }
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, const Config& cfg) {
    SuiteReport rep;
    rep.suite = suite;
    rep.seed = seed;
    if (suite == "paper") {
        rep.items.push_back(timed(finite_fields_item, cfg));
        rep.items.push_back(timed(matrix_rings_item, cfg));
        rep.items.push_back(timed(localization_item, cfg));
        rep.items.push_back(timed(unitalization_item, cfg));
        rep.items.push_back(timed(semidirect_examples_item, cfg));
        rep.items.push_back(timed_seeded(semidirect_bound_item, seed, cfg));
        rep.items.push_back(timed_seeded(integral_item, seed + 1, cfg));
        rep.items.push_back(timed(lattice_item, cfg));
    } else if (suite == "properties") {
        rep.items.push_back(timed(edge_well_defined_item, cfg));
        rep.items.push_back(timed(loops_item, cfg));
        rep.items.push_back(timed_seeded(relabeling_item, seed, cfg));
        rep.items.push_back(timed(round_trip_item, cfg));
    } else {
        throw PreconditionError("unknown suite: " + suite + " (expected paper or properties)");
    }
    return rep;
}

std::string report_json(const SuiteReport& r) {
    nlohmann::json j;
    j["schema"] = "ringlab.verify/1";
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["items"] = nlohmann::json::array();
    int pass = 0, fail = 0, open = 0;
    for (const SuiteItem& it : r.items) {
        // Timings stay off the report so identical invocations emit
        // byte-identical output.
        j["items"].push_back({{"name", it.name},
                              {"status", it.status},
                              {"detail", it.detail}});
        if (it.status == "pass") ++pass;
        if (it.status == "fail") ++fail;
        if (it.status == "unresolved") ++open;
    }
    j["counts"] = {{"pass", pass}, {"fail", fail}, {"unresolved", open}};
    j["exit_code"] = r.exit_code();
    return j.dump(2) + "\n";
}

}  // namespace ringlab
