#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/semidirect.hpp"

namespace ringlab {

struct SuiteItem {
    std::string name;
    std::string status;  // "pass" | "fail" | "unresolved"
    std::string detail;
    std::uint64_t millis = 0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<SuiteItem> items;

    bool all_pass() const;
    bool any_unresolved() const;
    // 0 if everything passes, 4 if the only problems are unresolved merges,
    // 1 otherwise.
    int exit_code() const;
};

// The fixed corpus used by the verification suites: finite rings of order
// <= 64 (cyclic rings, small fields, matrix rings, products).
std::vector<Ring> corpus_rings(const Config& cfg = Config::defaults());

// Seeded generator of valid semidirect presentations over ideals of order
// <= 9; draws from unital, zero-multiplication, and mixed-product families.
SemidirectData random_semidirect_data(std::mt19937_64& rng, const Config& cfg = Config::defaults());

// Seeded generator of annihilation instances: a ring from the corpus, an
// element a, and a primitive polynomial q with q(a) = 0.
struct AnnihilationInstance {
    Ring ring;
    Elem a = 0;
    IntPolynomial q;
};
AnnihilationInstance random_annihilation_instance(std::mt19937_64& rng,
                                                  const Config& cfg = Config::defaults());

// suite: "paper" (worked examples and theorem instances) or "properties"
// (structural invariants).  Unknown names throw PreconditionError.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed,
                      const Config& cfg = Config::defaults());

std::string report_json(const SuiteReport& r);

}  // namespace ringlab
