#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringlab {

// Thrown when a construction or computation would exceed a size budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed specs, files or element strings.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an operation's stated precondition does not hold.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Size budgets, witness-search bounds and the RNG seed used by the sampled
// checks.  All callers that need configuration take a `const Config&`;
// `Config::defaults()` is the single process-wide default, adjustable once at
// startup (the CLI maps flags / environment variables onto it).
struct Config {
    // carriers
    std::uint64_t table_order_limit = 4096;     // tables materialized up to here
    std::uint64_t rule_order_limit = 1u << 20;  // hard cap for rule-backed carriers
    std::uint64_t graph_order_limit = 4096;     // compress/graph ops refuse above
    // validation
    std::uint64_t exhaustive_validate_limit = 256;  // triple scan up to this order
    std::uint64_t validate_samples = 100000;        // sampled triples above it
    // search bounds
    std::uint32_t witness_degree = 6;   // membership witnesses over Z[1/m]
    std::int64_t witness_coeff = 32;
    std::uint32_t merge_degree = 4;     // semidirect class-merge witnesses
    std::int64_t merge_coeff = 10;
    // lattice
    std::uint64_t lattice_join_limit = 1u << 16;
    // isomorphism
    std::uint32_t iso_vertex_limit = 64;
    // randomized suites
    std::uint64_t seed = 20240915;

    static Config& defaults();

    // Applies RINGLAB_* environment overrides (budgets, bounds, seed).
    void apply_env();
    // Reads `key = value` lines; '#' starts a comment.  Unknown keys error.
    void load_file(const std::string& path);
    bool set(const std::string& key, const std::string& value);
};

}  // namespace ringlab
