#include "ringlab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ringlab {

Config& Config::defaults() {
    static Config instance;
    return instance;
}

bool Config::set(const std::string& key, const std::string& value) {
    auto as_u64 = [&] { return static_cast<std::uint64_t>(std::stoull(value)); };
    auto as_i64 = [&] { return static_cast<std::int64_t>(std::stoll(value)); };
    if (key == "table_order_limit") table_order_limit = as_u64();
    else if (key == "rule_order_limit") rule_order_limit = as_u64();
    else if (key == "graph_order_limit") graph_order_limit = as_u64();
    else if (key == "exhaustive_validate_limit") exhaustive_validate_limit = as_u64();
    else if (key == "validate_samples") validate_samples = as_u64();
    else if (key == "witness_degree") witness_degree = static_cast<std::uint32_t>(as_u64());
    else if (key == "witness_coeff") witness_coeff = as_i64();
    else if (key == "merge_degree") merge_degree = static_cast<std::uint32_t>(as_u64());
    else if (key == "merge_coeff") merge_coeff = as_i64();
    else if (key == "lattice_join_limit") lattice_join_limit = as_u64();
    else if (key == "iso_vertex_limit") iso_vertex_limit = static_cast<std::uint32_t>(as_u64());
    else if (key == "seed") seed = as_u64();
    else return false;
    return true;
}

void Config::apply_env() {
    static const char* keys[] = {
        "table_order_limit", "rule_order_limit", "graph_order_limit",
        "exhaustive_validate_limit", "validate_samples", "witness_degree",
        "witness_coeff", "merge_degree", "merge_coeff", "lattice_join_limit",
        "iso_vertex_limit", "seed"};
    for (const char* key : keys) {
        std::string env = "RINGLAB_";
        for (const char* p = key; *p; ++p) env += static_cast<char>(std::toupper(*p));
        if (const char* value = std::getenv(env.c_str())) set(key, value);
    }
}

void Config::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ParseError(path + ":" + std::to_string(lineno) + ": expected key = value");
            continue;
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!set(key, value))
            throw ParseError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
}

}  // namespace ringlab
