// Command-line front end over the C API in ringlab.h.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 budget exceeded, 4 unresolved semidirect merges.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ringlab.h"

namespace {

constexpr std::uint64_t kDefaultSeed = 20240915;

struct ConfigHandle {
    rl_config* cfg = nullptr;
    ConfigHandle() : cfg(rl_config_new()) {}
    ~ConfigHandle() { rl_config_free(cfg); }
    ConfigHandle(const ConfigHandle&) = delete;
    ConfigHandle& operator=(const ConfigHandle&) = delete;
};

int report_failure(rl_status st) {
    std::cerr << "ringlab: " << rl_last_error() << "\n";
    return static_cast<int>(st);
}

// Payloads already end with a newline in most cases; add one if missing.
void print_payload(const char* text) {
    std::string s(text != nullptr ? text : "");
    std::cout << s;
    if (s.empty() || s.back() != '\n') std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compressed commuting graphs of finite rings and their unitalizations"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "Configuration file (key = value lines)");

    auto* graph_cmd = app.add_subcommand("graph", "Compressed commuting graph of a ring");
    std::string graph_spec;
    bool graph_unital = false;
    std::string graph_format = "json";
    graph_cmd->add_option("spec", graph_spec, "Ring spec, e.g. z:4, gf:2:3, tri:gf:2:1:2")
        ->required();
    graph_cmd->add_flag("--unital", graph_unital, "Compress by unital generated subrings");
    graph_cmd->add_option("--format", graph_format, "Output format (default json)")
        ->check(CLI::IsMember({"json", "dot"}));

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    std::uint64_t seed = kDefaultSeed;
    std::uint32_t verify_deg = 0;
    std::int64_t verify_coef = 0;
    verify_cmd->add_option("--suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"paper", "properties"}));
    verify_cmd->add_option("--seed", seed, "Seed for the randomized items");
    auto* verify_deg_opt =
        verify_cmd->add_option("--deg", verify_deg, "Witness/merge degree bound override");
    auto* verify_coef_opt =
        verify_cmd->add_option("--coef", verify_coef, "Witness/merge coefficient bound override")
            ->check(CLI::NonNegativeNumber);

    auto* sd_cmd = app.add_subcommand("semidirect", "Unital graph of Z[1/m] |x I from a data file");
    std::string sd_data;
    bool sd_graph = false;
    std::string sd_format = "json";
    std::uint32_t sd_deg = 0;
    std::int64_t sd_coef = 0;
    sd_cmd->add_option("--data", sd_data, "JSON file with {m, ideal, e, L, Rm}")->required();
    sd_cmd->add_flag("--graph", sd_graph, "Emit only the graph instead of the full report");
    sd_cmd->add_option("--format", sd_format, "Graph format when --graph is given")
        ->check(CLI::IsMember({"json", "dot"}));
    auto* sd_deg_opt = sd_cmd->add_option("--deg", sd_deg, "Merge witness degree bound");
    auto* sd_coef_opt = sd_cmd->add_option("--coef", sd_coef, "Merge witness coefficient bound")
                            ->check(CLI::NonNegativeNumber);

    auto* int_cmd = app.add_subcommand("integral", "Monic annihilator of a ring element");
    std::string int_ring;
    std::uint32_t int_elem = 0;
    std::string int_poly;
    int_cmd->add_option("--ring", int_ring, "Ring spec")->required();
    int_cmd->add_option("--element", int_elem, "Element id")->required();
    int_cmd->add_option("--poly", int_poly, "Annihilating polynomial, constant-first CSV")
        ->required();

    auto* lat_cmd = app.add_subcommand("lattice", "Unital subring lattice of a ring");
    std::string lat_spec;
    lat_cmd->add_option("spec", lat_spec, "Ring spec")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    ConfigHandle handle;
    if (handle.cfg == nullptr) {
        std::cerr << "ringlab: out of memory\n";
        return 1;
    }

    auto set_key = [&](const char* key, const std::string& value) -> bool {
        rl_status st = rl_config_set(handle.cfg, key, value.c_str());
        if (st != RL_OK) std::cerr << "ringlab: " << rl_last_error() << "\n";
        return st == RL_OK;
    };

    if (!config_path.empty()) {
        rl_status st = rl_config_load_file(handle.cfg, config_path.c_str());
        if (st != RL_OK) return report_failure(st);
    }
    if (rl_status st = rl_config_apply_env(handle.cfg); st != RL_OK) return report_failure(st);

    if (graph_cmd->parsed()) {
        rl_graph* g = nullptr;
        rl_status st = rl_graph_compute(handle.cfg, graph_spec.c_str(), graph_unital ? 1 : 0, &g);
        if (st != RL_OK) return report_failure(st);
        char* text = nullptr;
        st = rl_graph_emit(g, graph_format.c_str(), &text);
        rl_graph_free(g);
        if (st != RL_OK) return report_failure(st);
        print_payload(text);
        rl_string_free(text);
        return 0;
    }

    if (verify_cmd->parsed()) {
        if (verify_deg_opt->count() > 0) {
            if (!set_key("witness_degree", std::to_string(verify_deg))) return 2;
            if (!set_key("merge_degree", std::to_string(verify_deg))) return 2;
        }
        if (verify_coef_opt->count() > 0) {
            if (!set_key("witness_coeff", std::to_string(verify_coef))) return 2;
            if (!set_key("merge_coeff", std::to_string(verify_coef))) return 2;
        }
        char* report = nullptr;
        int suite_status = 0;
        rl_status st = rl_verify(handle.cfg, suite.c_str(), seed, &report, &suite_status);
        if (st != RL_OK) return report_failure(st);
        print_payload(report);
        rl_string_free(report);
        return suite_status;
    }

    if (sd_cmd->parsed()) {
        if (sd_deg_opt->count() > 0) {
            if (!set_key("witness_degree", std::to_string(sd_deg))) return 2;
            if (!set_key("merge_degree", std::to_string(sd_deg))) return 2;
        }
        if (sd_coef_opt->count() > 0) {
            if (!set_key("witness_coeff", std::to_string(sd_coef))) return 2;
            if (!set_key("merge_coeff", std::to_string(sd_coef))) return 2;
        }
        char* out = nullptr;
        std::uint32_t unresolved = 0;
        rl_status st = rl_semidirect(handle.cfg, sd_data.c_str(), sd_graph ? 1 : 0,
                                     sd_format.c_str(), &out, &unresolved);
        if (st != RL_OK) return report_failure(st);
        print_payload(out);
        rl_string_free(out);
        return unresolved > 0 ? 4 : 0;
    }

    if (int_cmd->parsed()) {
        char* out = nullptr;
        rl_status st = rl_integral(handle.cfg, int_ring.c_str(), int_elem, int_poly.c_str(), &out);
        if (st != RL_OK) return report_failure(st);
        print_payload(out);
        rl_string_free(out);
        return 0;
    }

    if (lat_cmd->parsed()) {
        char* out = nullptr;
        int complete = 0;
        rl_status st = rl_lattice(handle.cfg, lat_spec.c_str(), &out, &complete);
        if (st != RL_OK) return report_failure(st);
        print_payload(out);
        rl_string_free(out);
        return complete != 0 ? 0 : 3;
    }

    return 2;
}
