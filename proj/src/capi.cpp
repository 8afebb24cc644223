#include "ringlab.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "ringlab/config.hpp"
#include "ringlab/graph.hpp"
#include "ringlab/integral.hpp"
#include "ringlab/polynomial.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/ringspec.hpp"
#include "ringlab/semidirect.hpp"
#include "ringlab/subring.hpp"
#include "ringlab/verify.hpp"

struct rl_config {
    ringlab::Config impl;
};

struct rl_graph {
    ringlab::CompressedGraph impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

rl_status fail(rl_status code, std::string message) {
    g_last_error = std::move(message);
    return code;
}

// Runs `fn`, translating the library's exceptions onto rl_status codes.
template <typename Fn>
rl_status guard(Fn&& fn) {
    g_last_error.clear();
    try {
        return fn();
    } catch (const ringlab::ParseError& e) {
        return fail(RL_PARSE_ERROR, e.what());
    } catch (const ringlab::BudgetError& e) {
        return fail(RL_BUDGET_EXCEEDED, e.what());
    } catch (const ringlab::PreconditionError& e) {
        return fail(RL_PARSE_ERROR, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(RL_PARSE_ERROR, e.what());
    } catch (const std::exception& e) {
        return fail(RL_ERROR, e.what());
    }
}

rl_status require(bool ok, const char* message) {
    if (ok) return RL_OK;
    return fail(RL_PARSE_ERROR, message);
}

const ringlab::Config& config_or_defaults(const rl_config* cfg) {
    return cfg != nullptr ? cfg->impl : ringlab::Config::defaults();
}

}  // namespace

extern "C" {

const char* rl_last_error(void) { return g_last_error.c_str(); }

void rl_string_free(char* s) { std::free(s); }

rl_config* rl_config_new(void) { return new (std::nothrow) rl_config{ringlab::Config::defaults()}; }

void rl_config_free(rl_config* cfg) { delete cfg; }

rl_status rl_config_set(rl_config* cfg, const char* key, const char* value) {
    if (require(cfg && key && value, "rl_config_set: null argument") != RL_OK) return RL_PARSE_ERROR;
    return guard([&]() -> rl_status {
        if (!cfg->impl.set(key, value))
            return fail(RL_PARSE_ERROR, std::string("unknown config key: ") + key);
        return RL_OK;
    });
}

rl_status rl_config_load_file(rl_config* cfg, const char* path) {
    if (require(cfg && path, "rl_config_load_file: null argument") != RL_OK) return RL_PARSE_ERROR;
    return guard([&]() -> rl_status {
        cfg->impl.load_file(path);
        return RL_OK;
    });
}

rl_status rl_config_apply_env(rl_config* cfg) {
    if (require(cfg != nullptr, "rl_config_apply_env: null argument") != RL_OK)
        return RL_PARSE_ERROR;
    return guard([&]() -> rl_status {
        cfg->impl.apply_env();
        return RL_OK;
    });
}

rl_status rl_graph_compute(const rl_config* cfg, const char* ring_spec, int unital,
                           rl_graph** out) {
    if (require(ring_spec && out, "rl_graph_compute: null argument") != RL_OK)
        return RL_PARSE_ERROR;
    *out = nullptr;
    return guard([&]() -> rl_status {
        const ringlab::Config& c = config_or_defaults(cfg);
        ringlab::Ring r = ringlab::parse_ring_spec(ring_spec, c);
        ringlab::GenMode mode = unital != 0 ? ringlab::GenMode::unital : ringlab::GenMode::nonunital;
        auto* handle = new rl_graph{ringlab::compressed_commuting_graph(r, mode, c)};
        *out = handle;
        return RL_OK;
    });
}

void rl_graph_free(rl_graph* g) { delete g; }

rl_status rl_graph_vertex_count(const rl_graph* g, uint32_t* out) {
    if (require(g && out, "rl_graph_vertex_count: null argument") != RL_OK) return RL_PARSE_ERROR;
    *out = g->impl.vertex_count();
    g_last_error.clear();
    return RL_OK;
}

rl_status rl_graph_emit(const rl_graph* g, const char* format, char** out) {
    if (require(g && format && out, "rl_graph_emit: null argument") != RL_OK)
        return RL_PARSE_ERROR;
    *out = nullptr;
    return guard([&]() -> rl_status {
        std::string text = ringlab::emit(g->impl, format);
        *out = dup_string(text);
        return *out != nullptr ? RL_OK : fail(RL_ERROR, "out of memory");
    });
}

rl_status rl_verify(const rl_config* cfg, const char* suite, uint64_t seed, char** report,
                    int* suite_status) {
    if (require(suite && report && suite_status, "rl_verify: null argument") != RL_OK)
        return RL_PARSE_ERROR;
    *report = nullptr;
    *suite_status = RL_ERROR;
    return guard([&]() -> rl_status {
        ringlab::SuiteReport r = ringlab::run_suite(suite, seed, config_or_defaults(cfg));
        std::string text = ringlab::report_json(r);
        *report = dup_string(text);
        if (*report == nullptr) return fail(RL_ERROR, "out of memory");
        *suite_status = r.exit_code();
        return RL_OK;
    });
}

rl_status rl_semidirect(const rl_config* cfg, const char* data_path, int graph_only,
                        const char* format, char** out, uint32_t* unresolved) {
    if (require(data_path && format && out && unresolved, "rl_semidirect: null argument") != RL_OK)
        return RL_PARSE_ERROR;
    *out = nullptr;
    *unresolved = 0;
    return guard([&]() -> rl_status {
        const ringlab::Config& c = config_or_defaults(cfg);
        ringlab::SemidirectData data = ringlab::semidirect_data_from_file(data_path, c);
        ringlab::SemidirectRing sd = ringlab::SemidirectRing::create(std::move(data), c);
        ringlab::Lambda1SDResult result = ringlab::lambda1_semidirect(sd, c);
        std::string text = graph_only != 0 ? ringlab::emit(result.graph, format)
                                           : ringlab::lambda1_report_json(result);
        *out = dup_string(text);
        if (*out == nullptr) return fail(RL_ERROR, "out of memory");
        *unresolved = static_cast<uint32_t>(result.unresolved.size());
        return RL_OK;
    });
}

rl_status rl_integral(const rl_config* cfg, const char* ring_spec, uint32_t element,
                      const char* poly_csv, char** out) {
    if (require(ring_spec && poly_csv && out, "rl_integral: null argument") != RL_OK)
        return RL_PARSE_ERROR;
    *out = nullptr;
    return guard([&]() -> rl_status {
        const ringlab::Config& c = config_or_defaults(cfg);
        ringlab::Ring r = ringlab::parse_ring_spec(ring_spec, c);
        ringlab::IntPolynomial q = ringlab::IntPolynomial::parse(poly_csv);
        ringlab::IntPolynomial monic = ringlab::monic_annihilator(r, element, q, c);
        *out = dup_string(monic.str());
        return *out != nullptr ? RL_OK : fail(RL_ERROR, "out of memory");
    });
}

rl_status rl_lattice(const rl_config* cfg, const char* ring_spec, char** out, int* complete) {
    if (require(ring_spec && out && complete, "rl_lattice: null argument") != RL_OK)
        return RL_PARSE_ERROR;
    *out = nullptr;
    *complete = 0;
    return guard([&]() -> rl_status {
        const ringlab::Config& c = config_or_defaults(cfg);
        ringlab::Ring r = ringlab::parse_ring_spec(ring_spec, c);
        ringlab::UnitalLattice lat = ringlab::unital_subring_lattice(r, c);
        nlohmann::json doc;
        doc["ring"] = r.descriptor();
        doc["count"] = lat.subrings.size();
        doc["complete"] = lat.complete;
        nlohmann::json subrings = nlohmann::json::array();
        for (const auto& s : lat.subrings) subrings.push_back(s);
        doc["subrings"] = std::move(subrings);
        *out = dup_string(doc.dump(2) + "\n");
        if (*out == nullptr) return fail(RL_ERROR, "out of memory");
        *complete = lat.complete ? 1 : 0;
        return RL_OK;
    });
}

}  // extern "C"
