#ifndef RINGLAB_H
#define RINGLAB_H

/*
 * C interface to the ringlab library.  All functions return an rl_status;
 * results come back through out-parameters.  Strings returned through
 * char** are heap-allocated and must be released with rl_string_free.
 * Handles are opaque and must be released with their matching _free call.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Mirrors the CLI exit-code contract. */
typedef enum rl_status {
    RL_OK = 0,
    RL_ERROR = 1,           /* verification failure or internal error */
    RL_PARSE_ERROR = 2,     /* malformed spec, file, value or precondition */
    RL_BUDGET_EXCEEDED = 3, /* a size budget refused the computation */
    RL_UNRESOLVED = 4       /* semidirect merges left undecided */
} rl_status;

typedef struct rl_config rl_config;
typedef struct rl_graph rl_graph;

/* Message for the last failing call on this thread; "" when none. */
const char* rl_last_error(void);

void rl_string_free(char* s);

/* Configuration: budgets, witness bounds, seed.  Starts from defaults. */
rl_config* rl_config_new(void);
void rl_config_free(rl_config* cfg);
/* Keys: table_order_limit, rule_order_limit, graph_order_limit,
 * exhaustive_validate_limit, validate_samples, witness_degree,
 * witness_coeff, merge_degree, merge_coeff, lattice_join_limit,
 * iso_vertex_limit, seed. */
rl_status rl_config_set(rl_config* cfg, const char* key, const char* value);
/* `key = value` lines, '#' comments. */
rl_status rl_config_load_file(rl_config* cfg, const char* path);
/* RINGLAB_<KEY> environment overrides. */
rl_status rl_config_apply_env(rl_config* cfg);

/* Compressed commuting graph of the ring described by a spec string
 * (grammar: z:<n>, zmul:<n>, gf:<p>:<n>, mat:<spec>:<k>, tri:<spec>:<k>,
 * prod:<spec>,<spec>, table:<path>).  unital: 0 for generated subrings,
 * 1 for unital generated subrings. */
rl_status rl_graph_compute(const rl_config* cfg, const char* ring_spec, int unital,
                           rl_graph** out);
void rl_graph_free(rl_graph* g);
rl_status rl_graph_vertex_count(const rl_graph* g, uint32_t* out);
/* format: "json" or "dot". */
rl_status rl_graph_emit(const rl_graph* g, const char* format, char** out);

/* Runs a verification suite ("paper" or "properties").  *report receives the
 * JSON report.  *suite_status receives RL_OK, RL_ERROR or RL_UNRESOLVED for
 * the suite outcome; the call itself returns RL_OK whenever the suite ran. */
rl_status rl_verify(const rl_config* cfg, const char* suite, uint64_t seed, char** report,
                    int* suite_status);

/* Loads a semidirect presentation {m, ideal, e, L, Rm} from a JSON file and
 * computes its unital compressed commuting graph.  graph_only: 1 emits just
 * the graph in `format`, 0 emits the full merge report (JSON).  *unresolved
 * receives the number of candidate pairs left undecided by the witness
 * bounds. */
rl_status rl_semidirect(const rl_config* cfg, const char* data_path, int graph_only,
                        const char* format, char** out, uint32_t* unresolved);

/* Monic annihilator of element `element` in the spec'd ring, given an
 * annihilating polynomial with coprime coefficients in constant-first CSV
 * form ("0,3,1" is x^2 + 3x).  *out receives the result in the same form. */
rl_status rl_integral(const rl_config* cfg, const char* ring_spec, uint32_t element,
                      const char* poly_csv, char** out);

/* Unital subring lattice as JSON.  *complete receives 1 when the enumeration
 * finished within budget, 0 when the list is partial. */
rl_status rl_lattice(const rl_config* cfg, const char* ring_spec, char** out, int* complete);

#ifdef __cplusplus
}
#endif

#endif /* RINGLAB_H */
