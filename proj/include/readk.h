/* readk — monotone Boolean formulas, sum-of-products normalization,
 * chain-graph biclique covers and read-k readability search.
 *
 * C interface of the shared library. Objects are opaque handles created and
 * released by the rk_*_free functions below; every call reports rk_status,
 * and rk_last_error() returns a thread-local message for the last failure.
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with rk_string_free.
 */

#ifndef READK_H
#define READK_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rk_status {
  RK_OK = 0,
  RK_ERROR_SYNTAX = 1,        /* malformed formula / JSON text */
  RK_ERROR_INVALID_ARGUMENT = 2,
  RK_ERROR_PRECONDITION = 3,  /* input violates an operation's contract */
  RK_ERROR_BUDGET = 4,        /* a configured limit was exceeded */
  RK_ERROR_INTERNAL = 5
} rk_status;

typedef enum rk_outcome {
  RK_NO = 0,
  RK_YES = 1,
  RK_UNKNOWN = 2  /* the search budget ran out before a decision */
} rk_outcome;

typedef struct rk_formula rk_formula;
typedef struct rk_sop rk_sop;
typedef struct rk_graph rk_graph;
typedef struct rk_cover rk_cover;

/* Zero fields fall back to the defaults (16 leaves, 2e6 candidates, 60 s). */
typedef struct rk_budget {
  int max_leaves;
  long long max_candidates;
  long long max_millis;
} rk_budget;

const char* rk_version(void);
const char* rk_last_error(void);
void rk_string_free(char* s);

/* ---- formulas ---------------------------------------------------------- */

/* Grammar: sum := prod ('+' prod)*; prod := atom ('*' atom)*;
 * atom := NAME | '(' sum ')'; NAME = [A-Za-z][A-Za-z0-9_]*.
 * The parsed formula is normalized (flattened, alternating, canonically
 * ordered). */
rk_status rk_formula_parse(const char* text, rk_formula** out);
rk_status rk_formula_render(const rk_formula* f, char** out);
void rk_formula_free(rk_formula* f);

/* {"counts":{...},"read_index":k} */
rk_status rk_formula_occurrences_json(const rk_formula* f, char** out);
rk_status rk_formula_read_index(const rk_formula* f, int* out);
rk_status rk_formula_is_isolated(const rk_formula* f, const char* var, int* out);

/* JSON list of subformula handles ("/0/2" child paths) of all product nodes
 * with exactly two factors. */
rk_status rk_formula_two_mult_handles_json(const rk_formula* f, char** out);

/* Renders the subformula a handle points at. Handles accept an optional
 * ":i,j" suffix selecting a child subset. */
rk_status rk_formula_subformula_render(const rk_formula* f, const char* handle,
                                       char** out);

rk_status rk_formula_make_nonredundant(const rk_formula* f, rk_formula** out);

rk_status rk_formula_substitute_subformula(const rk_formula* f,
                                           const char* handle,
                                           const char* fresh_var,
                                           rk_formula** out);

/* Substitutes a 0/1 constant for a variable. When the whole formula decides,
 * *out_formula stays NULL and *out_constant is 0 or 1; otherwise
 * *out_constant is -1. */
rk_status rk_formula_substitute_const(const rk_formula* f, const char* var,
                                      int value, rk_formula** out_formula,
                                      int* out_constant);

/* Sum-of-products spelling of a term list. */
rk_status rk_formula_from_sop(const rk_sop* s, rk_formula** out);

/* ---- sums of products -------------------------------------------------- */

/* Full distributive expansion before absorption (not an antichain). */
rk_status rk_formula_csop(const rk_formula* f, rk_sop** out);
/* Minterms: expansion followed by absorption. */
rk_status rk_formula_sop(const rk_formula* f, rk_sop** out);
void rk_sop_free(rk_sop* s);

/* Terms joined by " + ", variables joined by "*", canonical order. */
rk_status rk_sop_text(const rk_sop* s, char** out);
/* JSON list of lists of variable names. */
rk_status rk_sop_json(const rk_sop* s, char** out);
rk_status rk_sop_from_json(const char* json, rk_sop** out);
rk_status rk_sop_term_count(const rk_sop* s, long long* out);

/* Normality: the terms equal the maximal cliques of their own
 * co-occurrence graph. */
rk_status rk_sop_is_normal(const rk_sop* s, int* out);
/* Read-1 test: normal and the co-occurrence graph is a cograph. */
rk_status rk_sop_read1(const rk_sop* s, int* out);

rk_status rk_formulas_equivalent(const rk_formula* f, const rk_formula* g,
                                 int* out);

/* Chain-extension test: minterms must be all edges x_i*y_j (i <= j <= n)
 * plus pure-x/pure-y products of size >= 2. On a negative result
 * *offending_term (optional) receives the first violating term. */
rk_status rk_formula_chain_extension(const rk_formula* f, int n, int* out,
                                     char** offending_term);

/* ---- graphs ------------------------------------------------------------ */

rk_status rk_graph_chain(int n, rk_graph** out);
rk_status rk_graph_grid(int rows, int cols, rk_graph** out);
rk_status rk_graph_complete_bipartite(int m, int n, rk_graph** out);
rk_status rk_graph_duplicate_vertex(const rk_graph* g, const char* v,
                                    const char* copy_name, rk_graph** out);
rk_status rk_graph_from_json(const char* json, rk_graph** out);
rk_status rk_graph_json(const rk_graph* g, char** out);
void rk_graph_free(rk_graph* g);

rk_status rk_graph_triangle_free(const rk_graph* g, int* out);
rk_status rk_graph_cograph(const rk_graph* g, int* out);

/* Maximal-clique form of a graph (isolated vertices become singletons). */
rk_status rk_graph_sop(const rk_graph* g, rk_sop** out);
/* Co-occurrence graph of a term list. */
rk_status rk_sop_graph(const rk_sop* s, rk_graph** out);

/* ---- biclique covers --------------------------------------------------- */

rk_status rk_cover_chain_recursive(int n, rk_cover** out);
rk_status rk_cover_grid_chessboard(int rows, int cols, rk_cover** out);
rk_status rk_cover_from_json(const char* json, rk_cover** out);
rk_status rk_cover_json(const rk_cover* c, char** out);
void rk_cover_free(rk_cover* c);

/* *valid is 1 when every biclique spans only host edges and together they
 * span all of them; *multiplicity is the maximum number of bicliques any
 * vertex belongs to. *reason (optional) describes the first defect. */
rk_status rk_cover_validate(const rk_graph* g, const rk_cover* c, int* valid,
                            int* multiplicity, char** reason);

rk_status rk_cover_formula(const rk_cover* c, rk_formula** out);

/* Exhaustive search for a cover with multiplicity <= k on a bipartite host.
 * RK_UNKNOWN means the node budget (0 = default) ran out. */
rk_status rk_cover_decide(const rk_graph* g, int k, long long node_budget,
                          rk_outcome* out, rk_cover** witness);

rk_status rk_cover_extend_duplicate(const rk_cover* c, const char* v,
                                    const char* copy_name, rk_cover** out);

/* ---- bounds ------------------------------------------------------------ */

/* Cover-number bounds for the chain on n: 1 + ceil(log2 n) from the halving
 * construction, and the largest k with (2k-1)!! <= n from below. */
rk_status rk_r_upper_bound(int n, int* out);
rk_status rk_r_lower_bound(int n, int* out);

/* Largest k with 1^1 * 2^2 * ... * k^k <= n; the chain on n is not read-k
 * for any k up to this value. */
rk_status rk_not_read_k_bound(long long n, int* out);

/* Chain size 2*n*k^k needed by one step of the peeling recursion. */
rk_status rk_peel_cascade_min_size(long long n, int k, long long* out);

/* ---- search ------------------------------------------------------------ */

/* Exhaustive canonical search for a formula with minterms equal to the
 * graph's maximal-clique form, each variable used at most k times. The host
 * must be triangle-free. stats_json (optional) receives
 * {"candidates":...,"elapsed_ms":...}. */
rk_status rk_decide_readability(const rk_graph* g, int k, const rk_budget* b,
                                rk_outcome* out, rk_formula** witness,
                                char** stats_json);

/* Same search accepting any read-k chain extension of the chain on n. */
rk_status rk_has_read_k_extension(int n, int k, const rk_budget* b,
                                  rk_outcome* out, rk_formula** witness,
                                  char** stats_json);

/* For a non-redundant chain extension, finds a two-factor product whose
 * factors isolate x_i and y_j. */
rk_status rk_find_two_mult(const rk_formula* f, int i, int j, char** handle_out);

/* Peels one layer off a read-k chain extension: the subformula at the
 * handle must have the form (x1+..+xn+p)*(y1+..+yn+q) and survive the
 * fresh-variable substitution test; the result is a read-(k-1) extension. */
rk_status rk_peel_step(const rk_formula* f, const char* handle, int n,
                       rk_formula** out);

#ifdef __cplusplus
}
#endif

#endif /* READK_H */
