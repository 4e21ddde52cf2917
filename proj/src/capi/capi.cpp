#include "readk.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "core/cover.hpp"
#include "core/errors.hpp"
#include "core/formula.hpp"
#include "core/graph.hpp"
#include "core/json_io.hpp"
#include "core/search.hpp"
#include "core/sop.hpp"

using namespace readk;

struct rk_formula {
  Formula value;
};
// Holds a raw term list so CSOP output can keep its absorbable terms; the
// operations defined on antichains absorb on the way in.
struct rk_sop {
  std::vector<Term> terms;
};
struct rk_graph {
  Graph value;
};
struct rk_cover {
  BicliqueCover value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_optional(char** slot, const std::string& text) {
  if (slot) *slot = dup_string(text);
}

template <typename Fn>
rk_status guarded(Fn&& fn) {
  try {
    fn();
    return RK_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return RK_ERROR_SYNTAX;
  } catch (const PreconditionFailed& e) {
    g_last_error = e.what();
    return RK_ERROR_PRECONDITION;
  } catch (const BudgetExceeded& e) {
    g_last_error = e.what();
    return RK_ERROR_BUDGET;
  } catch (const InternalError& e) {
    g_last_error = e.what();
    return RK_ERROR_INTERNAL;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return RK_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RK_ERROR_INTERNAL;
  }
}

rk_status need(bool ok, const char* what) {
  if (ok) return RK_OK;
  g_last_error = std::string("null argument: ") + what;
  return RK_ERROR_INVALID_ARGUMENT;
}

SearchBudget to_budget(const rk_budget* b) {
  SearchBudget out;
  if (!b) return out;
  if (b->max_leaves > 0) out.max_leaves = b->max_leaves;
  if (b->max_candidates > 0) out.max_candidates = b->max_candidates;
  if (b->max_millis > 0) out.max_millis = b->max_millis;
  return out;
}

rk_outcome to_outcome(Outcome o) {
  switch (o) {
    case Outcome::Yes: return RK_YES;
    case Outcome::No: return RK_NO;
    case Outcome::Unknown: return RK_UNKNOWN;
  }
  return RK_UNKNOWN;
}

rk_outcome to_outcome(CoverOutcome o) {
  switch (o) {
    case CoverOutcome::Yes: return RK_YES;
    case CoverOutcome::No: return RK_NO;
    case CoverOutcome::Unknown: return RK_UNKNOWN;
  }
  return RK_UNKNOWN;
}

SopForm as_sopform(const rk_sop* s) { return SopForm::absorb(s->terms); }

std::string stats_json(const SearchStats& s) {
  return "{\"candidates\":" + std::to_string(s.candidates) +
         ",\"elapsed_ms\":" + std::to_string(s.elapsed_ms) + "}";
}

}  // namespace

extern "C" {

const char* rk_version(void) { return "1.0.0"; }

const char* rk_last_error(void) { return g_last_error.c_str(); }

void rk_string_free(char* s) { std::free(s); }

/* ---- formulas ---------------------------------------------------------- */

rk_status rk_formula_parse(const char* text, rk_formula** out) {
  if (rk_status s = need(text && out, "rk_formula_parse")) return s;
  return guarded([&] { *out = new rk_formula{parse_formula(text)}; });
}

rk_status rk_formula_render(const rk_formula* f, char** out) {
  if (rk_status s = need(f && out, "rk_formula_render")) return s;
  return guarded([&] { *out = dup_string(render(f->value)); });
}

void rk_formula_free(rk_formula* f) { delete f; }

rk_status rk_formula_occurrences_json(const rk_formula* f, char** out) {
  if (rk_status s = need(f && out, "rk_formula_occurrences_json")) return s;
  return guarded(
      [&] { *out = dup_string(occurrences_to_json(occurrences(f->value))); });
}

rk_status rk_formula_read_index(const rk_formula* f, int* out) {
  if (rk_status s = need(f && out, "rk_formula_read_index")) return s;
  return guarded([&] { *out = read_index(f->value); });
}

rk_status rk_formula_is_isolated(const rk_formula* f, const char* var, int* out) {
  if (rk_status s = need(f && var && out, "rk_formula_is_isolated")) return s;
  return guarded([&] { *out = is_isolated(var, f->value) ? 1 : 0; });
}

rk_status rk_formula_two_mult_handles_json(const rk_formula* f, char** out) {
  if (rk_status s = need(f && out, "rk_formula_two_mult_handles_json")) return s;
  return guarded([&] {
    std::string json = "[";
    bool first = true;
    for (const SubformulaRef& h : enumerate_two_mult(f->value)) {
      if (!first) json += ',';
      first = false;
      json += '"' + format_handle(h) + '"';
    }
    json += ']';
    *out = dup_string(json);
  });
}

rk_status rk_formula_subformula_render(const rk_formula* f, const char* handle,
                                       char** out) {
  if (rk_status s = need(f && handle && out, "rk_formula_subformula_render"))
    return s;
  return guarded([&] {
    *out = dup_string(render(subformula_at(f->value, parse_handle(handle))));
  });
}

rk_status rk_formula_make_nonredundant(const rk_formula* f, rk_formula** out) {
  if (rk_status s = need(f && out, "rk_formula_make_nonredundant")) return s;
  return guarded([&] { *out = new rk_formula{make_nonredundant(f->value)}; });
}

rk_status rk_formula_substitute_subformula(const rk_formula* f,
                                           const char* handle,
                                           const char* fresh_var,
                                           rk_formula** out) {
  if (rk_status s = need(f && handle && fresh_var && out,
                         "rk_formula_substitute_subformula"))
    return s;
  return guarded([&] {
    *out = new rk_formula{
        substitute_subformula(f->value, parse_handle(handle), fresh_var)};
  });
}

rk_status rk_formula_substitute_const(const rk_formula* f, const char* var,
                                      int value, rk_formula** out_formula,
                                      int* out_constant) {
  if (rk_status s = need(f && var && out_formula && out_constant,
                         "rk_formula_substitute_const"))
    return s;
  return guarded([&] {
    FoldResult r = substitute_const(f->value, var, value != 0);
    if (r.is_constant()) {
      *out_formula = nullptr;
      *out_constant = r.value() ? 1 : 0;
    } else {
      *out_formula = new rk_formula{r.formula()};
      *out_constant = -1;
    }
  });
}

rk_status rk_formula_from_sop(const rk_sop* s, rk_formula** out) {
  if (rk_status st = need(s && out, "rk_formula_from_sop")) return st;
  return guarded([&] { *out = new rk_formula{formula_of_sop(as_sopform(s))}; });
}

/* ---- sums of products -------------------------------------------------- */

rk_status rk_formula_csop(const rk_formula* f, rk_sop** out) {
  if (rk_status s = need(f && out, "rk_formula_csop")) return s;
  return guarded([&] { *out = new rk_sop{csop(f->value)}; });
}

rk_status rk_formula_sop(const rk_formula* f, rk_sop** out) {
  if (rk_status s = need(f && out, "rk_formula_sop")) return s;
  return guarded([&] { *out = new rk_sop{sop(f->value).terms()}; });
}

void rk_sop_free(rk_sop* s) { delete s; }

rk_status rk_sop_text(const rk_sop* s, char** out) {
  if (rk_status st = need(s && out, "rk_sop_text")) return st;
  return guarded([&] { *out = dup_string(terms_text(s->terms)); });
}

rk_status rk_sop_json(const rk_sop* s, char** out) {
  if (rk_status st = need(s && out, "rk_sop_json")) return st;
  return guarded([&] { *out = dup_string(terms_to_json(s->terms)); });
}

rk_status rk_sop_from_json(const char* json, rk_sop** out) {
  if (rk_status st = need(json && out, "rk_sop_from_json")) return st;
  return guarded([&] { *out = new rk_sop{terms_from_json(json)}; });
}

rk_status rk_sop_term_count(const rk_sop* s, long long* out) {
  if (rk_status st = need(s && out, "rk_sop_term_count")) return st;
  return guarded([&] { *out = static_cast<long long>(s->terms.size()); });
}

rk_status rk_sop_is_normal(const rk_sop* s, int* out) {
  if (rk_status st = need(s && out, "rk_sop_is_normal")) return st;
  return guarded([&] { *out = is_normal(as_sopform(s)) ? 1 : 0; });
}

rk_status rk_sop_read1(const rk_sop* s, int* out) {
  if (rk_status st = need(s && out, "rk_sop_read1")) return st;
  return guarded([&] { *out = read1_check(as_sopform(s)) ? 1 : 0; });
}

rk_status rk_formulas_equivalent(const rk_formula* f, const rk_formula* g,
                                 int* out) {
  if (rk_status s = need(f && g && out, "rk_formulas_equivalent")) return s;
  return guarded([&] { *out = equivalent(f->value, g->value) ? 1 : 0; });
}

rk_status rk_formula_chain_extension(const rk_formula* f, int n, int* out,
                                     char** offending_term) {
  if (rk_status s = need(f && out, "rk_formula_chain_extension")) return s;
  if (offending_term) *offending_term = nullptr;
  return guarded([&] {
    ChainExtensionCheck check = is_extension_of_chain(f->value, n);
    *out = check.ok ? 1 : 0;
    if (!check.ok && check.offending)
      set_optional(offending_term, check.offending->text());
  });
}

/* ---- graphs ------------------------------------------------------------ */

rk_status rk_graph_chain(int n, rk_graph** out) {
  if (rk_status s = need(out != nullptr, "rk_graph_chain")) return s;
  return guarded([&] { *out = new rk_graph{Graph::chain(n)}; });
}

rk_status rk_graph_grid(int rows, int cols, rk_graph** out) {
  if (rk_status s = need(out != nullptr, "rk_graph_grid")) return s;
  return guarded([&] { *out = new rk_graph{Graph::grid(rows, cols)}; });
}

rk_status rk_graph_complete_bipartite(int m, int n, rk_graph** out) {
  if (rk_status s = need(out != nullptr, "rk_graph_complete_bipartite")) return s;
  return guarded([&] { *out = new rk_graph{Graph::complete_bipartite(m, n)}; });
}

rk_status rk_graph_duplicate_vertex(const rk_graph* g, const char* v,
                                    const char* copy_name, rk_graph** out) {
  if (rk_status s = need(g && v && copy_name && out, "rk_graph_duplicate_vertex"))
    return s;
  return guarded(
      [&] { *out = new rk_graph{g->value.duplicate_vertex(v, copy_name)}; });
}

rk_status rk_graph_from_json(const char* json, rk_graph** out) {
  if (rk_status s = need(json && out, "rk_graph_from_json")) return s;
  return guarded([&] { *out = new rk_graph{graph_from_json(json)}; });
}

rk_status rk_graph_json(const rk_graph* g, char** out) {
  if (rk_status s = need(g && out, "rk_graph_json")) return s;
  return guarded([&] { *out = dup_string(graph_to_json(g->value)); });
}

void rk_graph_free(rk_graph* g) { delete g; }

rk_status rk_graph_triangle_free(const rk_graph* g, int* out) {
  if (rk_status s = need(g && out, "rk_graph_triangle_free")) return s;
  return guarded([&] { *out = is_triangle_free(g->value) ? 1 : 0; });
}

rk_status rk_graph_cograph(const rk_graph* g, int* out) {
  if (rk_status s = need(g && out, "rk_graph_cograph")) return s;
  return guarded([&] { *out = is_cograph(g->value) ? 1 : 0; });
}

rk_status rk_graph_sop(const rk_graph* g, rk_sop** out) {
  if (rk_status s = need(g && out, "rk_graph_sop")) return s;
  return guarded([&] { *out = new rk_sop{phi_of_graph(g->value).terms()}; });
}

rk_status rk_sop_graph(const rk_sop* s, rk_graph** out) {
  if (rk_status st = need(s && out, "rk_sop_graph")) return st;
  return guarded([&] { *out = new rk_graph{graph_of_function(as_sopform(s))}; });
}

/* ---- biclique covers --------------------------------------------------- */

rk_status rk_cover_chain_recursive(int n, rk_cover** out) {
  if (rk_status s = need(out != nullptr, "rk_cover_chain_recursive")) return s;
  return guarded([&] { *out = new rk_cover{chain_cover_recursive(n)}; });
}

rk_status rk_cover_grid_chessboard(int rows, int cols, rk_cover** out) {
  if (rk_status s = need(out != nullptr, "rk_cover_grid_chessboard")) return s;
  return guarded([&] { *out = new rk_cover{grid_chessboard_cover(rows, cols)}; });
}

rk_status rk_cover_from_json(const char* json, rk_cover** out) {
  if (rk_status s = need(json && out, "rk_cover_from_json")) return s;
  return guarded([&] { *out = new rk_cover{cover_from_json(json)}; });
}

rk_status rk_cover_json(const rk_cover* c, char** out) {
  if (rk_status s = need(c && out, "rk_cover_json")) return s;
  return guarded([&] { *out = dup_string(cover_to_json(c->value)); });
}

void rk_cover_free(rk_cover* c) { delete c; }

rk_status rk_cover_validate(const rk_graph* g, const rk_cover* c, int* valid,
                            int* multiplicity, char** reason) {
  if (rk_status s = need(g && c && valid && multiplicity, "rk_cover_validate"))
    return s;
  if (reason) *reason = nullptr;
  return guarded([&] {
    CoverValidation v = validate_cover(g->value, c->value);
    *valid = v.valid ? 1 : 0;
    *multiplicity = v.multiplicity;
    if (!v.valid) set_optional(reason, v.reason);
  });
}

rk_status rk_cover_formula(const rk_cover* c, rk_formula** out) {
  if (rk_status s = need(c && out, "rk_cover_formula")) return s;
  return guarded([&] { *out = new rk_formula{cover_to_formula(c->value)}; });
}

rk_status rk_cover_decide(const rk_graph* g, int k, long long node_budget,
                          rk_outcome* out, rk_cover** witness) {
  if (rk_status s = need(g && out, "rk_cover_decide")) return s;
  if (witness) *witness = nullptr;
  return guarded([&] {
    CoverSearchResult r = min_local_cover_decide(
        g->value, k, node_budget > 0 ? node_budget : 5'000'000);
    *out = to_outcome(r.outcome);
    if (r.outcome == CoverOutcome::Yes && witness)
      *witness = new rk_cover{*r.witness};
  });
}

rk_status rk_cover_extend_duplicate(const rk_cover* c, const char* v,
                                    const char* copy_name, rk_cover** out) {
  if (rk_status s =
          need(c && v && copy_name && out, "rk_cover_extend_duplicate"))
    return s;
  return guarded([&] {
    *out = new rk_cover{extend_cover_to_duplicate(c->value, v, copy_name)};
  });
}

/* ---- bounds ------------------------------------------------------------ */

rk_status rk_r_upper_bound(int n, int* out) {
  if (rk_status s = need(out != nullptr, "rk_r_upper_bound")) return s;
  return guarded([&] { *out = r_upper_bound(n); });
}

rk_status rk_r_lower_bound(int n, int* out) {
  if (rk_status s = need(out != nullptr, "rk_r_lower_bound")) return s;
  return guarded([&] { *out = r_lower_bound(n); });
}

rk_status rk_not_read_k_bound(long long n, int* out) {
  if (rk_status s = need(out != nullptr, "rk_not_read_k_bound")) return s;
  return guarded([&] { *out = not_read_k_bound(n); });
}

rk_status rk_peel_cascade_min_size(long long n, int k, long long* out) {
  if (rk_status s = need(out != nullptr, "rk_peel_cascade_min_size")) return s;
  return guarded([&] { *out = peel_cascade_min_size(n, k); });
}

/* ---- search ------------------------------------------------------------ */

rk_status rk_decide_readability(const rk_graph* g, int k, const rk_budget* b,
                                rk_outcome* out, rk_formula** witness,
                                char** stats_out) {
  if (rk_status s = need(g && out, "rk_decide_readability")) return s;
  if (witness) *witness = nullptr;
  if (stats_out) *stats_out = nullptr;
  return guarded([&] {
    SearchResult r = decide_readability(g->value, k, to_budget(b));
    *out = to_outcome(r.outcome);
    if (r.witness && witness) *witness = new rk_formula{*r.witness};
    if (stats_out) set_optional(stats_out, stats_json(r.stats));
  });
}

rk_status rk_has_read_k_extension(int n, int k, const rk_budget* b,
                                  rk_outcome* out, rk_formula** witness,
                                  char** stats_out) {
  if (rk_status s = need(out != nullptr, "rk_has_read_k_extension")) return s;
  if (witness) *witness = nullptr;
  if (stats_out) *stats_out = nullptr;
  return guarded([&] {
    SearchResult r = has_read_k_extension(n, k, to_budget(b));
    *out = to_outcome(r.outcome);
    if (r.witness && witness) *witness = new rk_formula{*r.witness};
    if (stats_out) set_optional(stats_out, stats_json(r.stats));
  });
}

rk_status rk_find_two_mult(const rk_formula* f, int i, int j, char** handle_out) {
  if (rk_status s = need(f && handle_out, "rk_find_two_mult")) return s;
  return guarded([&] {
    *handle_out =
        dup_string(format_handle(find_two_mult_for_edge(f->value, i, j)));
  });
}

rk_status rk_peel_step(const rk_formula* f, const char* handle, int n,
                       rk_formula** out) {
  if (rk_status s = need(f && handle && out, "rk_peel_step")) return s;
  return guarded([&] {
    *out = new rk_formula{peel_step(f->value, parse_handle(handle), n)};
  });
}

}  // extern "C"
