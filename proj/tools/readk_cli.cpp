// readk command-line front end. Links only the shared library's C API.
//
// Exit codes: 0 success / definite yes, 1 definite negative, 2 usage or
// input error, 3 unknown (budget ran out), 4 internal error.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "readk.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitInternal = 4;

struct Options {
  bool json = false;
  rk_budget budget{0, 0, 0};
};

// Inline value, "@path" for a file, "-" for stdin.
std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw CLI::ValidationError("cannot open file: " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

struct StringOut {
  char* ptr = nullptr;
  ~StringOut() { rk_string_free(ptr); }
  char** slot() { return &ptr; }
  std::string str() const { return ptr ? ptr : ""; }
};

int fail(rk_status status) {
  std::cerr << "error: " << rk_last_error() << "\n";
  switch (status) {
    case RK_ERROR_SYNTAX:
    case RK_ERROR_INVALID_ARGUMENT:
      return kExitUsage;
    case RK_ERROR_PRECONDITION:
      return kExitNegative;
    case RK_ERROR_BUDGET:
      return kExitUnknown;
    default:
      return kExitInternal;
  }
}

#define RK_TRY(call)                                       \
  do {                                                     \
    rk_status rk_try_status = (call);                      \
    if (rk_try_status != RK_OK) exit(fail(rk_try_status)); \
  } while (0)

using FormulaPtr = std::unique_ptr<rk_formula, decltype(&rk_formula_free)>;
using SopPtr = std::unique_ptr<rk_sop, decltype(&rk_sop_free)>;
using GraphPtr = std::unique_ptr<rk_graph, decltype(&rk_graph_free)>;
using CoverPtr = std::unique_ptr<rk_cover, decltype(&rk_cover_free)>;

FormulaPtr wrap(rk_formula* f) { return {f, &rk_formula_free}; }
SopPtr wrap(rk_sop* s) { return {s, &rk_sop_free}; }
GraphPtr wrap(rk_graph* g) { return {g, &rk_graph_free}; }
CoverPtr wrap(rk_cover* c) { return {c, &rk_cover_free}; }

int parse_formula_arg(const std::string& arg, FormulaPtr& out) {
  rk_formula* raw = nullptr;
  rk_status s = rk_formula_parse(read_input(arg).c_str(), &raw);
  if (s != RK_OK) return fail(s);
  out = wrap(raw);
  return -1;
}

int parse_graph_arg(const std::string& arg, GraphPtr& out) {
  rk_graph* raw = nullptr;
  rk_status s = rk_graph_from_json(read_input(arg).c_str(), &raw);
  if (s != RK_OK) return fail(s);
  out = wrap(raw);
  return -1;
}

// Accepts either a bare cover JSON array or a {"graph":...,"cover":...}
// bundle produced by `cover recursive`/`cover chessboard` in pipelines.
int parse_cover_arg(const std::string& arg, CoverPtr& cover, GraphPtr& graph) {
  std::string text = read_input(arg);
  std::string trimmed = text;
  std::size_t at = trimmed.find_first_not_of(" \t\r\n");
  if (at != std::string::npos && trimmed[at] == '{') {
    // Bundle: pull out the two fields without a JSON dependency here by
    // delegating to the library for each piece.
    std::size_t cpos = trimmed.find("\"cover\"");
    std::size_t gpos = trimmed.find("\"graph\"");
    if (cpos == std::string::npos || gpos == std::string::npos) {
      std::cerr << "error: expected a cover array or a {graph, cover} bundle\n";
      return kExitUsage;
    }
    auto slice = [&](std::size_t from) {
      std::size_t start = trimmed.find_first_of("[{", from);
      int depth = 0;
      for (std::size_t i = start; i < trimmed.size(); ++i) {
        if (trimmed[i] == '[' || trimmed[i] == '{') ++depth;
        if (trimmed[i] == ']' || trimmed[i] == '}') {
          if (--depth == 0) return trimmed.substr(start, i - start + 1);
        }
      }
      return std::string();
    };
    std::string cover_text = slice(trimmed.find(':', cpos) + 1);
    std::string graph_text = slice(trimmed.find(':', gpos) + 1);
    rk_cover* rawc = nullptr;
    rk_status s = rk_cover_from_json(cover_text.c_str(), &rawc);
    if (s != RK_OK) return fail(s);
    cover = wrap(rawc);
    rk_graph* rawg = nullptr;
    s = rk_graph_from_json(graph_text.c_str(), &rawg);
    if (s != RK_OK) return fail(s);
    graph = wrap(rawg);
    return -1;
  }
  rk_cover* raw = nullptr;
  rk_status s = rk_cover_from_json(text.c_str(), &raw);
  if (s != RK_OK) return fail(s);
  cover = wrap(raw);
  return -1;
}

std::string bool_text(int v) { return v ? "true" : "false"; }

std::string outcome_text(rk_outcome o) {
  return o == RK_YES ? "yes" : o == RK_NO ? "no" : "unknown";
}

int outcome_exit(rk_outcome o) {
  return o == RK_YES ? kExitOk : o == RK_NO ? kExitNegative : kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"readk: monotone formula normalization, biclique covers and "
               "read-k readability tools"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "emit JSON instead of plain text");
  app.add_option("--budget-leaves", opt.budget.max_leaves,
                 "search: maximum leaves per candidate formula");
  app.add_option("--budget-candidates", opt.budget.max_candidates,
                 "search: maximum candidates / nodes to explore");
  app.add_option("--budget-ms", opt.budget.max_millis,
                 "search: wall-clock limit in milliseconds");

  std::string arg1, arg2, arg3;
  int int1 = 0, int2 = 0;
  long long big1 = 0;

  // parse / render -----------------------------------------------------
  auto* cmd_parse = app.add_subcommand("parse", "parse a formula and report its canonical form");
  cmd_parse->add_option("formula", arg1, "formula text, @file or -")->required();
  cmd_parse->callback([&] {
    FormulaPtr f{nullptr, &rk_formula_free};
    if (int rc = parse_formula_arg(arg1, f); rc >= 0) exit(rc);
    StringOut text;
    RK_TRY(rk_formula_render(f.get(), text.slot()));
    if (opt.json) {
      StringOut occ;
      RK_TRY(rk_formula_occurrences_json(f.get(), occ.slot()));
      std::cout << "{\"formula\":\"" << text.str() << "\",\"occurrences\":"
                << occ.str() << "}\n";
    } else {
      std::cout << text.str() << "\n";
    }
    exit(kExitOk);
  });

  auto* cmd_render = app.add_subcommand("render", "canonical minimal-parentheses form");
  cmd_render->add_option("formula", arg1)->required();
  cmd_render->callback([&] {
    FormulaPtr f{nullptr, &rk_formula_free};
    if (int rc = parse_formula_arg(arg1, f); rc >= 0) exit(rc);
    StringOut text;
    RK_TRY(rk_formula_render(f.get(), text.slot()));
    std::cout << text.str() << "\n";
    exit(kExitOk);
  });

  // sop / csop / equiv / nonredundant -----------------------------------
  auto sum_of_products = [&](bool complete) {
    FormulaPtr f{nullptr, &rk_formula_free};
    if (int rc = parse_formula_arg(arg1, f); rc >= 0) exit(rc);
    rk_sop* raw = nullptr;
    RK_TRY(complete ? rk_formula_csop(f.get(), &raw)
                    : rk_formula_sop(f.get(), &raw));
    SopPtr s = wrap(raw);
    StringOut text;
    RK_TRY(opt.json ? rk_sop_json(s.get(), text.slot())
                    : rk_sop_text(s.get(), text.slot()));
    std::cout << text.str() << "\n";
    exit(kExitOk);
  };
  auto* cmd_sop = app.add_subcommand("sop", "minterms (expansion + absorption)");
  cmd_sop->add_option("formula", arg1)->required();
  cmd_sop->callback([&] { sum_of_products(false); });
  auto* cmd_csop = app.add_subcommand("csop", "complete sum of products (no absorption)");
  cmd_csop->add_option("formula", arg1)->required();
  cmd_csop->callback([&] { sum_of_products(true); });

  auto* cmd_equiv = app.add_subcommand("equiv", "logical equivalence of two formulas");
  cmd_equiv->add_option("formula1", arg1)->required();
  cmd_equiv->add_option("formula2", arg2)->required();
  cmd_equiv->callback([&] {
    FormulaPtr f{nullptr, &rk_formula_free}, g{nullptr, &rk_formula_free};
    if (int rc = parse_formula_arg(arg1, f); rc >= 0) exit(rc);
    if (int rc = parse_formula_arg(arg2, g); rc >= 0) exit(rc);
    int eq = 0;
    RK_TRY(rk_formulas_equivalent(f.get(), g.get(), &eq));
    std::cout << (opt.json ? std::string("{\"equivalent\":") + (eq ? "true" : "false") + "}"
                           : std::string(eq ? "equivalent" : "not equivalent"))
              << "\n";
    exit(eq ? kExitOk : kExitNegative);
  });

  auto* cmd_nonred = app.add_subcommand("nonredundant", "rewrite away (v+p)*(v+q) factor pairs");
  cmd_nonred->add_option("formula", arg1)->required();
  cmd_nonred->callback([&] {
    FormulaPtr f{nullptr, &rk_formula_free};
    if (int rc = parse_formula_arg(arg1, f); rc >= 0) exit(rc);
    rk_formula* raw = nullptr;
    RK_TRY(rk_formula_make_nonredundant(f.get(), &raw));
    FormulaPtr g = wrap(raw);
    StringOut text;
    RK_TRY(rk_formula_render(g.get(), text.slot()));
    std::cout << text.str() << "\n";
    exit(kExitOk);
  });

  // gen ------------------------------------------------------------------
  auto* cmd_gen = app.add_subcommand("gen", "generate a graph as JSON");
  auto* gen_chain = cmd_gen->add_subcommand("chain", "chain graph on x1..xn, y1..yn");
  gen_chain->add_option("n", int1)->required();
  gen_chain->callback([&] {
    rk_graph* raw = nullptr;
    RK_TRY(rk_graph_chain(int1, &raw));
    GraphPtr g = wrap(raw);
    StringOut text;
    RK_TRY(rk_graph_json(g.get(), text.slot()));
    std::cout << text.str() << "\n";
    exit(kExitOk);
  });
  auto* gen_grid = cmd_gen->add_subcommand("grid", "lattice counted in squares");
  gen_grid->add_option("rows", int1)->required();
  gen_grid->add_option("cols", int2)->required();
  gen_grid->callback([&] {
    rk_graph* raw = nullptr;
    RK_TRY(rk_graph_grid(int1, int2, &raw));
    GraphPtr g = wrap(raw);
    StringOut text;
    RK_TRY(rk_graph_json(g.get(), text.slot()));
    std::cout << text.str() << "\n";
    exit(kExitOk);
  });
  auto* gen_kbip = cmd_gen->add_subcommand("kbip", "complete bipartite K_{m,n}");
  gen_kbip->add_option("m", int1)->required();
  gen_kbip->add_option("n", int2)->required();
  gen_kbip->callback([&] {
    rk_graph* raw = nullptr;
    RK_TRY(rk_graph_complete_bipartite(int1, int2, &raw));
    GraphPtr g = wrap(raw);
    StringOut text;
    RK_TRY(rk_graph_json(g.get(), text.slot()));
    std::cout << text.str() << "\n";
    exit(kExitOk);
  });

  // graph-check ------------------------------------------------------------
  auto* cmd_gcheck = app.add_subcommand("graph-check", "predicates on a graph JSON");
  auto graph_predicate = [&](const char* name, auto fn) {
    GraphPtr g{nullptr, &rk_graph_free};
    if (int rc = parse_graph_arg(arg1, g); rc >= 0) exit(rc);
    int result = 0;
    RK_TRY(fn(g.get(), &result));
    if (opt.json)
      std::cout << "{\"" << name << "\":" << (result ? "true" : "false") << "}\n";
    else
      std::cout << bool_text(result) << "\n";
    exit(result ? kExitOk : kExitNegative);
  };
  auto* gc_tf = cmd_gcheck->add_subcommand("trianglefree", "no 3-clique");
  gc_tf->add_option("graph", arg1, "graph JSON, @file or -")->required();
  gc_tf->callback([&] { graph_predicate("triangle_free", rk_graph_triangle_free); });
  auto* gc_cog = cmd_gcheck->add_subcommand("cograph", "no induced 4-vertex path");
  gc_cog->add_option("graph", arg1)->required();
  gc_cog->callback([&] { graph_predicate("cograph", rk_graph_cograph); });
  auto* gc_read1 = cmd_gcheck->add_subcommand("read1", "maximal-clique form is read-1");
  gc_read1->add_option("graph", arg1)->required();
  gc_read1->callback([&] {
    GraphPtr g{nullptr, &rk_graph_free};
    if (int rc = parse_graph_arg(arg1, g); rc >= 0) exit(rc);
    rk_sop* raw = nullptr;
    RK_TRY(rk_graph_sop(g.get(), &raw));
    SopPtr s = wrap(raw);
    int result = 0;
    RK_TRY(rk_sop_read1(s.get(), &result));
    if (opt.json)
      std::cout << "{\"read1\":" << (result ? "true" : "false") << "}\n";
    else
      std::cout << bool_text(result) << "\n";
    exit(result ? kExitOk : kExitNegative);
  });

  // cover ------------------------------------------------------------------
  auto* cmd_cover = app.add_subcommand("cover", "biclique cover construction and checks");
  auto emit_cover_bundle = [&](rk_cover* rawc, const std::string& graph_json) {
    CoverPtr c = wrap(rawc);
    StringOut text;
    RK_TRY(rk_cover_json(c.get(), text.slot()));
    if (!graph_json.empty())
      std::cout << "{\"graph\":" << graph_json << ",\"cover\":" << text.str()
                << "}\n";
    else
      std::cout << text.str() << "\n";
    exit(kExitOk);
  };
  auto* cov_rec = cmd_cover->add_subcommand(
      "recursive", "halving cover of a chain graph (give n, or pipe `gen chain`)");
  cov_rec->add_option("n_or_graph", arg1, "chain size n, or graph JSON/@file/-")
      ->required();
  cov_rec->callback([&] {
    std::string in = arg1;
    int n = 0;
    std::string graph_json;
    try {
      std::size_t used = 0;
      n = std::stoi(in, &used);
      if (used != in.size()) n = 0;
    } catch (...) {
      n = 0;
    }
    if (n == 0) {
      GraphPtr g{nullptr, &rk_graph_free};
      if (int rc = parse_graph_arg(arg1, g); rc >= 0) exit(rc);
      StringOut gtext;
      RK_TRY(rk_graph_json(g.get(), gtext.slot()));
      graph_json = gtext.str();
      // Infer n from x-side size; validation happens in `cover validate`.
      std::size_t pos = graph_json.find("\"x_side\"");
      if (pos == std::string::npos) {
        std::cerr << "error: graph is not a tagged chain graph\n";
        exit(kExitUsage);
      }
      int count = 0;
      for (std::size_t i = graph_json.find('[', pos);
           i < graph_json.size() && graph_json[i] != ']'; ++i)
        if (graph_json[i] == '"') ++count;
      n = count / 2;
    }
    rk_cover* raw = nullptr;
    RK_TRY(rk_cover_chain_recursive(n, &raw));
    emit_cover_bundle(raw, graph_json);
  });
  auto* cov_chess = cmd_cover->add_subcommand("chessboard", "grid cover from black squares");
  cov_chess->add_option("rows", int1)->required();
  cov_chess->add_option("cols", int2)->required();
  cov_chess->callback([&] {
    rk_cover* raw = nullptr;
    RK_TRY(rk_cover_grid_chessboard(int1, int2, &raw));
    rk_graph* rawg = nullptr;
    RK_TRY(rk_graph_grid(int1, int2, &rawg));
    GraphPtr g = wrap(rawg);
    StringOut gtext;
    RK_TRY(rk_graph_json(g.get(), gtext.slot()));
    emit_cover_bundle(raw, gtext.str());
  });
  auto* cov_val = cmd_cover->add_subcommand("validate", "check a cover against its host");
  cov_val->add_option("cover", arg1, "cover JSON or {graph,cover} bundle, @file or -")
      ->required();
  cov_val->add_option("--graph", arg2, "host graph JSON when not bundled");
  cov_val->callback([&] {
    CoverPtr c{nullptr, &rk_cover_free};
    GraphPtr g{nullptr, &rk_graph_free};
    if (int rc = parse_cover_arg(arg1, c, g); rc >= 0) exit(rc);
    if (!g && arg2.empty()) {
      std::cerr << "error: no host graph (use --graph or a bundle)\n";
      exit(kExitUsage);
    }
    if (!g) {
      if (int rc = parse_graph_arg(arg2, g); rc >= 0) exit(rc);
    }
    int valid = 0, multiplicity = 0;
    StringOut reason;
    RK_TRY(rk_cover_validate(g.get(), c.get(), &valid, &multiplicity, reason.slot()));
    if (opt.json)
      std::cout << "{\"valid\":" << (valid ? "true" : "false")
                << ",\"multiplicity\":" << multiplicity
                << (valid ? "" : ",\"reason\":\"" + reason.str() + "\"") << "}\n";
    else if (valid)
      std::cout << "valid multiplicity=" << multiplicity << "\n";
    else
      std::cout << "invalid (" << reason.str() << ")\n";
    exit(valid ? kExitOk : kExitNegative);
  });
  auto* cov_json = cmd_cover->add_subcommand("tojson", "re-emit a cover in canonical JSON");
  cov_json->add_option("cover", arg1)->required();
  cov_json->callback([&] {
    CoverPtr c{nullptr, &rk_cover_free};
    GraphPtr g{nullptr, &rk_graph_free};
    if (int rc = parse_cover_arg(arg1, c, g); rc >= 0) exit(rc);
    StringOut text;
    RK_TRY(rk_cover_json(c.get(), text.slot()));
    std::cout << text.str() << "\n";
    exit(kExitOk);
  });
  auto* cov_formula = cmd_cover->add_subcommand("toformula", "compile a cover to a formula");
  cov_formula->add_option("cover", arg1)->required();
  cov_formula->callback([&] {
    CoverPtr c{nullptr, &rk_cover_free};
    GraphPtr g{nullptr, &rk_graph_free};
    if (int rc = parse_cover_arg(arg1, c, g); rc >= 0) exit(rc);
    rk_formula* raw = nullptr;
    RK_TRY(rk_cover_formula(c.get(), &raw));
    FormulaPtr f = wrap(raw);
    StringOut text;
    RK_TRY(rk_formula_render(f.get(), text.slot()));
    std::cout << text.str() << "\n";
    exit(kExitOk);
  });
  auto* cov_decide = cmd_cover->add_subcommand(
      "decide", "exact search for a cover with multiplicity <= k");
  cov_decide->add_option("graph", arg1)->required();
  cov_decide->add_option("k", int1)->required();
  cov_decide->callback([&] {
    GraphPtr g{nullptr, &rk_graph_free};
    if (int rc = parse_graph_arg(arg1, g); rc >= 0) exit(rc);
    rk_outcome outcome;
    rk_cover* raw = nullptr;
    RK_TRY(rk_cover_decide(g.get(), int1, opt.budget.max_candidates, &outcome, &raw));
    CoverPtr c = wrap(raw);
    if (outcome == RK_YES) {
      StringOut text;
      RK_TRY(rk_cover_json(c.get(), text.slot()));
      if (opt.json)
        std::cout << "{\"outcome\":\"yes\",\"cover\":" << text.str() << "}\n";
      else
        std::cout << "yes " << text.str() << "\n";
    } else {
      if (opt.json)
        std::cout << "{\"outcome\":\"" << outcome_text(outcome) << "\"}\n";
      else
        std::cout << outcome_text(outcome) << "\n";
    }
    exit(outcome_exit(outcome));
  });

  // search -------------------------------------------------------------
  auto* cmd_search = app.add_subcommand("search", "exhaustive readability machinery");
  auto emit_search = [&](rk_outcome outcome, rk_formula* witness_raw,
                         const std::string& stats) {
    FormulaPtr w = wrap(witness_raw);
    std::string witness_text;
    if (w) {
      StringOut text;
      RK_TRY(rk_formula_render(w.get(), text.slot()));
      witness_text = text.str();
    }
    if (opt.json) {
      std::cout << "{\"outcome\":\"" << outcome_text(outcome) << "\"";
      if (!witness_text.empty()) std::cout << ",\"witness\":\"" << witness_text << "\"";
      std::cout << ",\"stats\":" << (stats.empty() ? "{}" : stats) << "}\n";
    } else {
      std::cout << outcome_text(outcome);
      if (!witness_text.empty()) std::cout << " " << witness_text;
      std::cout << "\n";
    }
    exit(outcome_exit(outcome));
  };
  auto* s_read = cmd_search->add_subcommand("readability", "is the graph read-k?");
  s_read->add_option("graph", arg1)->required();
  s_read->add_option("k", int1)->required();
  s_read->callback([&] {
    GraphPtr g{nullptr, &rk_graph_free};
    if (int rc = parse_graph_arg(arg1, g); rc >= 0) exit(rc);
    rk_outcome outcome;
    rk_formula* w = nullptr;
    StringOut stats;
    RK_TRY(rk_decide_readability(g.get(), int1, &opt.budget, &outcome, &w, stats.slot()));
    emit_search(outcome, w, stats.str());
  });
  auto* s_ext = cmd_search->add_subcommand("extension", "does the chain on n have a read-k extension?");
  s_ext->add_option("n", int1)->required();
  s_ext->add_option("k", int2)->required();
  s_ext->callback([&] {
    rk_outcome outcome;
    rk_formula* w = nullptr;
    StringOut stats;
    RK_TRY(rk_has_read_k_extension(int1, int2, &opt.budget, &outcome, &w, stats.slot()));
    emit_search(outcome, w, stats.str());
  });
  auto* s_2mult = cmd_search->add_subcommand(
      "2mult", "locate a two-factor product isolating x_i and y_j");
  s_2mult->add_option("formula", arg1)->required();
  s_2mult->add_option("i", int1)->required();
  s_2mult->add_option("j", int2)->required();
  s_2mult->callback([&] {
    FormulaPtr f{nullptr, &rk_formula_free};
    if (int rc = parse_formula_arg(arg1, f); rc >= 0) exit(rc);
    StringOut handle;
    RK_TRY(rk_find_two_mult(f.get(), int1, int2, handle.slot()));
    StringOut sub;
    RK_TRY(rk_formula_subformula_render(f.get(), handle.str().c_str(), sub.slot()));
    if (opt.json)
      std::cout << "{\"handle\":\"" << handle.str() << "\",\"subformula\":\""
                << sub.str() << "\"}\n";
    else
      std::cout << handle.str() << " " << sub.str() << "\n";
    exit(kExitOk);
  });
  auto* s_peel = cmd_search->add_subcommand(
      "peel", "peel one read layer off a chain extension at a handle");
  s_peel->add_option("formula", arg1)->required();
  s_peel->add_option("handle", arg3)->required();
  s_peel->add_option("n", int1)->required();
  s_peel->callback([&] {
    FormulaPtr f{nullptr, &rk_formula_free};
    if (int rc = parse_formula_arg(arg1, f); rc >= 0) exit(rc);
    rk_formula* raw = nullptr;
    RK_TRY(rk_peel_step(f.get(), arg3.c_str(), int1, &raw));
    FormulaPtr peeled = wrap(raw);
    StringOut text;
    RK_TRY(rk_formula_render(peeled.get(), text.slot()));
    std::cout << text.str() << "\n";
    exit(kExitOk);
  });

  // bounds ---------------------------------------------------------------
  auto* cmd_bounds = app.add_subcommand("bounds", "closed-form chain bounds for n");
  cmd_bounds->add_option("n", big1)->required();
  cmd_bounds->callback([&] {
    int upper = 0, lower = 0, nrk = 0;
    RK_TRY(rk_r_upper_bound(static_cast<int>(big1), &upper));
    RK_TRY(rk_r_lower_bound(static_cast<int>(big1), &lower));
    RK_TRY(rk_not_read_k_bound(big1, &nrk));
    if (opt.json)
      std::cout << "{\"r_upper\":" << upper << ",\"r_lower\":" << lower
                << ",\"not_read_k\":" << nrk << "}\n";
    else
      std::cout << "r_upper=" << upper << " r_lower=" << lower
                << " not_read_k=" << nrk << "\n";
    exit(kExitOk);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return kExitOk;
}
