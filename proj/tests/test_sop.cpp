#include "core/sop.hpp"

#include <random>

#include "core/errors.hpp"
#include "doctest.h"
#include "support/corehelp.hpp"
#include "support/oracle.hpp"

using namespace readk;

namespace {

std::vector<std::vector<std::string>> term_lists(const std::vector<Term>& ts) {
  std::vector<std::vector<std::string>> out;
  for (const Term& t : ts) out.push_back(t.vars());
  return out;
}

}  // namespace

TEST_CASE("csop expands distributively with idempotency") {
  auto ts = csop(parse_formula("a1*(a1+a2)"));
  CHECK(term_lists(ts) ==
        std::vector<std::vector<std::string>>{{"a1"}, {"a1", "a2"}});

  ts = csop(parse_formula("a1+a2"));
  CHECK(term_lists(ts) == std::vector<std::vector<std::string>>{{"a1"}, {"a2"}});

  ts = csop(parse_formula("(a1+a2)*(a3+a4)"));
  CHECK(ts.size() == 4);
  CHECK(term_lists(ts) == std::vector<std::vector<std::string>>{
                              {"a1", "a3"}, {"a1", "a4"}, {"a2", "a3"}, {"a2", "a4"}});
}

TEST_CASE("csop honors the term budget") {
  // (a+b)(c+d)... with 25 factors would need 2^25 terms
  std::string text;
  for (int i = 0; i < 25; ++i) {
    if (i) text += "*";
    text += "(p" + std::to_string(i) + "+q" + std::to_string(i) + ")";
  }
  CHECK_THROWS_AS(csop(parse_formula(text)), BudgetExceeded);
}

TEST_CASE("sop applies absorption down to the minterms") {
  CHECK(sop(parse_formula("a1*(a1+a2)")).text() == "a1");
  CHECK(sop(parse_formula("a1*a2*a3")).text() == "a1*a2*a3");

  Formula f = parse_formula(
      "x1*(y1+y2+y3)+y3*(x2+x3)+x2*y2+x1*x2*x3+y1*y3");
  SopForm s = sop(f);
  // frozen from the truth-table oracle below
  CHECK(s.text() ==
        "x1*x2*x3 + x1*y1 + x1*y2 + x1*y3 + x2*y2 + x2*y3 + x3*y3 + y1*y3");
  auto expected = oracle::minimal_true_points(
      oracle::parse("x1*(y1+y2+y3)+y3*(x2+x3)+x2*y2+x1*x2*x3+y1*y3"));
  CHECK(term_lists(s.terms()) == expected);
}

TEST_CASE("sop equals the truth-table minimal true points on random formulas") {
  std::mt19937 rng(2024);
  for (int round = 0; round < 400; ++round) {
    std::string text = oracle::random_formula_text(rng, 8, 3);
    CHECK(term_lists(sop(parse_formula(text)).terms()) ==
          oracle::minimal_true_points(oracle::parse(text)));
  }
}

TEST_CASE("sop output is an antichain") {
  std::mt19937 rng(77);
  for (int round = 0; round < 200; ++round) {
    SopForm s = sop(parse_formula(oracle::random_formula_text(rng, 7, 3)));
    for (std::size_t i = 0; i < s.terms().size(); ++i)
      for (std::size_t j = 0; j < s.terms().size(); ++j)
        if (i != j) CHECK_FALSE(s.terms()[i].subset_of(s.terms()[j]));
  }
}

TEST_CASE("sop is invariant under normalization and redundancy removal") {
  std::mt19937 rng(31337);
  for (int round = 0; round < 200; ++round) {
    Formula raw = corehelp::random_raw_tree(rng, 6, 4);
    Formula norm = normalize_tree(raw);
    CHECK(sop(raw) == sop(norm));
    CHECK(sop(norm) == sop(make_nonredundant(norm)));
  }
}

TEST_CASE("equivalent compares canonical minterms") {
  CHECK(equivalent(parse_formula("(a1+a2)*(a1+a3)"), parse_formula("a1+a2*a3")));
  CHECK_FALSE(equivalent(parse_formula("a1"), parse_formula("a2")));
  CHECK(equivalent(parse_formula("(a1+a2)*(b1+b2)"),
                   parse_formula("a1*b1+a1*b2+a2*b1+a2*b2")));
}

TEST_CASE("graph_of_function joins co-occurring variables") {
  Graph tri = graph_of_function(sop(parse_formula("a1*a2*a3")));
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);

  Graph tri2 = graph_of_function(sop(parse_formula("a1*a2+a2*a3+a3*a1")));
  CHECK(tri.edges() == tri2.edges());

  Graph single = graph_of_function(sop(parse_formula("a1")));
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);
}

TEST_CASE("phi_of_graph lists maximal cliques") {
  Graph tri = graph_of_function(sop(parse_formula("a1*a2*a3")));
  CHECK(phi_of_graph(tri).text() == "a1*a2*a3");

  CHECK(phi_of_graph(Graph::chain(2)).text() == "x1*y1 + x1*y2 + x2*y2");

  Graph one = Graph::from_parts({"a1"}, {});
  CHECK(phi_of_graph(one).text() == "a1");

  // non-triangle-free path exercises the pivoted enumeration
  Graph diamond = Graph::from_parts(
      {"a", "b", "c", "d"},
      {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
  CHECK(phi_of_graph(diamond).text() == "a*b*c + b*c*d");
}

TEST_CASE("is_normal recognizes clique-representable term sets") {
  CHECK(is_normal(sop(parse_formula("a1*a2*a3"))));
  CHECK_FALSE(is_normal(sop(parse_formula("a1*a2+a2*a3+a3*a1"))));
}

TEST_CASE("triangle-free graphs always give normal forms") {
  std::mt19937 rng(555);
  int checked = 0;
  for (int round = 0; round < 200; ++round) {
    // random bipartite graph: triangle-free by construction
    std::uniform_int_distribution<int> size_pick(1, 4);
    int m = size_pick(rng), n = size_pick(rng);
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 1; i <= m; ++i) vs.push_back("u" + std::to_string(i));
    for (int j = 1; j <= n; ++j) vs.push_back("w" + std::to_string(j));
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j)
        if (coin(rng)) es.push_back({"u" + std::to_string(i), "w" + std::to_string(j)});
    Graph g = Graph::from_parts(std::move(vs), es);
    REQUIRE(is_triangle_free(g));
    if (g.edge_count() == 0) continue;
    CHECK(is_normal(phi_of_graph(g)));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("is_extension_of_chain accepts the worked three-chain extension") {
  Formula good = parse_formula("x1*(y1+y2+y3)+y3*(x2+x3)+x2*y2+x1*x2*x3+y1*y3");
  ChainExtensionCheck check = is_extension_of_chain(good, 3);
  CHECK(check.ok);

  Formula bad = parse_formula("x1*(y1+y2+y3)+y3*(x2+x3)+x2*y2+x2*y1*(x2+y3)");
  check = is_extension_of_chain(bad, 3);
  CHECK_FALSE(check.ok);
  REQUIRE(check.offending.has_value());
  CHECK(check.offending->text() == "x2*y1");

  CHECK(is_extension_of_chain(parse_formula("x1*y1"), 1).ok);
}

TEST_CASE("is_extension_of_chain rejects missing edges and stray variables") {
  ChainExtensionCheck check = is_extension_of_chain(parse_formula("x1*y1"), 2);
  CHECK_FALSE(check.ok);
  REQUIRE(check.offending.has_value());
  CHECK(check.offending->text() == "x1*y2");

  CHECK_THROWS_AS(is_extension_of_chain(parse_formula("x1*y1+q1*y1"), 1),
                  PreconditionFailed);
  CHECK_THROWS_AS(is_extension_of_chain(parse_formula("x1*y1+x5*y1"), 2),
                  PreconditionFailed);
}

TEST_CASE("the trivial extension passes for chains up to eight") {
  for (int n = 1; n <= 8; ++n) {
    Formula phi = formula_of_sop(phi_of_graph(Graph::chain(n)));
    CHECK(is_extension_of_chain(phi, n).ok);
  }
}

TEST_CASE("formula_of_sop spells terms back as a formula") {
  SopForm s = sop(parse_formula("a1*a2+a3"));
  CHECK(render(formula_of_sop(s)) == "a3+a1*a2");
  CHECK(sop(formula_of_sop(s)) == s);
  CHECK_THROWS_AS(formula_of_sop(SopForm()), std::invalid_argument);
}
