#include "core/formula.hpp"

#include <random>
#include <set>

#include "core/errors.hpp"
#include "doctest.h"
#include "support/corehelp.hpp"

using namespace readk;

TEST_CASE("parse_formula builds the expected trees") {
  Formula f = parse_formula("a1*(a2+a3*a4)*(a2+a5)");
  REQUIRE(f.is_prod());
  CHECK(f.children().size() == 3);
  CHECK(f.children()[0].is_var());
  CHECK(f.children()[0].var_name() == "a1");
  // the two sums: (a2+a5) and (a2+a3*a4), in canonical order
  CHECK(render(f) == "a1*(a2+a5)*(a2+a3*a4)");

  CHECK(render(parse_formula("a1")) == "a1");
  CHECK(parse_formula("a1").is_var());
  CHECK(render(parse_formula("((a1))")) == "a1");
  CHECK(parse_formula("((a1))").is_var());

  CHECK(render(parse_formula("  x1 * ( y1 + y2 ) ")) == "x1*(y1+y2)");
}

TEST_CASE("parse_formula rejects malformed input with a position") {
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("   "), ParseError);
  CHECK_THROWS_AS(parse_formula("a1+"), ParseError);
  CHECK_THROWS_AS(parse_formula("(a1"), ParseError);
  CHECK_THROWS_AS(parse_formula("a1)b"), ParseError);
  CHECK_THROWS_AS(parse_formula("1a"), ParseError);
  try {
    parse_formula("a1*");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("normalize_tree flattens, collapses and sorts") {
  Formula nested = Formula::sum(
      {Formula::sum({Formula::var("a"), Formula::var("b")}), Formula::var("c")});
  CHECK(render(normalize_tree(nested)) == "a+b+c");

  Formula unary = Formula::prod({Formula::sum({Formula::var("a1")})});
  Formula collapsed = normalize_tree(unary);
  CHECK(collapsed.is_var());
  CHECK(collapsed.var_name() == "a1");

  Formula fig = parse_formula("a1*(a2+a3*a4)*(a2+a5)");
  CHECK(normalize_tree(fig) == fig);

  Formula dup = Formula::sum({Formula::var("a"), Formula::var("a")});
  CHECK(render(normalize_tree(dup)) == "a");
}

TEST_CASE("normalize_tree is idempotent and truth-preserving on random trees") {
  std::mt19937 rng(7101);
  for (int round = 0; round < 300; ++round) {
    Formula raw = corehelp::random_raw_tree(rng, 6, 4);
    Formula once = normalize_tree(raw);
    CHECK(is_normalized(once));
    CHECK(normalize_tree(once) == once);
    CHECK(corehelp::truth_equal(raw, once));
    // occurrence counts never grow; equal when no duplicate siblings merged
    auto before = occurrences(raw).counts;
    auto after = occurrences(once).counts;
    for (const auto& [name, count] : after) CHECK(count <= before[name]);
  }
}

TEST_CASE("occurrences counts leaves and the read index") {
  OccurrenceProfile p = occurrences(parse_formula("a1*(a1+a2)"));
  CHECK(p.counts == std::map<std::string, int>{{"a1", 2}, {"a2", 1}});
  CHECK(p.read_index == 2);

  p = occurrences(parse_formula("a1"));
  CHECK(p.counts == std::map<std::string, int>{{"a1", 1}});
  CHECK(p.read_index == 1);

  p = occurrences(parse_formula("a1*(a2+a3*a4)*(a2+a5)"));
  CHECK(p.counts == std::map<std::string, int>{
                        {"a1", 1}, {"a2", 2}, {"a3", 1}, {"a4", 1}, {"a5", 1}});
  CHECK(p.read_index == 2);
}

TEST_CASE("is_isolated looks only at direct summands") {
  CHECK(is_isolated("a1", parse_formula("a1+a2*a3")));
  CHECK_FALSE(is_isolated("a2", parse_formula("a1+a2*a3")));
  CHECK_FALSE(is_isolated("a1", parse_formula("a1*(a2+a3)")));
}

TEST_CASE("enumerate_two_mult finds exactly the two-factor products") {
  Formula fig = parse_formula("a1*(a2+a3*a4)*(a2+a5)");
  std::vector<SubformulaRef> hits = enumerate_two_mult(fig);
  REQUIRE(hits.size() == 1);
  CHECK(render(subformula_at(fig, hits[0])) == "a3*a4");

  CHECK(enumerate_two_mult(parse_formula("a1")).empty());
  CHECK(enumerate_two_mult(parse_formula("a1*a2*a3")).empty());
  CHECK(enumerate_two_mult(parse_formula("a1*a2")).size() == 1);
}

TEST_CASE("for_each_subformula visits nodes and child subsets") {
  Formula f = parse_formula("a1*a2*a3");
  int whole = 0, subsets = 0;
  for_each_subformula(f, [&](const SubformulaRef& h) {
    if (h.kept.empty())
      ++whole;
    else
      ++subsets;
  });
  CHECK(whole == 4);    // the product and three leaves
  CHECK(subsets == 3);  // the three 2-element child subsets
}

TEST_CASE("make_nonredundant rewrites shared isolated factors") {
  CHECK(render(make_nonredundant(parse_formula("(a1+a2)*(a1+a3)"))) ==
        "a1+a2*a3");
  CHECK(render(make_nonredundant(parse_formula("a1*a2"))) == "a1*a2");

  Formula thrice = parse_formula("(a1+a2)*(a1+a3)*(a1+a4)");
  Formula reduced = make_nonredundant(thrice);
  CHECK(render(reduced) == "a1+a2*a3*a4");
  CHECK(corehelp::truth_equal(thrice, reduced));

  // a bare-leaf factor against a sum isolating the same variable
  CHECK(render(make_nonredundant(parse_formula("a1*(a1+a2)"))) == "a1");
  CHECK(render(make_nonredundant(parse_formula("a1*(a1+a2)*a3"))) == "a1*a3");
}

TEST_CASE("make_nonredundant is truth-preserving and never raises counts") {
  std::mt19937 rng(40991);
  for (int round = 0; round < 300; ++round) {
    Formula raw = normalize_tree(corehelp::random_raw_tree(rng, 6, 4));
    Formula reduced = make_nonredundant(raw);
    CHECK(is_nonredundant(reduced));
    CHECK(corehelp::truth_equal(raw, reduced));
    auto before = occurrences(raw).counts;
    for (const auto& [name, count] : occurrences(reduced).counts)
      CHECK(count <= before[name]);
  }
}

TEST_CASE("render and parse round-trip on random normalized trees") {
  std::mt19937 rng(90210);
  for (int round = 0; round < 300; ++round) {
    Formula f = normalize_tree(corehelp::random_raw_tree(rng, 8, 4));
    CHECK(parse_formula(render(f)) == f);
  }
}

TEST_CASE("substitute_subformula replaces the selected subtree") {
  Formula f = parse_formula("(x1+x2)*(y1+y2)+x1*x2");
  auto target = corehelp::find_node(f, [](const Formula& n) {
    return n.is_prod() && !n.children()[0].is_var();
  });
  REQUIRE(target.has_value());
  CHECK(render(substitute_subformula(f, *target, "z")) == "z+x1*x2");

  Formula whole = parse_formula("x1*y1");
  Formula z = substitute_subformula(whole, SubformulaRef{{}, {}}, "z");
  CHECK(z.is_var());
  CHECK(z.var_name() == "z");

  Formula fig = parse_formula("a1*(a2+a3*a4)*(a2+a5)");
  auto inner = corehelp::find_node(
      fig, [](const Formula& n) { return n.is_prod() && n.children().size() == 2; });
  REQUIRE(inner.has_value());
  CHECK(render(substitute_subformula(fig, *inner, "z")) == "a1*(a2+z)*(a2+a5)");
}

TEST_CASE("substitute_subformula rejects stale handles and clashing names") {
  Formula f = parse_formula("x1*y1+x2");
  CHECK_THROWS_AS(substitute_subformula(f, SubformulaRef{{5}, {}}, "z"),
                  std::invalid_argument);
  CHECK_THROWS_AS(substitute_subformula(f, SubformulaRef{{}, {}}, "x1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(substitute_subformula(f, SubformulaRef{{}, {0}}, "z"),
                  std::invalid_argument);
}

TEST_CASE("substitute_const folds identities and annihilators") {
  FoldResult r = substitute_const(parse_formula("(x1+x2)*y1"), "x2", false);
  REQUIRE_FALSE(r.is_constant());
  CHECK(render(r.formula()) == "x1*y1");

  r = substitute_const(parse_formula("x1*(y1+y2)"), "x1", true);
  REQUIRE_FALSE(r.is_constant());
  CHECK(render(r.formula()) == "y1+y2");

  r = substitute_const(parse_formula("x1*y1"), "y1", false);
  REQUIRE(r.is_constant());
  CHECK_FALSE(r.value());

  r = substitute_const(parse_formula("x1+y1"), "y1", true);
  REQUIRE(r.is_constant());
  CHECK(r.value());
}

TEST_CASE("substitute_const for distinct variables commutes") {
  std::mt19937 rng(5150);
  for (int round = 0; round < 200; ++round) {
    Formula f = normalize_tree(corehelp::random_raw_tree(rng, 5, 4));
    auto prof = occurrences(f);
    if (prof.counts.size() < 2) continue;
    auto it = prof.counts.begin();
    std::string v = it->first;
    std::string w = std::next(it)->first;

    auto chain = [&](const std::string& first, bool cfirst,
                     const std::string& second, bool csecond) {
      FoldResult r1 = substitute_const(f, first, cfirst);
      if (r1.is_constant()) return r1;
      return substitute_const(r1.formula(), second, csecond);
    };
    FoldResult a = chain(v, true, w, false);
    FoldResult b = chain(w, false, v, true);
    REQUIRE(a.is_constant() == b.is_constant());
    if (a.is_constant())
      CHECK(a.value() == b.value());
    else
      CHECK(a.formula() == b.formula());
  }
}

TEST_CASE("handles format and parse round-trip") {
  SubformulaRef h{{0, 2, 1}, {}};
  CHECK(format_handle(h) == "/0/2/1");
  CHECK(parse_handle("/0/2/1") == h);
  SubformulaRef s{{1}, {0, 2}};
  CHECK(format_handle(s) == "/1:0,2");
  CHECK(parse_handle("/1:0,2") == s);
  CHECK(parse_handle("/") == SubformulaRef{{}, {}});
  CHECK_THROWS_AS(parse_handle("0/1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_handle("/x"), std::invalid_argument);
}
