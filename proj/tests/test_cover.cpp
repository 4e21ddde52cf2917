#include "core/cover.hpp"

#include <random>

#include "core/errors.hpp"
#include "core/json_io.hpp"
#include "core/sop.hpp"
#include "doctest.h"

using namespace readk;

namespace {

BicliqueCover g3_hand_cover() {
  return BicliqueCover({{{"x1"}, {"y1"}},
                        {{"x1", "x2"}, {"y2", "y3"}},
                        {{"x3"}, {"y3"}}});
}

}  // namespace

TEST_CASE("validate_cover checks spans, coverage and multiplicity") {
  Graph g3 = Graph::chain(3);
  CoverValidation v = validate_cover(g3, g3_hand_cover());
  CHECK(v.valid);
  CHECK(v.multiplicity == 2);

  Graph k22 = Graph::complete_bipartite(2, 2);
  v = validate_cover(k22, BicliqueCover({{{"a1", "a2"}, {"b1", "b2"}}}));
  CHECK(v.valid);
  CHECK(v.multiplicity == 1);

  Graph g2 = Graph::chain(2);
  v = validate_cover(g2, BicliqueCover({{{"x1", "x2"}, {"y1", "y2"}}}));
  CHECK_FALSE(v.valid);
  CHECK(v.reason == "biclique spans the non-edge x2-y1");

  v = validate_cover(g2, BicliqueCover({{{"x1"}, {"y1", "y2"}}}));
  CHECK_FALSE(v.valid);
  CHECK(v.reason == "edge x2-y2 is uncovered");

  CHECK_THROWS_AS(validate_cover(g2, BicliqueCover({{{"zz"}, {"y1"}}})),
                  std::invalid_argument);
}

TEST_CASE("chain_cover_recursive stays within the halving bound") {
  BicliqueCover c1 = chain_cover_recursive(1);
  CHECK(c1.size() == 1);
  CHECK(c1.multiplicity() == 1);
  CHECK(validate_cover(Graph::chain(1), c1).valid);

  CHECK(validate_cover(Graph::chain(2), chain_cover_recursive(2)).multiplicity <= 2);

  for (int n = 1; n <= 64; ++n) {
    CoverValidation v = validate_cover(Graph::chain(n), chain_cover_recursive(n));
    CHECK(v.valid);
    CHECK(v.multiplicity <= r_upper_bound(n));
  }
  CHECK(validate_cover(Graph::chain(64), chain_cover_recursive(64)).multiplicity <= 7);

  CHECK_THROWS_AS(chain_cover_recursive(0), std::invalid_argument);
}

TEST_CASE("grid_chessboard_cover covers with multiplicity at most two") {
  BicliqueCover one = grid_chessboard_cover(1, 1);
  CHECK(one.size() == 1);
  CHECK(validate_cover(Graph::grid(1, 1), one).multiplicity == 1);

  CoverValidation v22 = validate_cover(Graph::grid(2, 2), grid_chessboard_cover(2, 2));
  CHECK(v22.valid);
  CHECK(v22.multiplicity == 2);
  CHECK(Graph::grid(2, 2).edge_count() == 12);

  for (int r = 1; r <= 5; ++r)
    for (int c = 1; c <= 5; ++c) {
      CoverValidation v = validate_cover(Graph::grid(r, c), grid_chessboard_cover(r, c));
      CHECK(v.valid);
      CHECK(v.multiplicity <= 2);
    }
}

TEST_CASE("cover_to_formula compiles bicliques into factor pairs") {
  Formula k = cover_to_formula(BicliqueCover({{{"a1", "a2"}, {"b1", "b2"}}}));
  CHECK(render(k) == "(a1+a2)*(b1+b2)");
  CHECK(read_index(k) == 1);

  Formula g3 = cover_to_formula(g3_hand_cover());
  CHECK(read_index(g3) == 2);
  CHECK(equivalent(g3, formula_of_sop(phi_of_graph(Graph::chain(3)))));

  CHECK(render(cover_to_formula(BicliqueCover({{{"x1"}, {"y1"}}}))) == "x1*y1");

  CHECK_THROWS_AS(cover_to_formula(BicliqueCover()), std::invalid_argument);
  CHECK_THROWS_AS(cover_to_formula(BicliqueCover({{{}, {"y1"}}})),
                  std::invalid_argument);
}

TEST_CASE("cover_to_formula read index equals the multiplicity") {
  for (int n = 1; n <= 10; ++n) {
    BicliqueCover c = chain_cover_recursive(n);
    Formula f = cover_to_formula(c);
    CHECK(read_index(f) == c.multiplicity());
    CHECK(sop(f) == phi_of_graph(Graph::chain(n)));
  }
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 3; ++c) {
      BicliqueCover cover = grid_chessboard_cover(r, c);
      Formula f = cover_to_formula(cover);
      CHECK(read_index(f) == cover.multiplicity());
      CHECK(sop(f) == phi_of_graph(Graph::grid(r, c)));
    }
}

TEST_CASE("min_local_cover_decide gives exact small answers") {
  CHECK(min_local_cover_decide(Graph::chain(2), 1).outcome == CoverOutcome::No);

  CoverSearchResult two = min_local_cover_decide(Graph::chain(2), 2);
  REQUIRE(two.outcome == CoverOutcome::Yes);
  CHECK(validate_cover(Graph::chain(2), *two.witness).valid);

  CoverSearchResult three = min_local_cover_decide(Graph::chain(3), 2);
  REQUIRE(three.outcome == CoverOutcome::Yes);
  CoverValidation v = validate_cover(Graph::chain(3), *three.witness);
  CHECK(v.valid);
  CHECK(v.multiplicity <= 2);
}

TEST_CASE("exact chain cover numbers are monotone for small n") {
  auto exact_r = [](int n) {
    for (int k = 1; k <= r_upper_bound(n); ++k)
      if (min_local_cover_decide(Graph::chain(n), k).outcome == CoverOutcome::Yes)
        return k;
    return -1;
  };
  int prev = 0;
  std::vector<int> values;
  for (int n = 1; n <= 4; ++n) {
    int r = exact_r(n);
    values.push_back(r);
    CHECK(r >= prev);
    CHECK(r >= r_lower_bound(n));
    CHECK(r <= r_upper_bound(n));
    prev = r;
  }
  CHECK(values == std::vector<int>{1, 2, 2, 2});
}

TEST_CASE("cover search reports unknown when the node budget is tiny") {
  CoverSearchResult r = min_local_cover_decide(Graph::chain(4), 2, 3);
  CHECK(r.outcome == CoverOutcome::Unknown);
}

TEST_CASE("cover search requires a bipartite host") {
  Graph odd = Graph::from_parts({"a", "b", "c"},
                                {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  CHECK_THROWS_AS(min_local_cover_decide(odd, 2), PreconditionFailed);
}

TEST_CASE("closed-form bounds") {
  CHECK(r_upper_bound(1) == 1);
  CHECK(r_upper_bound(3) == 3);
  CHECK(r_upper_bound(64) == 7);
  CHECK(r_lower_bound(3) == 2);
  CHECK(r_lower_bound(14) == 2);
  CHECK(r_lower_bound(15) == 3);
  CHECK(r_lower_bound(1) == 1);
  CHECK_THROWS_AS(r_upper_bound(0), std::invalid_argument);
  CHECK_THROWS_AS(r_lower_bound(-3), std::invalid_argument);
}

TEST_CASE("extend_cover_to_duplicate keeps validity and multiplicity") {
  Graph g3 = Graph::chain(3);
  BicliqueCover c = g3_hand_cover();
  BicliqueCover ext = extend_cover_to_duplicate(c, "x1", "x1b");
  Graph dup = g3.duplicate_vertex("x1", "x1b");
  CoverValidation v = validate_cover(dup, ext);
  CHECK(v.valid);
  CHECK(v.multiplicity == c.multiplicity());

  // multiplicity-1 vertex stays multiplicity 1
  BicliqueCover k = BicliqueCover({{{"a1", "a2"}, {"b1", "b2"}}});
  BicliqueCover kd = extend_cover_to_duplicate(k, "a1", "a3");
  Graph k22 = Graph::complete_bipartite(2, 2).duplicate_vertex("a1", "a3");
  v = validate_cover(k22, kd);
  CHECK(v.valid);
  CHECK(v.multiplicity == 1);

  CHECK_THROWS_AS(extend_cover_to_duplicate(k, "a1", "a1"), std::invalid_argument);
  CHECK_THROWS_AS(extend_cover_to_duplicate(k, "a1", "b1"), std::invalid_argument);
}

TEST_CASE("random duplications keep covers valid") {
  std::mt19937 rng(4242);
  for (int round = 0; round < 50; ++round) {
    std::uniform_int_distribution<int> n_pick(1, 5);
    int n = n_pick(rng);
    Graph g = Graph::chain(n);
    BicliqueCover c = chain_cover_recursive(n);
    std::uniform_int_distribution<int> v_pick(0, static_cast<int>(g.vertex_count()) - 1);
    std::string v = g.name_of(v_pick(rng));
    Graph dup = g.duplicate_vertex(v, "dup");
    BicliqueCover ext = extend_cover_to_duplicate(c, v, "dup");
    CoverValidation check = validate_cover(dup, ext);
    CHECK(check.valid);
    CHECK(check.multiplicity == c.multiplicity());
  }
}

TEST_CASE("cover json round-trips") {
  BicliqueCover c = g3_hand_cover();
  BicliqueCover back = cover_from_json(cover_to_json(c));
  CHECK(cover_to_json(back) == cover_to_json(c));
  CHECK_THROWS_AS(cover_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(cover_from_json("[{\"left\":[\"a\"]}]"), std::invalid_argument);
}
