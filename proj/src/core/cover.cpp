#include "core/cover.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "core/errors.hpp"

namespace readk {

bool operator==(const Biclique& a, const Biclique& b) {
  return a.left == b.left && a.right == b.right;
}
bool operator<(const Biclique& a, const Biclique& b) {
  if (a.left != b.left) return a.left < b.left;
  return a.right < b.right;
}

BicliqueCover::BicliqueCover(std::vector<Biclique> bicliques)
    : bicliques_(std::move(bicliques)) {
  for (Biclique& b : bicliques_) {
    std::sort(b.left.begin(), b.left.end());
    b.left.erase(std::unique(b.left.begin(), b.left.end()), b.left.end());
    std::sort(b.right.begin(), b.right.end());
    b.right.erase(std::unique(b.right.begin(), b.right.end()), b.right.end());
  }
}

std::vector<std::pair<std::string, int>> BicliqueCover::multiplicity_profile() const {
  std::map<std::string, int> counts;
  for (const Biclique& b : bicliques_) {
    std::set<std::string> members(b.left.begin(), b.left.end());
    members.insert(b.right.begin(), b.right.end());
    for (const std::string& v : members) ++counts[v];
  }
  return {counts.begin(), counts.end()};
}

int BicliqueCover::multiplicity() const {
  int mx = 0;
  for (const auto& [v, n] : multiplicity_profile()) {
    (void)v;
    mx = std::max(mx, n);
  }
  return mx;
}

CoverValidation validate_cover(const Graph& g, const BicliqueCover& c) {
  CoverValidation out;
  out.multiplicity = c.multiplicity();
  std::set<std::pair<std::string, std::string>> spanned;
  for (const Biclique& b : c.bicliques()) {
    for (const std::string& v : b.left)
      if (!g.has_vertex(v))
        throw std::invalid_argument("cover references unknown vertex: " + v);
    for (const std::string& v : b.right)
      if (!g.has_vertex(v))
        throw std::invalid_argument("cover references unknown vertex: " + v);
    for (const std::string& l : b.left)
      for (const std::string& r : b.right) {
        if (l == r || !g.has_edge(l, r)) {
          out.valid = false;
          out.reason = "biclique spans the non-edge " + std::min(l, r) + "-" +
                       std::max(l, r);
          return out;
        }
        spanned.insert({std::min(l, r), std::max(l, r)});
      }
  }
  for (const auto& e : g.edges())
    if (!spanned.count(e)) {
      out.valid = false;
      out.reason = "edge " + e.first + "-" + e.second + " is uncovered";
      return out;
    }
  out.valid = true;
  return out;
}

// ---------------------------------------------------------------------------
// constructions

namespace {

void chain_cover_rec(int lo, int hi, std::vector<Biclique>& out) {
  if (lo > hi) return;
  if (lo == hi) {
    out.push_back({{"x" + std::to_string(lo)}, {"y" + std::to_string(lo)}});
    return;
  }
  int mid = lo + (hi - lo) / 2;  // first half lo..mid, second half mid+1..hi
  Biclique cross;
  for (int i = lo; i <= mid; ++i) cross.left.push_back("x" + std::to_string(i));
  for (int j = mid + 1; j <= hi; ++j) cross.right.push_back("y" + std::to_string(j));
  out.push_back(std::move(cross));
  chain_cover_rec(lo, mid, out);
  chain_cover_rec(mid + 1, hi, out);
}

}  // namespace

BicliqueCover chain_cover_recursive(int n) {
  if (n < 1) throw std::invalid_argument("chain cover needs n >= 1");
  std::vector<Biclique> out;
  chain_cover_rec(1, n, out);
  return BicliqueCover(std::move(out));
}

BicliqueCover grid_chessboard_cover(int rows, int cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("grid cover needs positive dimensions");
  auto name = [](int r, int c) {
    return "v" + std::to_string(r) + "_" + std::to_string(c);
  };
  using Edge = std::pair<std::string, std::string>;
  auto mk_edge = [&](int r1, int c1, int r2, int c2) {
    std::string a = name(r1, c1), b = name(r2, c2);
    return a < b ? Edge{a, b} : Edge{b, a};
  };

  std::vector<Biclique> out;
  std::set<Edge> covered;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if ((r + c) % 2 != 0) continue;  // white square
      // Bounding cycle of the black square as a K_{2,2}: one diagonal
      // against the other.
      out.push_back({{name(r, c), name(r + 1, c + 1)},
                     {name(r, c + 1), name(r + 1, c)}});
      covered.insert(mk_edge(r, c, r, c + 1));
      covered.insert(mk_edge(r, c, r + 1, c));
      covered.insert(mk_edge(r + 1, c + 1, r, c + 1));
      covered.insert(mk_edge(r + 1, c + 1, r + 1, c));
    }

  // Remaining edges all lie on the boundary next to white squares. At most
  // two of them meet at any vertex (only at corners), so pair those into a
  // K_{1,2} and patch the rest with K_{1,1}.
  std::vector<Edge> uncovered;
  Graph host = Graph::grid(rows, cols);
  for (const Edge& e : host.edges())
    if (!covered.count(e)) uncovered.push_back(e);
  std::sort(uncovered.begin(), uncovered.end());
  std::vector<bool> patched(uncovered.size(), false);
  for (std::size_t i = 0; i < uncovered.size(); ++i) {
    if (patched[i]) continue;
    bool paired = false;
    for (std::size_t j = i + 1; j < uncovered.size() && !paired; ++j) {
      if (patched[j]) continue;
      std::vector<std::string> shared;
      for (const std::string& a : {uncovered[i].first, uncovered[i].second})
        for (const std::string& b : {uncovered[j].first, uncovered[j].second})
          if (a == b) shared.push_back(a);
      if (shared.size() != 1) continue;
      const std::string& center = shared.front();
      std::vector<std::string> tips;
      for (const std::string& a : {uncovered[i].first, uncovered[i].second,
                                   uncovered[j].first, uncovered[j].second})
        if (a != center) tips.push_back(a);
      out.push_back({{center}, {tips[0], tips[1]}});
      patched[i] = patched[j] = true;
      paired = true;
    }
    if (!paired) {
      out.push_back({{uncovered[i].first}, {uncovered[i].second}});
      patched[i] = true;
    }
  }
  return BicliqueCover(std::move(out));
}

Formula cover_to_formula(const BicliqueCover& c) {
  if (c.size() == 0)
    throw std::invalid_argument("cannot compile an empty cover to a formula");
  std::vector<Formula> summands;
  for (const Biclique& b : c.bicliques()) {
    if (b.left.empty() || b.right.empty())
      throw std::invalid_argument("cover has a biclique with an empty side");
    auto side_sum = [](const std::vector<std::string>& names) {
      std::vector<Formula> leaves;
      for (const std::string& v : names) leaves.push_back(Formula::var(v));
      return leaves.size() == 1 ? leaves.front() : Formula::sum(std::move(leaves));
    };
    summands.push_back(Formula::prod({side_sum(b.left), side_sum(b.right)}));
  }
  Formula f =
      summands.size() == 1 ? summands.front() : Formula::sum(std::move(summands));
  return normalize_tree(f);
}

// ---------------------------------------------------------------------------
// exact search

namespace {

struct CoverSearch {
  const Graph& g;
  int k;
  long long budget;
  long long nodes = 0;
  std::vector<std::pair<int, int>> edges;   // (x vertex, y vertex), sorted
  std::vector<int> used;                    // bicliques containing the vertex
  std::vector<bool> covered;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> chosen;

  bool out_of_budget = false;

  explicit CoverSearch(const Graph& graph, int kk, long long b)
      : g(graph), k(kk), budget(b) {}

  int edge_index(int x, int y) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(x, y));
    if (it == edges.end() || *it != std::make_pair(x, y)) return -1;
    return static_cast<int>(it - edges.begin());
  }

  // All bicliques (L, R) with x in L, y in R, spanning only edges, whose
  // members all still have budget. Candidates are built by choosing
  // R within N(x) and then L within the common neighborhood of R.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> candidates(int x, int y) {
    std::vector<int> pool_r;
    for (int w : g.neighbors(x))
      if (used[w] < k) pool_r.push_back(w);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    std::vector<int> r_set{y};
    std::function<void(std::size_t)> pick_r = [&](std::size_t from) {
      // common neighborhood of r_set, filtered by budget
      std::vector<int> common;
      for (int w : g.neighbors(y))
        if (used[w] < k) common.push_back(w);
      for (int r : r_set) {
        if (r == y) continue;
        std::vector<int> next;
        for (int w : common)
          if (g.adjacent(r, w)) next.push_back(w);
        common = std::move(next);
      }
      std::vector<int> l_set{x};
      std::function<void(std::size_t)> pick_l = [&](std::size_t lfrom) {
        std::vector<int> l_sorted = l_set;
        std::vector<int> r_sorted = r_set;
        std::sort(l_sorted.begin(), l_sorted.end());
        std::sort(r_sorted.begin(), r_sorted.end());
        out.push_back({std::move(l_sorted), std::move(r_sorted)});
        for (std::size_t i = lfrom; i < common.size(); ++i) {
          if (common[i] == x) continue;
          l_set.push_back(common[i]);
          pick_l(i + 1);
          l_set.pop_back();
        }
      };
      pick_l(0);
      for (std::size_t i = from; i < pool_r.size(); ++i) {
        if (pool_r[i] == y) continue;
        r_set.push_back(pool_r[i]);
        pick_r(i + 1);
        r_set.pop_back();
      }
    };
    pick_r(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  long long new_coverage(const std::vector<int>& l, const std::vector<int>& r) {
    long long cnt = 0;
    for (int a : l)
      for (int b : r) {
        int ei = edge_index(a, b);  // edges are stored as (x vertex, y vertex)
        if (ei >= 0 && !covered[ei]) ++cnt;
      }
    return cnt;
  }

  bool dead_end() const {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (covered[e]) continue;
      if (used[edges[e].first] >= k || used[edges[e].second] >= k) return true;
    }
    return false;
  }

  bool search() {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    int target = -1;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (!covered[e]) {
        target = static_cast<int>(e);
        break;
      }
    if (target < 0) return true;
    if (dead_end()) return false;

    auto [x, y] = edges[target];
    auto cands = candidates(x, y);
    // Try larger fresh coverage first; ties break canonically.
    std::stable_sort(cands.begin(), cands.end(),
                     [&](const auto& a, const auto& b) {
                       return new_coverage(a.first, a.second) >
                              new_coverage(b.first, b.second);
                     });
    for (const auto& [l, r] : cands) {
      std::vector<int> touched;
      std::set<int> members(l.begin(), l.end());
      members.insert(r.begin(), r.end());
      bool fits = true;
      for (int v : members)
        if (used[v] >= k) fits = false;
      if (!fits) continue;
      std::vector<int> newly;
      for (int a : l)
        for (int b : r) {
          int ei = edge_index(a, b);
          if (ei >= 0 && !covered[ei]) {
            covered[ei] = true;
            newly.push_back(ei);
          }
        }
      for (int v : members) {
        ++used[v];
        touched.push_back(v);
      }
      chosen.push_back({l, r});
      if (search()) return true;
      chosen.pop_back();
      for (int v : touched) --used[v];
      for (int ei : newly) covered[ei] = false;
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

CoverSearchResult min_local_cover_decide(const Graph& g, int k,
                                         long long node_budget) {
  if (k < 0) throw std::invalid_argument("multiplicity bound must be >= 0");
  auto sides = g.bipartition();
  if (!sides)
    throw PreconditionFailed("exact cover search requires a bipartite graph");

  CoverSearchResult result;
  if (g.edge_count() == 0) {
    result.outcome = CoverOutcome::Yes;
    result.witness = BicliqueCover{};
    return result;
  }
  if (k == 0) {
    result.outcome = CoverOutcome::No;
    return result;
  }

  CoverSearch s(g, k, node_budget);
  for (const auto& [a, b] : g.edges()) {
    int ia = g.index_of(a), ib = g.index_of(b);
    if ((*sides)[ia] == Graph::Side::Y) std::swap(ia, ib);
    s.edges.push_back({ia, ib});
  }
  std::sort(s.edges.begin(), s.edges.end());
  s.used.assign(g.vertex_count(), 0);
  s.covered.assign(s.edges.size(), false);

  bool found = s.search();
  result.nodes_explored = s.nodes;
  if (found) {
    std::vector<Biclique> bs;
    for (const auto& [l, r] : s.chosen) {
      Biclique b;
      for (int v : l) b.left.push_back(g.name_of(v));
      for (int v : r) b.right.push_back(g.name_of(v));
      bs.push_back(std::move(b));
    }
    result.witness = BicliqueCover(std::move(bs));
    CoverValidation check = validate_cover(g, *result.witness);
    if (!check.valid || check.multiplicity > k)
      throw InternalError("cover search produced an invalid witness");
    result.outcome = CoverOutcome::Yes;
  } else if (s.out_of_budget) {
    result.outcome = CoverOutcome::Unknown;
  } else {
    result.outcome = CoverOutcome::No;
  }
  return result;
}

// ---------------------------------------------------------------------------
// closed-form bounds

int r_upper_bound(int n) {
  if (n < 1) throw std::invalid_argument("bound needs n >= 1");
  int ceil_log = 0;
  while ((1LL << ceil_log) < n) ++ceil_log;
  return 1 + ceil_log;
}

int r_lower_bound(int n) {
  if (n < 1) throw std::invalid_argument("bound needs n >= 1");
  int k = 0;
  long long dfact = 1;  // (2k-1)!! after k steps
  while (true) {
    long long next = dfact * (2 * (k + 1) - 1);
    if (next > n) break;
    dfact = next;
    ++k;
  }
  return k;
}

BicliqueCover extend_cover_to_duplicate(const BicliqueCover& c,
                                        const std::string& v,
                                        const std::string& copy_name) {
  if (v == copy_name)
    throw std::invalid_argument("duplicate must use a fresh name");
  for (const Biclique& b : c.bicliques())
    if (std::binary_search(b.left.begin(), b.left.end(), copy_name) ||
        std::binary_search(b.right.begin(), b.right.end(), copy_name))
      throw std::invalid_argument("duplicate name already occurs in the cover: " +
                                  copy_name);
  std::vector<Biclique> out;
  for (Biclique b : c.bicliques()) {
    if (std::binary_search(b.left.begin(), b.left.end(), v))
      b.left.push_back(copy_name);
    if (std::binary_search(b.right.begin(), b.right.end(), v))
      b.right.push_back(copy_name);
    out.push_back(std::move(b));
  }
  return BicliqueCover(std::move(out));
}

}  // namespace readk
