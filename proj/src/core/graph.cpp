#include "core/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "core/errors.hpp"

namespace readk {

Graph Graph::from_parts(std::vector<std::string> vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::vector<std::string>& x_side,
                        const std::vector<std::string>& y_side) {
  Graph g;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (const std::string& v : vertices)
    if (v.empty()) throw std::invalid_argument("empty vertex name");
  g.names_ = std::move(vertices);
  g.adj_.assign(g.names_.size(), {});
  g.sides_.assign(g.names_.size(), Side::None);

  std::set<std::pair<int, int>> edge_set;
  for (const auto& [a, b] : edges) {
    int ia = g.index_of(a);
    int ib = g.index_of(b);
    if (ia < 0 || ib < 0)
      throw std::invalid_argument("edge references unknown vertex: " + a + "-" + b);
    if (ia == ib) throw std::invalid_argument("loop edge at " + a);
    edge_set.insert({std::min(ia, ib), std::max(ia, ib)});
  }
  g.edges_.assign(edge_set.begin(), edge_set.end());
  for (const auto& [a, b] : g.edges_) {
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
  }
  for (auto& ns : g.adj_) std::sort(ns.begin(), ns.end());

  auto tag = [&](const std::vector<std::string>& list, Side s) {
    for (const std::string& v : list) {
      int i = g.index_of(v);
      if (i < 0) throw std::invalid_argument("side tag for unknown vertex: " + v);
      if (g.sides_[i] != Side::None && g.sides_[i] != s)
        throw std::invalid_argument("vertex tagged on both sides: " + v);
      g.sides_[i] = s;
    }
  };
  tag(x_side, Side::X);
  tag(y_side, Side::Y);
  return g;
}

Graph Graph::chain(int n) {
  if (n < 1) throw std::invalid_argument("chain graph needs n >= 1");
  std::vector<std::string> vs;
  std::vector<std::string> xs, ys;
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 1; i <= n; ++i) {
    xs.push_back("x" + std::to_string(i));
    ys.push_back("y" + std::to_string(i));
    vs.push_back(xs.back());
    vs.push_back(ys.back());
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      es.push_back({"x" + std::to_string(i), "y" + std::to_string(j)});
  return from_parts(std::move(vs), es, xs, ys);
}

Graph Graph::grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs positive dimensions");
  auto name = [](int r, int c) {
    return "v" + std::to_string(r) + "_" + std::to_string(c);
  };
  std::vector<std::string> vs, xs, ys;
  std::vector<std::pair<std::string, std::string>> es;
  for (int r = 0; r <= rows; ++r)
    for (int c = 0; c <= cols; ++c) {
      vs.push_back(name(r, c));
      ((r + c) % 2 == 0 ? xs : ys).push_back(name(r, c));
      if (c < cols) es.push_back({name(r, c), name(r, c + 1)});
      if (r < rows) es.push_back({name(r, c), name(r + 1, c)});
    }
  return from_parts(std::move(vs), es, xs, ys);
}

Graph Graph::complete_bipartite(int m, int n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("complete bipartite graph needs positive sides");
  std::vector<std::string> vs, xs, ys;
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 1; i <= m; ++i) {
    xs.push_back("a" + std::to_string(i));
    vs.push_back(xs.back());
  }
  for (int j = 1; j <= n; ++j) {
    ys.push_back("b" + std::to_string(j));
    vs.push_back(ys.back());
  }
  for (const std::string& a : xs)
    for (const std::string& b : ys) es.push_back({a, b});
  return from_parts(std::move(vs), es, xs, ys);
}

Graph Graph::duplicate_vertex(const std::string& v, const std::string& copy_name) const {
  int iv = index_of(v);
  if (iv < 0) throw std::invalid_argument("no such vertex: " + v);
  if (has_vertex(copy_name))
    throw std::invalid_argument("vertex name already taken: " + copy_name);
  std::vector<std::string> vs = names_;
  vs.push_back(copy_name);
  std::vector<std::pair<std::string, std::string>> es = edges();
  for (int nb : adj_[iv]) es.push_back({copy_name, names_[nb]});
  std::vector<std::string> xs, ys;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (sides_[i] == Side::X) xs.push_back(names_[i]);
    if (sides_[i] == Side::Y) ys.push_back(names_[i]);
  }
  if (sides_[iv] == Side::X) xs.push_back(copy_name);
  if (sides_[iv] == Side::Y) ys.push_back(copy_name);
  return from_parts(std::move(vs), es, xs, ys);
}

std::vector<std::pair<std::string, std::string>> Graph::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edges_.size());
  for (const auto& [a, b] : edges_) {
    std::string na = names_[a], nb = names_[b];
    if (nb < na) std::swap(na, nb);
    out.push_back({na, nb});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::has_vertex(const std::string& name) const { return index_of(name) >= 0; }

int Graph::index_of(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return -1;
  return static_cast<int>(it - names_.begin());
}

bool Graph::adjacent(int a, int b) const {
  const auto& ns = adj_[a];
  return std::binary_search(ns.begin(), ns.end(), b);
}

bool Graph::has_edge(const std::string& a, const std::string& b) const {
  int ia = index_of(a), ib = index_of(b);
  if (ia < 0 || ib < 0) return false;
  return adjacent(ia, ib);
}

bool Graph::has_side_tags() const {
  for (Side s : sides_)
    if (s == Side::None) return false;
  return !names_.empty();
}

std::optional<std::vector<Graph::Side>> Graph::bipartition() const {
  if (has_side_tags()) {
    for (const auto& [a, b] : edges_)
      if (sides_[a] == sides_[b]) return std::nullopt;
    return sides_;
  }
  std::vector<Side> color(names_.size(), Side::None);
  for (std::size_t start = 0; start < names_.size(); ++start) {
    if (color[start] != Side::None) continue;
    color[start] = Side::X;
    std::vector<int> stack{static_cast<int>(start)};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj_[u]) {
        if (color[w] == Side::None) {
          color[w] = color[u] == Side::X ? Side::Y : Side::X;
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_triangle_free(const Graph& g) {
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(static_cast<int>(u))) {
      if (v <= static_cast<int>(u)) continue;
      for (int w : g.neighbors(v))
        if (w > v && g.adjacent(static_cast<int>(u), w)) return false;
    }
  return true;
}

bool is_cograph(const Graph& g) {
  // An induced 4-vertex subgraph is a P4 exactly when it has 3 edges with
  // degree sequence (1,1,2,2).
  int n = static_cast<int>(g.vertex_count());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int quad[4] = {a, b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(quad[i], quad[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          if (edges != 3) continue;
          int mx = std::max({deg[0], deg[1], deg[2], deg[3]});
          int mn = std::min({deg[0], deg[1], deg[2], deg[3]});
          if (mx == 2 && mn == 1) return false;
        }
  return true;
}

}  // namespace readk
