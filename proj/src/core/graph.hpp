#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace readk {

/// Simple undirected graph with named vertices and optional bipartition
/// role tags (X side / Y side) attached by the bipartite constructors.
class Graph {
 public:
  enum class Side { None, X, Y };

  Graph() = default;

  /// Vertices are deduplicated and sorted; edges must reference declared
  /// vertices and may not be loops. Side lists are optional.
  static Graph from_parts(std::vector<std::string> vertices,
                          const std::vector<std::pair<std::string, std::string>>& edges,
                          const std::vector<std::string>& x_side = {},
                          const std::vector<std::string>& y_side = {});

  /// Chain graph on x1..xn, y1..yn with an edge x_i y_j exactly when i <= j.
  static Graph chain(int n);

  /// Rectangular lattice counted in squares: the vertex grid is
  /// (rows+1) x (cols+1), names v<r>_<c>. Vertices are side-tagged by
  /// coordinate parity.
  static Graph grid(int rows, int cols);

  /// K_{m,n} on a1..am / b1..bn.
  static Graph complete_bipartite(int m, int n);

  /// Adds copy_name with exactly the neighborhood of v (v itself excluded).
  Graph duplicate_vertex(const std::string& v, const std::string& copy_name) const;

  const std::vector<std::string>& vertices() const { return names_; }
  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges as sorted name pairs (each pair sorted, list sorted).
  std::vector<std::pair<std::string, std::string>> edges() const;

  bool has_vertex(const std::string& name) const;
  bool has_edge(const std::string& a, const std::string& b) const;

  int index_of(const std::string& name) const;  // -1 when absent
  const std::string& name_of(int idx) const { return names_[idx]; }
  const std::vector<int>& neighbors(int idx) const { return adj_[idx]; }
  bool adjacent(int a, int b) const;

  Side side(int idx) const { return sides_[idx]; }
  bool has_side_tags() const;

  /// Two-coloring into X/Y sides; uses the stored tags when complete,
  /// otherwise computes one. Empty when the graph is not bipartite.
  std::optional<std::vector<Side>> bipartition() const;

 private:
  std::vector<std::string> names_;                // sorted
  std::vector<std::vector<int>> adj_;             // sorted neighbor lists
  std::vector<std::pair<int, int>> edges_;        // a < b, sorted
  std::vector<Side> sides_;
};

bool is_triangle_free(const Graph& g);

/// Cograph test by exhaustive induced-P4 scan over vertex quadruples.
bool is_cograph(const Graph& g);

}  // namespace readk
