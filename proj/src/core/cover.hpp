#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/formula.hpp"
#include "core/graph.hpp"

namespace readk {

/// A complete bipartite subgraph given by its two vertex sets.
struct Biclique {
  std::vector<std::string> left;   // sorted
  std::vector<std::string> right;  // sorted
};

bool operator==(const Biclique& a, const Biclique& b);
bool operator<(const Biclique& a, const Biclique& b);

/// A list of bicliques intended to cover a host graph's edges. Validity is
/// always judged against a host via validate_cover.
class BicliqueCover {
 public:
  BicliqueCover() = default;
  explicit BicliqueCover(std::vector<Biclique> bicliques);

  const std::vector<Biclique>& bicliques() const { return bicliques_; }
  std::size_t size() const { return bicliques_.size(); }

  /// vertex -> number of bicliques whose left or right set contains it.
  std::vector<std::pair<std::string, int>> multiplicity_profile() const;
  int multiplicity() const;

 private:
  std::vector<Biclique> bicliques_;
};

struct CoverValidation {
  bool valid = false;
  int multiplicity = 0;
  std::string reason;  // set when invalid
};

/// Checks that every biclique spans only host edges and that the union of
/// spanned edges is exactly the host's edge set. Unknown vertex names are an
/// error (not a plain "invalid").
CoverValidation validate_cover(const Graph& g, const BicliqueCover& c);

/// Divide-and-conquer cover of the chain graph: cover the two index halves
/// recursively, then one cross biclique {low xs} x {high ys}. Multiplicity
/// is at most 1 + ceil(log2 n).
BicliqueCover chain_cover_recursive(int n);

/// Cover of the grid by the bounding 4-cycles of the black squares
/// (chessboard coloring, square (i,j) black when i+j is even) plus K_{1,1}
/// and K_{1,2} patches for boundary edges next to white squares only.
/// Multiplicity is at most 2.
BicliqueCover grid_chessboard_cover(int rows, int cols);

/// Sum over bicliques of (sum of left) * (sum of right). The read index of
/// the result equals the cover's multiplicity.
Formula cover_to_formula(const BicliqueCover& c);

enum class CoverOutcome { Yes, No, Unknown };

struct CoverSearchResult {
  CoverOutcome outcome = CoverOutcome::Unknown;
  std::optional<BicliqueCover> witness;
  long long nodes_explored = 0;
};

/// Exhaustive branch-and-bound for a cover with per-vertex multiplicity at
/// most k. The host must be bipartite. "No" is definitive; "Unknown" means
/// the node budget ran out first.
CoverSearchResult min_local_cover_decide(const Graph& g, int k,
                                         long long node_budget = 5'000'000);

/// 1 + ceil(log2 n): the halving construction's multiplicity bound.
int r_upper_bound(int n);

/// Largest k with (2k-1)!! <= n; a lower bound for the chain cover number
/// by monotonicity.
int r_lower_bound(int n);

/// Adds the duplicate vertex to every biclique side containing the
/// original. Multiplicity is unchanged and validity carries over to the
/// graph with the duplicated vertex.
BicliqueCover extend_cover_to_duplicate(const BicliqueCover& c,
                                        const std::string& v,
                                        const std::string& copy_name);

}  // namespace readk
