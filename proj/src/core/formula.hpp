#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace readk {

/// Immutable parse tree of a monotone Boolean formula: variable leaves
/// combined by n-ary sums (+) and products (*).
///
/// Values are cheap to copy (nodes are shared). A formula built through the
/// raw factories below may be unnormalized; normalize_tree establishes the
/// canonical form every other operation expects:
///   - every internal node has at least two children,
///   - sums and products alternate along every root-to-leaf path,
///   - children are in canonical sorted order with duplicates merged.
class Formula {
 public:
  enum class Kind { Var, Sum, Prod };

  static Formula var(std::string name);
  static Formula sum(std::vector<Formula> children);
  static Formula prod(std::vector<Formula> children);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return node_->kind == Kind::Var; }
  bool is_sum() const { return node_->kind == Kind::Sum; }
  bool is_prod() const { return node_->kind == Kind::Prod; }

  /// Leaf name; valid only for Var nodes.
  const std::string& var_name() const;
  /// Child list; valid only for Sum/Prod nodes.
  const std::vector<Formula>& children() const;

  std::size_t leaf_count() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Total structural order used for canonical child ordering:
/// Var < Sum < Prod, then name / child lists lexicographically.
int compare(const Formula& a, const Formula& b);
bool operator==(const Formula& a, const Formula& b);
bool operator!=(const Formula& a, const Formula& b);
bool operator<(const Formula& a, const Formula& b);

/// Per-variable leaf counts of a formula plus their maximum.
struct OccurrenceProfile {
  std::map<std::string, int> counts;
  int read_index = 0;
};

/// Reference to a subformula: the node reached by following `path` (child
/// indices from the root), optionally restricted to the `kept` children
/// (strictly increasing indices, at least two). An empty `kept` means the
/// whole node. Restricting a node to a child subset models subformulas
/// obtained by deleting siblings.
struct SubformulaRef {
  std::vector<int> path;
  std::vector<int> kept;
};

bool operator==(const SubformulaRef& a, const SubformulaRef& b);

/// Handle text form: "/" is the root, "/2/0" child indices, an optional
/// ":1,3" suffix lists the kept children.
std::string format_handle(const SubformulaRef& h);
SubformulaRef parse_handle(const std::string& text);

/// Grammar: sum := prod ('+' prod)*; prod := atom ('*' atom)*;
/// atom := NAME | '(' sum ')'. Whitespace is ignored. The result is
/// normalized. Throws ParseError on malformed or empty input.
Formula parse_formula(const std::string& text);

/// Canonical text with minimal parentheses (only sums under products are
/// parenthesized). Unnormalized inputs are rendered via their normal form.
std::string render(const Formula& f);

/// Flattens nested sums/products, collapses unary nodes, sorts children
/// canonically and merges structurally equal siblings (idempotency).
/// Logically equivalent to the input; idempotent. Merging duplicate
/// siblings is the only step that can lower an occurrence count.
Formula normalize_tree(const Formula& f);

bool is_normalized(const Formula& f);

OccurrenceProfile occurrences(const Formula& f);

/// Maximum number of occurrences of any single variable.
int read_index(const Formula& f);

/// True iff f is sum-rooted and v is one of its direct summands.
bool is_isolated(const std::string& v, const Formula& f);

/// All product nodes with exactly two children, as whole-node handles in
/// canonical (preorder) order.
std::vector<SubformulaRef> enumerate_two_mult(const Formula& f);

/// Visits every subformula: each node, and for internal nodes every child
/// subset of size >= 2. Exponential in node arity; intended for desk-scale
/// verification.
void for_each_subformula(const Formula& f,
                         const std::function<void(const SubformulaRef&)>& cb);

/// Materializes the subformula denoted by h (collapsing a kept-subset of
/// size one onto the child itself never occurs: kept has size >= 2).
Formula subformula_at(const Formula& f, const SubformulaRef& h);

/// Node lookup by path. Throws InvalidArgument-style errors on stale paths.
const Formula& node_at(const Formula& f, const std::vector<int>& path);

/// True iff no product node has two factors that both isolate a common
/// variable (a factor isolates v when it is the leaf v or a sum with v as a
/// direct summand).
bool is_nonredundant(const Formula& f);

/// Rewrites (v + p)*(v + q) -> v + p*q, and v*(v + q) -> v, innermost
/// first, to a fixpoint. The result is logically equivalent and no
/// variable's occurrence count increases; each step strictly lowers the
/// leaf count, which bounds the iteration.
Formula make_nonredundant(const Formula& f);

/// Replaces the subformula at h with a fresh variable and renormalizes.
/// Throws if fresh_var already occurs in f or h is stale.
Formula substitute_subformula(const Formula& f, const SubformulaRef& h,
                              const std::string& fresh_var);

/// A constant-free formula, or a decided Boolean constant. Constants only
/// ever appear as whole results; they are never nested inside a formula.
class FoldResult {
 public:
  static FoldResult constant(bool value) {
    FoldResult r;
    r.value_ = value;
    return r;
  }
  static FoldResult of(Formula f) {
    FoldResult r;
    r.formula_ = std::move(f);
    return r;
  }

  bool is_constant() const { return !formula_.has_value(); }
  bool value() const;
  const Formula& formula() const;

 private:
  FoldResult() = default;
  std::optional<Formula> formula_;
  bool value_ = false;
};

/// Replaces every leaf v by the constant and simplifies (x+1 = 1, x*1 = x,
/// x+0 = x, x*0 = 0). The result is renormalized and constant-free unless
/// the whole formula decides.
FoldResult substitute_const(const Formula& f, const std::string& v,
                            bool value);

/// Replaces the subformula at h by the constant and simplifies as above.
FoldResult substitute_subformula_const(const Formula& f,
                                       const SubformulaRef& h, bool value);

}  // namespace readk
