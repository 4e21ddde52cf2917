#include "core/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "core/cover.hpp"
#include "core/errors.hpp"

namespace readk {

// ---------------------------------------------------------------------------
// canonical enumeration
//
// Formulas are generated per leaf multiset, smallest total first. A formula
// over a multiset is a recursive unordered partition into at least two
// blocks with sum/product alternation; singleton blocks are leaves. Children
// are kept strictly increasing, so sibling order and idempotent duplicates
// never produce the same formula twice.

namespace {

using Leaves = std::vector<int>;  // sorted variable ids, repeats allowed

struct StopEnumeration {};

class TreeEnumerator {
 public:
  TreeEnumerator(const std::vector<std::string>& names, long long max_nodes)
      : names_(names), max_nodes_(max_nodes) {}

  const std::vector<Formula>& rooted(const Leaves& leaves, Formula::Kind kind) {
    auto key = std::make_pair(leaves, kind == Formula::Kind::Sum ? 0 : 1);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    std::vector<Formula> result;
    enumerate_partitions(leaves, [&](const std::vector<Leaves>& blocks) {
      if (blocks.size() < 2) return;
      assemble(blocks, kind, result);
    });
    std::sort(result.begin(), result.end());
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

 private:
  // Non-increasing block sequences; each multiset partition appears once.
  void enumerate_partitions(const Leaves& rest,
                            const std::function<void(const std::vector<Leaves>&)>& cb) {
    std::vector<Leaves> acc;
    partition_rec(rest, std::nullopt, acc, cb);
  }

  static bool block_le(const Leaves& a, const Leaves& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return !(b < a);
  }

  void partition_rec(const Leaves& rest, const std::optional<Leaves>& max_block,
                     std::vector<Leaves>& acc,
                     const std::function<void(const std::vector<Leaves>&)>& cb) {
    if (rest.empty()) {
      cb(acc);
      return;
    }
    for_each_submultiset(rest, [&](const Leaves& block, const Leaves& remainder) {
      if (max_block && !block_le(block, *max_block)) return;
      acc.push_back(block);
      partition_rec(remainder, block, acc, cb);
      acc.pop_back();
    });
  }

  // All nonempty sub-multisets, with the complementing remainder.
  static void for_each_submultiset(
      const Leaves& m,
      const std::function<void(const Leaves&, const Leaves&)>& cb) {
    std::vector<std::pair<int, int>> items;  // (var, count)
    for (int v : m) {
      if (!items.empty() && items.back().first == v)
        ++items.back().second;
      else
        items.push_back({v, 1});
    }
    std::vector<int> take(items.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == items.size()) {
        Leaves block, remainder;
        for (std::size_t j = 0; j < items.size(); ++j) {
          for (int c = 0; c < take[j]; ++c) block.push_back(items[j].first);
          for (int c = take[j]; c < items[j].second; ++c)
            remainder.push_back(items[j].first);
        }
        if (!block.empty()) cb(block, remainder);
        return;
      }
      for (int c = 0; c <= items[i].second; ++c) {
        take[i] = c;
        rec(i + 1);
      }
      take[i] = 0;
    };
    rec(0);
  }

  void assemble(const std::vector<Leaves>& blocks, Formula::Kind kind,
                std::vector<Formula>& out) {
    Formula::Kind child_kind =
        kind == Formula::Kind::Sum ? Formula::Kind::Prod : Formula::Kind::Sum;

    // Group equal blocks; they are adjacent (blocks are non-increasing).
    struct Group {
      const std::vector<Formula>* options;
      std::vector<Formula> leaf_single;
      int copies;
    };
    std::vector<Group> groups;
    for (std::size_t i = 0; i < blocks.size();) {
      std::size_t j = i;
      while (j < blocks.size() && blocks[j] == blocks[i]) ++j;
      Group grp;
      grp.copies = static_cast<int>(j - i);
      if (blocks[i].size() == 1) {
        grp.leaf_single.push_back(Formula::var(names_[blocks[i][0]]));
        grp.options = &grp.leaf_single;
      } else {
        grp.options = &rooted(blocks[i], child_kind);
      }
      groups.push_back(std::move(grp));
      i = j;
    }
    for (Group& grp : groups)
      if (!grp.leaf_single.empty()) grp.options = &grp.leaf_single;

    // For each group pick `copies` distinct options (indices increasing);
    // the cartesian product over groups yields the child lists.
    std::vector<Formula> children;
    std::function<void(std::size_t)> pick_group = [&](std::size_t gi) {
      if (gi == groups.size()) {
        std::vector<Formula> sorted = children;
        std::sort(sorted.begin(), sorted.end());
        bump();
        out.push_back(kind == Formula::Kind::Sum ? Formula::sum(std::move(sorted))
                                                 : Formula::prod(std::move(sorted)));
        return;
      }
      const Group& grp = groups[gi];
      const auto& opts = *grp.options;
      int need = grp.copies;
      if (static_cast<int>(opts.size()) < need) return;
      std::vector<int> idx;
      std::function<void(int)> pick = [&](int from) {
        if (static_cast<int>(idx.size()) == need) {
          for (int t : idx) children.push_back(opts[t]);
          pick_group(gi + 1);
          children.erase(children.end() - need, children.end());
          return;
        }
        for (int t = from; t < static_cast<int>(opts.size()); ++t) {
          idx.push_back(t);
          pick(t + 1);
          idx.pop_back();
        }
      };
      pick(0);
    };
    pick_group(0);
  }

  void bump() {
    if (++nodes_generated_ > max_nodes_)
      throw BudgetExceeded("formula enumeration exceeds the candidate budget");
  }

  const std::vector<std::string>& names_;
  long long max_nodes_;
  long long nodes_generated_ = 0;
  std::map<std::pair<Leaves, int>, std::vector<Formula>> memo_;
};

// Count vectors with entries in [1..k], by total ascending.
void for_each_count_vector(int vars, int k, int max_total,
                           const std::function<void(const std::vector<int>&)>& cb) {
  for (int total = vars; total <= std::min(max_total, vars * k); ++total) {
    std::vector<int> counts(vars, 1);
    int extra = total - vars;
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == vars) {
        if (left == 0) cb(counts);
        return;
      }
      for (int add = 0; add <= std::min(left, k - 1); ++add) {
        counts[i] = 1 + add;
        rec(i + 1, left - add);
      }
      counts[i] = 1;
    };
    rec(0, extra);
  }
}

}  // namespace

void enumerate_canonical_formulas(const std::vector<std::string>& variables,
                                  int k, const SearchBudget& budget,
                                  const std::function<bool(const Formula&)>& cb) {
  if (k < 1) throw std::invalid_argument("occurrence bound must be >= 1");
  if (variables.empty()) throw std::invalid_argument("need at least one variable");
  std::vector<std::string> names = variables;
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  long long node_cap = budget.max_candidates < (1LL << 40)
                           ? budget.max_candidates * 8
                           : budget.max_candidates;
  TreeEnumerator trees(names, node_cap);
  int vars = static_cast<int>(names.size());
  try {
    for_each_count_vector(vars, k, budget.max_leaves, [&](const std::vector<int>& counts) {
      Leaves leaves;
      for (int v = 0; v < vars; ++v)
        for (int c = 0; c < counts[v]; ++c) leaves.push_back(v);
      std::vector<Formula> candidates;
      if (leaves.size() == 1) {
        candidates.push_back(Formula::var(names[leaves[0]]));
      } else {
        const auto& sums = trees.rooted(leaves, Formula::Kind::Sum);
        const auto& prods = trees.rooted(leaves, Formula::Kind::Prod);
        candidates.insert(candidates.end(), sums.begin(), sums.end());
        candidates.insert(candidates.end(), prods.begin(), prods.end());
      }
      for (const Formula& f : candidates)
        if (!cb(f)) throw StopEnumeration{};
    });
  } catch (const StopEnumeration&) {
  }
}

// ---------------------------------------------------------------------------
// decision searches

namespace {

class Deadline {
 public:
  explicit Deadline(long long max_millis)
      : start_(std::chrono::steady_clock::now()), max_millis_(max_millis) {}
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }
  bool expired() const { return elapsed_ms() > max_millis_; }

 private:
  std::chrono::steady_clock::time_point start_;
  long long max_millis_;
};

// Compiles a k-multiplicity cover of g (when one exists within a slice of
// the budget) into a candidate formula: the cover formula plus isolated
// vertices as extra summands.
std::optional<Formula> cover_based_witness(const Graph& g, int k,
                                           long long node_budget) {
  if (!g.bipartition()) return std::nullopt;
  CoverSearchResult r = min_local_cover_decide(g, k, node_budget);
  if (r.outcome != CoverOutcome::Yes) return std::nullopt;
  std::vector<Formula> parts;
  if (r.witness->size() > 0) parts.push_back(cover_to_formula(*r.witness));
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (g.neighbors(static_cast<int>(i)).empty())
      parts.push_back(Formula::var(g.name_of(static_cast<int>(i))));
  if (parts.empty()) return std::nullopt;
  Formula f = parts.size() == 1 ? parts.front() : Formula::sum(std::move(parts));
  return normalize_tree(f);
}

SearchResult run_search(const std::vector<std::string>& variables, int k,
                        const SearchBudget& budget,
                        const std::optional<Formula>& seed,
                        const std::function<bool(const Formula&)>& accept) {
  SearchResult result;
  Deadline deadline(budget.max_millis);

  if (seed && read_index(*seed) <= k && accept(*seed)) {
    result.outcome = Outcome::Yes;
    result.witness = seed;
    result.stats.candidates = 1;
    result.stats.elapsed_ms = deadline.elapsed_ms();
    return result;
  }

  bool out_of_time = false;
  try {
    enumerate_canonical_formulas(variables, k, budget, [&](const Formula& f) {
      ++result.stats.candidates;
      if (result.stats.candidates > budget.max_candidates)
        throw BudgetExceeded("candidate budget exhausted");
      if ((result.stats.candidates & 1023) == 0 && deadline.expired()) {
        out_of_time = true;
        return false;
      }
      if (!is_nonredundant(f)) return true;  // its reduction is enumerated too
      if (accept(f)) {
        result.outcome = Outcome::Yes;
        result.witness = f;
        return false;
      }
      return true;
    });
    if (result.outcome != Outcome::Yes)
      result.outcome = out_of_time ? Outcome::Unknown : Outcome::No;
  } catch (const BudgetExceeded&) {
    result.outcome = Outcome::Unknown;
  }
  result.stats.elapsed_ms = deadline.elapsed_ms();
  return result;
}

}  // namespace

SearchResult decide_readability(const Graph& g, int k, const SearchBudget& budget) {
  if (k < 1) throw std::invalid_argument("readability bound must be >= 1");
  if (!is_triangle_free(g))
    throw PreconditionFailed("readability search requires a triangle-free graph");
  SopForm target = phi_of_graph(g);
  if (target.size() == 0)
    throw std::invalid_argument("readability of the empty graph is undefined");

  std::optional<Formula> seed = cover_based_witness(g, k, budget.max_candidates);
  auto accept = [&](const Formula& f) { return sop(f) == target; };
  std::vector<std::string> variables = target.variables();
  SearchResult r = run_search(variables, k, budget, seed, accept);
  if (r.outcome == Outcome::Yes &&
      (sop(*r.witness) != target || read_index(*r.witness) > k))
    throw InternalError("readability witness failed verification");
  return r;
}

SearchResult has_read_k_extension(int n, int k, const SearchBudget& budget) {
  if (n < 1) throw std::invalid_argument("chain extension search needs n >= 1");
  if (k < 1) throw std::invalid_argument("occurrence bound must be >= 1");
  Graph g = Graph::chain(n);
  std::optional<Formula> seed = cover_based_witness(g, k, budget.max_candidates);
  auto accept = [&](const Formula& f) {
    return is_extension_of_chain(f, n).ok;
  };
  std::vector<std::string> variables;
  for (int i = 1; i <= n; ++i) {
    variables.push_back("x" + std::to_string(i));
    variables.push_back("y" + std::to_string(i));
  }
  SearchResult r = run_search(variables, k, budget, seed, accept);
  if (r.outcome == Outcome::Yes &&
      (!is_extension_of_chain(*r.witness, n).ok || read_index(*r.witness) > k))
    throw InternalError("extension witness failed verification");
  return r;
}

// ---------------------------------------------------------------------------
// two-factor product location

namespace {

// Factor isolates v: it is the leaf v or a sum with v as a direct summand.
bool isolates(const Formula& factor, const std::string& v) {
  if (factor.is_var()) return factor.var_name() == v;
  return is_isolated(v, factor);
}

// The singleton {v} is a minterm of the factor (v alone satisfies it).
bool yields_singleton(const Formula& factor, const std::string& v) {
  SopForm s = sop(factor);
  return s.contains(Term({v}));
}

struct PairHit {
  std::vector<int> path;  // product node
  int fx = 0, fy = 0;     // children isolating x_i and y_j
};

// First (preorder, canonical child order) product node in the subtree at
// `scope` with a factor pair isolating xv and yv that contributes the pair
// term.
std::optional<PairHit> find_pair(const Formula& root, const std::vector<int>& scope,
                                 const std::string& xv, const std::string& yv) {
  const Formula& top = node_at(root, scope);
  std::optional<PairHit> hit;
  std::vector<int> path = scope;
  std::function<bool(const Formula&)> walk = [&](const Formula& node) {
    if (node.is_var()) return false;
    if (node.is_prod()) {
      const auto& cs = node.children();
      for (std::size_t a = 0; a < cs.size(); ++a)
        for (std::size_t b = 0; b < cs.size(); ++b) {
          if (a == b) continue;
          if (!isolates(cs[a], xv) || !isolates(cs[b], yv)) continue;
          if (!yields_singleton(cs[a], xv) || !yields_singleton(cs[b], yv))
            continue;
          hit = PairHit{path, static_cast<int>(a), static_cast<int>(b)};
          return true;
        }
    }
    for (std::size_t i = 0; i < node.children().size(); ++i) {
      path.push_back(static_cast<int>(i));
      if (walk(node.children()[i])) return true;
      path.pop_back();
    }
    return false;
  };
  walk(top);
  return hit;
}

}  // namespace

std::optional<SubformulaRef> find_two_mult_by_scan(const Formula& f, int i, int j) {
  std::string xv = "x" + std::to_string(i);
  std::string yv = "y" + std::to_string(j);
  for (const SubformulaRef& h : enumerate_two_mult(f)) {
    const Formula& node = node_at(f, h.path);
    const Formula& a = node.children()[0];
    const Formula& b = node.children()[1];
    if ((isolates(a, xv) && isolates(b, yv)) ||
        (isolates(a, yv) && isolates(b, xv)))
      return h;
  }
  return std::nullopt;
}

SubformulaRef find_two_mult_for_edge(const Formula& f, int i, int j) {
  if (i < 1 || j < i)
    throw std::invalid_argument("edge indices must satisfy 1 <= i <= j");
  int n = 0;
  for (const auto& [name, cnt] : occurrences(f).counts) {
    (void)cnt;
    auto parsed = parse_chain_var(name);
    if (!parsed)
      throw PreconditionFailed("variable '" + name + "' is not a chain variable",
                               name);
    n = std::max(n, parsed->second);
  }
  if (j > n)
    throw std::invalid_argument("edge (" + std::to_string(i) + "," +
                                std::to_string(j) + ") is outside the chain");
  if (!is_nonredundant(f))
    throw PreconditionFailed("formula is redundant; reduce it first");
  ChainExtensionCheck ext = is_extension_of_chain(f, n);
  if (!ext.ok)
    throw PreconditionFailed("formula does not extend the chain: " + ext.reason,
                             ext.offending ? ext.offending->text() : "");

  std::string xv = "x" + std::to_string(i);
  std::string yv = "y" + std::to_string(j);

  // Descend: find a contributing factor pair; if its product node has extra
  // factors, move into the first other factor (through first factors of
  // products) and repeat in that deeper scope.
  std::vector<int> scope;
  for (int guard = 0; guard < 1024; ++guard) {
    std::optional<PairHit> hit = find_pair(f, scope, xv, yv);
    if (!hit) break;
    const Formula& node = node_at(f, hit->path);
    if (node.children().size() == 2) return SubformulaRef{hit->path, {}};
    int other = 0;
    while (other == hit->fx || other == hit->fy) ++other;
    std::vector<int> next = hit->path;
    next.push_back(other);
    const Formula* cur = &node.children()[other];
    while (cur->is_prod()) {
      next.push_back(0);
      cur = &cur->children()[0];
    }
    if (cur->is_var()) break;  // cannot happen for non-redundant extensions
    scope = std::move(next);
  }

  if (auto h = find_two_mult_by_scan(f, i, j)) return *h;
  throw InternalError("no two-factor product found for a valid chain extension");
}

// ---------------------------------------------------------------------------
// peeling

namespace {

// The subformula must be a product of exactly two factors, one isolating
// x1..xn and the other y1..yn (a bare leaf is allowed when n == 1).
void check_peel_form(const Formula& sub, int n) {
  if (!sub.is_prod() || sub.children().size() != 2)
    throw PreconditionFailed("peel subformula must be a product of two factors");
  auto covers_side = [&](const Formula& factor, char side) {
    for (int idx = 1; idx <= n; ++idx) {
      std::string v = std::string(1, side) + std::to_string(idx);
      if (!isolates(factor, v)) return false;
    }
    return true;
  };
  const Formula& a = sub.children()[0];
  const Formula& b = sub.children()[1];
  bool ok = (covers_side(a, 'x') && covers_side(b, 'y')) ||
            (covers_side(a, 'y') && covers_side(b, 'x'));
  if (!ok)
    throw PreconditionFailed(
        "peel subformula must isolate x1..xn in one factor and y1..yn in the other");
}

std::string fresh_var_name(const Formula& f) {
  OccurrenceProfile prof = occurrences(f);
  std::string base = "z";
  if (!prof.counts.count(base)) return base;
  for (int i = 0;; ++i) {
    std::string name = "z" + std::to_string(i);
    if (!prof.counts.count(name)) return name;
  }
}

}  // namespace

Formula peel_step(const Formula& f, const SubformulaRef& h, int n) {
  if (n < 1) throw std::invalid_argument("peel needs n >= 1");
  Formula sub = subformula_at(f, h);  // also validates the handle
  check_peel_form(sub, n);

  ChainExtensionCheck ext = is_extension_of_chain(f, n);
  if (!ext.ok)
    throw PreconditionFailed("input is not a chain extension: " + ext.reason,
                             ext.offending ? ext.offending->text() : "");

  std::string z = fresh_var_name(f);
  Formula with_z = substitute_subformula(f, h, z);
  SopForm s = sop(with_z);
  for (const Term& t : s.terms()) {
    if (t.size() != 2 || !t.contains(z)) continue;
    const std::string& other = t.vars()[0] == z ? t.vars()[1] : t.vars()[0];
    if (parse_chain_var(other))
      throw PreconditionFailed(
          "substitution exposes the forbidden term " + t.text(), t.text());
  }

  int k = read_index(f);
  FoldResult peeled = substitute_subformula_const(f, h, true);
  if (peeled.is_constant())
    throw PreconditionFailed(
        "peel collapses the formula to a constant; nothing remains of the extension");
  Formula result = peeled.formula();

  ChainExtensionCheck post = is_extension_of_chain(result, n);
  if (!post.ok)
    throw InternalError("peel result is not a chain extension: " + post.reason);
  if (read_index(result) > k - 1)
    throw InternalError("peel did not lower the read index");
  return result;
}

// ---------------------------------------------------------------------------
// closed-form bound

int not_read_k_bound(long long n) {
  if (n < 1) throw std::invalid_argument("bound needs n >= 1");
  int k = 0;
  long long product = 1;
  while (true) {
    int next = k + 1;
    // product *= next^next, guarding overflow
    long long p = product;
    bool over = false;
    for (int t = 0; t < next; ++t) {
      if (p > n / next) {
        over = true;
        break;
      }
      p *= next;
    }
    if (over || p > n) break;
    product = p;
    k = next;
  }
  return k;
}

long long peel_cascade_min_size(long long n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("cascade size needs n, k >= 1");
  long long p = 2 * n;
  for (int t = 0; t < k; ++t) {
    if (p > (std::numeric_limits<long long>::max)() / k)
      throw std::overflow_error("cascade size overflows");
    p *= k;
  }
  return p;
}

}  // namespace readk
