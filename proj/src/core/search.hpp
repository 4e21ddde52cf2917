#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/formula.hpp"
#include "core/graph.hpp"
#include "core/sop.hpp"

namespace readk {

struct SearchBudget {
  int max_leaves = 16;
  long long max_candidates = 2'000'000;
  long long max_millis = 60'000;
};

struct SearchStats {
  long long candidates = 0;
  long long elapsed_ms = 0;
};

enum class Outcome { Yes, No, Unknown };

struct SearchResult {
  Outcome outcome = Outcome::Unknown;
  std::optional<Formula> witness;
  SearchStats stats;
};

/// Streams every canonical formula over the given variables in which each
/// variable occurs between 1 and k times, ordered by total leaf count.
/// Canonical means: normalized, children strictly increasing, no duplicate
/// siblings. Up to sibling order and idempotency this covers all read-k
/// formulas using every variable at least once. Returning false from the
/// callback stops the stream. Throws BudgetExceeded past limits.
void enumerate_canonical_formulas(const std::vector<std::string>& variables,
                                  int k, const SearchBudget& budget,
                                  const std::function<bool(const Formula&)>& cb);

/// Is the (triangle-free) graph's maximal-clique function expressible with
/// every variable used at most k times? "Yes" carries a verified witness;
/// "no" is exhaustive over the canonical space; "unknown" means a budget
/// ran out. A valid k-multiplicity biclique cover, when one is found first,
/// short-circuits to "yes".
SearchResult decide_readability(const Graph& g, int k,
                                const SearchBudget& budget = {});

/// Same search over the chain-graph variables, accepting any formula whose
/// minterms are the chain edges plus pure-side products (a chain
/// extension). "No" here also rules out read-k formulas for the chain graph
/// itself, since every formula for it is an extension.
SearchResult has_read_k_extension(int n, int k, const SearchBudget& budget = {});

/// For a non-redundant chain extension f and an edge (i, j), locates a
/// product node with exactly two factors, one isolating x_i and the other
/// y_j. Walks from a contributing factor pair toward deeper scopes, taking
/// first factors through products; falls back to a plain scan. A miss on a
/// valid input is a defect and raises InternalError.
SubformulaRef find_two_mult_for_edge(const Formula& f, int i, int j);

/// Scan variant used as a cross-check: first two-factor product whose
/// factors isolate x_i and y_j.
std::optional<SubformulaRef> find_two_mult_by_scan(const Formula& f, int i, int j);

/// Removes one layer from a read-k chain extension: the subformula at h
/// must have the form (x1+...+xn+p)*(y1+...+yn+q), and substituting a fresh
/// variable z for it must yield minterms free of z*x_i and z*y_j pairs.
/// Replacing the subformula by a true constant then gives a read-(k-1)
/// extension, which is returned. Violations raise PreconditionFailed with
/// the offending term; a result that collapses to a constant (possible only
/// in degenerate cases such as n = 1) is reported the same way.
Formula peel_step(const Formula& f, const SubformulaRef& h, int n);

/// Largest k with 1^1 * 2^2 * ... * k^k <= n. The chain graph on n is not
/// read-k for any k up to this value, so its readability is at least the
/// returned value plus one.
int not_read_k_bound(long long n);

/// Smallest chain size 2*n*k^k that the peeling recursion needs to step
/// from read-k down to read-(k-1) over a chain on n.
long long peel_cascade_min_size(long long n, int k);

}  // namespace readk
