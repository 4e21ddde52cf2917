#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/formula.hpp"
#include "core/graph.hpp"

namespace readk {

/// A product of distinct variables, stored as a sorted name set.
class Term {
 public:
  explicit Term(std::vector<std::string> vars);
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  bool contains(const std::string& v) const;
  bool subset_of(const Term& other) const;
  std::string text() const;  // vars joined by '*'

 private:
  std::vector<std::string> vars_;  // sorted, distinct, nonempty
};

int compare(const Term& a, const Term& b);
bool operator==(const Term& a, const Term& b);
bool operator<(const Term& a, const Term& b);

/// Terms joined by " + "; the shared text form of CSOP and SOP output.
std::string terms_text(const std::vector<Term>& terms);

/// An antichain of terms (no term contains another), canonically sorted:
/// the minterm form of a monotone function.
class SopForm {
 public:
  SopForm() = default;

  /// Applies absorption to an arbitrary term list.
  static SopForm absorb(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool contains(const Term& t) const;
  std::vector<std::string> variables() const;  // sorted union of supports

  /// Terms joined by " + ", each term's variables joined by "*".
  std::string text() const;

 private:
  std::vector<Term> terms_;
};

bool operator==(const SopForm& a, const SopForm& b);
bool operator!=(const SopForm& a, const SopForm& b);

struct SopLimits {
  std::size_t max_terms = std::size_t{1} << 20;
};

/// Full distributive expansion with per-term idempotency, before
/// absorption. Not necessarily an antichain. Throws BudgetExceeded when the
/// expansion grows past limits.max_terms.
std::vector<Term> csop(const Formula& f, const SopLimits& limits = {});

/// Minterms: csop followed by absorption.
SopForm sop(const Formula& f, const SopLimits& limits = {});

/// Minterm equality, the canonical-form test for logical equivalence.
bool equivalent(const Formula& f, const Formula& g, const SopLimits& limits = {});

/// Sum-of-products formula spelling of a SopForm.
Formula formula_of_sop(const SopForm& s);

/// Co-occurrence graph: vertices are the variables, edges join pairs that
/// share a term.
Graph graph_of_function(const SopForm& s);

/// The formula of a graph: terms are the maximal cliques (isolated vertices
/// appear as singleton terms). Triangle-free graphs take a fast path where
/// the maximal cliques are exactly the edges plus isolated vertices.
SopForm phi_of_graph(const Graph& g);

/// Normality: s equals the maximal-clique form of its own co-occurrence
/// graph.
bool is_normal(const SopForm& s);

/// Read-1 characterization: normal with a cograph co-occurrence graph.
bool read1_check(const SopForm& s);

struct ChainExtensionCheck {
  bool ok = false;
  /// When !ok: the first missing edge or the first forbidden term, in
  /// canonical order.
  std::optional<Term> offending;
  std::string reason;
};

/// Tests whether sop(f) consists of all chain edges x_i*y_j (i <= j <= n)
/// plus, optionally, pure-x or pure-y products of size >= 2. Variables of f
/// must be among x1..xn, y1..yn.
ChainExtensionCheck is_extension_of_chain(const Formula& f, int n,
                                          const SopLimits& limits = {});

/// Splits a chain vertex name into side ('x'/'y') and 1-based index.
std::optional<std::pair<char, int>> parse_chain_var(const std::string& name);

}  // namespace readk
