#include "core/sop.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "core/errors.hpp"

namespace readk {

Term::Term(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.empty()) throw std::invalid_argument("term needs at least one variable");
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

bool Term::contains(const std::string& v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

bool Term::subset_of(const Term& other) const {
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(),
                       vars_.end());
}

std::string Term::text() const {
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i > 0) out += '*';
    out += vars_[i];
  }
  return out;
}

int compare(const Term& a, const Term& b) {
  if (a.vars() < b.vars()) return -1;
  if (b.vars() < a.vars()) return 1;
  return 0;
}
bool operator==(const Term& a, const Term& b) { return a.vars() == b.vars(); }
bool operator<(const Term& a, const Term& b) { return a.vars() < b.vars(); }

std::string terms_text(const std::vector<Term>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += " + ";
    out += terms[i].text();
  }
  return out;
}

SopForm SopForm::absorb(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  SopForm out;
  for (const Term& t : terms) {
    bool absorbed = false;
    for (const Term& kept : out.terms_)
      if (kept.subset_of(t)) {
        absorbed = true;
        break;
      }
    if (!absorbed) out.terms_.push_back(t);
  }
  std::sort(out.terms_.begin(), out.terms_.end());
  return out;
}

bool SopForm::contains(const Term& t) const {
  return std::binary_search(terms_.begin(), terms_.end(), t);
}

std::vector<std::string> SopForm::variables() const {
  std::set<std::string> vars;
  for (const Term& t : terms_) vars.insert(t.vars().begin(), t.vars().end());
  return {vars.begin(), vars.end()};
}

std::string SopForm::text() const { return terms_text(terms_); }

bool operator==(const SopForm& a, const SopForm& b) {
  return a.terms() == b.terms();
}
bool operator!=(const SopForm& a, const SopForm& b) { return !(a == b); }

// ---------------------------------------------------------------------------
// expansion

namespace {

// Terms during expansion are sorted id sets over an interning table.
using IdTerm = std::vector<int>;

struct Interner {
  std::map<std::string, int> ids;
  std::vector<std::string> names;
  int intern(const std::string& s) {
    auto [it, fresh] = ids.insert({s, static_cast<int>(names.size())});
    if (fresh) names.push_back(s);
    return it->second;
  }
};

IdTerm merge_union(const IdTerm& a, const IdTerm& b) {
  IdTerm out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::set<IdTerm> expand(const Formula& f, Interner& in, const SopLimits& limits) {
  if (f.is_var()) return {{in.intern(f.var_name())}};
  if (f.is_sum()) {
    std::set<IdTerm> out;
    for (const Formula& c : f.children()) {
      for (IdTerm t : expand(c, in, limits)) out.insert(std::move(t));
      if (out.size() > limits.max_terms)
        throw BudgetExceeded("expansion exceeds the term budget");
    }
    return out;
  }
  std::set<IdTerm> acc{IdTerm{}};
  for (const Formula& c : f.children()) {
    std::set<IdTerm> factor = expand(c, in, limits);
    std::set<IdTerm> next;
    for (const IdTerm& a : acc)
      for (const IdTerm& b : factor) {
        next.insert(merge_union(a, b));
        if (next.size() > limits.max_terms)
          throw BudgetExceeded("expansion exceeds the term budget");
      }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

std::vector<Term> csop(const Formula& f, const SopLimits& limits) {
  Formula n = is_normalized(f) ? f : normalize_tree(f);
  Interner in;
  std::set<IdTerm> raw = expand(n, in, limits);
  std::vector<Term> out;
  out.reserve(raw.size());
  for (const IdTerm& t : raw) {
    std::vector<std::string> vars;
    vars.reserve(t.size());
    for (int id : t) vars.push_back(in.names[id]);
    out.push_back(Term(std::move(vars)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SopForm sop(const Formula& f, const SopLimits& limits) {
  return SopForm::absorb(csop(f, limits));
}

bool equivalent(const Formula& f, const Formula& g, const SopLimits& limits) {
  return sop(f, limits) == sop(g, limits);
}

Formula formula_of_sop(const SopForm& s) {
  if (s.size() == 0)
    throw std::invalid_argument("cannot spell an empty term list as a formula");
  std::vector<Formula> summands;
  for (const Term& t : s.terms()) {
    std::vector<Formula> factors;
    for (const std::string& v : t.vars()) factors.push_back(Formula::var(v));
    summands.push_back(factors.size() == 1 ? factors.front()
                                           : Formula::prod(std::move(factors)));
  }
  Formula f = summands.size() == 1 ? summands.front() : Formula::sum(std::move(summands));
  return normalize_tree(f);
}

// ---------------------------------------------------------------------------
// function <-> graph correspondence

Graph graph_of_function(const SopForm& s) {
  std::vector<std::string> vs = s.variables();
  std::vector<std::pair<std::string, std::string>> es;
  for (const Term& t : s.terms()) {
    const auto& vars = t.vars();
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i + 1; j < vars.size(); ++j)
        es.push_back({vars[i], vars[j]});
  }
  return Graph::from_parts(std::move(vs), es);
}

namespace {

// Pivoted maximal-clique enumeration over adjacency indices.
void max_cliques(const Graph& g, std::vector<int>& R, std::vector<int> P,
                 std::vector<int> X, std::vector<std::vector<int>>& out) {
  if (P.empty() && X.empty()) {
    out.push_back(R);
    return;
  }
  int pivot = -1;
  std::size_t best = 0;
  for (int u : P) {
    std::size_t d = g.neighbors(u).size();
    if (pivot < 0 || d > best) {
      pivot = u;
      best = d;
    }
  }
  for (int u : X) {
    std::size_t d = g.neighbors(u).size();
    if (pivot < 0 || d > best) {
      pivot = u;
      best = d;
    }
  }
  std::vector<int> candidates;
  for (int v : P)
    if (pivot < 0 || !g.adjacent(pivot, v)) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> P2, X2;
    for (int w : P)
      if (g.adjacent(v, w)) P2.push_back(w);
    for (int w : X)
      if (g.adjacent(v, w)) X2.push_back(w);
    R.push_back(v);
    max_cliques(g, R, std::move(P2), std::move(X2), out);
    R.pop_back();
    P.erase(std::remove(P.begin(), P.end(), v), P.end());
    X.push_back(v);
  }
}

}  // namespace

SopForm phi_of_graph(const Graph& g) {
  std::vector<Term> terms;
  if (is_triangle_free(g)) {
    for (const auto& [a, b] : g.edges()) terms.push_back(Term({a, b}));
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      if (g.neighbors(static_cast<int>(i)).empty())
        terms.push_back(Term({g.name_of(static_cast<int>(i))}));
  } else {
    std::vector<int> R, P, X;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      P.push_back(static_cast<int>(i));
    std::vector<std::vector<int>> cliques;
    max_cliques(g, R, std::move(P), {}, cliques);
    for (const auto& clique : cliques) {
      std::vector<std::string> vars;
      for (int v : clique) vars.push_back(g.name_of(v));
      terms.push_back(Term(std::move(vars)));
    }
  }
  return SopForm::absorb(std::move(terms));
}

bool is_normal(const SopForm& s) {
  return s == phi_of_graph(graph_of_function(s));
}

bool read1_check(const SopForm& s) {
  return is_normal(s) && is_cograph(graph_of_function(s));
}

// ---------------------------------------------------------------------------
// chain extensions

std::optional<std::pair<char, int>> parse_chain_var(const std::string& name) {
  if (name.size() < 2) return std::nullopt;
  char side = name[0];
  if (side != 'x' && side != 'y') return std::nullopt;
  int idx = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    idx = idx * 10 + (name[i] - '0');
    if (idx > 1'000'000) return std::nullopt;
  }
  if (idx < 1 || name[1] == '0') return std::nullopt;
  return std::make_pair(side, idx);
}

ChainExtensionCheck is_extension_of_chain(const Formula& f, int n,
                                          const SopLimits& limits) {
  if (n < 1) throw std::invalid_argument("chain extension check needs n >= 1");
  OccurrenceProfile prof = occurrences(f);
  for (const auto& [name, cnt] : prof.counts) {
    (void)cnt;
    auto parsed = parse_chain_var(name);
    if (!parsed || parsed->second > n)
      throw PreconditionFailed(
          "variable '" + name + "' is outside x1..x" + std::to_string(n) +
              ", y1..y" + std::to_string(n),
          name);
  }

  SopForm s = sop(f, limits);
  ChainExtensionCheck out;

  // Every chain edge must be present.
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Term edge({"x" + std::to_string(i), "y" + std::to_string(j)});
      if (!s.contains(edge)) {
        out.ok = false;
        out.offending = edge;
        out.reason = "missing edge term " + edge.text();
        return out;
      }
    }

  // Every other term must be a pure-x or pure-y product of size >= 2.
  for (const Term& t : s.terms()) {
    bool has_x = false, has_y = false;
    for (const std::string& v : t.vars())
      (v[0] == 'x' ? has_x : has_y) = true;
    if (has_x && has_y) {
      if (t.size() == 2) {
        auto a = parse_chain_var(t.vars()[0]);
        auto b = parse_chain_var(t.vars()[1]);
        int xi = a->first == 'x' ? a->second : b->second;
        int yj = a->first == 'y' ? a->second : b->second;
        if (xi <= yj) continue;  // a chain edge
      }
      out.ok = false;
      out.offending = t;
      out.reason = "mixed term " + t.text() + " is not a chain edge";
      return out;
    }
    if (t.size() < 2) {
      out.ok = false;
      out.offending = t;
      out.reason = "singleton term " + t.text();
      return out;
    }
  }
  out.ok = true;
  return out;
}

}  // namespace readk
