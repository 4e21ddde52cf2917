// Test-side reference implementation, kept independent of the library: its
// own tiny AST, parser, evaluator and a truth-table route to minterms.
// Everything here is exhaustive and slow on purpose.

#pragma once

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

struct Node {
  char kind = 'v';  // 'v', '+', '*'
  std::string name;
  std::vector<Node> kids;
};

inline Node leaf(std::string n) {
  Node x;
  x.kind = 'v';
  x.name = std::move(n);
  return x;
}

namespace detail {

struct Parser {
  const std::string& s;
  std::size_t i = 0;
  explicit Parser(const std::string& text) : s(text) {}
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool at(char c) {
    ws();
    return i < s.size() && s[i] == c;
  }
  Node sum() {
    Node n;
    n.kind = '+';
    n.kids.push_back(prod());
    while (at('+')) {
      ++i;
      n.kids.push_back(prod());
    }
    return n.kids.size() == 1 ? n.kids.front() : n;
  }
  Node prod() {
    Node n;
    n.kind = '*';
    n.kids.push_back(atom());
    while (at('*')) {
      ++i;
      n.kids.push_back(atom());
    }
    return n.kids.size() == 1 ? n.kids.front() : n;
  }
  Node atom() {
    ws();
    if (i >= s.size()) throw std::runtime_error("oracle parser: unexpected end");
    if (s[i] == '(') {
      ++i;
      Node inner = sum();
      if (!at(')')) throw std::runtime_error("oracle parser: missing ')'");
      ++i;
      return inner;
    }
    std::size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    if (start == i) throw std::runtime_error("oracle parser: expected a name");
    return leaf(s.substr(start, i - start));
  }
};

}  // namespace detail

inline Node parse(const std::string& text) {
  detail::Parser p(text);
  Node n = p.sum();
  p.ws();
  if (p.i != text.size()) throw std::runtime_error("oracle parser: trailing input");
  return n;
}

inline bool eval(const Node& n, const std::set<std::string>& true_vars) {
  if (n.kind == 'v') return true_vars.count(n.name) > 0;
  if (n.kind == '+') {
    for (const Node& k : n.kids)
      if (eval(k, true_vars)) return true;
    return false;
  }
  for (const Node& k : n.kids)
    if (!eval(k, true_vars)) return false;
  return true;
}

inline void collect_vars(const Node& n, std::set<std::string>& out) {
  if (n.kind == 'v') {
    out.insert(n.name);
    return;
  }
  for (const Node& k : n.kids) collect_vars(k, out);
}

inline std::vector<std::string> variables(const Node& n) {
  std::set<std::string> vars;
  collect_vars(n, vars);
  return {vars.begin(), vars.end()};
}

/// Minimal true points of a monotone formula by exhaustive truth table:
/// assignments that are true and become false when any single variable is
/// dropped. These are exactly the minterms. Sorted terms of sorted names.
inline std::vector<std::vector<std::string>> minimal_true_points(const Node& n) {
  std::vector<std::string> vars = variables(n);
  if (vars.size() > 20)
    throw std::runtime_error("oracle: too many variables for a truth table");
  std::vector<std::vector<std::string>> out;
  for (unsigned long mask = 1; mask < (1UL << vars.size()); ++mask) {
    std::set<std::string> assignment;
    for (std::size_t b = 0; b < vars.size(); ++b)
      if (mask & (1UL << b)) assignment.insert(vars[b]);
    if (!eval(n, assignment)) continue;
    bool minimal = true;
    for (std::size_t b = 0; b < vars.size() && minimal; ++b) {
      if (!(mask & (1UL << b))) continue;
      std::set<std::string> smaller = assignment;
      smaller.erase(vars[b]);
      if (eval(n, smaller)) minimal = false;
    }
    if (minimal) out.push_back({assignment.begin(), assignment.end()});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool truth_equal(const Node& a, const Node& b) {
  std::set<std::string> vars;
  collect_vars(a, vars);
  collect_vars(b, vars);
  std::vector<std::string> vs(vars.begin(), vars.end());
  if (vs.size() > 20) throw std::runtime_error("oracle: too many variables");
  for (unsigned long mask = 0; mask < (1UL << vs.size()); ++mask) {
    std::set<std::string> assignment;
    for (std::size_t b = 0; b < vs.size(); ++b)
      if (mask & (1UL << b)) assignment.insert(vs[b]);
    if (eval(a, assignment) != eval(b, assignment)) return false;
  }
  return true;
}

/// Random monotone formula as text; shape and labels drawn from the engine.
inline std::string random_formula_text(std::mt19937& rng, int max_vars,
                                       int max_depth) {
  std::uniform_int_distribution<int> var_pick(1, max_vars);
  std::uniform_int_distribution<int> arity_pick(2, 4);
  std::uniform_int_distribution<int> pct(0, 99);
  auto rec = [&](auto&& self, int depth, bool sum_node) -> std::string {
    if (depth >= max_depth || pct(rng) < 25 + depth * 15)
      return "a" + std::to_string(var_pick(rng));
    int arity = arity_pick(rng);
    std::string out;
    for (int c = 0; c < arity; ++c) {
      std::string child = self(self, depth + 1, !sum_node);
      bool is_leaf = child.find('+') == std::string::npos &&
                     child.find('*') == std::string::npos;
      if (c > 0) out += sum_node ? "+" : "*";
      if (!sum_node && !is_leaf)
        out += "(" + child + ")";
      else
        out += child;
    }
    return out;
  };
  std::uniform_int_distribution<int> root(0, 1);
  return rec(rec, 0, root(rng) == 1);
}

}  // namespace oracle
