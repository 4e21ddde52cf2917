#include "core/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "core/errors.hpp"

namespace readk {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Formula Formula::var(std::string name) {
  require(!name.empty(), "variable name must be nonempty");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::sum(std::vector<Formula> children) {
  require(!children.empty(), "sum needs at least one child");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Sum;
  node->children = std::move(children);
  return Formula(std::move(node));
}

Formula Formula::prod(std::vector<Formula> children) {
  require(!children.empty(), "product needs at least one child");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Prod;
  node->children = std::move(children);
  return Formula(std::move(node));
}

const std::string& Formula::var_name() const {
  require(is_var(), "var_name on an internal node");
  return node_->name;
}

const std::vector<Formula>& Formula::children() const {
  require(!is_var(), "children on a leaf");
  return node_->children;
}

std::size_t Formula::leaf_count() const {
  if (is_var()) return 1;
  std::size_t n = 0;
  for (const Formula& c : children()) n += c.leaf_count();
  return n;
}

int compare(const Formula& a, const Formula& b) {
  auto rank = [](Formula::Kind k) {
    switch (k) {
      case Formula::Kind::Var: return 0;
      case Formula::Kind::Sum: return 1;
      case Formula::Kind::Prod: return 2;
    }
    return 3;
  };
  if (rank(a.kind()) != rank(b.kind()))
    return rank(a.kind()) < rank(b.kind()) ? -1 : 1;
  if (a.is_var()) return a.var_name().compare(b.var_name());
  const auto& ca = a.children();
  const auto& cb = b.children();
  for (std::size_t i = 0; i < ca.size() && i < cb.size(); ++i) {
    int c = compare(ca[i], cb[i]);
    if (c != 0) return c;
  }
  if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
  return 0;
}

bool operator==(const Formula& a, const Formula& b) {
  return compare(a, b) == 0;
}
bool operator!=(const Formula& a, const Formula& b) {
  return compare(a, b) != 0;
}
bool operator<(const Formula& a, const Formula& b) {
  return compare(a, b) < 0;
}

bool operator==(const SubformulaRef& a, const SubformulaRef& b) {
  return a.path == b.path && a.kept == b.kept;
}

// ---------------------------------------------------------------------------
// normalization

Formula normalize_tree(const Formula& f) {
  if (f.is_var()) return f;
  std::vector<Formula> flat;
  for (const Formula& c : f.children()) {
    Formula nc = normalize_tree(c);
    if (!nc.is_var() && nc.kind() == f.kind()) {
      for (const Formula& gc : nc.children()) flat.push_back(gc);
    } else {
      flat.push_back(std::move(nc));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end(),
                         [](const Formula& a, const Formula& b) {
                           return a == b;
                         }),
             flat.end());
  if (flat.size() == 1) return flat.front();
  return f.is_sum() ? Formula::sum(std::move(flat))
                    : Formula::prod(std::move(flat));
}

bool is_normalized(const Formula& f) {
  if (f.is_var()) return true;
  const auto& cs = f.children();
  if (cs.size() < 2) return false;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!cs[i].is_var() && cs[i].kind() == f.kind()) return false;
    if (i > 0 && compare(cs[i - 1], cs[i]) >= 0) return false;
    if (!is_normalized(cs[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// parsing / rendering

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(pos + 1), pos + 1);
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  Formula parse_sum() {
    std::vector<Formula> parts;
    parts.push_back(parse_prod());
    while (peek('+')) {
      ++pos;
      parts.push_back(parse_prod());
    }
    if (parts.size() == 1) return parts.front();
    return Formula::sum(std::move(parts));
  }

  Formula parse_prod() {
    std::vector<Formula> parts;
    parts.push_back(parse_atom());
    while (peek('*')) {
      ++pos;
      parts.push_back(parse_atom());
    }
    if (parts.size() == 1) return parts.front();
    return Formula::prod(std::move(parts));
  }

  Formula parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    if (text[pos] == '(') {
      ++pos;
      Formula inner = parse_sum();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      ++pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      return Formula::var(text.substr(start, pos - start));
    }
    fail("expected a variable or '('");
  }
};

}  // namespace

Formula parse_formula(const std::string& text) {
  Parser p(text);
  p.skip_ws();
  if (p.pos >= text.size()) throw ParseError("empty input", 1);
  Formula f = p.parse_sum();
  p.skip_ws();
  if (p.pos < text.size()) p.fail("trailing input");
  return normalize_tree(f);
}

namespace {

void render_rec(const Formula& f, std::string& out) {
  if (f.is_var()) {
    out += f.var_name();
    return;
  }
  bool first = true;
  for (const Formula& c : f.children()) {
    if (!first) out += f.is_sum() ? "+" : "*";
    first = false;
    bool parens = f.is_prod() && c.is_sum();
    if (parens) out += '(';
    render_rec(c, out);
    if (parens) out += ')';
  }
}

}  // namespace

std::string render(const Formula& f) {
  Formula n = is_normalized(f) ? f : normalize_tree(f);
  std::string out;
  render_rec(n, out);
  return out;
}

// ---------------------------------------------------------------------------
// occurrences

namespace {

void count_leaves(const Formula& f, std::map<std::string, int>& counts) {
  if (f.is_var()) {
    ++counts[f.var_name()];
    return;
  }
  for (const Formula& c : f.children()) count_leaves(c, counts);
}

}  // namespace

OccurrenceProfile occurrences(const Formula& f) {
  OccurrenceProfile p;
  count_leaves(f, p.counts);
  for (const auto& [name, n] : p.counts) p.read_index = std::max(p.read_index, n);
  return p;
}

int read_index(const Formula& f) { return occurrences(f).read_index; }

bool is_isolated(const std::string& v, const Formula& f) {
  if (!f.is_sum()) return false;
  for (const Formula& c : f.children())
    if (c.is_var() && c.var_name() == v) return true;
  return false;
}

// ---------------------------------------------------------------------------
// subformula handles

std::string format_handle(const SubformulaRef& h) {
  std::string out = "/";
  for (std::size_t i = 0; i < h.path.size(); ++i) {
    if (i > 0) out += '/';
    out += std::to_string(h.path[i]);
  }
  if (!h.kept.empty()) {
    out += ':';
    for (std::size_t i = 0; i < h.kept.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(h.kept[i]);
    }
  }
  return out;
}

SubformulaRef parse_handle(const std::string& text) {
  SubformulaRef h;
  if (text.empty() || text[0] != '/')
    throw std::invalid_argument("handle must start with '/'");
  std::size_t i = 1;
  auto read_int = [&](void) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw std::invalid_argument("malformed handle: " + text);
    return std::stoi(text.substr(start, i - start));
  };
  while (i < text.size() && text[i] != ':') {
    h.path.push_back(read_int());
    if (i < text.size() && text[i] == '/') ++i;
  }
  if (i < text.size() && text[i] == ':') {
    ++i;
    while (i < text.size()) {
      h.kept.push_back(read_int());
      if (i < text.size()) {
        if (text[i] != ',') throw std::invalid_argument("malformed handle: " + text);
        ++i;
      }
    }
  }
  return h;
}

const Formula& node_at(const Formula& f, const std::vector<int>& path) {
  const Formula* cur = &f;
  for (int idx : path) {
    if (cur->is_var() || idx < 0 ||
        static_cast<std::size_t>(idx) >= cur->children().size())
      throw std::invalid_argument("stale handle: path does not exist");
    cur = &cur->children()[idx];
  }
  return *cur;
}

namespace {

void check_kept(const Formula& node, const std::vector<int>& kept) {
  if (kept.empty()) return;
  if (node.is_var()) throw std::invalid_argument("stale handle: subset of a leaf");
  if (kept.size() < 2)
    throw std::invalid_argument("stale handle: kept subset needs >= 2 children");
  int prev = -1;
  for (int idx : kept) {
    if (idx <= prev || static_cast<std::size_t>(idx) >= node.children().size())
      throw std::invalid_argument("stale handle: bad kept index");
    prev = idx;
  }
}

}  // namespace

Formula subformula_at(const Formula& f, const SubformulaRef& h) {
  const Formula& node = node_at(f, h.path);
  check_kept(node, h.kept);
  if (h.kept.empty()) return node;
  std::vector<Formula> cs;
  for (int idx : h.kept) cs.push_back(node.children()[idx]);
  return node.is_sum() ? Formula::sum(std::move(cs)) : Formula::prod(std::move(cs));
}

std::vector<SubformulaRef> enumerate_two_mult(const Formula& f) {
  std::vector<SubformulaRef> out;
  std::vector<int> path;
  std::function<void(const Formula&)> walk = [&](const Formula& node) {
    if (node.is_var()) return;
    if (node.is_prod() && node.children().size() == 2)
      out.push_back(SubformulaRef{path, {}});
    for (std::size_t i = 0; i < node.children().size(); ++i) {
      path.push_back(static_cast<int>(i));
      walk(node.children()[i]);
      path.pop_back();
    }
  };
  walk(f);
  return out;
}

void for_each_subformula(const Formula& f,
                         const std::function<void(const SubformulaRef&)>& cb) {
  std::vector<int> path;
  std::function<void(const Formula&)> walk = [&](const Formula& node) {
    cb(SubformulaRef{path, {}});
    if (node.is_var()) return;
    int n = static_cast<int>(node.children().size());
    // Proper child subsets of size >= 2, as increasing index lists.
    std::vector<int> subset;
    std::function<void(int)> pick = [&](int from) {
      if (subset.size() >= 2 && static_cast<int>(subset.size()) < n)
        cb(SubformulaRef{path, subset});
      for (int i = from; i < n; ++i) {
        subset.push_back(i);
        pick(i + 1);
        subset.pop_back();
      }
    };
    pick(0);
    for (int i = 0; i < n; ++i) {
      path.push_back(i);
      walk(node.children()[i]);
      path.pop_back();
    }
  };
  walk(f);
}

// ---------------------------------------------------------------------------
// non-redundancy

namespace {

// A factor "isolates" v when it is the leaf v or a sum with v as a direct
// summand. Returns the isolated variable set of a factor.
std::set<std::string> isolated_vars(const Formula& factor) {
  std::set<std::string> vars;
  if (factor.is_var()) {
    vars.insert(factor.var_name());
  } else if (factor.is_sum()) {
    for (const Formula& c : factor.children())
      if (c.is_var()) vars.insert(c.var_name());
  }
  return vars;
}

struct RedundantPair {
  std::vector<int> path;  // product node
  int first = 0, second = 0;
  std::string shared;
};

// Deepest-first scan for a factor pair sharing an isolated variable.
bool find_redundant_pair(const Formula& node, std::vector<int>& path,
                         RedundantPair& out) {
  if (node.is_var()) return false;
  for (std::size_t i = 0; i < node.children().size(); ++i) {
    path.push_back(static_cast<int>(i));
    bool hit = find_redundant_pair(node.children()[i], path, out);
    path.pop_back();
    if (hit) return true;
  }
  if (!node.is_prod()) return false;
  const auto& cs = node.children();
  std::vector<std::set<std::string>> iso(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) iso[i] = isolated_vars(cs[i]);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (iso[i].empty()) continue;
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      std::vector<std::string> shared;
      std::set_intersection(iso[i].begin(), iso[i].end(), iso[j].begin(),
                            iso[j].end(), std::back_inserter(shared));
      if (!shared.empty()) {
        out.path = path;
        out.first = static_cast<int>(i);
        out.second = static_cast<int>(j);
        out.shared = shared.front();
        return true;
      }
    }
  }
  return false;
}

// Removes the direct summand v from a sum factor; collapses to the single
// remaining child when needed.
Formula drop_summand(const Formula& sum, const std::string& v) {
  std::vector<Formula> rest;
  bool dropped = false;
  for (const Formula& c : sum.children()) {
    if (!dropped && c.is_var() && c.var_name() == v) {
      dropped = true;
      continue;
    }
    rest.push_back(c);
  }
  if (rest.size() == 1) return rest.front();
  return Formula::sum(std::move(rest));
}

Formula rewrite_pair(const Formula& prod_node, const RedundantPair& hit) {
  const auto& cs = prod_node.children();
  const Formula& f1 = cs[hit.first];
  const Formula& f2 = cs[hit.second];
  Formula merged = Formula::var(hit.shared);
  if (f1.is_sum() && f2.is_sum()) {
    // (v + p)*(v + q) -> v + p*q
    merged = Formula::sum({Formula::var(hit.shared),
                           Formula::prod({drop_summand(f1, hit.shared),
                                          drop_summand(f2, hit.shared)})});
  }
  // Leaf/sum mix collapses to the shared variable outright: v*(v+q) -> v.
  std::vector<Formula> rest;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (static_cast<int>(i) != hit.first && static_cast<int>(i) != hit.second)
      rest.push_back(cs[i]);
  rest.push_back(std::move(merged));
  if (rest.size() == 1) return rest.front();
  return Formula::prod(std::move(rest));
}

Formula replace_node(const Formula& f, const std::vector<int>& path,
                     std::size_t depth, const Formula& replacement) {
  if (depth == path.size()) return replacement;
  std::vector<Formula> cs = f.children();
  int idx = path[depth];
  cs[idx] = replace_node(cs[idx], path, depth + 1, replacement);
  return f.is_sum() ? Formula::sum(std::move(cs)) : Formula::prod(std::move(cs));
}

}  // namespace

bool is_nonredundant(const Formula& f) {
  RedundantPair hit;
  std::vector<int> path;
  return !find_redundant_pair(f, path, hit);
}

Formula make_nonredundant(const Formula& f) {
  Formula cur = is_normalized(f) ? f : normalize_tree(f);
  std::size_t budget = cur.leaf_count() * cur.leaf_count() + 4;
  for (std::size_t step = 0; step < budget; ++step) {
    RedundantPair hit;
    std::vector<int> path;
    if (!find_redundant_pair(cur, path, hit)) return cur;
    const Formula& node = node_at(cur, hit.path);
    Formula rewritten = rewrite_pair(node, hit);
    cur = normalize_tree(replace_node(cur, hit.path, 0, rewritten));
  }
  throw InternalError("non-redundancy rewrite did not reach a fixpoint");
}

// ---------------------------------------------------------------------------
// substitutions

namespace {

bool contains_var(const Formula& f, const std::string& v) {
  if (f.is_var()) return f.var_name() == v;
  for (const Formula& c : f.children())
    if (contains_var(c, v)) return true;
  return false;
}

// Rebuilds the node at `path` with the kept children replaced by
// `replacement` (whole node when kept is empty).
Formula splice(const Formula& f, const SubformulaRef& h, std::size_t depth,
               const Formula& replacement) {
  if (depth == h.path.size()) {
    if (h.kept.empty()) return replacement;
    std::vector<Formula> cs;
    std::size_t ki = 0;
    for (std::size_t i = 0; i < f.children().size(); ++i) {
      if (ki < h.kept.size() && h.kept[ki] == static_cast<int>(i)) {
        ++ki;
        continue;
      }
      cs.push_back(f.children()[i]);
    }
    cs.push_back(replacement);
    return f.is_sum() ? Formula::sum(std::move(cs)) : Formula::prod(std::move(cs));
  }
  std::vector<Formula> cs = f.children();
  int idx = h.path[depth];
  cs[idx] = splice(cs[idx], h, depth + 1, replacement);
  return f.is_sum() ? Formula::sum(std::move(cs)) : Formula::prod(std::move(cs));
}

}  // namespace

Formula substitute_subformula(const Formula& f, const SubformulaRef& h,
                              const std::string& fresh_var) {
  if (contains_var(f, fresh_var))
    throw std::invalid_argument("substitution variable '" + fresh_var +
                                "' already occurs in the formula");
  const Formula& node = node_at(f, h.path);
  check_kept(node, h.kept);
  return normalize_tree(splice(f, h, 0, Formula::var(fresh_var)));
}

bool FoldResult::value() const {
  if (!is_constant()) throw InternalError("FoldResult::value on a formula");
  return value_;
}

const Formula& FoldResult::formula() const {
  if (is_constant()) throw InternalError("FoldResult::formula on a constant");
  return *formula_;
}

namespace {

// Fold with an optional "constant sentinel" leaf name. Children equal to the
// sentinel behave as the given constant.
FoldResult fold_const(const Formula& f, const std::string& v, bool value) {
  if (f.is_var())
    return f.var_name() == v ? FoldResult::constant(value) : FoldResult::of(f);
  std::vector<Formula> kept;
  for (const Formula& c : f.children()) {
    FoldResult r = fold_const(c, v, value);
    if (r.is_constant()) {
      if (f.is_sum() && r.value()) return FoldResult::constant(true);
      if (f.is_prod() && !r.value()) return FoldResult::constant(false);
      continue;  // neutral element, drop it
    }
    kept.push_back(r.formula());
  }
  if (kept.empty()) return FoldResult::constant(f.is_prod());
  if (kept.size() == 1) return FoldResult::of(kept.front());
  return FoldResult::of(f.is_sum() ? Formula::sum(std::move(kept))
                                   : Formula::prod(std::move(kept)));
}

}  // namespace

FoldResult substitute_const(const Formula& f, const std::string& v, bool value) {
  FoldResult r = fold_const(f, v, value);
  if (r.is_constant()) return r;
  return FoldResult::of(normalize_tree(r.formula()));
}

FoldResult substitute_subformula_const(const Formula& f, const SubformulaRef& h,
                                       bool value) {
  const Formula& node = node_at(f, h.path);
  check_kept(node, h.kept);
  // A private sentinel leaf stands in for the constant, then folds away.
  std::string sentinel = "_const_";
  while (contains_var(f, sentinel)) sentinel += '_';
  Formula spliced = splice(f, h, 0, Formula::var(sentinel));
  return substitute_const(spliced, sentinel, value);
}

}  // namespace readk
