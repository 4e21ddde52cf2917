#include "core/json_io.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace readk {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw std::invalid_argument(std::string("malformed ") + what + " JSON");
  return j;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array())
    throw std::invalid_argument(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string())
      throw std::invalid_argument(std::string(what) + " must contain strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

std::string graph_to_json(const Graph& g) {
  json j;
  j["vertices"] = g.vertices();
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  if (g.has_side_tags()) {
    std::vector<std::string> xs, ys;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      int idx = static_cast<int>(i);
      if (g.side(idx) == Graph::Side::X) xs.push_back(g.name_of(idx));
      if (g.side(idx) == Graph::Side::Y) ys.push_back(g.name_of(idx));
    }
    j["x_side"] = xs;
    j["y_side"] = ys;
  }
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  json j = parse_or_throw(text, "graph");
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");
  std::vector<std::string> vertices = string_list(j["vertices"], "vertices");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j["edges"]) {
    std::vector<std::string> pair = string_list(e, "edge");
    if (pair.size() != 2)
      throw std::invalid_argument("each edge must list exactly two vertices");
    edges.push_back({pair[0], pair[1]});
  }
  std::vector<std::string> xs, ys;
  if (j.contains("x_side")) xs = string_list(j["x_side"], "x_side");
  if (j.contains("y_side")) ys = string_list(j["y_side"], "y_side");
  return Graph::from_parts(std::move(vertices), edges, xs, ys);
}

std::string cover_to_json(const BicliqueCover& c) {
  json j = json::array();
  for (const Biclique& b : c.bicliques())
    j.push_back({{"left", b.left}, {"right", b.right}});
  return j.dump();
}

BicliqueCover cover_from_json(const std::string& text) {
  json j = parse_or_throw(text, "cover");
  if (!j.is_array())
    throw std::invalid_argument("cover JSON must be an array of bicliques");
  std::vector<Biclique> bs;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("left") || !item.contains("right"))
      throw std::invalid_argument("each biclique needs \"left\" and \"right\"");
    Biclique b;
    b.left = string_list(item["left"], "left");
    b.right = string_list(item["right"], "right");
    bs.push_back(std::move(b));
  }
  return BicliqueCover(std::move(bs));
}

std::string terms_to_json(const std::vector<Term>& terms) {
  json j = json::array();
  for (const Term& t : terms) j.push_back(t.vars());
  return j.dump();
}

std::vector<Term> terms_from_json(const std::string& text) {
  json j = parse_or_throw(text, "sum-of-products");
  if (!j.is_array())
    throw std::invalid_argument("sum-of-products JSON must be a list of terms");
  std::vector<Term> terms;
  for (const auto& t : j) terms.push_back(Term(string_list(t, "term")));
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  return terms;
}

std::string sop_to_json(const SopForm& s) { return terms_to_json(s.terms()); }

SopForm sop_from_json(const std::string& text) {
  return SopForm::absorb(terms_from_json(text));
}

std::string occurrences_to_json(const OccurrenceProfile& p) {
  json counts = json::object();
  for (const auto& [name, n] : p.counts) counts[name] = n;
  json j;
  j["counts"] = std::move(counts);
  j["read_index"] = p.read_index;
  return j.dump();
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Yes: return "yes";
    case Outcome::No: return "no";
    case Outcome::Unknown: return "unknown";
  }
  return "unknown";
}

std::string search_result_to_json(const SearchResult& r) {
  json j;
  j["outcome"] = outcome_name(r.outcome);
  if (r.witness) j["witness"] = render(*r.witness);
  j["stats"] = {{"candidates", r.stats.candidates},
                {"elapsed_ms", r.stats.elapsed_ms}};
  return j.dump();
}

}  // namespace readk
