#pragma once

#include <string>

#include "core/cover.hpp"
#include "core/formula.hpp"
#include "core/graph.hpp"
#include "core/search.hpp"
#include "core/sop.hpp"

namespace readk {

/// {"vertices":[...], "edges":[["u","v"],...], "x_side":[...], "y_side":[...]}
/// Side lists are emitted only when tags are present.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

/// [{"left":["x1"],"right":["y1","y2"]}, ...]
std::string cover_to_json(const BicliqueCover& c);
BicliqueCover cover_from_json(const std::string& text);

/// List of lists of variable names, canonical order. CSOP output travels in
/// the same shape, so the raw term-list forms are exposed alongside.
std::string terms_to_json(const std::vector<Term>& terms);
std::vector<Term> terms_from_json(const std::string& text);
std::string sop_to_json(const SopForm& s);
SopForm sop_from_json(const std::string& text);

/// {"counts":{"a1":2,...}, "read_index":2}
std::string occurrences_to_json(const OccurrenceProfile& p);

/// {"outcome":"yes"|"no"|"unknown", "witness":..., "stats":{...}}
std::string search_result_to_json(const SearchResult& r);

std::string outcome_name(Outcome o);

}  // namespace readk
