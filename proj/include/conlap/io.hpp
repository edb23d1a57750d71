#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "conlap/complex.hpp"
#include "conlap/graph.hpp"

namespace conlap {

/// Input errors carry 1-based line and column.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// `{"facets": [[0,1,2],[2,3]]}` (closed on load) or `{"faces": [...]}`
/// (validated verbatim).
SimplicialComplex parse_complex_json(std::string_view text);
/// `{"schema": 1, "faces": [...]}` in canonical order.
std::string complex_to_json(const SimplicialComplex& k);

/// One `u v` pair per line; a lone `u` declares an isolated vertex; `#`
/// starts a comment.
Graph parse_edge_list(std::string_view text);
std::string graph_to_edge_list(const Graph& g);
/// `{"schema": 1, "vertices": [...], "edges": [[u,v], ...]}`
std::string graph_to_json(const Graph& g);

/// A loaded input: either a complex or a graph (taken with its Whitney complex).
using Input = std::variant<SimplicialComplex, Graph>;
/// JSON objects with "facets"/"faces" become complexes, with "edges" graphs;
/// anything else is parsed as an edge list.
Input parse_input(std::string_view text);
Input load_input_file(const std::string& path);

}  // namespace conlap
