#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "conlap/graph.hpp"

namespace conlap {

/// Recursive combinatorial recognizers: collapsible graphs, d-graphs,
/// d-spheres, boundaries and d-varieties. The empty graph is the
/// (-1)-sphere and (-1)-graph; K_1 is collapsible.
///
/// Results are memoized per instance, keyed by the canonical form for
/// graphs with at most 12 vertices and by the exact adjacency otherwise.
/// An instance is not thread-safe; the free functions below use a
/// thread-local instance.
class Recognizer {
 public:
  bool collapsible(const Graph& g);
  bool is_d_graph(const Graph& g, int d);
  /// Existential reading: some vertex can be removed leaving a collapsible
  /// graph. `strict` requires this for every vertex.
  bool is_d_sphere(const Graph& g, int d, bool strict = false);
  /// Labels of vertices whose unit sphere is collapsible.
  std::vector<Vertex> boundary_vertices(const Graph& g);
  /// Every unit sphere is a (d-1)-sphere or collapsible, the boundary is
  /// non-empty and induces a (d-1)-graph.
  bool is_d_graph_with_boundary(const Graph& g, int d);
  /// Unit spheres are (d-1)-graphs except on an independent set of
  /// singular vertices, whose spheres are (d-1)-varieties.
  bool is_d_variety(const Graph& g, int d);

  std::size_t cache_size() const { return cache_.size(); }

 private:
  std::string key(const Graph& g, char kind, int d) const;
  std::unordered_map<std::string, bool> cache_;
};

bool is_collapsible(const Graph& g);
bool is_d_graph(const Graph& g, int d);
bool is_d_sphere(const Graph& g, int d, bool strict = false);
std::vector<Vertex> boundary_vertices(const Graph& g);
bool is_d_graph_with_boundary(const Graph& g, int d);
bool is_d_variety(const Graph& g, int d);

}  // namespace conlap
