#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conlap/bitset.hpp"
#include "conlap/complex.hpp"

namespace conlap {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph over integer labels. Vertices are kept in
/// ascending label order; internal indices follow that order.
class Graph {
 public:
  Graph() = default;
  /// Edge endpoints missing from `vertices` are added. Loops are rejected,
  /// repeated edges collapse.
  Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges);
  explicit Graph(const std::vector<Edge>& edges) : Graph({}, edges) {}

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return labels_.empty(); }

  const std::vector<Vertex>& labels() const { return labels_; }
  Vertex label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(Vertex label) const;
  bool has_vertex(Vertex label) const { return index_of(label).has_value(); }

  /// Neighbour indices of vertex index i, ascending.
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return nbrs_[i]; }
  const Bitset& row(std::size_t i) const { return rows_[i]; }
  bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  std::size_t degree(std::size_t i) const { return nbrs_[i].size(); }

  /// Edges as label pairs (u < v), lexicographic.
  std::vector<Edge> edges() const;

  /// Subgraph induced on the given vertex indices.
  Graph induced(const std::vector<std::size_t>& indices) const;
  /// Same graph with vertex index i relabelled to `new_labels[i]`.
  Graph relabeled(const std::vector<Vertex>& new_labels) const;
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.nbrs_ == b.nbrs_;
  }

 private:
  std::vector<Vertex> labels_;
  std::vector<std::vector<std::size_t>> nbrs_;
  std::vector<Bitset> rows_;
  std::size_t edge_count_ = 0;
};

/// A graph whose vertex i stands for face i of a source complex.
struct LabeledGraph {
  Graph graph;
  std::vector<Face> faces;

  int dimension_of(std::size_t i) const { return faces[i].dimension(); }
};

}  // namespace conlap
