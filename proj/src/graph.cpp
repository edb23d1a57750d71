#include "conlap/graph.hpp"

#include <algorithm>

namespace conlap {

Graph::Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges) {
  for (const auto& [u, v] : edges) {
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    vertices.push_back(u);
    vertices.push_back(v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  labels_ = std::move(vertices);
  const std::size_t n = labels_.size();
  rows_.assign(n, Bitset(n));
  for (const auto& [u, v] : edges) {
    std::size_t a = *index_of(u), b = *index_of(v);
    rows_[a].set(b);
    rows_[b].set(a);
  }
  nbrs_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows_[i].for_each([&](std::size_t j) { nbrs_[i].push_back(j); });
    edge_count_ += nbrs_[i].size();
  }
  edge_count_ /= 2;
}

std::optional<std::size_t> Graph::index_of(Vertex label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j : nbrs_[i])
      if (j > i) out.emplace_back(labels_[i], labels_[j]);
  return out;
}

Graph Graph::induced(const std::vector<std::size_t>& indices) const {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (std::size_t a = 0; a < indices.size(); ++a) {
    vs.push_back(labels_[indices[a]]);
    for (std::size_t b = a + 1; b < indices.size(); ++b)
      if (adjacent(indices[a], indices[b])) es.emplace_back(labels_[indices[a]], labels_[indices[b]]);
  }
  return Graph(std::move(vs), es);
}

Graph Graph::relabeled(const std::vector<Vertex>& new_labels) const {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j : nbrs_[i])
      if (j > i) es.emplace_back(new_labels[i], new_labels[j]);
  return Graph(new_labels, es);
}

bool Graph::is_connected() const {
  if (labels_.empty()) return true;
  std::vector<char> seen(labels_.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : nbrs_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == labels_.size();
}

}  // namespace conlap
