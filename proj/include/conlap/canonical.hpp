#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "conlap/graph.hpp"

namespace conlap {

/// Isomorphism-invariant certificate of a graph. Two graphs are isomorphic
/// iff their certificates compare equal. `order[i]` is the vertex index
/// placed at canonical position i.
struct CanonicalForm {
  std::size_t n = 0;
  std::vector<std::uint64_t> bits;  // upper triangle, row-major over canonical positions
  std::vector<std::size_t> order;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n == b.n && a.bits == b.bits;
  }
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.bits <=> b.bits;
  }
  std::string key() const;
};

CanonicalForm canonical_form(const Graph& g);
/// The graph relabelled 0..n-1 in canonical order.
Graph canonical_graph(const Graph& g);

}  // namespace conlap
