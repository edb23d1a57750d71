#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "conlap/genpoly.hpp"
#include "conlap/numeric.hpp"

namespace conlap {

using Vertex = std::uint32_t;

/// Raised for malformed user input (duplicate vertices, empty faces, bad files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A face list that is not closed under taking non-empty subsets.
class ClosureViolation : public InputError {
 public:
  ClosureViolation(const std::string& face, const std::string& missing)
      : InputError("face " + face + " is missing its subset " + missing),
        face_(face), missing_(missing) {}
  const std::string& face() const { return face_; }
  const std::string& missing() const { return missing_; }

 private:
  std::string face_;
  std::string missing_;
};

/// A simplex: a non-empty, strictly increasing list of vertex labels.
class Face {
 public:
  Face(std::initializer_list<Vertex> vertices) : Face(std::vector<Vertex>(vertices)) {}
  /// Sorts the input; throws InputError on duplicates or an empty list.
  explicit Face(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  /// (-1)^dim
  int parity() const { return (dimension() % 2 == 0) ? 1 : -1; }

  bool intersects(const Face& other) const;
  /// Non-strict subset test.
  bool is_subset_of(const Face& other) const;
  bool contains(Vertex v) const;

  std::string to_string() const;

  /// Canonical order: dimension first, then lexicographic.
  friend std::strong_ordering operator<=>(const Face& a, const Face& b);
  friend bool operator==(const Face& a, const Face& b) = default;

 private:
  struct Trusted {};
  Face(Trusted, std::vector<Vertex> sorted) : vertices_(std::move(sorted)) {}
  friend class SimplicialComplex;
  std::vector<Vertex> vertices_;
};

/// Face counts by dimension, v_0, v_1, ..., v_d.
struct FVector {
  std::vector<BigInt> counts;

  FVector() = default;
  explicit FVector(std::vector<BigInt> c) : counts(std::move(c)) {}
  FVector(std::initializer_list<long> c) {
    for (long v : c) counts.emplace_back(v);
  }
  std::size_t size() const { return counts.size(); }
  const BigInt& operator[](std::size_t k) const { return counts[k]; }
  BigInt total() const;
  std::string to_string() const;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Finite abstract simplicial complex, stored as its full face list in
/// canonical order. Immutable after construction.
class SimplicialComplex {
 public:
  /// The empty complex.
  SimplicialComplex() = default;

  /// Smallest complex containing every facet.
  static SimplicialComplex closure(std::span<const Face> facets);
  static SimplicialComplex closure(std::initializer_list<Face> facets) {
    return closure(std::span<const Face>(facets.begin(), facets.size()));
  }
  /// Accepts a face list verbatim if it is subset-closed (duplicates are rejected).
  static SimplicialComplex validate(std::vector<Face> faces);
  /// Trusted constructor for face lists that are closed by construction
  /// (clique lists); only sorts and deduplicates.
  static SimplicialComplex from_closed(std::vector<Face> faces);

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(std::size_t i) const { return faces_[i]; }
  std::size_t size() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }
  /// Maximal dimension, -1 for the empty complex.
  int dimension() const { return faces_.empty() ? -1 : faces_.back().dimension(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  std::optional<std::size_t> index_of(const Face& f) const;
  /// Index range [begin, end) of the faces of dimension k.
  std::pair<std::size_t, std::size_t> dimension_range(int k) const;
  /// Faces not contained in any other face.
  std::vector<Face> facets() const;
  /// (-1)^dim per face, in canonical order.
  std::vector<int> parities() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.faces_ == b.faces_;
  }

 private:
  explicit SimplicialComplex(std::vector<Face> sorted_unique_faces);
  std::vector<Face> faces_;
  std::vector<Vertex> vertices_;
  std::vector<std::size_t> dim_offsets_;  // dim_offsets_[k] = first index of dimension k
};

FVector f_vector(const SimplicialComplex& k);
std::int64_t euler_characteristic(const SimplicialComplex& k);
std::int64_t euler_characteristic(const FVector& f);
/// (-1)^(number of odd-dimensional faces)
int fermi_characteristic(const SimplicialComplex& k);

/// f(x) = sum_k v_{k-1} x^k, plus the constant 1 when reduced.
GenPoly generating_function(const FVector& f, bool reduced);
GenPoly generating_function(const SimplicialComplex& k, bool reduced);

/// Narrowing helper for invariants known to be small.
std::int64_t to_int64(const BigInt& v);

}  // namespace conlap
