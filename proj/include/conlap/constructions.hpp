#pragma once

#include <cstdint>
#include <string_view>

#include "conlap/complex.hpp"
#include "conlap/graph.hpp"
#include "conlap/matrix.hpp"

namespace conlap {

/// Serial or OpenMP execution for the data-parallel kernels. Both produce
/// identical results; the serial path is the reference.
enum class Exec { serial, parallel };

/// Whitney (clique) complex: every non-empty complete subgraph is a face.
/// `max_dim` >= 0 truncates to faces of at most that dimension.
SimplicialComplex whitney_complex(const Graph& g, int max_dim = -1);
/// f-vector of the Whitney complex without materializing the faces.
FVector clique_f_vector(const Graph& g, Exec exec = Exec::parallel);

/// G1: faces of K, joined when one strictly contains the other.
LabeledGraph barycentric_refinement(const SimplicialComplex& k);
/// G': faces of K, joined when they intersect.
LabeledGraph connection_graph(const SimplicialComplex& k);

/// Subgraph induced on the neighbours of `v` (a label). Throws InputError for unknown labels.
Graph unit_sphere(const Graph& g, Vertex v);
Graph unit_sphere_at(const Graph& g, std::size_t index);

/// (d+1)x(d+1) matrix S(i,j) = i! Stirling2(j,i) with 1-based i, j. Maps f(G) to f(G1).
IntMatrix barycentric_operator(int d);
FVector apply_barycentric_operator(const FVector& f);

/// Disjoint union of G and H plus every G-H edge. H is relabelled above max label of G.
Graph zykov_join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union with H's vertex y identified to G's vertex x.
Graph wedge_sum(const Graph& g, const Graph& h, Vertex x, Vertex y);

namespace gen {

Graph complete(std::size_t n);
/// C_n for n >= 3 (C_3 is K_3).
Graph cycle(std::size_t n);
/// Path on n vertices.
Graph path(std::size_t n);
Graph edgeless(std::size_t n);
/// Centre 0 joined to leaves 1..n.
Graph star(std::size_t n);
/// Hub 0 joined to the cycle 1..n, n >= 3.
Graph wheel(std::size_t n);
Graph complete_bipartite(std::size_t n, std::size_t m);
/// Labels 1..5, edges 1-2, 2-3, 3-4, 4-1, 2-5, 3-5 (roof top 5).
Graph house();
/// P2 + P2 + P2.
Graph octahedron();
/// P2 + P2 + P2 + P2, the 3-sphere with f-vector (8,24,32,16).
Graph cross16();
/// P3 + C4 on labels 1..7.
Graph double_pyramid();
/// C_k wedge C_k.
Graph figure_eight(std::size_t k);
/// Circulant C_n(1,2) for odd n >= 7: a triangulated Moebius band.
Graph moebius(std::size_t n);
/// Square-free integers in [2, n], joined when one divides the other.
Graph prime_graph(std::uint32_t n);
/// Square-free integers in [2, n], joined when they share a factor > 1.
Graph prime_connection_graph(std::uint32_t n);
/// G(n, p): each pair i<j (lexicographic) kept iff the next mt19937_64 draw
/// r satisfies r * den(p) < num(p) * 2^64.
Graph erdos_renyi(std::size_t n, const Rational& p, std::uint64_t seed);

struct Params {
  std::size_t n = 0;
  std::size_t m = 0;
  Rational p = Rational(1, 2);
  std::uint64_t seed = 0;
};

/// Dispatch by CLI name: kn cn path edgeless star wheel knm house octahedron
/// cross16 doublepyramid fig8 moebius prime er. Throws InputError on bad
/// names or out-of-range parameters.
Graph named(std::string_view name, const Params& params);

}  // namespace gen

/// Square-free test and Moebius function, by trial division.
int moebius_mu(std::uint64_t n);

}  // namespace conlap
