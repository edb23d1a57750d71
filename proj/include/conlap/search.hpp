#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conlap/complex.hpp"
#include "conlap/constructions.hpp"
#include "conlap/graph.hpp"

namespace conlap {

/// One representative per isomorphism class of graphs on k vertices (k <= 8),
/// relabelled 0..k-1 in canonical order and sorted by certificate. Built by
/// one-vertex extension of the classes on k-1 vertices.
std::vector<Graph> enumerate_graphs(std::size_t k, Exec exec = Exec::parallel);
/// Serial reference: canonical dedup over all 2^(k(k-1)/2) labelled graphs.
std::vector<Graph> enumerate_graphs_bruteforce(std::size_t k);
/// Connected classes on k vertices, 2 <= k <= 8.
std::vector<Graph> enumerate_connected_graphs(std::size_t k, Exec exec = Exec::parallel);

struct ExtremalResult {
  std::size_t k = 0;
  std::int64_t min = 0;
  std::int64_t max = 0;
  Graph min_witness;
  Graph max_witness;
  std::size_t graphs = 0;
};
/// Exact min/max of eta0 over connected graphs on k vertices, 2 <= k <= 7.
/// Ties go to the first class in enumeration order.
ExtremalResult extremal_eta0(std::size_t k, Exec exec = Exec::parallel);

struct TableRow {
  std::size_t k;
  std::int64_t printed_min, printed_max;
  std::int64_t computed_min, computed_max;
  bool matches() const { return printed_min == computed_min && printed_max == computed_max; }
};
/// Compares the published eta0 extremal table for C(2)..C(6) with exhaustive values.
std::vector<TableRow> audit_eta0_table(Exec exec = Exec::parallel);
/// Plain-text audit naming every mismatching row.
std::string audit_text(const std::vector<TableRow>& rows);

struct SearchResult {
  std::string objective;
  std::int64_t best = 0;
  std::string witness;  ///< complex JSON (schema 1)
  std::size_t examined = 0;
  std::uint64_t seed = 0;
  double wall_seconds = 0;
  std::size_t flagged = 0;  ///< counterexamples found by scans
  std::vector<std::string> notes;
};
/// Wall time is left out unless `timing` is set, so output is reproducible.
std::string search_result_json(const SearchResult& r, int indent = 2, bool timing = false);

enum class Objective { max_green_trace, min_eta };

struct LocalSearchOptions {
  std::size_t faces = 26;
  std::size_t budget = 10000;  ///< total candidate evaluations over all chains
  std::uint64_t seed = 1;
  std::size_t chains = 8;      ///< fixed, so results do not depend on thread count
  int threads = 0;             ///< 0: OpenMP default
};

/// Simulated annealing over complexes with exactly `faces` faces. A move
/// deletes a facet and adds a face whose boundary is present, so the face
/// count never changes.
SearchResult search_local(Objective objective, const LocalSearchOptions& options);
inline SearchResult search_green_trace(std::size_t faces, std::size_t budget, std::uint64_t seed,
                                       int threads = 0) {
  return search_local(Objective::max_green_trace, {faces, budget, seed, 8, threads});
}

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};
struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Whitney complexes of all graph classes on <= max_vertices vertices with
/// at least one edge and at most max_faces faces, plus `random` seeded
/// Erdos-Renyi Whitney complexes.
std::vector<NamedComplex> negative_eigenvalue_corpus(std::size_t max_vertices, std::size_t max_faces,
                                                     std::size_t random, std::size_t random_n,
                                                     std::uint64_t seed);
/// best = smallest negative-eigenvalue count seen; flagged = complexes with none.
SearchResult negative_eigenvalue_scan(const std::vector<NamedComplex>& corpus, int threads = 0);

/// Named variety candidates plus graph classes on <= max_vertices vertices.
std::vector<NamedGraph> variety_corpus(std::size_t max_vertices);
/// Members that are d-varieties (d = clique dimension) are evaluated;
/// best = smallest eta among them, flagged = members with eta < 0.
SearchResult variety_eta_scan(const std::vector<NamedGraph>& corpus, int threads = 0);

}  // namespace conlap
