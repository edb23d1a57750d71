#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "conlap/canonical.hpp"
#include "conlap/constructions.hpp"
#include "conlap/io.hpp"

using namespace conlap;

TEST_CASE("graph construction") {
  Graph g({7}, {{1, 2}, {2, 1}, {2, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.labels() == std::vector<Vertex>{1, 2, 3, 7});
  CHECK(g.degree(*g.index_of(2)) == 2);
  CHECK_FALSE(g.is_connected());
  CHECK_THROWS_AS(Graph({{4, 4}}), InputError);
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
  Graph sub = g.induced({0, 1, 2});
  CHECK(sub.is_connected());
  CHECK(sub.edge_count() == 2);
}

TEST_CASE("empty and single-vertex graphs") {
  Graph e;
  CHECK(e.empty());
  CHECK(Graph({0}, {}).is_connected());
}

namespace {
Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> labels(g.vertex_count());
  std::iota(labels.begin(), labels.end(), Vertex{100});
  std::shuffle(labels.begin(), labels.end(), rng);
  return g.relabeled(labels);
}
}  // namespace

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(5);
  std::vector<Graph> graphs{gen::house(), gen::octahedron(), gen::double_pyramid(), gen::moebius(9),
                            gen::complete_bipartite(3, 4), gen::cycle(8), gen::edgeless(4)};
  for (std::uint64_t s = 0; s < 20; ++s) graphs.push_back(gen::erdos_renyi(9, Rational(1, 2), s));
  for (const auto& g : graphs) {
    CanonicalForm c = canonical_form(g);
    for (int t = 0; t < 5; ++t) CHECK(canonical_form(shuffled(g, rng)) == c);
    CHECK(canonical_form(canonical_graph(g)) == c);
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  Graph c6 = gen::cycle(6);
  Graph two_triangles = disjoint_union(gen::cycle(3), gen::cycle(3));
  CHECK_FALSE(canonical_form(c6) == canonical_form(two_triangles));
  // same degree sequence, different graphs
  CHECK_FALSE(canonical_form(gen::complete_bipartite(3, 3)) ==
              canonical_form(zykov_join(gen::edgeless(1), gen::edgeless(1))));
  Graph prism({{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  CHECK_FALSE(canonical_form(prism) == canonical_form(gen::complete_bipartite(3, 3)));
}

TEST_CASE("edge list parsing") {
  Graph g = parse_edge_list("# house\n1 2\n2 3\n3 4\n4 1\n2 5\n3 5\n9\n");
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 6);
  try {
    parse_edge_list("1 2\n3 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("1 1\n"), InputError);
  Graph back = parse_edge_list(graph_to_edge_list(g));
  CHECK(back == g);
}

TEST_CASE("complex JSON round trip keeps canonical order") {
  auto k = SimplicialComplex::closure({Face{2, 3, 4}, Face{0, 4}});
  std::string text = complex_to_json(k);
  CHECK(text.find("\"schema\":1") != std::string::npos);
  auto back = parse_complex_json(text);
  CHECK(back.faces() == k.faces());
  CHECK(complex_to_json(back) == text);
  auto closed = parse_complex_json(R"({"facets": [[4,3,2],[0,4]]})");
  CHECK(closed.faces() == k.faces());
  CHECK_THROWS_AS(parse_complex_json(R"({"faces": [[0,1]]})"), ClosureViolation);
  CHECK_THROWS_AS(parse_complex_json(R"({"faces": [[0,1]],)"), ParseError);
  CHECK_THROWS_AS(parse_complex_json(R"({"facets": [[0,0]]})"), InputError);
}

TEST_CASE("parse_input dispatch") {
  Input a = parse_input(R"({"facets": [[0,1,2]]})");
  CHECK(std::holds_alternative<SimplicialComplex>(a));
  Input b = parse_input(R"({"edges": [[0,1],[1,2]]})");
  REQUIRE(std::holds_alternative<Graph>(b));
  CHECK(std::get<Graph>(b).edge_count() == 2);
  Input c = parse_input("0 1\n1 2\n");
  CHECK(std::holds_alternative<Graph>(c));
  Graph h = gen::house();
  Input d = parse_input(graph_to_json(h));
  CHECK(std::get<Graph>(d) == h);
}
