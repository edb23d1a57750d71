#include <doctest.h>

#include <json.hpp>

#include "conlap/canonical.hpp"
#include "conlap/functionals.hpp"
#include "conlap/io.hpp"
#include "conlap/linalg.hpp"
#include "conlap/search.hpp"

using namespace conlap;

namespace {
SimplicialComplex witness_of(const SearchResult& r) {
  return parse_complex_json(r.witness);
}
}  // namespace

TEST_CASE("connected class counts") {
  const std::size_t expect[] = {0, 0, 1, 2, 6, 21, 112, 853, 11117};
  for (std::size_t k = 2; k <= 8; ++k) CHECK(enumerate_connected_graphs(k).size() == expect[k]);
  CHECK(enumerate_graphs(4).size() == 11);
  CHECK_THROWS_AS(enumerate_connected_graphs(1), InputError);
  CHECK_THROWS_AS(enumerate_connected_graphs(9), InputError);
}

TEST_CASE("vertex extension matches labelled brute force") {
  for (std::size_t k = 0; k <= 6; ++k) {
    std::vector<Graph> a = enumerate_graphs(k, Exec::serial);
    std::vector<Graph> b = enumerate_graphs_bruteforce(k);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(canonical_form(a[i]) == canonical_form(b[i]));
  }
}

TEST_CASE("enumeration is deterministic") {
  CHECK(enumerate_graphs(6, Exec::serial) == enumerate_graphs(6, Exec::parallel));
  CHECK(enumerate_connected_graphs(5) == enumerate_connected_graphs(5));
}

TEST_CASE("extremal eta0") {
  ExtremalResult r2 = extremal_eta0(2);
  CHECK(r2.min == 2);
  CHECK(r2.max == 2);
  ExtremalResult r4 = extremal_eta0(4);
  CHECK(r4.min == 4);
  CHECK(r4.max == 8);
  CHECK(canonical_form(r4.max_witness) == canonical_form(gen::cycle(4)));
  CHECK(eta0(r4.min_witness) == 4);
  ExtremalResult r3 = extremal_eta0(3);
  CHECK(r3.min == 3);
  CHECK(r3.max == 4);
  CHECK_THROWS_AS(extremal_eta0(8), InputError);
}

TEST_CASE("audit names the mismatching row") {
  std::vector<TableRow> rows = audit_eta0_table(Exec::serial);
  REQUIRE(rows.size() == 5);
  for (const auto& row : rows) CHECK(row.matches() == (row.k != 3));
  CHECK(audit_text(rows).find("C(3): published range 3..3 differs from the exhaustive range 3..4") !=
        std::string::npos);
}

TEST_CASE("local search keeps the face count and re-validates") {
  for (std::size_t n : {1u, 7u, 12u}) {
    SearchResult r = search_local(Objective::max_green_trace, {n, 300, 4, 4, 0});
    SimplicialComplex w = witness_of(r);
    CHECK(w.size() == n);
    CHECK(green_trace(w) == r.best);
    CHECK(r.best >= static_cast<std::int64_t>(n));
    CHECK(r.examined == 300 + 4);
  }
  SearchResult one = search_local(Objective::max_green_trace, {1, 10, 1, 2, 0});
  CHECK(one.best == 1);
  SearchResult m = search_local(Objective::min_eta, {12, 400, 2, 4, 0});
  CHECK(eta(witness_of(m)) == m.best);
}

TEST_CASE("local search is independent of the thread count") {
  LocalSearchOptions o{14, 400, 99, 6, 1};
  SearchResult a = search_local(Objective::max_green_trace, o);
  o.threads = 3;
  SearchResult b = search_local(Objective::max_green_trace, o);
  CHECK(a.best == b.best);
  CHECK(a.witness == b.witness);
  CHECK(search_result_json(a) == search_result_json(b));
}

TEST_CASE("negative eigenvalue scan") {
  auto corpus = negative_eigenvalue_corpus(4, 10, 0, 0, 1);
  CHECK_FALSE(corpus.empty());
  for (const auto& c : corpus) {
    CHECK(c.complex.size() <= 10);
    CHECK(c.complex.size() > c.complex.vertex_count());
  }
  SearchResult r = negative_eigenvalue_scan(corpus);
  CHECK(r.flagged == 0);
  CHECK(r.best >= 1);
  CHECK(r.examined == corpus.size());

  std::vector<NamedComplex> point{{"point", SimplicialComplex::closure({Face{0}})}};
  CHECK(negative_eigenvalue_scan(point).flagged == 1);
  std::vector<NamedComplex> house{{"house", whitney_complex(gen::house())}};
  CHECK(negative_eigenvalue_scan(house).best == 6);

  auto with_random = negative_eigenvalue_corpus(2, 40, 6, 7, 5);
  std::size_t random_members = 0;
  for (const auto& c : with_random) random_members += c.name.rfind("er", 0) == 0;
  CHECK(random_members >= 6);
}

TEST_CASE("variety scan") {
  std::vector<NamedGraph> corpus{{"doublepyramid", gen::double_pyramid()},
                                 {"octahedron", gen::octahedron()},
                                 {"wedge", wedge_sum(gen::octahedron(), gen::octahedron(), 0, 0)}};
  SearchResult r = variety_eta_scan(corpus);
  CHECK(r.examined == 2);  // the double pyramid is not a variety
  CHECK(r.flagged == 0);
  CHECK(r.best == 0);
  CHECK(eta(witness_of(r)) == 0);
}

TEST_CASE("result JSON") {
  SearchResult r = search_local(Objective::max_green_trace, {5, 50, 1, 2, 0});
  auto j = nlohmann::json::parse(search_result_json(r, 2, true));
  CHECK(j["schema"] == 1);
  CHECK(j["witness"]["schema"] == 1);
  CHECK(j.contains("wall_time_s"));
  CHECK_FALSE(nlohmann::json::parse(search_result_json(r)).contains("wall_time_s"));
}
