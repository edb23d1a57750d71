#include <doctest.h>

#include <cstdint>

#include "conlap/constructions.hpp"
#include "conlap/functionals.hpp"
#include "conlap/linalg.hpp"

using namespace conlap;

namespace {
std::int64_t eta_of(const Graph& g) { return eta(whitney_complex(g)); }
}  // namespace

TEST_CASE("eta agrees five ways") {
  std::vector<Graph> gs{gen::house(), gen::octahedron(), gen::double_pyramid(), gen::cross16(),
                        gen::wheel(5), gen::moebius(7), gen::complete(1), gen::figure_eight(3)};
  for (std::uint64_t s = 0; s < 20; ++s) gs.push_back(gen::erdos_renyi(9, Rational(1, 2), 300 + s));
  for (const auto& g : gs) {
    EtaBundle b = eta_bundle(whitney_complex(g));
    CHECK(b.all_equal());
    CHECK(eta1(whitney_complex(g)) == b.trace);
  }
}

TEST_CASE("closed forms") {
  for (std::size_t n = 4; n <= 8; ++n) CHECK(eta_of(gen::cycle(n)) == static_cast<std::int64_t>(4 * n));
  CHECK(eta_of(gen::complete(1)) == 0);
  CHECK(eta_of(gen::complete(2)) == 4);
  CHECK(eta_of(gen::complete(3)) == 6);
  CHECK(eta_of(gen::complete(4)) == 16);
  CHECK(eta_of(gen::complete(5)) == 30);
  CHECK(eta_of(gen::complete(6)) == 64);
  CHECK(eta0(gen::complete_bipartite(2, 3)) == 12);
  CHECK(eta_of(gen::complete_bipartite(2, 3)) == 24);
  CHECK(eta_of(gen::cross16()) == 160);
  CHECK(eta_of(gen::octahedron()) == 0);
  CHECK(green_trace(whitney_complex(gen::octahedron())) == 26);
}

TEST_CASE("eta0 basics") {
  CHECK(eta0(gen::house()) == 9);
  CHECK(eta0(gen::path(3)) == 4);
  CHECK(eta0(gen::complete(3)) == 3);
  CHECK(eta0(gen::double_pyramid()) == -4);
  CHECK(eta0(gen::edgeless(3)) == 0);
  CHECK(sphere_euler_characteristics(gen::house()) == std::vector<std::int64_t>{2, 2, 2, 2, 1});
}

TEST_CASE("eta0 is the derivative gap of the reduced generating function of G'") {
  // holds for any graph
  for (std::uint64_t s = 0; s < 10; ++s) {
    Graph g = gen::erdos_renyi(7, Rational(1, 2), 500 + s);
    GenPoly f = generating_function(clique_f_vector(g), true);
    CHECK(derivative_gap(f) == eta0(g));
  }
}

TEST_CASE("Zykov join formula for eta0") {
  std::vector<Graph> gs{gen::path(3), gen::cycle(4), gen::complete(2), gen::edgeless(2), gen::house(),
                        gen::star(3)};
  for (const auto& a : gs)
    for (const auto& b : gs) {
      ZykovCheck z = zykov_eta0_formula_check(a, b);
      CHECK(z.holds());
    }
}

TEST_CASE("generating functions multiply under join") {
  Graph a = gen::cycle(5), b = gen::path(3);
  GenPoly fa = generating_function(clique_f_vector(a), true);
  GenPoly fb = generating_function(clique_f_vector(b), true);
  GenPoly fj = generating_function(clique_f_vector(zykov_join(a, b)), true);
  CHECK(fj == fa * fb);
}

TEST_CASE("curvature sums to chi") {
  for (const auto& g : {gen::house(), gen::octahedron(), gen::wheel(7), gen::double_pyramid()}) {
    CurvatureProfile c = curvature_profile(g);
    Rational total = 0, total_f = 0;
    for (const auto& k : c.euler_curvature) total += k;
    for (const auto& k : c.euler_curvature_antiderivative) total_f += k;
    CHECK(total == euler_characteristic(whitney_complex(g)));
    CHECK(total_f == total);
  }
}

TEST_CASE("potential of the Green function is the curvature (sum g = chi)") {
  SimplicialComplex k = whitney_complex(gen::double_pyramid());
  std::vector<BigInt> v = face_potential(green_function(k));
  BigInt sum = 0;
  for (const auto& x : v) sum += x;
  CHECK(sum == 3);
}

TEST_CASE("expected Euler characteristic") {
  CHECK(expectation_chi(1, Rational(1, 2)) == 1);
  CHECK(expectation_chi(2, Rational(1, 3)) == Rational(5, 3));
  // oracle: exact average over all 64 labelled graphs on 4 vertices at p = 1/2
  std::vector<Edge> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::int64_t sum = 0;
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<Edge> es;
    for (unsigned b = 0; b < 6; ++b)
      if (mask >> b & 1u) es.push_back(pairs[b]);
    sum += euler_characteristic(clique_f_vector(Graph({0, 1, 2, 3}, es)));
  }
  CHECK(expectation_chi(4, Rational(1, 2)) == Rational(sum, 64));
}

TEST_CASE("Monte-Carlo estimate is deterministic across execution modes") {
  MonteCarloEstimate a = monte_carlo_chi(7, Rational(1, 2), 300, 9, Exec::serial);
  MonteCarloEstimate b = monte_carlo_chi(7, Rational(1, 2), 300, 9, Exec::parallel);
  CHECK(a.mean == b.mean);
  CHECK(a.standard_error == b.standard_error);
  CHECK(a.trials == 300);
}

TEST_CASE("Moebius sieve against trial division, Mertens identity") {
  std::vector<int> mu = moebius_sieve(500);
  for (std::uint64_t n = 1; n <= 500; ++n) CHECK(mu[n] == moebius_mu(n));
  CHECK(mertens(10) == -1);
  CHECK(mertens(1) == 1);
  for (std::uint32_t n = 2; n <= 40; ++n) {
    CHECK(mertens_check(n));
    if (moebius_mu(n) != 0) CHECK(prime_index(n) == -moebius_mu(n));
  }
}

TEST_CASE("small functional examples") {
  CHECK(eta(SimplicialComplex::closure({Face{0}})) == 0);
  CHECK(eta(SimplicialComplex()) == 0);
  CHECK(eta_column(SimplicialComplex::closure({Face{0}})) == 0);
  CHECK(eta0(gen::complete(1)) == 0);  // empty sphere
  for (std::size_t n = 2; n <= 6; ++n) CHECK(eta0(gen::complete(n)) == static_cast<std::int64_t>(n));
  CHECK(eta0(zykov_join(gen::cycle(4), gen::cycle(4))) == 16);
  ZykovCheck w4 = zykov_eta0_formula_check(gen::complete(1), gen::cycle(4));
  CHECK(w4.holds());
  CHECK(w4.direct == eta0(gen::wheel(4)));
  ZykovCheck k2 = zykov_eta0_formula_check(gen::complete(1), gen::complete(1));
  CHECK(k2.direct == 2);
  CHECK(k2.formula == 2);
  CHECK(expectation_chi(7, Rational(0)) == 7);
  CHECK(expectation_chi(7, Rational(1)) == 1);
  CurvatureProfile iso = curvature_profile(gen::edgeless(1));
  REQUIRE(iso.euler_curvature.size() == 1);
  CHECK(iso.euler_curvature[0] == 1);
  CHECK(mertens_check(2));
  CHECK(mertens_check(30));
  GenPoly oct1 = generating_function(FVector{26, 72, 48}, true);
  CHECK(oct1.derivative() == GenPoly{26, 144, 144});
  CHECK(derivative_gap(oct1) == 0);
  GenPoly p{1, 2};
  CHECK(p.antiderivative() == GenPoly{0, 1, 1});
  CHECK(p.antiderivative()(Rational(-1)) == 0);
}
