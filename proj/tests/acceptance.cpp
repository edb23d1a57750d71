// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "conlap/constructions.hpp"
#include "conlap/functionals.hpp"
#include "conlap/io.hpp"
#include "conlap/linalg.hpp"
#include "conlap/report.hpp"
#include "conlap/search.hpp"

using namespace conlap;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

template <class A, class B>
void expect_eq(const A& got, const B& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    throw Failure{os.str()};
  }
}

std::string str(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string str(const Inertia& in) {
  return "(" + std::to_string(in.negative) + "," + std::to_string(in.zero) + "," +
         std::to_string(in.positive) + ")";
}

// The house matrices as printed: triangle, vertices 1..5, then edges
// 14 12 23 25 34 35.
const char* kHouseL =
    "1 0 1 1 0 1 0 1 1 1 1 1\n"
    "0 1 0 0 0 0 1 1 0 0 0 0\n"
    "1 0 1 0 0 0 0 1 1 1 0 0\n"
    "1 0 0 1 0 0 0 0 1 0 1 1\n"
    "0 0 0 0 1 0 1 0 0 0 1 0\n"
    "1 0 0 0 0 1 0 0 0 1 0 1\n"
    "0 1 0 0 1 0 1 1 0 0 1 0\n"
    "1 1 1 0 0 0 1 1 1 1 0 0\n"
    "1 0 1 1 0 0 0 1 1 1 1 1\n"
    "1 0 1 0 0 1 0 1 1 1 0 1\n"
    "1 0 0 1 1 0 1 0 1 0 1 1\n"
    "1 0 0 1 0 1 0 0 1 1 1 1\n";

const char* kHouseG =
    "1 0 1 1 0 1 0 0 -1 -1 0 -1\n"
    "0 -1 -1 0 -1 0 1 1 0 0 0 0\n"
    "1 -1 -1 0 0 0 0 1 0 0 0 -1\n"
    "1 0 0 -1 -1 0 0 0 0 -1 1 0\n"
    "0 -1 0 -1 -1 0 1 0 0 0 1 0\n"
    "1 0 0 0 0 0 0 0 -1 0 0 0\n"
    "0 1 0 0 1 0 -1 0 0 0 0 0\n"
    "0 1 1 0 0 0 0 -1 0 0 0 0\n"
    "-1 0 0 0 0 -1 0 0 0 1 0 1\n"
    "-1 0 0 -1 0 0 0 0 1 0 0 1\n"
    "0 0 0 1 1 0 0 0 0 0 -1 0\n"
    "-1 0 -1 0 0 0 0 0 1 1 0 0\n";

const double kHouseSpectrum[] = {-1.30009, -0.827091, -0.646217, -0.528497, -0.338261, -0.255285,
                                 0.245226, 1.20906,   1.72111,   2.9563,    3.17017,   6.59358};

std::vector<std::int64_t> ints(const FVector& f) {
  std::vector<std::int64_t> v;
  for (const auto& c : f.counts) v.push_back(to_int64(c));
  return v;
}

void house() {
  Graph g = gen::house();
  SimplicialComplex k = whitney_complex(g);
  expect_eq(str(ints(f_vector(k))), "(5,6,1)", "f-vector");
  LabeledGraph g1 = barycentric_refinement(k);
  expect_eq(str(ints(f_vector(whitney_complex(g1.graph)))), "(12,18,6)", "G1 f-vector");
  expect_eq(str(ints(clique_f_vector(connection_graph(k).graph))), "(12,29,27,12,2)", "G' f-vector");
  IntMatrix l = connection_laplacian(k);
  IntMatrix green = green_function(k);
  expect_eq(trace(l), 12, "tr L");
  expect_eq(trace(green), -6, "tr g");
  expect_eq(eta(k), 18, "eta");
  std::vector<std::int64_t> chis = sphere_euler_characteristics(g1.graph);
  std::sort(chis.begin(), chis.end());
  expect_eq(str(chis), "(0,1,1,1,1,2,2,2,2,2,2,2)", "sphere chi multiset");

  const std::vector<Face> printed_order{Face{2, 3, 5}, Face{1}, Face{2}, Face{3}, Face{4}, Face{5},
                                        Face{1, 4},    Face{1, 2}, Face{2, 3}, Face{2, 5}, Face{3, 4},
                                        Face{3, 5}};
  IntMatrix lp = connection_laplacian(printed_order);
  expect(to_text(lp) == kHouseL, "L differs from the printed matrix");
  expect(to_text(unimodular_inverse(lp)) == kHouseG, "g differs from the printed matrix");

  std::vector<double> ev = float_spectrum(l);
  expect_eq(ev.size(), 12u, "spectrum size");
  for (std::size_t i = 0; i < 12; ++i)
    expect(std::abs(ev[i] - kHouseSpectrum[i]) < 1e-4, "eigenvalue " + std::to_string(i) + " off");
  expect_eq(str(inertia(l)), "(6,0,6)", "inertia");
}

void double_pyramid() {
  SimplicialComplex k = whitney_complex(gen::double_pyramid());
  expect_eq(str(ints(f_vector(k))), "(7,16,12)", "f-vector");
  expect_eq(euler_characteristic(k), 3, "chi");
  expect_eq(str(betti_numbers(k)), "(1,0,2)", "betti");
  IntMatrix l = connection_laplacian(k);
  std::size_t ones = 0;
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j) ones += l(i, j) == 1;
  expect_eq(ones, 659u, "unit entries of L");
  expect_eq(connection_graph(k).graph.edge_count(), 312u, "edges of G'");
  expect_eq(35 + 2 * 312, 659, "diagonal plus twice the edges");
  IntMatrix g = green_function(k);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) expect(g(i, j) >= -2 && g(i, j) <= 2, "g entry outside -2..2");
  expect_eq(trace(g), 43, "tr g");
  expect_eq(eta(k), -8, "eta");
  expect_eq(eta0(gen::double_pyramid()), -4, "eta0");
  expect_eq(str(inertia(l)), "(16,0,19)", "inertia");
  std::vector<double> ev = float_spectrum(l);
  expect(std::abs(ev.front() + 3.30278) < 1e-3, "lower spectral hull");
  expect(std::abs(ev.back() - 20.0327) < 1e-3, "upper spectral hull");
}

void octahedron() {
  SimplicialComplex k = whitney_complex(gen::octahedron());
  FVector refined = f_vector(whitney_complex(barycentric_refinement(k).graph));
  GenPoly f1 = generating_function(refined, true);
  expect_eq(f1.to_string(), "1+26x+72x^2+48x^3", "refined generating function");
  expect(f1 == GenPoly({1, 26, 72, 48}), "generating function coefficients");
  expect_eq(f1.derivative()(Rational(-1)), Rational(26), "f1'(-1)");
  expect_eq(green_trace(k), 26, "tr g");
  expect_eq(eta(k), 0, "eta");
}

void closed_forms() {
  for (std::size_t n = 4; n <= 10; ++n)
    expect_eq(eta(whitney_complex(gen::cycle(n))), static_cast<std::int64_t>(4 * n), "eta(C" + std::to_string(n) + ")");
  const std::int64_t kn[] = {0, 4, 6, 16, 30, 64, 126};
  for (std::size_t n = 1; n <= 7; ++n)
    expect_eq(eta(whitney_complex(gen::complete(n))), kn[n - 1], "eta(K" + std::to_string(n) + ")");
  for (std::int64_t n : {2, 3})
    for (std::int64_t m : {2, 4}) {
      Graph g = gen::complete_bipartite(n, m);
      const std::string tag = "K" + std::to_string(n) + "," + std::to_string(m);
      expect_eq(eta0(g), 2 * n * m, "eta0(" + tag + ")");
      expect_eq(eta(whitney_complex(g)), 4 * n * m, "eta(" + tag + ")");
    }
  SimplicialComplex c16 = whitney_complex(gen::cross16());
  expect_eq(str(ints(f_vector(c16))), "(8,24,32,16)", "16-cell f-vector");
  expect_eq(eta(c16), 160, "eta(16-cell)");
}

void identity_corpus() {
  std::size_t failures = 0;
  std::string first;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 10;
    SimplicialComplex k = whitney_complex(gen::erdos_renyi(n, Rational(1, 2), i));
    Report r = identity_suite(k, "er" + std::to_string(i));
    for (const auto& c : r.checks)
      if (!c.passed) {
        ++failures;
        if (first.empty()) first = r.name + " " + c.name + " " + c.witness;
      }
    expect(r.fermi == 1 || r.fermi == -1, "Fermi characteristic not a unit");
  }
  expect(failures == 0, std::to_string(failures) + " identity failures, first: " + first);
}

void extremal_audit() {
  std::vector<TableRow> rows = audit_eta0_table();
  for (const auto& row : rows) {
    if (row.k == 3) continue;
    expect(row.matches(), "C(" + std::to_string(row.k) + ") row disagrees");
  }
  const auto c3 = std::find_if(rows.begin(), rows.end(), [](const TableRow& r) { return r.k == 3; });
  expect(c3 != rows.end() && c3->computed_min == 3 && c3->computed_max == 4, "C(3) exhaustive range");
  const std::string text = audit_text(rows);
  expect(text.find("C(3): published range 3..3 differs from the exhaustive range 3..4") != std::string::npos,
         "audit does not state the C(3) discrepancy");
  std::cout << text;
}

void mertens_identity() {
  const std::vector<int> mu = moebius_sieve(60);
  for (std::uint64_t n = 1; n <= 60; ++n) expect_eq(mu[n], moebius_mu(n), "sieve vs trial division");
  for (std::uint32_t n = 2; n <= 60; ++n)
    expect_eq(euler_characteristic(whitney_complex(gen::prime_graph(n))), 1 - mertens(n),
              "chi(G1(" + std::to_string(n) + "))");
}

void expectation() {
  const Rational exact = expectation_chi(8, Rational(1, 2));
  MonteCarloEstimate mc = monte_carlo_chi(8, Rational(1, 2), 10000, 1);
  const double gap = std::abs(mc.mean - exact.get_d());
  std::ostringstream os;
  os << "|" << mc.mean << " - " << exact.get_d() << "| = " << gap << " > 3 * " << mc.standard_error;
  expect(gap <= 3 * mc.standard_error, os.str());
}

void boundary_law() {
  std::vector<std::pair<std::string, Graph>> gs;
  for (std::size_t n = 5; n <= 8; ++n) gs.emplace_back("W" + std::to_string(n), gen::wheel(n));
  for (std::size_t n : {7, 9, 11}) gs.emplace_back("C" + std::to_string(n) + "(1,2)", gen::moebius(n));
  for (const auto& [name, g] : gs) {
    SimplicialComplex k = whitney_complex(g);
    std::vector<std::int64_t> chis = sphere_euler_characteristics(barycentric_refinement(k).graph);
    std::int64_t boundary = 0;
    for (auto c : chis) {
      expect(c == 0 || c == 1, name + ": G1 sphere with chi " + std::to_string(c));
      boundary += c == 1;
    }
    expect_eq(eta(k), boundary, name + " eta vs boundary length");
  }
}

void search_sanity() {
  SearchResult r = search_local(Objective::max_green_trace, {26, 10000, 1, 8, 0});
  expect(r.best >= 26, "best " + std::to_string(r.best) + " < 26");
  SimplicialComplex w = parse_complex_json(r.witness);
  expect_eq(w.size(), 26u, "witness face count");
  expect_eq(green_trace(w), r.best, "witness re-evaluation");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "house fixture", 1, house},
      {2, "double pyramid fixture", 5, double_pyramid},
      {3, "octahedron fixture", 2, octahedron},
      {4, "closed-form laws", 30, closed_forms},
      {5, "identity suite on 200 random complexes", 300, identity_corpus},
      {6, "extremal eta0 audit", 120, extremal_audit},
      {7, "Mertens identity", 60, mertens_identity},
      {8, "expectation formula", 60, expectation},
      {9, "boundary law", 60, boundary_law},
      {10, "search sanity", 180, search_sanity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run();
    } catch (const Failure& f) {
      error = f.what;
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (error.empty() && secs > c.limit_s)
      error = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s";
    std::cout << (error.empty() ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.name
              << "  (" << std::fixed << std::setprecision(2) << secs << " s)";
    if (!error.empty()) std::cout << "  " << error;
    std::cout << std::endl;
    failed += !error.empty();
  }
  std::cout << (10 - failed) << "/10 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
