#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conlap/complex.hpp"
#include "conlap/constructions.hpp"
#include "conlap/graph.hpp"
#include "conlap/linalg.hpp"

namespace conlap {

/// The hydrogen trace computed five independent ways.
struct EtaBundle {
  std::int64_t trace = 0;         ///< tr L - tr g
  std::int64_t gauss_bonnet = 0;  ///< sum over G1 vertices of chi(S(x))
  std::int64_t generating = 0;    ///< f1'(0) - f1'(-1)
  std::int64_t curvature_g2 = 0;  ///< sum of (-1)^(1+dim y)(1+dim y) over positive-dim faces y of G1
  std::int64_t column = 0;        ///< -sum_i <A_i, g A_i>

  bool all_equal() const {
    return trace == gauss_bonnet && trace == generating && trace == curvature_g2 && trace == column;
  }
};

/// chi of the Whitney complex of every unit sphere, in vertex order.
std::vector<std::int64_t> sphere_euler_characteristics(const Graph& g);

std::int64_t eta(const SimplicialComplex& k);
std::int64_t eta0(const Graph& g);
std::int64_t eta1(const SimplicialComplex& k);
std::int64_t eta_generating(const SimplicialComplex& k);
std::int64_t eta_curvature_g2(const SimplicialComplex& k);
std::int64_t eta_column(const SimplicialComplex& k);
std::int64_t green_trace(const SimplicialComplex& k);
EtaBundle eta_bundle(const SimplicialComplex& k);

/// f'(0) - f'(-1) of a generating function.
Rational derivative_gap(const GenPoly& f);

struct CurvatureProfile {
  std::vector<Vertex> vertices;
  std::vector<std::int64_t> sphere_chi;         ///< chi(S(x))
  std::vector<Rational> euler_curvature;        ///< sum_k (-1)^k v_{k-1}(S(x)) / (k+1)
  std::vector<Rational> euler_curvature_antiderivative;  ///< F(0) - F(-1)
};
CurvatureProfile curvature_profile(const Graph& g);

/// V(x) = sum_y g(x,y) per face, canonical order.
std::vector<BigInt> face_potential(const IntMatrix& green);

struct ZykovCheck {
  std::int64_t direct = 0;   ///< eta0 of the join
  std::int64_t formula = 0;  ///< eta0(G) + eta0(H) + f_G'(-1) chi(H) + f_H'(-1) chi(G)
  bool holds() const { return direct == formula; }
};
ZykovCheck zykov_eta0_formula_check(const Graph& g, const Graph& h);

/// Closed form E[chi] = sum_{k=1}^n (-1)^(k+1) C(n,k) p^C(k,2) over G(n, p).
Rational expectation_chi(std::size_t n, const Rational& p);

struct MonteCarloEstimate {
  double mean = 0;
  double standard_error = 0;
  std::size_t trials = 0;
};
/// Trial t uses erdos_renyi(n, p, seed + t).
MonteCarloEstimate monte_carlo_chi(std::size_t n, const Rational& p, std::size_t trials,
                                   std::uint64_t seed, Exec exec = Exec::parallel);

/// Moebius function for 1..n by a linear sieve (index 0 unused).
std::vector<int> moebius_sieve(std::size_t n);
std::int64_t mertens(std::size_t n);
/// chi of the Whitney complex of the prime graph on [2, n] equals 1 - M(n).
bool mertens_check(std::uint32_t n);
/// 1 - chi(S(n)) in prime_graph(n), the index of the last vertex added.
std::int64_t prime_index(std::uint32_t n);

}  // namespace conlap
