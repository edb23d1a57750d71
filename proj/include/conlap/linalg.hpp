#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "conlap/complex.hpp"
#include "conlap/constructions.hpp"
#include "conlap/matrix.hpp"

namespace conlap {

/// A matrix that should be unimodular was not: this would falsify the
/// unimodularity theorem and signals an internal bug.
class UnimodularityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// 1 - zA is singular at the requested point.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Eigenvalue sign counts of a symmetric matrix.
struct Inertia {
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::size_t positive = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// L(x,y) = 1 iff faces x and y intersect (so L = 1 + A), rows in the given face order.
IntMatrix connection_laplacian(std::span<const Face> faces);
IntMatrix connection_laplacian(const SimplicialComplex& k);
/// Adjacency matrix A of the connection graph.
IntMatrix connection_adjacency(const SimplicialComplex& k);

BigInt determinant(const IntMatrix& m, Exec exec = Exec::parallel);
/// Exact inverse of a unimodular integer matrix; throws UnimodularityError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m, Exec exec = Exec::parallel);
/// Green function g = L^{-1}. Verifies L g = 1.
IntMatrix green_function(const SimplicialComplex& k, Exec exec = Exec::parallel);

BigInt trace(const IntMatrix& m);
BigInt super_trace(const IntMatrix& m, std::span<const int> parity);
BigInt entry_sum(const IntMatrix& m);
/// Sum of all Green function entries.
BigInt energy(const SimplicialComplex& k);

/// 1/det(1 - zA) of the connection graph; throws PoleError when singular.
Rational bowen_lanford_zeta(const SimplicialComplex& k, const Rational& z);

/// J(x,y) = (-1)^(dim x + dim y).
IntMatrix checkerboard(const SimplicialComplex& k);
/// Wu characteristic as tr(L J).
BigInt wu_characteristic_trace(const SimplicialComplex& k);
/// Wu characteristic as the double sum of w(x) w(y) over intersecting pairs.
BigInt wu_characteristic_sum(const SimplicialComplex& k);

enum class SignConvention {
  omitted_position,       ///< (-1)^i for omitting the i-th smallest vertex (0-based)
  omitted_position_flip,  ///< (-1)^(i+1)
};

/// Boundary map from k-faces (columns) to (k-1)-faces (rows).
IntMatrix boundary_operator(const SimplicialComplex& k, int dim,
                            SignConvention sign = SignConvention::omitted_position);
/// Full n x n boundary D in canonical face order.
IntMatrix exterior_boundary(const SimplicialComplex& k,
                            SignConvention sign = SignConvention::omitted_position);
/// H = (d + d*)^2 = D D^T + D^T D, block diagonal by dimension.
IntMatrix hodge_laplacian(const SimplicialComplex& k,
                          SignConvention sign = SignConvention::omitted_position);
/// betti_k = dim ker H_k.
std::vector<std::int64_t> betti_numbers(const SimplicialComplex& k,
                                        SignConvention sign = SignConvention::omitted_position);

std::size_t rank(const IntMatrix& m, Exec exec = Exec::parallel);
/// Rational Gaussian elimination; independent of the fraction-free path.
std::size_t rank(const RatMatrix& m);

/// Exact inertia by symmetric LDL^T with 1x1 / 2x2 pivots over the rationals.
Inertia inertia(const IntMatrix& m);

/// Eigenvalues (ascending) by cyclic Jacobi rotations until the off-diagonal
/// Frobenius norm drops below `tol`, at most `max_sweeps` sweeps.
std::vector<double> float_spectrum(const IntMatrix& m, double tol = 1e-10, int max_sweeps = 100);

}  // namespace conlap
