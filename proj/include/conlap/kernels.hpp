#pragma once

// Fraction-free (Bareiss) elimination kernels. Every kernel has a serial
// reference path and an OpenMP path that parallelizes the independent row
// updates of each elimination step; both return identical results.

#include "conlap/constructions.hpp"
#include "conlap/matrix.hpp"

namespace conlap::kernels {

/// Exact determinant of a square integer matrix.
BigInt bareiss_determinant(IntMatrix m, Exec exec = Exec::parallel);

/// Fraction-free Gauss-Jordan on an n x m matrix (m >= n) whose left n x n
/// block is nonsingular. On return the left block is d*I and the remaining
/// columns are d times the solution, where d = +-det(left block) is the
/// returned final pivot. Returns 0 (and leaves `aug` partially reduced) if
/// the left block is singular.
BigInt bareiss_gauss_jordan(IntMatrix& aug, Exec exec = Exec::parallel);

/// Rank by fraction-free row echelon reduction.
std::size_t bareiss_rank(IntMatrix m, Exec exec = Exec::parallel);

}  // namespace conlap::kernels
