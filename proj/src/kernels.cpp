#include "conlap/kernels.hpp"

#include <stdexcept>

namespace conlap::kernels {

namespace {

// a(i,j) <- (a(k,c) a(i,j) - a(i,c) a(k,j)) / prev for j in [j0, cols), j != skip.
void update_row(IntMatrix& a, std::size_t i, std::size_t k, std::size_t c, std::size_t j0,
                const BigInt& prev, BigInt& tmp) {
  const BigInt& pivot = a(k, c);
  const BigInt factor = a(i, c);
  for (std::size_t j = j0; j < a.cols(); ++j) {
    if (j == c) continue;
    tmp = pivot * a(i, j);
    tmp -= factor * a(k, j);
    if (prev != 1) mpz_divexact(tmp.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
    a(i, j) = tmp;
  }
  a(i, c) = 0;
}

void eliminate_rows(IntMatrix& a, std::size_t row_begin, std::size_t k, std::size_t c, std::size_t j0,
                    const BigInt& prev, bool skip_pivot_row, Exec exec) {
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(a.rows());
  if (exec == Exec::serial) {
    BigInt tmp;
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(row_begin); i < rows; ++i) {
      if (skip_pivot_row && static_cast<std::size_t>(i) == k) continue;
      if (a(i, c) == 0 && prev == a(k, c)) continue;  // row unchanged
      update_row(a, static_cast<std::size_t>(i), k, c, j0, prev, tmp);
    }
    return;
  }
#pragma omp parallel
  {
    BigInt tmp;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(row_begin); i < rows; ++i) {
      if (skip_pivot_row && static_cast<std::size_t>(i) == k) continue;
      if (a(i, c) == 0 && prev == a(k, c)) continue;
      update_row(a, static_cast<std::size_t>(i), k, c, j0, prev, tmp);
    }
  }
}

std::size_t find_pivot(const IntMatrix& a, std::size_t from, std::size_t c) {
  for (std::size_t p = from; p < a.rows(); ++p)
    if (a(p, c) != 0) return p;
  return a.rows();
}

void swap_rows(IntMatrix& a, std::size_t r, std::size_t s) {
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(s, j));
}

}  // namespace

BigInt bareiss_determinant(IntMatrix m, Exec exec) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = find_pivot(m, k, k);
    if (p == n) return 0;
    if (p != k) {
      swap_rows(m, p, k);
      sign = -sign;
    }
    eliminate_rows(m, k + 1, k, k, k + 1, prev, false, exec);
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

BigInt bareiss_gauss_jordan(IntMatrix& aug, Exec exec) {
  const std::size_t n = aug.rows();
  if (aug.cols() < n) throw std::invalid_argument("augmented matrix narrower than tall");
  if (n == 0) return 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = find_pivot(aug, k, k);
    if (p == n) return 0;
    if (p != k) swap_rows(aug, p, k);
    // Columns left of k only hold the diagonal d_prev entries of earlier rows,
    // which the update maps to the new pivot.
    eliminate_rows(aug, 0, k, k, 0, prev, true, exec);
    prev = aug(k, k);
  }
  return prev;
}

std::size_t bareiss_rank(IntMatrix m, Exec exec) {
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = find_pivot(m, r, c);
    if (p == m.rows()) continue;
    if (p != r) swap_rows(m, p, r);
    eliminate_rows(m, r + 1, r, c, c + 1, prev, false, exec);
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace conlap::kernels
