#include "conlap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "conlap/kernels.hpp"

namespace conlap {

IntMatrix connection_laplacian(std::span<const Face> faces) {
  const std::size_t n = faces.size();
  std::map<Vertex, Bitset> star;
  for (std::size_t i = 0; i < n; ++i)
    for (Vertex v : faces[i].vertices()) star.try_emplace(v, n).first->second.set(i);
  IntMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Bitset row(n);
    for (Vertex v : faces[i].vertices()) row |= star.at(v);
    row.for_each([&](std::size_t j) { l(i, j) = 1; });
  }
  return l;
}

IntMatrix connection_laplacian(const SimplicialComplex& k) { return connection_laplacian(k.faces()); }

IntMatrix connection_adjacency(const SimplicialComplex& k) {
  return connection_laplacian(k) - IntMatrix::identity(k.size());
}

BigInt determinant(const IntMatrix& m, Exec exec) { return kernels::bareiss_determinant(m, exec); }

IntMatrix unimodular_inverse(const IntMatrix& m, Exec exec) {
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  BigInt d = kernels::bareiss_gauss_jordan(aug, exec);
  if (d != 1 && d != -1) throw UnimodularityError("matrix is not unimodular: pivot " + d.get_str());
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = d * aug(i, n + j);
  return inv;
}

IntMatrix green_function(const SimplicialComplex& k, Exec exec) {
  IntMatrix l = connection_laplacian(k);
  IntMatrix g = unimodular_inverse(l, exec);
  if (!(l * g == IntMatrix::identity(k.size())))
    throw UnimodularityError("L g != 1 after inversion");
  return g;
}

BigInt trace(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("trace of a non-square matrix");
  BigInt t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

BigInt super_trace(const IntMatrix& m, std::span<const int> parity) {
  if (!m.square() || parity.size() != m.rows())
    throw std::invalid_argument("super trace: parity vector does not match matrix");
  BigInt t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += parity[i] * m(i, i);
  return t;
}

BigInt entry_sum(const IntMatrix& m) {
  BigInt t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t += m(i, j);
  return t;
}

BigInt energy(const SimplicialComplex& k) { return entry_sum(green_function(k)); }

Rational bowen_lanford_zeta(const SimplicialComplex& k, const Rational& z) {
  Rational zz = z;
  zz.canonicalize();
  const BigInt& p = zz.get_num();
  const BigInt& q = zz.get_den();
  // det(1 - zA) = det(q - pA) / q^n
  IntMatrix a = connection_adjacency(k);
  const std::size_t n = a.rows();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? q : BigInt(0)) - p * a(i, j);
  BigInt det = determinant(m);
  if (det == 0) throw PoleError("1 - zA is singular at z = " + to_string(zz));
  BigInt qn;
  mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
  return make_rational(qn, det);
}

IntMatrix checkerboard(const SimplicialComplex& k) {
  auto w = k.parities();
  IntMatrix j(w.size(), w.size());
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = 0; b < w.size(); ++b) j(a, b) = w[a] * w[b];
  return j;
}

BigInt wu_characteristic_trace(const SimplicialComplex& k) {
  return trace(connection_laplacian(k) * checkerboard(k));
}

BigInt wu_characteristic_sum(const SimplicialComplex& k) {
  BigInt s = 0;
  for (const auto& x : k.faces())
    for (const auto& y : k.faces())
      if (x.intersects(y)) s += x.parity() * y.parity();
  return s;
}

IntMatrix boundary_operator(const SimplicialComplex& k, int dim, SignConvention sign) {
  auto [cb, ce] = k.dimension_range(dim);
  auto [rb, re] = dim >= 1 ? k.dimension_range(dim - 1) : std::pair<std::size_t, std::size_t>{0, 0};
  IntMatrix d(re - rb, ce - cb);
  for (std::size_t c = cb; c < ce; ++c) {
    const auto& v = k.face(c).vertices();
    if (v.size() < 2) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::vector<Vertex> sub;
      for (std::size_t t = 0; t < v.size(); ++t)
        if (t != i) sub.push_back(v[t]);
      std::size_t r = *k.index_of(Face(std::move(sub)));
      int s = (i % 2 == 0) ? 1 : -1;
      if (sign == SignConvention::omitted_position_flip) s = -s;
      d(r - rb, c - cb) = s;
    }
  }
  return d;
}

IntMatrix exterior_boundary(const SimplicialComplex& k, SignConvention sign) {
  IntMatrix d(k.size(), k.size());
  for (int dim = 1; dim <= k.dimension(); ++dim) {
    IntMatrix block = boundary_operator(k, dim, sign);
    std::size_t rb = k.dimension_range(dim - 1).first, cb = k.dimension_range(dim).first;
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) d(rb + i, cb + j) = block(i, j);
  }
  return d;
}

IntMatrix hodge_laplacian(const SimplicialComplex& k, SignConvention sign) {
  IntMatrix d = exterior_boundary(k, sign);
  IntMatrix dt = d.transpose();
  return d * dt + dt * d;
}

std::vector<std::int64_t> betti_numbers(const SimplicialComplex& k, SignConvention sign) {
  IntMatrix h = hodge_laplacian(k, sign);
  std::vector<std::int64_t> b;
  for (int dim = 0; dim <= k.dimension(); ++dim) {
    auto [lo, hi] = k.dimension_range(dim);
    IntMatrix block(hi - lo, hi - lo);
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = lo; j < hi; ++j) block(i - lo, j - lo) = h(i, j);
    b.push_back(static_cast<std::int64_t>((hi - lo) - rank(block)));
  }
  return b;
}

std::size_t rank(const IntMatrix& m, Exec exec) { return kernels::bareiss_rank(m, exec); }

std::size_t rank(const RatMatrix& in) {
  RatMatrix m = in;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

Inertia inertia(const IntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("inertia needs a symmetric matrix");
  RatMatrix s = to_rational(m);
  std::vector<std::size_t> active(m.rows());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  Inertia in;
  auto drop = [&](std::size_t idx) { active.erase(std::find(active.begin(), active.end(), idx)); };
  while (!active.empty()) {
    auto diag = std::find_if(active.begin(), active.end(), [&](std::size_t i) { return s(i, i) != 0; });
    if (diag != active.end()) {
      const std::size_t p = *diag;
      const Rational d = s(p, p);
      (d > 0 ? in.positive : in.negative) += 1;
      drop(p);
      for (std::size_t a : active) {
        if (s(a, p) == 0) continue;
        Rational f = s(a, p) / d;
        for (std::size_t b : active) s(a, b) -= f * s(p, b);
      }
      continue;
    }
    // Zero diagonal: pivot on a 2x2 block [[0, b], [b, 0]], which has one
    // eigenvalue of each sign.
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t a = 0; a < active.size() && !found; ++a)
      for (std::size_t b = a + 1; b < active.size() && !found; ++b)
        if (s(active[a], active[b]) != 0) {
          pi = active[a];
          pj = active[b];
          found = true;
        }
    if (!found) {
      in.zero += active.size();
      break;
    }
    in.positive += 1;
    in.negative += 1;
    const Rational b = s(pi, pj);
    drop(pi);
    drop(pj);
    std::vector<Rational> ci, cj;
    for (std::size_t a : active) {
      ci.push_back(s(a, pi));
      cj.push_back(s(a, pj));
    }
    for (std::size_t x = 0; x < active.size(); ++x)
      for (std::size_t y = 0; y < active.size(); ++y)
        s(active[x], active[y]) -= (ci[x] * cj[y] + cj[x] * ci[y]) / b;
  }
  return in;
}

std::vector<double> float_spectrum(const IntMatrix& m, double tol, int max_sweeps) {
  if (!m.is_symmetric()) throw std::invalid_argument("spectrum needs a symmetric matrix");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const std::size_t n = m.rows();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_d();
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  auto off_norm = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
  };
  for (int sweep = 0; sweep < max_sweeps && off_norm() >= tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::string to_text(const IntMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ' ';
      s += m(i, j).get_str();
    }
    s += '\n';
  }
  return s;
}

std::string to_json(const IntMatrix& m) {
  std::string s = "{\"schema\":1,\"rows\":" + std::to_string(m.rows()) +
                  ",\"cols\":" + std::to_string(m.cols()) + ",\"matrix\":[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m(i, j).get_str();
    }
    s += "]";
  }
  return s + "]}";
}

}  // namespace conlap
