#include "conlap/functionals.hpp"

#include <cmath>

namespace conlap {

namespace {

// f1 = f-vector of the Whitney complex of G1, counted by clique enumeration.
FVector refined_f_vector(const SimplicialComplex& k) {
  return clique_f_vector(barycentric_refinement(k).graph);
}

}  // namespace

std::vector<std::int64_t> sphere_euler_characteristics(const Graph& g) {
  std::vector<std::int64_t> chi(g.vertex_count());
  for (std::size_t x = 0; x < g.vertex_count(); ++x)
    chi[x] = euler_characteristic(clique_f_vector(unit_sphere_at(g, x), Exec::serial));
  return chi;
}

std::int64_t eta0(const Graph& g) {
  std::int64_t s = 0;
  for (auto c : sphere_euler_characteristics(g)) s += c;
  return s;
}

std::int64_t eta1(const SimplicialComplex& k) { return eta0(barycentric_refinement(k).graph); }

std::int64_t eta(const SimplicialComplex& k) {
  IntMatrix l = connection_laplacian(k);
  return to_int64(trace(l) - trace(unimodular_inverse(l)));
}

Rational derivative_gap(const GenPoly& f) {
  GenPoly d = f.derivative();
  return d(Rational(0)) - d(Rational(-1));
}

std::int64_t eta_generating(const SimplicialComplex& k) {
  Rational gap = derivative_gap(generating_function(refined_f_vector(k), true));
  return to_int64(gap.get_num());
}

std::int64_t eta_curvature_g2(const SimplicialComplex& k) {
  // Each positive-dimensional face y of G1 is a vertex of G2 carrying
  // k(y) = (-1)^(1+dim y) (1+dim y).
  FVector f1 = refined_f_vector(k);
  BigInt s = 0;
  for (std::size_t dim = 1; dim < f1.size(); ++dim) {
    BigInt weight = static_cast<long>(dim + 1);
    if (dim % 2 == 0) weight = -weight;
    s += weight * f1[dim];
  }
  return to_int64(s);
}

std::int64_t eta_column(const SimplicialComplex& k) {
  IntMatrix a = connection_adjacency(k);
  IntMatrix g = unimodular_inverse(connection_laplacian(k));
  const std::size_t n = a.rows();
  BigInt s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // <A_i, g A_i> with A_i the i-th column of A
    for (std::size_t r = 0; r < n; ++r) {
      if (a(r, i) == 0) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (a(c, i) != 0) s += g(r, c);
    }
  }
  return to_int64(-s);
}

std::int64_t green_trace(const SimplicialComplex& k) {
  return to_int64(trace(unimodular_inverse(connection_laplacian(k))));
}

EtaBundle eta_bundle(const SimplicialComplex& k) {
  EtaBundle b;
  b.trace = eta(k);
  b.gauss_bonnet = eta1(k);
  b.generating = eta_generating(k);
  b.curvature_g2 = eta_curvature_g2(k);
  b.column = eta_column(k);
  return b;
}

CurvatureProfile curvature_profile(const Graph& g) {
  CurvatureProfile p;
  p.vertices = g.labels();
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    FVector fs = clique_f_vector(unit_sphere_at(g, x), Exec::serial);
    p.sphere_chi.push_back(euler_characteristic(fs));
    // v_{-1} = 1 is the empty face.
    Rational kx = 1;
    for (std::size_t k = 1; k <= fs.size(); ++k) {
      Rational term(fs[k - 1], BigInt(static_cast<long>(k + 1)));
      term.canonicalize();
      kx += (k % 2 == 0) ? term : Rational(-term);
    }
    p.euler_curvature.push_back(kx);
    GenPoly big_f = generating_function(fs, true).antiderivative();
    p.euler_curvature_antiderivative.push_back(big_f(Rational(0)) - big_f(Rational(-1)));
  }
  return p;
}

std::vector<BigInt> face_potential(const IntMatrix& green) {
  std::vector<BigInt> v(green.rows(), 0);
  for (std::size_t i = 0; i < green.rows(); ++i)
    for (std::size_t j = 0; j < green.cols(); ++j) v[i] += green(i, j);
  return v;
}

ZykovCheck zykov_eta0_formula_check(const Graph& g, const Graph& h) {
  ZykovCheck z;
  z.direct = eta0(zykov_join(g, h));
  GenPoly fg = generating_function(clique_f_vector(g), true);
  GenPoly fh = generating_function(clique_f_vector(h), true);
  auto chi = [](const GenPoly& f) -> Rational { return Rational(1) - f(Rational(-1)); };
  Rational formula = derivative_gap(fg) + derivative_gap(fh) +
                     fg.derivative()(Rational(-1)) * chi(fh) + fh.derivative()(Rational(-1)) * chi(fg);
  z.formula = to_int64(formula.get_num());
  return z;
}

Rational expectation_chi(std::size_t n, const Rational& p) {
  Rational e = 0;
  BigInt binom = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    binom = binom * static_cast<unsigned long>(n - k + 1) / static_cast<unsigned long>(k);
    Rational pw = 1;
    for (std::size_t t = 0; t < k * (k - 1) / 2; ++t) pw *= p;
    Rational term = Rational(binom) * pw;
    e += (k % 2 == 1) ? term : Rational(-term);
  }
  e.canonicalize();
  return e;
}

MonteCarloEstimate monte_carlo_chi(std::size_t n, const Rational& p, std::size_t trials,
                                   std::uint64_t seed, Exec exec) {
  std::vector<double> samples(trials);
  const std::ptrdiff_t t_count = static_cast<std::ptrdiff_t>(trials);
  if (exec == Exec::serial) {
    for (std::ptrdiff_t t = 0; t < t_count; ++t)
      samples[t] = static_cast<double>(
          euler_characteristic(clique_f_vector(gen::erdos_renyi(n, p, seed + t), Exec::serial)));
  } else {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t t = 0; t < t_count; ++t)
      samples[t] = static_cast<double>(
          euler_characteristic(clique_f_vector(gen::erdos_renyi(n, p, seed + t), Exec::serial)));
  }
  MonteCarloEstimate est;
  est.trials = trials;
  if (trials == 0) return est;
  double sum = 0;
  for (double s : samples) sum += s;
  est.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    double ss = 0;
    for (double s : samples) ss += (s - est.mean) * (s - est.mean);
    est.standard_error = std::sqrt(ss / static_cast<double>(trials - 1) / static_cast<double>(trials));
  }
  return est;
}

std::vector<int> moebius_sieve(std::size_t n) {
  std::vector<int> mu(n + 1, 0);
  if (n >= 1) mu[1] = 1;
  std::vector<std::size_t> primes;
  std::vector<char> composite(n + 1, 0);
  for (std::size_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::size_t p : primes) {
      if (i * p > n) break;
      composite[i * p] = 1;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

std::int64_t mertens(std::size_t n) {
  auto mu = moebius_sieve(n);
  std::int64_t m = 0;
  for (std::size_t k = 1; k <= n; ++k) m += mu[k];
  return m;
}

bool mertens_check(std::uint32_t n) {
  return euler_characteristic(whitney_complex(gen::prime_graph(n))) == 1 - mertens(n);
}

std::int64_t prime_index(std::uint32_t n) {
  Graph g = gen::prime_graph(n);
  return 1 - euler_characteristic(clique_f_vector(unit_sphere(g, n), Exec::serial));
}

}  // namespace conlap
