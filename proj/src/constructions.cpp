#include "conlap/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace conlap {

namespace {

// Each clique is produced exactly once: a clique is extended only by common
// neighbours with a larger index than its last vertex.
template <typename Emit>
void extend_cliques(const Graph& g, std::vector<std::size_t>& clique, const Bitset& candidates,
                    int max_dim, Emit& emit) {
  emit(clique);
  if (max_dim >= 0 && static_cast<int>(clique.size()) - 1 >= max_dim) return;
  candidates.for_each([&](std::size_t u) {
    Bitset next = candidates & g.row(u);
    next.clear_through(u);
    clique.push_back(u);
    extend_cliques(g, clique, next, max_dim, emit);
    clique.pop_back();
  });
}

template <typename Emit>
void cliques_rooted_at(const Graph& g, std::size_t v, int max_dim, Emit& emit) {
  std::vector<std::size_t> clique{v};
  Bitset cand = g.row(v);
  cand.clear_through(v);
  extend_cliques(g, clique, cand, max_dim, emit);
}

void add_counts(std::vector<BigInt>& into, const std::vector<std::uint64_t>& counts) {
  if (into.size() < counts.size()) into.resize(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) into[k] += static_cast<unsigned long>(counts[k]);
}

}  // namespace

SimplicialComplex whitney_complex(const Graph& g, int max_dim) {
  std::vector<Face> faces;
  auto emit = [&](const std::vector<std::size_t>& clique) {
    std::vector<Vertex> labels;
    labels.reserve(clique.size());
    for (std::size_t i : clique) labels.push_back(g.label(i));
    faces.emplace_back(std::move(labels));
  };
  for (std::size_t v = 0; v < g.vertex_count(); ++v) cliques_rooted_at(g, v, max_dim, emit);
  return SimplicialComplex::from_closed(std::move(faces));
}

FVector clique_f_vector(const Graph& g, Exec exec) {
  const std::size_t n = g.vertex_count();
  std::vector<BigInt> total;
  if (exec == Exec::serial) {
    std::vector<std::uint64_t> counts;
    auto emit = [&](const std::vector<std::size_t>& c) {
      if (counts.size() < c.size()) counts.resize(c.size());
      ++counts[c.size() - 1];
    };
    for (std::size_t v = 0; v < n; ++v) cliques_rooted_at(g, v, -1, emit);
    add_counts(total, counts);
    return FVector(std::move(total));
  }
  std::vector<std::vector<std::uint64_t>> per_root(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t v = 0; v < static_cast<std::ptrdiff_t>(n); ++v) {
    auto& counts = per_root[v];
    auto emit = [&](const std::vector<std::size_t>& c) {
      if (counts.size() < c.size()) counts.resize(c.size());
      ++counts[c.size() - 1];
    };
    cliques_rooted_at(g, static_cast<std::size_t>(v), -1, emit);
  }
  for (const auto& c : per_root) add_counts(total, c);
  return FVector(std::move(total));
}

LabeledGraph barycentric_refinement(const SimplicialComplex& k) {
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < k.size(); ++j) {
    const auto& v = k.face(j).vertices();
    const std::size_t s = v.size();
    if (s > 30) throw InputError("face too large to refine: " + k.face(j).to_string());
    const std::uint64_t full = (std::uint64_t{1} << s) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      std::vector<Vertex> sub;
      for (std::size_t i = 0; i < s; ++i)
        if (mask >> i & 1) sub.push_back(v[i]);
      edges.emplace_back(static_cast<Vertex>(*k.index_of(Face(std::move(sub)))), static_cast<Vertex>(j));
    }
  }
  std::vector<Vertex> ids(k.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<Vertex>(i);
  return LabeledGraph{Graph(std::move(ids), edges), k.faces()};
}

LabeledGraph connection_graph(const SimplicialComplex& k) {
  const std::size_t n = k.size();
  std::map<Vertex, Bitset> star;
  for (std::size_t i = 0; i < n; ++i)
    for (Vertex v : k.face(i).vertices()) {
      auto [it, fresh] = star.try_emplace(v, n);
      it->second.set(i);
    }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    Bitset row(n);
    for (Vertex v : k.face(i).vertices()) row |= star.at(v);
    row.clear_through(i);
    row.for_each([&](std::size_t j) { edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j)); });
  }
  std::vector<Vertex> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<Vertex>(i);
  return LabeledGraph{Graph(std::move(ids), edges), k.faces()};
}

Graph unit_sphere_at(const Graph& g, std::size_t index) { return g.induced(g.neighbors(index)); }

Graph unit_sphere(const Graph& g, Vertex v) {
  auto idx = g.index_of(v);
  if (!idx) throw InputError("unknown vertex " + std::to_string(v));
  return unit_sphere_at(g, *idx);
}

IntMatrix barycentric_operator(int d) {
  if (d < 0) throw std::invalid_argument("barycentric operator needs d >= 0");
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  // stirling[j][i] = S(j, i), 0 <= i, j <= n
  std::vector<std::vector<BigInt>> stirling(n + 1, std::vector<BigInt>(n + 1, 0));
  stirling[0][0] = 1;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 1; i <= j; ++i)
      stirling[j][i] = BigInt(static_cast<unsigned long>(i)) * stirling[j - 1][i] + stirling[j - 1][i - 1];
  IntMatrix s(n, n);
  BigInt fact = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    fact *= static_cast<unsigned long>(i);
    for (std::size_t j = 1; j <= n; ++j) s(i - 1, j - 1) = fact * stirling[j][i];
  }
  return s;
}

FVector apply_barycentric_operator(const FVector& f) {
  if (f.size() == 0) return {};
  IntMatrix s = barycentric_operator(static_cast<int>(f.size()) - 1);
  std::vector<BigInt> out(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) out[i] += s(i, j) * f[j];
  return FVector(std::move(out));
}

namespace {

Vertex next_free_label(const Graph& g) { return g.empty() ? 0 : g.labels().back() + 1; }

// H's labels shifted to start right above G's.
std::vector<Vertex> shifted_labels(const Graph& g, const Graph& h) {
  std::vector<Vertex> labels(h.vertex_count());
  Vertex base = next_free_label(g);
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = base + static_cast<Vertex>(i);
  return labels;
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) {
  auto hl = shifted_labels(g, h);
  std::vector<Vertex> vs = g.labels();
  vs.insert(vs.end(), hl.begin(), hl.end());
  std::vector<Edge> es = g.edges();
  for (const auto& e : h.relabeled(hl).edges()) es.push_back(e);
  return Graph(std::move(vs), es);
}

Graph zykov_join(const Graph& g, const Graph& h) {
  auto hl = shifted_labels(g, h);
  std::vector<Vertex> vs = g.labels();
  vs.insert(vs.end(), hl.begin(), hl.end());
  std::vector<Edge> es = g.edges();
  for (const auto& e : h.relabeled(hl).edges()) es.push_back(e);
  for (Vertex a : g.labels())
    for (Vertex b : hl) es.emplace_back(a, b);
  return Graph(std::move(vs), es);
}

Graph wedge_sum(const Graph& g, const Graph& h, Vertex x, Vertex y) {
  if (!g.has_vertex(x)) throw InputError("wedge point " + std::to_string(x) + " not in first graph");
  auto yi = h.index_of(y);
  if (!yi) throw InputError("wedge point " + std::to_string(y) + " not in second graph");
  // Relabel H above G, sending y to x.
  std::vector<Vertex> hl(h.vertex_count());
  Vertex base = next_free_label(g);
  for (std::size_t i = 0, k = 0; i < hl.size(); ++i)
    hl[i] = (i == *yi) ? x : base + static_cast<Vertex>(k++);
  std::vector<Vertex> vs = g.labels();
  vs.insert(vs.end(), hl.begin(), hl.end());
  std::vector<Edge> es = g.edges();
  for (std::size_t i = 0; i < h.vertex_count(); ++i)
    for (std::size_t j : h.neighbors(i))
      if (j > i) es.emplace_back(hl[i], hl[j]);
  return Graph(std::move(vs), es);
}

int moebius_mu(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mu(0) undefined");
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

namespace gen {

namespace {

std::vector<Vertex> range_labels(std::size_t n, Vertex first = 0) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = first + static_cast<Vertex>(i);
  return v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

}  // namespace

Graph complete(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(range_labels(n), es);
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(range_labels(n), es);
}

Graph path(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(range_labels(n), es);
}

Graph edgeless(std::size_t n) { return Graph(range_labels(n), {}); }

Graph star(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 1; i <= n; ++i) es.emplace_back(0, i);
  return Graph(range_labels(n + 1), es);
}

Graph wheel(std::size_t n) {
  require(n >= 3, "wheel needs n >= 3");
  std::vector<Edge> es;
  for (Vertex i = 1; i <= n; ++i) {
    es.emplace_back(0, i);
    es.emplace_back(i, static_cast<Vertex>(i % n + 1));
  }
  return Graph(range_labels(n + 1), es);
}

Graph complete_bipartite(std::size_t n, std::size_t m) {
  require(n >= 1 && m >= 1, "K_{n,m} needs n, m >= 1");
  return zykov_join(edgeless(n), edgeless(m));
}

Graph house() {
  return Graph(range_labels(5, 1), {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {2, 5}, {3, 5}});
}

Graph octahedron() { return zykov_join(zykov_join(edgeless(2), edgeless(2)), edgeless(2)); }

Graph cross16() { return zykov_join(octahedron(), edgeless(2)); }

Graph double_pyramid() {
  return Graph(range_labels(7, 1), {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 7}, {2, 3}, {2, 4}, {2, 6},
                                    {3, 7}, {3, 5}, {3, 6}, {4, 7}, {4, 5}, {4, 6}, {5, 7}, {5, 6}});
}

Graph figure_eight(std::size_t k) { return wedge_sum(cycle(k), cycle(k), 0, 0); }

Graph moebius(std::size_t n) {
  require(n >= 7 && n % 2 == 1, "moebius needs odd n >= 7");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) {
    es.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    es.emplace_back(i, static_cast<Vertex>((i + 2) % n));
  }
  return Graph(range_labels(n), es);
}

namespace {

std::vector<Vertex> squarefree_upto(std::uint32_t n) {
  std::vector<Vertex> v;
  for (std::uint32_t k = 2; k <= n; ++k)
    if (moebius_mu(k) != 0) v.push_back(k);
  return v;
}

}  // namespace

Graph prime_graph(std::uint32_t n) {
  require(n >= 2, "prime graph needs n >= 2");
  auto vs = squarefree_upto(n);
  std::vector<Edge> es;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (vs[b] % vs[a] == 0) es.emplace_back(vs[a], vs[b]);
  return Graph(std::move(vs), es);
}

Graph prime_connection_graph(std::uint32_t n) {
  require(n >= 2, "prime connection graph needs n >= 2");
  auto vs = squarefree_upto(n);
  std::vector<Edge> es;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (std::gcd(vs[a], vs[b]) > 1) es.emplace_back(vs[a], vs[b]);
  return Graph(std::move(vs), es);
}

Graph erdos_renyi(std::size_t n, const Rational& p, std::uint64_t seed) {
  require(p >= 0 && p <= 1, "edge probability must lie in [0, 1]");
  Rational q = p;
  q.canonicalize();
  require(q.get_den().fits_ulong_p(), "edge probability denominator too large");
  const unsigned __int128 num = q.get_num().get_ui();
  const unsigned __int128 den = q.get_den().get_ui();
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      unsigned __int128 r = rng();
      if (r * den < (num << 64)) es.emplace_back(i, j);
    }
  return Graph(range_labels(n), es);
}

Graph named(std::string_view name, const Params& p) {
  if (name == "kn") return complete(p.n);
  if (name == "cn") return cycle(p.n);
  if (name == "path") return path(p.n);
  if (name == "edgeless") return edgeless(p.n);
  if (name == "star") return star(p.n);
  if (name == "wheel") return wheel(p.n);
  if (name == "knm") return complete_bipartite(p.n, p.m);
  if (name == "house") return house();
  if (name == "octahedron") return octahedron();
  if (name == "cross16") return cross16();
  if (name == "doublepyramid") return double_pyramid();
  if (name == "fig8") {
    require(p.n >= 3, "fig8 needs n >= 3");
    return figure_eight(p.n);
  }
  if (name == "moebius") return moebius(p.n);
  if (name == "prime") return prime_graph(static_cast<std::uint32_t>(p.n));
  if (name == "er") return erdos_renyi(p.n, p.p, p.seed);
  throw InputError("unknown generator '" + std::string(name) + "'");
}

}  // namespace gen

}  // namespace conlap
