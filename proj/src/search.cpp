#include "conlap/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "conlap/canonical.hpp"
#include "conlap/functionals.hpp"
#include "conlap/io.hpp"
#include "conlap/linalg.hpp"
#include "conlap/topology.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace conlap {

namespace {

constexpr std::size_t kMaxEnumerate = 8;

Graph extend(const Graph& parent, std::uint32_t mask) {
  const std::size_t n = parent.vertex_count();
  std::vector<Vertex> vs(n + 1);
  std::iota(vs.begin(), vs.end(), Vertex{0});
  std::vector<Edge> es = parent.edges();
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1u) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(n));
  return Graph(std::move(vs), es);
}

std::vector<Graph> dedupe(std::vector<std::pair<CanonicalForm, Graph>>& forms) {
  std::sort(forms.begin(), forms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (i == 0 || !(forms[i].first == forms[i - 1].first))
      out.push_back(canonical_graph(forms[i].second));
  return out;
}

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

}  // namespace

std::vector<Graph> enumerate_graphs(std::size_t k, Exec exec) {
  if (k > kMaxEnumerate) throw InputError("graph enumeration supports at most 8 vertices");
  std::vector<Graph> level{Graph()};
  for (std::size_t n = 0; n < k; ++n) {
    const std::size_t masks = std::size_t{1} << n;
    std::vector<std::pair<CanonicalForm, Graph>> forms(level.size() * masks);
    const auto total = static_cast<std::int64_t>(forms.size());
    auto work = [&](std::int64_t t) {
      Graph g = extend(level[t / masks], static_cast<std::uint32_t>(t % masks));
      forms[t] = {canonical_form(g), std::move(g)};
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
      for (std::int64_t t = 0; t < total; ++t) work(t);
    } else {
      for (std::int64_t t = 0; t < total; ++t) work(t);
    }
    level = dedupe(forms);
  }
  return level;
}

std::vector<Graph> enumerate_graphs_bruteforce(std::size_t k) {
  if (k > 6) throw InputError("labelled brute force is limited to 6 vertices");
  std::vector<Edge> pairs;
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  std::vector<Vertex> vs(k);
  std::iota(vs.begin(), vs.end(), Vertex{0});
  std::vector<std::pair<CanonicalForm, Graph>> forms;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1u) es.push_back(pairs[b]);
    Graph g(vs, es);
    forms.emplace_back(canonical_form(g), std::move(g));
  }
  return dedupe(forms);
}

std::vector<Graph> enumerate_connected_graphs(std::size_t k, Exec exec) {
  if (k < 2 || k > kMaxEnumerate) throw InputError("k must lie in [2, 8]");
  std::vector<Graph> all = enumerate_graphs(k, exec);
  std::vector<Graph> out;
  for (auto& g : all)
    if (g.is_connected()) out.push_back(std::move(g));
  return out;
}

ExtremalResult extremal_eta0(std::size_t k, Exec exec) {
  if (k < 2 || k > 7) throw InputError("k must lie in [2, 7]");
  std::vector<Graph> graphs = enumerate_connected_graphs(k, exec);
  std::vector<std::int64_t> values(graphs.size());
  const auto total = static_cast<std::int64_t>(graphs.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < total; ++i) values[i] = eta0(graphs[i]);
  } else {
    for (std::int64_t i = 0; i < total; ++i) values[i] = eta0(graphs[i]);
  }
  ExtremalResult r;
  r.k = k;
  r.graphs = graphs.size();
  auto lo = std::min_element(values.begin(), values.end());
  auto hi = std::max_element(values.begin(), values.end());
  r.min = *lo;
  r.max = *hi;
  r.min_witness = graphs[lo - values.begin()];
  r.max_witness = graphs[hi - values.begin()];
  return r;
}

std::vector<TableRow> audit_eta0_table(Exec exec) {
  struct Printed {
    std::size_t k;
    std::int64_t lo, hi;
  };
  static constexpr Printed printed[] = {{2, 2, 2}, {3, 3, 3}, {4, 4, 8}, {5, 4, 12}, {6, 0, 18}};
  std::vector<TableRow> rows;
  for (const auto& p : printed) {
    ExtremalResult r = extremal_eta0(p.k, exec);
    rows.push_back({p.k, p.lo, p.hi, r.min, r.max});
  }
  return rows;
}

std::string audit_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "k  printed  computed  status\n";
  for (const auto& r : rows) {
    os << r.k << "  " << r.printed_min << ".." << r.printed_max << "  " << r.computed_min << ".."
       << r.computed_max << "  " << (r.matches() ? "ok" : "MISMATCH") << '\n';
  }
  for (const auto& r : rows) {
    if (r.matches()) continue;
    os << "C(" << r.k << "): published range " << r.printed_min << ".." << r.printed_max
       << " differs from the exhaustive range " << r.computed_min << ".." << r.computed_max;
    if (r.k == 3) os << " (the path P3 has eta0 = 1 + 2 + 1 = 4, the triangle has 3)";
    os << '\n';
  }
  return os.str();
}

std::string search_result_json(const SearchResult& r, int indent, bool timing) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["objective"] = r.objective;
  j["best"] = r.best;
  j["witness"] = r.witness.empty() ? nlohmann::ordered_json(nullptr)
                                   : nlohmann::ordered_json::parse(r.witness);
  j["examined"] = r.examined;
  j["flagged"] = r.flagged;
  j["seed"] = r.seed;
  if (timing) j["wall_time_s"] = r.wall_seconds;
  j["notes"] = r.notes;
  return j.dump(indent);
}

// ---------------------------------------------------------------------------
// Local search

namespace {

using FaceSet = std::set<Face>;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool is_facet(const FaceSet& k, const Face& f) {
  // f is maximal iff no face of size+1 contains it
  for (auto it = k.upper_bound(f); it != k.end(); ++it) {
    if (it->size() > f.size() + 1) break;
    if (it->size() == f.size() + 1 && f.is_subset_of(*it)) return false;
  }
  return true;
}

std::vector<Face> addable(const FaceSet& k, const Face* exclude) {
  std::set<Vertex> verts;
  for (const auto& f : k)
    if (f.size() == 1) verts.insert(f.vertices()[0]);
  Vertex fresh = 0;
  while (verts.count(fresh)) ++fresh;
  std::vector<Face> out{Face{fresh}};
  for (const auto& f : k) {
    for (Vertex v : verts) {
      if (v <= f.vertices().back()) continue;
      std::vector<Vertex> y = f.vertices();
      y.push_back(v);
      Face cand(y);
      if (k.count(cand) || (exclude && cand == *exclude)) continue;
      bool ok = true;
      for (std::size_t drop = 0; drop + 1 < y.size() && ok; ++drop) {
        std::vector<Vertex> sub;
        for (std::size_t i = 0; i < y.size(); ++i)
          if (i != drop) sub.push_back(y[i]);
        ok = k.count(Face(sub)) > 0;
      }
      if (ok) out.push_back(std::move(cand));
    }
  }
  return out;
}

void random_move(FaceSet& k, std::mt19937_64& rng) {
  std::vector<Face> facets;
  for (const auto& f : k)
    if (is_facet(k, f)) facets.push_back(f);
  Face gone = facets[rng() % facets.size()];
  k.erase(gone);
  std::vector<Face> options = addable(k, &gone);
  k.insert(options[rng() % options.size()]);
}

SimplicialComplex compact(const FaceSet& k) {
  std::vector<Vertex> verts;
  for (const auto& f : k)
    if (f.size() == 1) verts.push_back(f.vertices()[0]);
  std::vector<Face> faces;
  for (const auto& f : k) {
    std::vector<Vertex> vs;
    for (Vertex v : f.vertices())
      vs.push_back(static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()));
    faces.emplace_back(vs);
  }
  return SimplicialComplex::from_closed(std::move(faces));
}

struct ChainBest {
  std::int64_t score = std::numeric_limits<std::int64_t>::min();
  std::string witness;
  std::size_t examined = 0;

  void offer(std::int64_t s, const FaceSet& k) {
    if (s < score) return;
    std::string w = complex_to_json(compact(k));
    if (s > score || w < witness) {
      score = s;
      witness = std::move(w);
    }
  }
};

std::int64_t score_of(const FaceSet& k) {
  return green_trace(SimplicialComplex::from_closed(std::vector<Face>(k.begin(), k.end())));
}

}  // namespace

SearchResult search_local(Objective objective, const LocalSearchOptions& o) {
  if (o.faces == 0) throw InputError("face count must be positive");
  if (o.chains == 0) throw InputError("chain count must be positive");
  const auto start = std::chrono::steady_clock::now();
  set_threads(o.threads);

  std::vector<ChainBest> best(o.chains);
  const auto chains = static_cast<std::int64_t>(o.chains);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chains; ++c) {
    std::mt19937_64 rng(mix(o.seed ^ mix(static_cast<std::uint64_t>(c))));
    std::size_t steps = o.budget / o.chains + (static_cast<std::size_t>(c) < o.budget % o.chains ? 1 : 0);
    FaceSet k;
    for (Vertex v = 0; v < o.faces; ++v) k.insert(Face{v});
    // burn-in grows with the chain index; chain 0 starts from isolated points
    const std::size_t burn = static_cast<std::size_t>(c) * o.faces / 2;
    for (std::size_t i = 0; i < burn; ++i) random_move(k, rng);
    std::int64_t s = score_of(k);
    ChainBest& b = best[c];
    b.offer(s, k);
    b.examined = 1;
    const double t0 = 2.0, t1 = 0.05;
    for (std::size_t step = 0; step < steps; ++step) {
      const double temp = t1 + (t0 - t1) * (1.0 - static_cast<double>(step) / static_cast<double>(steps));
      FaceSet next = k;
      random_move(next, rng);
      std::int64_t ns = score_of(next);
      ++b.examined;
      const double u = unit(rng);
      if (ns >= s || u < std::exp(static_cast<double>(ns - s) / temp)) {
        k = std::move(next);
        s = ns;
        b.offer(s, k);
      }
    }
  }

  SearchResult r;
  r.seed = o.seed;
  ChainBest overall;
  for (const auto& b : best) {
    r.examined += b.examined;
    if (b.score > overall.score || (b.score == overall.score && b.witness < overall.witness))
      overall = b;
  }
  const auto n = static_cast<std::int64_t>(o.faces);
  if (objective == Objective::max_green_trace) {
    r.objective = "max-green-trace";
    r.best = overall.score;
    if (overall.score > n) r.notes.push_back("tr g exceeds the face count");
  } else {
    r.objective = "min-eta";
    r.best = n - overall.score;
    if (r.best < 0) r.notes.push_back("negative eta found");
  }
  r.witness = overall.witness;
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---------------------------------------------------------------------------
// Corpus scans

std::vector<NamedComplex> negative_eigenvalue_corpus(std::size_t max_vertices, std::size_t max_faces,
                                                     std::size_t random, std::size_t random_n,
                                                     std::uint64_t seed) {
  std::vector<NamedComplex> out;
  for (std::size_t v = 2; v <= max_vertices; ++v) {
    std::vector<Graph> graphs = enumerate_graphs(v);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (graphs[i].edge_count() == 0) continue;
      SimplicialComplex k = whitney_complex(graphs[i]);
      if (k.size() > max_faces) continue;
      out.push_back({"g" + std::to_string(v) + "_" + std::to_string(i), std::move(k)});
    }
  }
  for (std::size_t i = 0; i < random; ++i) {
    Graph g = gen::erdos_renyi(random_n, Rational(1, 2), seed + i);
    if (g.edge_count() == 0) continue;
    SimplicialComplex k = whitney_complex(g);
    if (k.size() > max_faces) continue;
    const std::string name = "er" + std::to_string(random_n) + "_" + std::to_string(seed + i);
    // punctured copy: drop one random top-dimensional face
    if (k.dimension() >= 2) {
      auto top = k.dimension_range(k.dimension());
      std::mt19937_64 rng(mix(seed + i));
      std::size_t drop = top.first + rng() % (top.second - top.first);
      std::vector<Face> faces;
      for (std::size_t j = 0; j < k.size(); ++j)
        if (j != drop) faces.push_back(k.face(j));
      out.push_back({name + "p", SimplicialComplex::from_closed(std::move(faces))});
    }
    out.push_back({name, std::move(k)});
  }
  return out;
}

SearchResult negative_eigenvalue_scan(const std::vector<NamedComplex>& corpus, int threads) {
  const auto start = std::chrono::steady_clock::now();
  set_threads(threads);
  std::vector<std::size_t> neg(corpus.size());
  const auto total = static_cast<std::int64_t>(corpus.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < total; ++i)
    neg[i] = inertia(connection_laplacian(corpus[i].complex)).negative;

  SearchResult r;
  r.objective = "min-negative-eigenvalues";
  r.examined = corpus.size();
  if (!corpus.empty()) {
    auto lo = std::min_element(neg.begin(), neg.end());
    r.best = static_cast<std::int64_t>(*lo);
    r.witness = complex_to_json(corpus[lo - neg.begin()].complex);
    r.notes.push_back("witness " + corpus[lo - neg.begin()].name);
  }
  for (std::size_t i = 0; i < neg.size(); ++i) {
    if (neg[i] != 0) continue;
    ++r.flagged;
    r.notes.push_back("no negative eigenvalue: " + corpus[i].name);
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<NamedGraph> variety_corpus(std::size_t max_vertices) {
  std::vector<NamedGraph> out{
      {"octahedron", gen::octahedron()},
      {"cross16", gen::cross16()},
      {"octahedron-wedge", wedge_sum(gen::octahedron(), gen::octahedron(), 0, 0)},
      {"doublepyramid", gen::double_pyramid()},
      {"suspension-c5", zykov_join(gen::cycle(5), gen::edgeless(2))},
      {"suspension-c6", zykov_join(gen::cycle(6), gen::edgeless(2))},
      {"c5-join-p3", zykov_join(gen::cycle(5), gen::edgeless(3))},
      {"fig8", gen::figure_eight(4)},
      {"moebius7", gen::moebius(7)},
      {"moebius9", gen::moebius(9)},
      {"wheel5", gen::wheel(5)},
      {"two-octahedra", disjoint_union(gen::octahedron(), gen::octahedron())},
  };
  for (std::size_t n = 3; n <= 8; ++n) out.push_back({"c" + std::to_string(n), gen::cycle(n)});
  for (std::size_t n = 1; n <= 5; ++n) out.push_back({"k" + std::to_string(n), gen::complete(n)});
  for (std::size_t v = 1; v <= max_vertices; ++v) {
    std::vector<Graph> graphs = enumerate_graphs(v);
    for (std::size_t i = 0; i < graphs.size(); ++i)
      out.push_back({"g" + std::to_string(v) + "_" + std::to_string(i), std::move(graphs[i])});
  }
  return out;
}

SearchResult variety_eta_scan(const std::vector<NamedGraph>& corpus, int threads) {
  const auto start = std::chrono::steady_clock::now();
  set_threads(threads);
  constexpr std::int64_t kSkip = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> etas(corpus.size(), kSkip);
  const auto total = static_cast<std::int64_t>(corpus.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < total; ++i) {
    SimplicialComplex k = whitney_complex(corpus[i].graph);
    if (k.empty()) continue;
    if (is_d_variety(corpus[i].graph, k.dimension())) etas[i] = eta(k);
  }

  SearchResult r;
  r.objective = "variety-min-eta";
  std::int64_t best = kSkip;
  std::size_t at = 0;
  for (std::size_t i = 0; i < etas.size(); ++i) {
    if (etas[i] == kSkip) continue;
    ++r.examined;
    if (etas[i] < best) {
      best = etas[i];
      at = i;
    }
    if (etas[i] < 0) {
      ++r.flagged;
      r.notes.push_back("negative eta " + std::to_string(etas[i]) + ": " + corpus[i].name);
    }
  }
  if (best != kSkip) {
    r.best = best;
    r.witness = complex_to_json(whitney_complex(corpus[at].graph));
    r.notes.insert(r.notes.begin(), "witness " + corpus[at].name);
  } else {
    r.notes.push_back("no variety in corpus");
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace conlap
