#include "conlap/topology.hpp"

#include "conlap/canonical.hpp"
#include "conlap/constructions.hpp"

namespace conlap {

namespace {

constexpr std::size_t kCanonicalLimit = 12;

Graph without(const Graph& g, std::size_t index) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (i != index) keep.push_back(i);
  return g.induced(keep);
}

}  // namespace

std::string Recognizer::key(const Graph& g, char kind, int d) const {
  std::string k(1, kind);
  k += std::to_string(d) + "|";
  if (g.vertex_count() <= kCanonicalLimit) return k + "c" + canonical_form(g).key();
  k += "l" + std::to_string(g.vertex_count()) + ":";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (std::size_t j : g.neighbors(i)) k += std::to_string(j) + ",";
    k += ";";
  }
  return k;
}

bool Recognizer::collapsible(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  if (n == 1) return true;
  if (!g.is_connected()) return false;
  auto k = key(g, 'c', 0);
  if (auto it = cache_.find(k); it != cache_.end()) return it->second;
  bool result = false;
  // Collapsible graphs are contractible, so chi = 1 is necessary.
  if (euler_characteristic(clique_f_vector(g, Exec::serial)) == 1) {
    for (std::size_t x = 0; x < n && !result; ++x)
      result = collapsible(unit_sphere_at(g, x)) && collapsible(without(g, x));
  }
  cache_.emplace(std::move(k), result);
  return result;
}

bool Recognizer::is_d_graph(const Graph& g, int d) {
  if (d < -1) return false;
  if (d == -1) return g.empty();
  if (g.empty()) return false;
  auto k = key(g, 'g', d);
  if (auto it = cache_.find(k); it != cache_.end()) return it->second;
  bool result = true;
  for (std::size_t x = 0; x < g.vertex_count() && result; ++x)
    result = is_d_sphere(unit_sphere_at(g, x), d - 1);
  cache_.emplace(std::move(k), result);
  return result;
}

bool Recognizer::is_d_sphere(const Graph& g, int d, bool strict) {
  if (d < -1) return false;
  if (d == -1) return g.empty();
  auto k = key(g, strict ? 'S' : 's', d);
  if (auto it = cache_.find(k); it != cache_.end()) return it->second;
  bool result = is_d_graph(g, d);
  if (result) {
    bool any = false, all = true;
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
      bool c = collapsible(without(g, x));
      any = any || c;
      all = all && c;
      if (!strict && any) break;
      if (strict && !all) break;
    }
    result = strict ? all : any;
  }
  cache_.emplace(std::move(k), result);
  return result;
}

std::vector<Vertex> Recognizer::boundary_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (std::size_t x = 0; x < g.vertex_count(); ++x)
    if (collapsible(unit_sphere_at(g, x))) out.push_back(g.label(x));
  return out;
}

bool Recognizer::is_d_graph_with_boundary(const Graph& g, int d) {
  if (d < 0 || g.empty()) return false;
  std::vector<std::size_t> boundary;
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    Graph s = unit_sphere_at(g, x);
    if (collapsible(s)) boundary.push_back(x);
    else if (!is_d_sphere(s, d - 1)) return false;
  }
  return !boundary.empty() && is_d_graph(g.induced(boundary), d - 1);
}

bool Recognizer::is_d_variety(const Graph& g, int d) {
  if (d < -1) return false;
  if (d == -1) return g.empty();
  if (g.empty()) return false;
  auto k = key(g, 'v', d);
  if (auto it = cache_.find(k); it != cache_.end()) return it->second;
  bool result = true;
  std::vector<std::size_t> singular;
  for (std::size_t x = 0; x < g.vertex_count() && result; ++x) {
    Graph s = unit_sphere_at(g, x);
    if (is_d_graph(s, d - 1)) continue;
    singular.push_back(x);
    result = is_d_variety(s, d - 1);
  }
  for (std::size_t a = 0; a < singular.size() && result; ++a)
    for (std::size_t b = a + 1; b < singular.size() && result; ++b)
      if (g.adjacent(singular[a], singular[b])) result = false;
  cache_.emplace(std::move(k), result);
  return result;
}

namespace {
Recognizer& local() {
  thread_local Recognizer r;
  return r;
}
}  // namespace

bool is_collapsible(const Graph& g) { return local().collapsible(g); }
bool is_d_graph(const Graph& g, int d) { return local().is_d_graph(g, d); }
bool is_d_sphere(const Graph& g, int d, bool strict) { return local().is_d_sphere(g, d, strict); }
std::vector<Vertex> boundary_vertices(const Graph& g) { return local().boundary_vertices(g); }
bool is_d_graph_with_boundary(const Graph& g, int d) { return local().is_d_graph_with_boundary(g, d); }
bool is_d_variety(const Graph& g, int d) { return local().is_d_variety(g, d); }

}  // namespace conlap
