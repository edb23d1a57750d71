#include "conlap/canonical.hpp"

#include <algorithm>

namespace conlap {

namespace {

using Cell = std::vector<std::size_t>;
using Partition = std::vector<Cell>;

// Splits cells by neighbour counts into splitter cells until equitable.
// Sub-cells are ordered by count, so the result is equivariant.
void refine(const Graph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < p.size() && !changed; ++s) {
      Bitset splitter(g.vertex_count());
      for (std::size_t v : p[s]) splitter.set(v);
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (p[c].size() < 2) continue;
        std::vector<std::pair<std::size_t, std::size_t>> keyed;
        for (std::size_t v : p[c]) keyed.emplace_back((g.row(v) & splitter).count(), v);
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;
        Partition pieces;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[i].second);
        }
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(c));
        p.insert(p.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

bool twins(const Graph& g, std::size_t u, std::size_t v) {
  Bitset a = g.row(u), b = g.row(v);
  a.reset(v);
  b.reset(u);
  return a == b;
}

std::vector<std::uint64_t> certificate(const Graph& g, const std::vector<std::size_t>& order) {
  const std::size_t n = order.size();
  std::vector<std::uint64_t> bits((n * (n - 1) / 2 + 63) / 64 + 1, 0);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++pos)
      if (g.adjacent(order[i], order[j])) bits[pos >> 6] |= std::uint64_t{1} << (63 - (pos & 63));
  return bits;
}

struct Search {
  const Graph& g;
  CanonicalForm best;
  bool have = false;

  void run(Partition p) {
    refine(g, p);
    auto target = std::find_if(p.begin(), p.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == p.end()) {
      std::vector<std::size_t> order;
      for (const auto& c : p) order.push_back(c.front());
      auto bits = certificate(g, order);
      if (!have || bits < best.bits) {
        best.bits = std::move(bits);
        best.order = std::move(order);
        have = true;
      }
      return;
    }
    const std::size_t at = static_cast<std::size_t>(target - p.begin());
    std::vector<std::size_t> tried;
    for (std::size_t v : p[at]) {
      if (std::any_of(tried.begin(), tried.end(), [&](std::size_t u) { return twins(g, u, v); })) continue;
      tried.push_back(v);
      Partition child = p;
      Cell rest;
      for (std::size_t w : p[at])
        if (w != v) rest.push_back(w);
      child[at] = Cell{v};
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(at) + 1, rest);
      run(std::move(child));
    }
  }
};

}  // namespace

std::string CanonicalForm::key() const {
  std::string k = std::to_string(n) + ":";
  for (auto w : bits) {
    for (int s = 56; s >= 0; s -= 8) k.push_back(static_cast<char>((w >> s) & 0xff));
  }
  return k;
}

CanonicalForm canonical_form(const Graph& g) {
  Search s{g, {}, false};
  s.best.n = g.vertex_count();
  if (g.vertex_count() == 0) {
    s.best.bits.assign(1, 0);
    return s.best;
  }
  Cell all(g.vertex_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  s.run(Partition{all});
  return s.best;
}

Graph canonical_graph(const Graph& g) {
  auto cf = canonical_form(g);
  std::vector<Vertex> pos(g.vertex_count());
  for (std::size_t i = 0; i < cf.order.size(); ++i) pos[cf.order[i]] = static_cast<Vertex>(i);
  return g.relabeled(pos);
}

}  // namespace conlap
