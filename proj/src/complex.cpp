#include "conlap/complex.hpp"

#include <algorithm>
#include <set>

namespace conlap {

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("empty face");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw InputError("face has duplicate vertex " + std::to_string(*std::adjacent_find(vertices_.begin(), vertices_.end())));
}

bool Face::intersects(const Face& other) const {
  auto a = vertices_.begin(), b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

bool Face::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::string Face::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vertices_[i]);
  }
  return s + "}";
}

std::strong_ordering operator<=>(const Face& a, const Face& b) {
  if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                b.vertices_.begin(), b.vertices_.end());
}

BigInt FVector::total() const {
  BigInt t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

std::string FVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ",";
    s += counts[i].get_str();
  }
  return s + ")";
}

SimplicialComplex::SimplicialComplex(std::vector<Face> faces) : faces_(std::move(faces)) {
  std::set<Vertex> vs;
  for (const auto& f : faces_) {
    if (f.size() == 1) vs.insert(f.vertices()[0]);
    while (dim_offsets_.size() < f.size()) dim_offsets_.push_back(&f - faces_.data());
  }
  dim_offsets_.push_back(faces_.size());
  vertices_.assign(vs.begin(), vs.end());
}

SimplicialComplex SimplicialComplex::closure(std::span<const Face> facets) {
  std::set<Face> all;
  for (const auto& facet : facets) {
    const auto& v = facet.vertices();
    if (v.size() > 30) throw InputError("facet too large to close: " + facet.to_string());
    const std::uint64_t n = v.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Vertex> sub;
      for (std::uint64_t i = 0; i < n; ++i)
        if (mask >> i & 1) sub.push_back(v[i]);
      all.insert(Face(Face::Trusted{}, std::move(sub)));
    }
  }
  return SimplicialComplex(std::vector<Face>(all.begin(), all.end()));
}

SimplicialComplex SimplicialComplex::validate(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  if (auto dup = std::adjacent_find(faces.begin(), faces.end()); dup != faces.end())
    throw InputError("duplicate face " + dup->to_string());
  // Checking the codimension-one subsets suffices by induction on dimension.
  for (const auto& f : faces) {
    if (f.size() == 1) continue;
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      std::vector<Vertex> sub;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != skip) sub.push_back(f.vertices()[i]);
      Face s(Face::Trusted{}, std::move(sub));
      if (!std::binary_search(faces.begin(), faces.end(), s))
        throw ClosureViolation(f.to_string(), s.to_string());
    }
  }
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex SimplicialComplex::from_closed(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return SimplicialComplex(std::move(faces));
}

std::optional<std::size_t> SimplicialComplex::index_of(const Face& f) const {
  auto it = std::lower_bound(faces_.begin(), faces_.end(), f);
  if (it == faces_.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - faces_.begin());
}

std::pair<std::size_t, std::size_t> SimplicialComplex::dimension_range(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) + 1 >= dim_offsets_.size()) return {faces_.size(), faces_.size()};
  return {dim_offsets_[k], dim_offsets_[k + 1]};
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    bool maximal = true;
    auto [b, e] = dimension_range(faces_[i].dimension() + 1);
    for (std::size_t j = b; j < e && maximal; ++j)
      if (faces_[i].is_subset_of(faces_[j])) maximal = false;
    if (maximal) out.push_back(faces_[i]);
  }
  return out;
}

std::vector<int> SimplicialComplex::parities() const {
  std::vector<int> w;
  w.reserve(faces_.size());
  for (const auto& f : faces_) w.push_back(f.parity());
  return w;
}

FVector f_vector(const SimplicialComplex& k) {
  std::vector<BigInt> counts(static_cast<std::size_t>(k.dimension() + 1));
  for (int d = 0; d <= k.dimension(); ++d) {
    auto [b, e] = k.dimension_range(d);
    counts[d] = static_cast<unsigned long>(e - b);
  }
  return FVector(std::move(counts));
}

std::int64_t euler_characteristic(const FVector& f) {
  BigInt chi = 0;
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0) ? f[k] : BigInt(-f[k]);
  return to_int64(chi);
}

std::int64_t euler_characteristic(const SimplicialComplex& k) { return euler_characteristic(f_vector(k)); }

int fermi_characteristic(const SimplicialComplex& k) {
  std::size_t odd = 0;
  for (const auto& f : k.faces()) odd += (f.dimension() % 2 != 0);
  return odd % 2 == 0 ? 1 : -1;
}

GenPoly generating_function(const FVector& f, bool reduced) {
  std::vector<Rational> c(f.size() + 1);
  c[0] = reduced ? 1 : 0;
  for (std::size_t k = 0; k < f.size(); ++k) c[k + 1] = Rational(f[k]);
  return GenPoly(std::move(c));
}

GenPoly generating_function(const SimplicialComplex& k, bool reduced) {
  return generating_function(f_vector(k), reduced);
}

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

}  // namespace conlap
