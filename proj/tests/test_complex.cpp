#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "conlap/complex.hpp"
#include "conlap/genpoly.hpp"
#include "conlap/numeric.hpp"

using namespace conlap;

TEST_CASE("face construction sorts and rejects bad input") {
  Face f{3, 1, 2};
  CHECK(f.vertices() == std::vector<Vertex>{1, 2, 3});
  CHECK(f.dimension() == 2);
  CHECK(f.parity() == 1);
  CHECK(Face{4, 7}.parity() == -1);
  CHECK_THROWS_AS(Face({1, 1}), InputError);
  CHECK_THROWS_AS(Face(std::vector<Vertex>{}), InputError);
  CHECK(f.to_string() == "{1,2,3}");
}

TEST_CASE("face order is by dimension then lexicographic") {
  CHECK(Face{5} < Face{0, 1});
  CHECK(Face{0, 2} < Face{1, 2});
  CHECK(Face{0, 1, 9} > Face{3, 4});
  CHECK(Face{1, 2}.is_subset_of(Face{0, 1, 2}));
  CHECK_FALSE(Face{1, 3}.is_subset_of(Face{0, 1, 2}));
  CHECK(Face{1, 3}.intersects(Face{3, 4}));
  CHECK_FALSE(Face{1, 2}.intersects(Face{3, 4}));
}

TEST_CASE("closure of a triangle and a dangling edge") {
  auto k = SimplicialComplex::closure({Face{0, 1, 2}, Face{2, 3}});
  CHECK(k.size() == 9);
  CHECK(f_vector(k) == FVector{4, 4, 1});
  CHECK(k.dimension() == 2);
  CHECK(euler_characteristic(k) == 1);
  CHECK(fermi_characteristic(k) == 1);
  CHECK(k.facets() == std::vector<Face>{Face{2, 3}, Face{0, 1, 2}});
  CHECK(k.index_of(Face{1, 2}).has_value());
  CHECK_FALSE(k.index_of(Face{1, 3}).has_value());
  auto [lo, hi] = k.dimension_range(1);
  CHECK(hi - lo == 4);
  CHECK(std::is_sorted(k.faces().begin(), k.faces().end()));
}

TEST_CASE("empty complex") {
  SimplicialComplex k;
  CHECK(k.empty());
  CHECK(k.dimension() == -1);
  CHECK(euler_characteristic(k) == 0);
}

TEST_CASE("validate reports the missing subset") {
  try {
    SimplicialComplex::validate({Face{0}, Face{1}, Face{0, 1, 2}, Face{0, 1}});
    FAIL("expected ClosureViolation");
  } catch (const ClosureViolation& e) {
    CHECK(e.face() == "{0,1,2}");
    CHECK(e.missing() == "{1,2}");
  }
  CHECK_NOTHROW(SimplicialComplex::validate({Face{1, 0}, Face{0}, Face{1}}));
}

TEST_CASE("closure is idempotent and validates (random facets)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Face> facets;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) {
      std::set<Vertex> vs;
      const int size = 1 + static_cast<int>(rng() % 4);
      while (static_cast<int>(vs.size()) < size) vs.insert(static_cast<Vertex>(rng() % 8));
      facets.emplace_back(std::vector<Vertex>(vs.begin(), vs.end()));
    }
    auto k = SimplicialComplex::closure(facets);
    auto again = SimplicialComplex::closure(k.faces());
    CHECK(again.faces() == k.faces());
    CHECK_NOTHROW(SimplicialComplex::validate(k.faces()));
    auto via_facets = SimplicialComplex::closure(k.facets());
    CHECK(via_facets.faces() == k.faces());
    // chi = f(0) - f(-1) for the reduced generating function
    GenPoly f = generating_function(k, true);
    CHECK(f(Rational(0)) - f(Rational(-1)) == euler_characteristic(k));
  }
}

TEST_CASE("generating function") {
  FVector oct{6, 12, 8};
  GenPoly f = generating_function(oct, true);
  CHECK(f == GenPoly{1, 6, 12, 8});
  CHECK(f.to_string() == "1+6x+12x^2+8x^3");
  CHECK(f.derivative() == GenPoly{6, 24, 24});
  CHECK(f.antiderivative().derivative() == f);
  CHECK(euler_characteristic(oct) == 2);
  CHECK(GenPoly{1, 1} * GenPoly{1, -1} == GenPoly{1, 0, -1});
  CHECK((GenPoly{1, 2} - GenPoly{1, 2}).degree() == -1);
  GenPoly half(std::vector<Rational>{Rational(1, 2)});
  CHECK_FALSE(half.is_integral());
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2/7") == Rational(-2, 7));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}
