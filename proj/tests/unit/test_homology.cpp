#include "doctest.h"
#include "logcy/errors.hpp"
#include "logcy/homology.hpp"
#include "logcy/sr_algebra.hpp"
#include "random_inputs.hpp"

using namespace logcy;

namespace {

// facets with 1-based vertex labels
SimplicialComplex cx(int n, const std::vector<std::vector<int>>& facets) {
  std::vector<VertexSet> f;
  for (const auto& face : facets) {
    VertexSet s = 0;
    for (int v : face) s |= VertexSet{1} << (v - 1);
    f.push_back(s);
  }
  return SimplicialComplex::from_facets(n, f);
}

SimplicialComplex octahedron() {
  // antipodal pairs (1,2), (3,4), (5,6)
  std::vector<std::vector<int>> f;
  for (int a : {1, 2}) {
    for (int b : {3, 4}) {
      for (int c : {5, 6}) f.push_back({a, b, c});
    }
  }
  return cx(6, f);
}

SimplicialComplex rp2() {
  return cx(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

std::vector<long> betti(const SimplicialComplex& c, Field f = Field::rationals()) {
  return reduced_homology(c, f).betti;
}

}  // namespace

TEST_CASE("reduced homology of small complexes") {
  CHECK(betti(SimplicialComplex::simplex_boundary(3)) == std::vector<long>{0, 0, 1});
  CHECK(betti(SimplicialComplex::simplex(3)) == std::vector<long>{0, 0, 0, 0});
  CHECK(betti(SimplicialComplex::simplex_boundary(2)) == std::vector<long>{0, 1});
  CHECK(betti(SimplicialComplex::from_facets(3, {})) == std::vector<long>{1});
  CHECK(betti(octahedron()) == std::vector<long>{0, 0, 0, 1});
  CHECK_THROWS_AS(reduced_homology(SimplicialComplex()), InputError);
  auto t = reduced_homology(cx(4, {{1, 2}, {3, 4}}));
  CHECK(t.at(0) == 1);
  CHECK(t.at(5) == 0);
  CHECK(t.last_degree() == 1);
}

TEST_CASE("torsion shows up over F_2 only") {
  auto p = rp2();
  CHECK(betti(p) == std::vector<long>{0, 0, 0, 0});
  CHECK(betti(p, Field::fp(2)) == std::vector<long>{0, 0, 1, 1});
  CHECK(betti(p, Field::fp(3)) == std::vector<long>{0, 0, 0, 0});
  auto divisors = boundary_elementary_divisors(p);
  REQUIRE(divisors.size() > 2);
  REQUIRE(!divisors[2].empty());
  CHECK(divisors[2].back() == 2);
  CHECK_FALSE(gorenstein_verdict(p).verdict);
  CHECK_THROWS_AS(Field::fp(9), InputError);
}

TEST_CASE("local homology at faces") {
  auto cycle = SimplicialComplex::simplex_boundary(3);
  auto at_vertex = local_homology_at_face(cycle, 1);
  CHECK(at_vertex.at(1) == 1);
  CHECK(at_vertex.at(0) == 0);
  auto at_facet = local_homology_at_face(cycle, 3);
  CHECK(at_facet.at(1) == 1);
  auto path = cx(3, {{1, 2}, {2, 3}});
  auto endpoint = local_homology_at_face(path, 1);
  for (int i = -1; i <= 2; ++i) CHECK(endpoint.at(i) == 0);
  CHECK_THROWS_AS(local_homology_at_face(path, 5), InputError);
}

TEST_CASE("Gorenstein verdicts") {
  for (int d = 1; d <= 4; ++d) {
    auto b = SimplicialComplex::simplex_boundary(d + 1);
    auto r = gorenstein_verdict(b);
    CHECK(r.verdict);
    CHECK(r.dimension == d - 1);
    CHECK(r.core_equals_whole);
    // hypersurface cross-check: the SR ideal is the single product of all variables
    auto pres = sr_presentation(b);
    REQUIRE(pres.relations.size() == 1);
    CHECK(pres.relations[0].term_count() == 1);
    CHECK(pres.relations[0].total_degree() == static_cast<unsigned>(d + 1));
  }
  CHECK(gorenstein_verdict(SimplicialComplex::simplex_boundary(2)).verdict);
  CHECK(gorenstein_verdict(octahedron()).verdict);

  auto full = gorenstein_verdict(SimplicialComplex::simplex(3));
  CHECK_FALSE(full.verdict);
  REQUIRE(!full.failures.empty());
  CHECK(full.failures[0].face == 0);
  CHECK(full.failures[0].condition == "sphere");

  auto path = gorenstein_verdict(cx(3, {{1, 2}, {2, 3}}));
  CHECK_FALSE(path.verdict);

  auto cone = gorenstein_verdict(SimplicialComplex::simplex_boundary(3).cone());
  CHECK_FALSE(cone.verdict);
  CHECK_FALSE(cone.core_equals_whole);
  bool core_witness = false;
  for (const auto& f : cone.failures) core_witness |= f.condition == "core" && f.face == 8;
  CHECK(core_witness);
}

TEST_CASE("sphere and manifold tests") {
  CHECK(is_homology_sphere(octahedron()));
  CHECK(is_homology_manifold(octahedron()));
  auto glued = cx(4, {{1, 2, 3}, {2, 3, 4}});
  CHECK_FALSE(is_homology_manifold(glued));
  auto r = gorenstein_verdict(glued);
  // the shared edge itself has link S^0; its endpoints have contractible links
  bool endpoints = false, edge = false;
  for (const auto& f : r.failures) {
    endpoints |= f.condition == "link" && f.face == 2;
    edge |= f.condition == "link" && f.face == 6;
  }
  CHECK(endpoints);
  CHECK_FALSE(edge);
  CHECK_FALSE(is_homology_sphere(SimplicialComplex::simplex(2)));
}

TEST_CASE("boundary matrices square to zero") {
  auto o = octahedron();
  auto d2 = boundary_matrix(o, 2).dense();
  auto d1 = boundary_matrix(o, 1).dense();
  for (std::size_t r = 0; r < d1.size(); ++r) {
    for (std::size_t c = 0; c < d2[0].size(); ++c) {
      Integer s = 0;
      for (std::size_t m = 0; m < d2.size(); ++m) s += d1[r][m] * d2[m][c];
      CHECK(s == 0);
    }
  }
}

TEST_CASE("property: Euler characteristic matches face counts") {
  testing::Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = testing::random_complex(rng, testing::uniform(rng, 1, 8), testing::uniform(rng, 1, 5));
    for (Field f : {Field::rationals(), Field::fp(2), Field::fp(3)}) {
      CHECK(reduced_homology(c, f).euler_characteristic() == c.reduced_euler_characteristic());
    }
  }
}

TEST_CASE("property: ranks over Q and F_p agree away from torsion primes") {
  testing::Rng rng(41);
  std::vector<SimplicialComplex> pool{rp2(), octahedron()};
  for (int trial = 0; trial < 25; ++trial) {
    pool.push_back(testing::random_complex(rng, testing::uniform(rng, 3, 12), testing::uniform(rng, 2, 6)));
  }
  for (const auto& c : pool) {
    auto div = boundary_elementary_divisors(c);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      bool torsion = false;
      for (const auto& col : div) {
        for (const auto& d : col) torsion |= d % p == 0;
      }
      if (!torsion) CHECK(betti(c, Field::fp(p)) == betti(c));
    }
  }
}

TEST_CASE("property: cones fail and simplex-boundary links are spheres") {
  testing::Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = testing::random_complex(rng, testing::uniform(rng, 1, 6), testing::uniform(rng, 1, 4));
    CHECK_FALSE(gorenstein_verdict(c.cone()).verdict);
  }
  for (int n = 2; n <= 6; ++n) {
    auto b = SimplicialComplex::simplex_boundary(n);
    for (VertexSet f : b.faces()) CHECK(is_homology_sphere(b.link(f)));
  }
}

TEST_CASE("worker count does not change reports") {
  testing::Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    auto c = testing::random_complex(rng, testing::uniform(rng, 3, 9), testing::uniform(rng, 2, 6));
    auto one = gorenstein_verdict(c, Field::rationals(), 1);
    auto many = gorenstein_verdict(c, Field::rationals(), 6);
    CHECK(one.verdict == many.verdict);
    REQUIRE(one.failures.size() == many.failures.size());
    for (std::size_t i = 0; i < one.failures.size(); ++i) {
      CHECK(one.failures[i].face == many.failures[i].face);
      CHECK(one.failures[i].condition == many.failures[i].condition);
      CHECK(one.failures[i].found == many.failures[i].found);
    }
  }
}
