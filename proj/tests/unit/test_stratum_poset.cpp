#include "doctest.h"
#include "logcy/errors.hpp"
#include "logcy/mirror_examples.hpp"
#include "logcy/stratum_poset.hpp"
#include "random_inputs.hpp"

using namespace logcy;

namespace {

// all strata connected, faces given as divisor subsets
DivisorConfiguration connected_config(int k, const std::vector<DivisorSet>& nonempty,
                                      std::vector<Rational> a = {}) {
  std::map<DivisorSet, std::vector<long>> strata;
  for (DivisorSet s : nonempty) strata[s] = {0};
  if (a.empty()) a.assign(static_cast<std::size_t>(k), Rational(1));
  return DivisorConfiguration::build(k, std::vector<Rational>(static_cast<std::size_t>(k), Rational(1)), a,
                                     strata, {});
}

DivisorConfiguration p2_boundary() { return connected_config(3, {0, 1, 2, 4, 3, 5, 6}); }

MultiIndex mi(std::vector<std::int64_t> v) { return MultiIndex{std::move(v)}; }

std::vector<VertexSet> all_faces_below(int n, VertexSet top_excluded) {
  std::vector<VertexSet> out;
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
    if (s != top_excluded) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("membership in B(M,D)") {
  auto cy = p2_boundary();
  CHECK(in_bmd(cy, mi({1, 1, 0})));
  CHECK(in_bmd(cy, mi({0, 0, 0})));
  CHECK_FALSE(in_bmd(cy, mi({1, 1, 1})));  // empty triple stratum
  auto half = connected_config(2, {0, 1, 2, 3}, {Rational(1), make_rational(1, 2)});
  CHECK_FALSE(in_bmd(half, mi({0, 1})));
  CHECK(in_bmd(half, mi({3, 0})));
  CHECK_THROWS_AS(in_bmd(cy, mi({1, 0})), InputError);
}

TEST_CASE("configuration validation") {
  using Map = std::map<DivisorSet, std::vector<long>>;
  std::vector<Rational> one{1}, two{1, 1};
  CHECK_THROWS_AS(DivisorConfiguration::build(1, {Rational(0)}, one, Map{{1, {0}}}, {}), InputError);
  // D_{12} nonempty but D_2 empty
  CHECK_THROWS_AS(DivisorConfiguration::build(2, two, two, Map{{1, {0}}, {3, {0}}}, {}), InputError);
  CHECK_THROWS_AS(DivisorConfiguration::build(1, one, {Rational(2)}, Map{{1, {0}}}, {}, true), InputError);
  CHECK_THROWS_AS(DivisorConfiguration::build(1, one, one, Map{{0, {0, 1}}}, {}), InputError);
  // maps out of a two-component D_{12} are forced when D_1, D_2 are connected
  auto c = DivisorConfiguration::build(2, two, two, Map{{1, {0}}, {2, {0}}, {3, {4, 9}}}, {});
  CHECK(c.component_count(3) == 2);
  CHECK(c.component_index(3, 9) == 1);
  CHECK(c.map_component(3, 1, 1) == 0);
  CHECK_FALSE(c.all_strata_connected());
}

TEST_CASE("composition of component maps is checked") {
  using Map = std::map<DivisorSet, std::vector<long>>;
  std::vector<Rational> three{1, 1, 1};
  // D_1 and D_{12} have two components, D_{123} one point on each branch
  Map strata{{1, {0, 1}}, {2, {0}}, {4, {0}}, {3, {0, 1}}, {5, {0}}, {6, {0}}, {7, {0}}};
  std::vector<DivisorConfiguration::MapSpec> good{{3, 1, {{0, 0}, {1, 1}}}, {7, 3, {{0, 1}}}, {5, 1, {{0, 1}}}};
  auto c = DivisorConfiguration::build(3, three, three, strata, good);
  CHECK(c.map_component(7, 1, 0) == 1);  // derived by composition
  std::vector<DivisorConfiguration::MapSpec> bad{{3, 1, {{0, 0}, {1, 1}}}, {7, 3, {{0, 1}}}, {7, 1, {{0, 0}}},
                                                 {5, 1, {{0, 0}}}};
  CHECK_THROWS_AS(DivisorConfiguration::build(3, three, three, strata, bad), InputError);
}

TEST_CASE("dual complex") {
  auto one = connected_config(1, {0, 1});
  CHECK(dual_complex(one).faces() == std::vector<VertexSet>{0, 1});
  // hand enumeration of torus-orbit closures of P^2: all proper subsets
  CHECK(dual_complex(p2_boundary()).faces() == all_faces_below(3, 7));
  CHECK(dual_complex(p2_boundary()) == SimplicialComplex::simplex_boundary(3));
  try {
    dual_complex(examples::mirror_family_configuration());
    FAIL("expected an unsupported-structure error");
  } catch (const UnsupportedError& e) {
    CHECK(std::string(e.what()).find("{1,2,3}") != std::string::npos);
  }
}

TEST_CASE("delta-zero subcomplex") {
  auto cy = p2_boundary();
  CHECK(delta_zero_subcomplex(cy) == dual_complex(cy));
  auto mixed = connected_config(3, {0, 1, 2, 4, 3, 5, 6}, {1, make_rational(1, 2), 1});
  CHECK(delta_zero_subcomplex(mixed).faces() == std::vector<VertexSet>{0, 1, 4, 5});
  auto none = connected_config(2, {0, 1, 2, 3}, {0, make_rational(1, 3)});
  CHECK(delta_zero_subcomplex(none).faces() == std::vector<VertexSet>{0});
}

TEST_CASE("links, stars and cores") {
  auto cycle = SimplicialComplex::simplex_boundary(3);
  // direct enumeration: the two other vertices, no edge between them
  CHECK(cycle.link(1).faces() == std::vector<VertexSet>{0, 2, 4});
  CHECK(cycle.link(0) == cycle);
  CHECK(cycle.star(1).faces() == std::vector<VertexSet>{0, 1, 2, 3, 4, 5});
  CHECK_THROWS_AS(cycle.link(7), InputError);
  auto cone = cycle.cone();
  CHECK(cone.core().faces() == cycle.faces());
  CHECK(cone.core().vertex_support() == 7);
  CHECK(cycle.core() == cycle);
  CHECK(SimplicialComplex::simplex(3).core().faces() == std::vector<VertexSet>{0});
  CHECK_THROWS_AS(SimplicialComplex::from_faces(2, {0, 3}), InputError);
}

TEST_CASE("minimal non-faces") {
  CHECK(SimplicialComplex::simplex_boundary(3).minimal_non_faces() == std::vector<VertexSet>{7});
  CHECK(SimplicialComplex::simplex(3).minimal_non_faces().empty());
  CHECK(SimplicialComplex::from_facets(2, {1, 2}).minimal_non_faces() == std::vector<VertexSet>{3});
}

TEST_CASE("property: Calabi-Yau specialization never shrinks B(M,D)") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int k = testing::uniform(rng, 1, 4);
    auto c = testing::random_configuration(rng, k, 2, false);
    std::map<DivisorSet, std::vector<long>> strata;
    std::vector<DivisorConfiguration::MapSpec> maps;
    for (DivisorSet s : c.nonempty_strata()) strata[s] = c.component_ids(s);
    for (DivisorSet s : c.nonempty_strata()) {
      for (DivisorSet t : c.nonempty_strata()) {
        if (t == s || !is_subset(t, s)) continue;
        DivisorConfiguration::MapSpec m{s, t, {}};
        for (int x = 0; x < c.component_count(s); ++x) {
          m.assign[c.component_ids(s)[static_cast<std::size_t>(x)]] =
              c.component_ids(t)[static_cast<std::size_t>(c.map_component(s, t, x))];
        }
        maps.push_back(m);
      }
    }
    auto cy = DivisorConfiguration::build(k, c.kappa(), std::vector<Rational>(static_cast<std::size_t>(k), 1),
                                          strata, maps);
    std::vector<std::int64_t> v(static_cast<std::size_t>(k), 0);
    for (int code = 0; code < (1 << (2 * k)); ++code) {
      for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = code >> (2 * i) & 3;
      if (in_bmd(c, mi(v))) CHECK(in_bmd(cy, mi(v)));
    }
  }
}

TEST_CASE("property: dual complexes are downward closed") {
  testing::Rng rng(5);
  for (int k = 1; k <= 8; ++k) {
    for (int trial = 0; trial < 5; ++trial) {
      // random downward-closed family of connected strata
      std::vector<VertexSet> facets;
      for (int j = 0; j < 3; ++j) facets.push_back(static_cast<VertexSet>(testing::uniform(rng, 1, (1 << k) - 1)));
      auto cx = SimplicialComplex::from_facets(k, facets);
      auto c = connected_config(k, cx.faces());
      auto d = dual_complex(c);
      CHECK(d == cx);
      for (VertexSet f : d.faces()) {
        for (VertexSet g = f;; g = (g - 1) & f) {
          CHECK(d.contains(g));
          if (g == 0) break;
        }
      }
    }
  }
}

TEST_CASE("property: core is idempotent and links compose") {
  testing::Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto cx = testing::random_complex(rng, testing::uniform(rng, 2, 7), testing::uniform(rng, 1, 4));
    CHECK(cx.core().core() == cx.core());
    for (VertexSet f : cx.faces()) {
      auto lf = cx.link(f);
      for (VertexSet g : lf.faces()) CHECK(cx.link(f | g) == lf.link(g));
    }
  }
}
