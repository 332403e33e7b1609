#include "doctest.h"
#include "logcy/energy_filtration.hpp"
#include "logcy/errors.hpp"
#include "random_inputs.hpp"

using namespace logcy;

namespace {

EnergyParameters params(std::vector<Rational> kappa, Rational eps1 = make_rational(1, 10),
                        std::vector<Rational> pert = {}) {
  EnergyParameters p{std::move(kappa), std::move(eps1), std::move(pert)};
  p.validate();
  return p;
}

MultiIndex mi(std::vector<std::int64_t> v) { return MultiIndex{std::move(v)}; }

ChordLabel chord(std::vector<int> idx, std::vector<Rational> a0, std::vector<Rational> a1,
                 std::vector<std::int64_t> v, Rational f0 = 0, Rational f1 = 0) {
  return {0, std::move(idx), std::move(a0), std::move(a1), mi(std::move(v)), std::move(f0), std::move(f1)};
}

bool eq(const Rational& a, const Rational& b) { return a == b; }

Rational random_fraction(testing::Rng& rng) {
  int den = testing::uniform(rng, 2, 12);
  return make_rational(testing::uniform(rng, 0, den - 1), den);
}

}  // namespace

TEST_CASE("weighted winding and orbit actions") {
  auto p = params({1, 1, 1});
  CHECK(eq(weighted_winding(p, mi({1, 1, 1})), 3));
  CHECK(eq(weighted_winding(p, mi({0, 0, 0})), 0));
  CHECK(eq(weighted_winding(params({1, 1, make_rational(1, 2)}), mi({2, 0, 4})), 4));
  CHECK(eq(orbit_action_approx(p, mi({1, 1, 1})), make_rational(-597, 200)));
  CHECK(eq(orbit_action_approx(p, mi({0, 0, 0})), 0));
  CHECK_THROWS_AS(weighted_winding(p, mi({1, 1})), InputError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(params({0}), InputError);
  CHECK_THROWS_AS(params({1}, 0), InputError);
  CHECK_THROWS_AS(params({1}, 1), InputError);
  CHECK_THROWS_AS(params({1, 1}, make_rational(1, 2), {0}), InputError);
  CHECK(eq(params({1}).damping(), make_rational(199, 200)));
  CHECK(eq(params({1}, make_rational(1, 10), {make_rational(1, 10)}).damping(0), make_rational(49, 50)));
}

TEST_CASE("PSS energies") {
  auto p = params({1, 2});
  OrbitLabel x0{mi({1, 1}), 0};
  // v = v(x0): w ε₁²/2
  CHECK(eq(pss_energy_approx(p, mi({1, 1}), x0), make_rational(3, 200)));
  OrbitLabel x3{mi({3, 0}), 0};
  CHECK(eq(pss_energy_approx(p, mi({0, 1}), x3), make_rational(-197, 200)));
  CHECK(eq(pss_energy(p, mi({0, 1}), orbit_action_approx(p, x3.v)), pss_energy_approx(p, mi({0, 1}), x3)));
}

TEST_CASE("short chords") {
  CHECK(short_chord_winding(chord({0}, {make_rational(3, 10)}, {make_rational(7, 10)}, {0}), 1) == mi({1}));
  CHECK(short_chord_winding(chord({0}, {make_rational(7, 10)}, {make_rational(3, 10)}, {0}), 1) == mi({0}));
  CHECK_THROWS_AS(short_chord_winding(chord({0}, {make_rational(1, 3)}, {make_rational(1, 3)}, {0}), 1), InputError);
  CHECK_THROWS_AS(short_chord_winding(chord({0}, {1}, {0}, {0}), 1), InputError);
  CHECK_THROWS_AS(short_chord_winding(chord({}, {}, {}, {1}), 1), InputError);
  CHECK_THROWS_AS(short_chord_winding(chord({1, 0}, {0, 0}, {make_rational(1, 2), make_rational(1, 2)}, {0, 0}), 2),
                  InputError);
}

TEST_CASE("chord weights and actions") {
  auto p = params({1});
  CHECK(eq(chord_weight(p, chord({}, {}, {}, {0}, 5, 5)), 0));
  CHECK(eq(chord_weight(p, chord({0}, {0}, {make_rational(1, 2)}, {0})), make_rational(1, 2)));
  CHECK(eq(chord_action_approx(p, chord({}, {}, {}, {0}, 2, 7)), 5));
  auto c = chord({0}, {0}, {make_rational(1, 2)}, {0});
  CHECK(eq(chord_action_approx(p, c), -p.damping() * chord_weight(p, c)));
}

TEST_CASE("filtration monotonicity") {
  CHECK(filtration_monotone(1, 1));
  CHECK(filtration_monotone(2, make_rational(3, 2)));
  CHECK_FALSE(filtration_monotone(1, 2));
}

TEST_CASE("property: exact identities on random labels") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = testing::uniform(rng, 1, 4);
    std::vector<Rational> kappa, pert;
    for (int i = 0; i < k; ++i) {
      kappa.push_back(make_rational(testing::uniform(rng, 1, 5), testing::uniform(rng, 1, 3)));
      pert.push_back(make_rational(testing::uniform(rng, -2, 2), 100));
    }
    auto p = params(kappa, make_rational(testing::uniform(rng, 1, 9), 10));
    auto pp = params(kappa, p.eps1, pert);

    // chord with random I, distinct angles and winding supported in I
    ChordLabel c;
    c.v = mi(std::vector<std::int64_t>(static_cast<std::size_t>(k), 0));
    for (int i = 0; i < k; ++i) {
      if (!testing::uniform(rng, 0, 1)) continue;
      c.indices.push_back(i);
      Rational a0 = random_fraction(rng), a1 = random_fraction(rng);
      while (a1 == a0) a1 = random_fraction(rng);
      c.alpha0.push_back(a0);
      c.alpha1.push_back(a1);
      c.v.v[static_cast<std::size_t>(i)] = testing::uniform(rng, 0, 3);
    }
    c.f0 = make_rational(testing::uniform(rng, -9, 9), testing::uniform(rng, 1, 4));
    c.f1 = make_rational(testing::uniform(rng, -9, 9), testing::uniform(rng, 1, 4));
    ChordLabel c0 = c;
    for (auto& e : c0.v.v) e = 0;
    CHECK(eq(chord_weight(p, c) - chord_weight(p, c0), weighted_winding(p, c.v)));
    CHECK(eq(chord_action_approx(p, c), -p.damping() * chord_weight(p, c)));
    if (!c.indices.empty()) {
      ChordLabel up = c;
      auto i = static_cast<std::size_t>(c.indices[0]);
      ++up.v.v[i];
      CHECK(eq(chord_action_approx(pp, up) - chord_action_approx(pp, c), -kappa[i] * pp.damping(i)));
    }

    std::vector<std::int64_t> v(static_cast<std::size_t>(k)), w(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      v[static_cast<std::size_t>(i)] = testing::uniform(rng, 0, 4);
      w[static_cast<std::size_t>(i)] = testing::uniform(rng, 0, 4);
    }
    OrbitLabel x0{mi(w), 0};
    CHECK(eq(pss_energy(p, mi(v), orbit_action_approx(p, x0.v)), pss_energy_approx(p, mi(v), x0)));
    if (weighted_winding(p, mi(v)) > weighted_winding(p, x0.v)) CHECK(sgn(pss_energy_approx(p, mi(v), x0)) > 0);
    std::size_t i = static_cast<std::size_t>(testing::uniform(rng, 0, k - 1));
    auto bumped = v;
    ++bumped[i];
    CHECK(orbit_action_approx(p, mi(bumped)) < orbit_action_approx(p, mi(v)));
    CHECK(sgn(orbit_action_approx(p, mi(v))) <= 0);
  }
}
