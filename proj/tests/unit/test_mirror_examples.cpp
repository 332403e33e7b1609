#include <fstream>
#include <sstream>

#include "doctest.h"
#include "logcy/errors.hpp"
#include "logcy/json_io.hpp"
#include "logcy/mirror_examples.hpp"
#include "logcy/sr_algebra.hpp"

using namespace logcy;
using namespace logcy::examples;

namespace {

DivisorConfiguration fixture_config(const std::string& name) {
  std::ifstream in(std::string(LOGCY_FIXTURES) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return io::config_from(io::parse_json(ss.str(), name));
}

// brute force over the box, independent of the library's enumeration order
std::vector<Exponent4> admissible_by_hand(int box) {
  std::vector<Exponent4> out;
  for (int e1 = 0; e1 <= box; ++e1)
    for (int e2 = 0; e2 <= box; ++e2)
      for (int e3 = 0; e3 <= box; ++e3)
        for (int eu = 0; eu <= box; ++eu) {
          if (e3 + eu <= 1 && e1 + eu <= 2 && e2 + eu <= 2 && e1 + e2 - e3 + eu == 2) out.push_back({e1, e2, e3, eu});
        }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Exponent4> sorted(std::vector<Exponent4> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("admissible monomials of the mirror family") {
  auto expected = sorted(mirror_family_expected_monomials());
  CHECK(expected.size() == 7);
  CHECK(sorted(mirror_family_admissible_monomials()) == expected);
  CHECK(sorted(mirror_family_admissible_monomials(6)) == expected);
  CHECK(admissible_by_hand(5) == expected);
}

TEST_CASE("the singular line persists") {
  auto sym = mirror_family_singular_line_symbolic();
  CHECK(sym.vanishes);
  for (const auto& r : sym.residuals) CHECK(r == "0");

  CHECK(mirror_family_singular_line_numeric(std::vector<Rational>(7, 0)).vanishes);
  CHECK(mirror_family_singular_line_numeric({1, 2, 3, make_rational(-5, 2), 7, 11, 13}).vanishes);
  std::vector<Rational> scaled{3, 6, 9, make_rational(-15, 2), 21, 33, 39};
  CHECK(mirror_family_singular_line_numeric(scaled).vanishes);

  auto bumped = mirror_family_singular_line_symbolic("x3^2");
  CHECK_FALSE(bumped.vanishes);
  CHECK(bumped.residuals[0] == "c^2");
  CHECK(bumped.residuals[3] == "2*c");
  CHECK(bumped.residuals[1] == "0");

  // x1·x3³ has nonzero ∂x1 on the line; x1²·x3³ vanishes to second order
  CHECK(mirror_family_singular_line_numeric({1, 1, 1, 1, 1, 1, 1}, "x1*x3^3").vanishes == false);
  CHECK(mirror_family_singular_line_numeric({1, 1, 1, 1, 1, 1, 1}, "x1^2*x3^3").vanishes);
}

TEST_CASE("conic bundle smoothness certificates") {
  auto checks = conic_bundle_smooth_check({2, 1, 1, {}}, 3);
  REQUIRE(checks.size() == 2);
  for (const auto& c : checks) {
    CHECK(c.smooth);
    CHECK(c.replays_to_one);
    auto one = poly::combine(c.certificate.cofactors, c.certificate.generators);
    CHECK(one == poly::QPolynomial::constant(one.ring(), 1));
  }
  CHECK(checks[0].n == 2);
  CHECK(checks[1].n == 3);

  auto nb0 = conic_bundle_smooth_check({2, 1, 0, {}}, 2);
  REQUIRE(nb0.size() == 1);
  CHECK(nb0[0].smooth);
  CHECK(nb0[0].replays_to_one);

  CHECK_THROWS_AS(conic_bundle_smooth_check({2, 0, 0, {}}, 2), InputError);
  CHECK_THROWS_AS(conic_bundle_presentation({1, 1, 1, {}}), InputError);
  CHECK_THROWS_AS(conic_bundle_presentation({2, 1, 1, {1, 1}}), InputError);
}

TEST_CASE("conic bundle degeneration matches the Stanley-Reisner side") {
  for (int n : {2, 3}) {
    CAPTURE(n);
    auto config = fixture_config("conic_sr_n" + std::to_string(n) + ".json");
    auto gr = associated_graded(conic_bundle_presentation({n, 1, 1, {}}));
    const Rational bound = 10;
    auto h_gr = gr.hilbert_function(bound);
    auto h_sr = sr_presentation(dual_complex(config), config.kappa()).hilbert_function(bound);
    auto h_theta = graded_dimension(config, bound);
    CHECK(h_gr == h_sr);
    CHECK(h_gr == h_theta);
  }
}

TEST_CASE("mirror family presentation") {
  auto config = mirror_family_configuration();
  auto p = mirror_family_sr_presentation();
  for (const auto& g : p.relations) CHECK(g.is_weight_homogeneous());
  CHECK(p.hilbert_function(6) == graded_dimension(config, 6));

  auto h = mirror_family_hypersurface();
  auto eliminated = WeightedPresentation::make(p.ring, {poly::parse_polynomial("x1*x2*x3 - u - v", p.ring),
                                                       poly::parse_polynomial(h.to_string(), p.ring)});
  CHECK(same_ideal(eliminated, p));
  CHECK(h == poly::parse_polynomial("u*x1*x2*x3 - u^2", h.ring()));

  auto cert = poly::jacobian_smooth(p.ideal(), 2);
  CHECK_FALSE(cert.smooth);
  CHECK_THROWS_AS(dual_complex(config), UnsupportedError);
}
