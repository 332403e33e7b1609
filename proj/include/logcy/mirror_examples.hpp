#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "logcy/filtered_rees.hpp"
#include "logcy/groebner.hpp"
#include "logcy/stratum_poset.hpp"

namespace logcy::examples {

/// k[u_1..u_n, w1, w2]/(Π u_j − Na − Nb·w1, w1·w2 − 1).
struct ConicBundleFixture {
  int n = 2;
  long na = 1;
  long nb = 1;
  /// weights of (u_1..u_n, w1, w2); defaults to (1,…,1, 1, 2)
  std::vector<Rational> weights;

  void validate() const;
};

WeightedPresentation conic_bundle_presentation(const ConicBundleFixture& f);

struct ConicSmoothness {
  int n = 0;
  bool smooth = false;
  bool replays_to_one = false;
  std::size_t minor_count = 0;
  poly::SmoothnessCertificate<Rational> certificate;
};

/// Jacobian certificates for n = 2..n_max with the fixture's Na, Nb.
std::vector<ConicSmoothness> conic_bundle_smooth_check(const ConicBundleFixture& f, int n_max);

/// Exponents (e1, e2, e3, eu) of x1^e1 x2^e2 x3^e3 u^eu.
using Exponent4 = std::array<int, 4>;

/// Monomials with D3-degree e3+eu ≤ 1, D1- and D2-degrees e1+eu, e2+eu ≤ 2 and
/// G_m-weight e1+e2−e3+eu = 2, searched in the box 0 ≤ e_i ≤ box.
std::vector<Exponent4> mirror_family_admissible_monomials(int box = 4);

/// The expected answer x1x2, x1², x2², x1²x2x3, x1x2²x3, x1u, x2u, in the order of
/// the coefficients a1..a7.
std::vector<Exponent4> mirror_family_expected_monomials();

struct SingularLineReport {
  bool vanishes = false;
  /// f, ∂f/∂x1, ∂f/∂x2, ∂f/∂x3, ∂f/∂u restricted to the line, as text in c (and a1..a7)
  std::array<std::string, 5> residuals;
};

/// Restricts f_a = u(x1x2x3 − u) − g_a and its partials to {u = x1 = x2 = 0, x3 = c}.
/// Symbolic mode keeps a1..a7 as parameters; numeric mode uses `coeffs`.
/// `perturbation` is an optional polynomial in x1, x2, x3, u added to f_a.
SingularLineReport mirror_family_singular_line_symbolic(const std::string& perturbation = "");
SingularLineReport mirror_family_singular_line_numeric(const std::vector<Rational>& coeffs,
                                                    const std::string& perturbation = "");

/// The divisor configuration: three divisors, connected pairwise strata, the
/// triple stratum two points (component ids 1 and 2), κ = (1,1,1), all a_i = 1.
DivisorConfiguration mirror_family_configuration();

/// Q[x1,x2,x3,u,v]/(x1x2x3 − u − v, uv). Weights default to those induced by
/// κ = (1,1,1): w(u) = w(v) = w(x1x2x3) = 3.
WeightedPresentation mirror_family_sr_presentation(std::optional<std::vector<Rational>> weights = std::nullopt);

/// u(x1x2x3 − u) over Q[x1,x2,x3,u], obtained by eliminating v.
poly::QPolynomial mirror_family_hypersurface();

}  // namespace logcy::examples
