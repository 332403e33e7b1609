#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logcy/filtered_rees.hpp"
#include "logcy/simplicial_complex.hpp"
#include "logcy/stratum_poset.hpp"

namespace logcy {

/// θ_(v,c): v ∈ B(M,D) and c the local index of a component of D_|v|.
struct ThetaBasisElement {
  MultiIndex v;
  int c = 0;
  auto operator<=>(const ThetaBasisElement&) const = default;
};

/// Checks that (v, c) names a basis element of the configuration. Throws InputError.
void validate_basis_element(const DivisorConfiguration& config, const ThetaBasisElement& x);

/// Finite linear combination of theta basis elements over Q (prime 0) or F_p.
/// Over F_p coefficients are stored as their representatives in [0, p).
class ThetaElement {
 public:
  ThetaElement() = default;
  explicit ThetaElement(std::uint32_t prime) : prime_(prime) {}

  static ThetaElement basis(const ThetaBasisElement& x, std::uint32_t prime = 0);

  std::uint32_t prime() const { return prime_; }
  const std::map<ThetaBasisElement, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const ThetaBasisElement& x, const Rational& c);
  ThetaElement operator+(const ThetaElement& o) const;
  ThetaElement scaled(const Rational& c) const;
  bool operator==(const ThetaElement& o) const { return prime_ == o.prime_ && terms_ == o.terms_; }

  /// Terms ordered by (w(v), v, c), printed as "2*theta[1,0,0;7]" with the
  /// configuration's component ids.
  std::string to_string(const DivisorConfiguration& config) const;
  std::vector<std::pair<ThetaBasisElement, Rational>> ordered_terms(const DivisorConfiguration& config) const;

 private:
  Rational normalize(const Rational& c) const;
  std::uint32_t prime_ = 0;
  std::map<ThetaBasisElement, Rational> terms_;
};

/// θ_0 = the class of 1 ∈ H⁰(M).
ThetaBasisElement theta_unit(const DivisorConfiguration& config);

/// θ_(v1,c1) · θ_(v2,c2) = Σ θ_(v1+v2, c) over the components c of D_|v1+v2|
/// lying in c1 and in c2; zero when that stratum is empty or v1+v2 ∉ B(M,D).
ThetaElement multiply_basis(const DivisorConfiguration& config, const ThetaBasisElement& x,
                            const ThetaBasisElement& y);

/// Bilinear extension. Throws InputError on mismatched coefficient fields.
ThetaElement multiply(const DivisorConfiguration& config, const ThetaElement& f, const ThetaElement& g);

/// Parses "2*theta[1,0,0;0] - theta[0,1,0;0] + ..." where the value after ';'
/// is a component id of D_|v|.
ThetaElement parse_theta(const DivisorConfiguration& config, const std::string& text,
                         std::uint32_t prime = 0);

/// k[x_1..x_k]/I_Δ with generators the minimal non-faces. Weights default to 1.
WeightedPresentation sr_presentation(const SimplicialComplex& cx,
                                     std::optional<std::vector<Rational>> weights = std::nullopt);

/// Number of basis elements θ_(v,c) of each weight w(v) = Σ κ_i v_i ≤ bound.
/// Levels run over the multiples of 1/L (L the common denominator of κ),
/// including levels with no elements.
std::map<Rational, std::size_t> graded_dimension(const DivisorConfiguration& config, const Rational& bound);

/// Every basis element of weight ≤ bound, in (w(v), v, c) order.
std::vector<ThetaBasisElement> basis_up_to(const DivisorConfiguration& config, const Rational& bound);

Rational weight_of(const DivisorConfiguration& config, const MultiIndex& v);

}  // namespace logcy
