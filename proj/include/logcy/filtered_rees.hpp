#pragma once

#include <map>
#include <string>
#include <vector>

#include "logcy/groebner.hpp"
#include "logcy/poly_core.hpp"

namespace logcy {

/// k[x_1..x_n]/(relations) with a positive weight per generator, read as the
/// ascending filtration by weighted degree.
struct WeightedPresentation {
  poly::RingPtr ring;
  std::vector<poly::QPolynomial> relations;

  /// Parses relation strings over the given variables. Zero relations are dropped.
  static WeightedPresentation make(std::vector<std::string> vars, std::vector<Rational> weights,
                                   const std::vector<std::string>& relations);
  static WeightedPresentation make(poly::RingPtr ring, std::vector<poly::QPolynomial> relations);

  const std::vector<std::string>& vars() const { return ring->vars; }
  const std::vector<Rational>& weights() const { return ring->order.weights(); }
  /// The relation ideal; the zero ideal when there are no relations.
  poly::Ideal<Rational> ideal() const;
  /// Reduced Gröbner basis under the weight order.
  std::vector<poly::QPolynomial> groebner_basis() const;
  std::map<Rational, std::size_t> hilbert_function(const Rational& bound) const;
  bool all_weights_one() const;
};

/// Rees algebra ⊕ F_w A · t^w, presented over {t} ∪ original variables with
/// w(t) = 1 and the original weights multiplied by `scale`.
struct ReesPresentation {
  WeightedPresentation presentation;
  Integer scale = 1;
  std::string t_name = "t";
  /// Original (unscaled) weights of the non-t variables.
  std::vector<Rational> original_weights;
};

/// gr_F A from the top-weight forms of a weighted Gröbner basis.
WeightedPresentation associated_graded(const WeightedPresentation& p);

/// Homogenizes a weighted Gröbner basis with t.
ReesPresentation rees_algebra(const WeightedPresentation& p);

/// The fiber t = c, on the original variables and weights.
WeightedPresentation fiber_at(const ReesPresentation& r, const Rational& c);

/// Equality of the relation ideals (mutual membership over the same variables).
bool same_ideal(const WeightedPresentation& a, const WeightedPresentation& b);

}  // namespace logcy
