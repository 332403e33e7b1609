#include "logcy/filtered_rees.hpp"

#include "logcy/errors.hpp"

namespace logcy {

using poly::Monomial;
using poly::QPolynomial;

WeightedPresentation WeightedPresentation::make(std::vector<std::string> vars, std::vector<Rational> weights,
                                                const std::vector<std::string>& relations) {
  if (vars.empty()) throw InputError("a presentation needs at least one variable");
  if (weights.size() != vars.size()) throw InputError("one weight per variable is required");
  poly::RingPtr ring = poly::make_ring(std::move(vars), std::move(weights));
  std::vector<QPolynomial> rel;
  for (const auto& s : relations) rel.push_back(poly::parse_polynomial(s, ring));
  return make(ring, std::move(rel));
}

WeightedPresentation WeightedPresentation::make(poly::RingPtr ring, std::vector<QPolynomial> relations) {
  WeightedPresentation p;
  p.ring = std::move(ring);
  for (auto& r : relations) {
    if (!r.is_zero()) p.relations.push_back(r.in_ring(p.ring));
  }
  return p;
}

poly::Ideal<Rational> WeightedPresentation::ideal() const {
  if (relations.empty()) return poly::Ideal<Rational>({QPolynomial(ring)});
  return poly::Ideal<Rational>(relations);
}

std::vector<QPolynomial> WeightedPresentation::groebner_basis() const {
  return ideal().with_basis(ring->order).basis();
}

std::map<Rational, std::size_t> WeightedPresentation::hilbert_function(const Rational& bound) const {
  return poly::hilbert_function_up_to(ideal(), ring->order, bound);
}

bool WeightedPresentation::all_weights_one() const {
  for (const auto& w : weights()) {
    if (w != 1) return false;
  }
  return true;
}

WeightedPresentation associated_graded(const WeightedPresentation& p) {
  std::vector<QPolynomial> tops;
  for (const auto& g : p.groebner_basis()) tops.push_back(g.top_form());
  return WeightedPresentation::make(p.ring, std::move(tops));
}

ReesPresentation rees_algebra(const WeightedPresentation& p) {
  ReesPresentation r;
  r.scale = p.ring->order.scale();
  r.original_weights = p.weights();
  std::string t = "t";
  for (int n = 0; p.ring->index_of(t) >= 0; ++n) t = "t" + std::to_string(n);
  r.t_name = t;

  std::vector<std::string> vars{t};
  std::vector<Rational> weights{Rational(1)};
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    vars.push_back(p.vars()[i]);
    weights.push_back(Rational(static_cast<long>(p.ring->order.scaled_weights()[i])));
  }
  poly::RingPtr ring = poly::make_ring(vars, weights);
  std::vector<QPolynomial> rel;
  for (const auto& g : p.groebner_basis()) {
    const std::int64_t top = g.top_scaled_weight();
    std::vector<QPolynomial::Term> terms;
    for (const auto& [m, c] : g.terms()) {
      Monomial e(ring->size());
      e.e[0] = static_cast<std::uint32_t>(top - p.ring->order.scaled_weight(m));
      for (std::size_t i = 0; i < m.size(); ++i) e.e[i + 1] = m.e[i];
      terms.emplace_back(std::move(e), c);
    }
    rel.push_back(QPolynomial::from_terms(ring, std::move(terms)));
  }
  r.presentation = WeightedPresentation::make(ring, std::move(rel));
  return r;
}

WeightedPresentation fiber_at(const ReesPresentation& r, const Rational& c) {
  const auto& vars = r.presentation.vars();
  std::vector<std::string> target_vars(vars.begin() + 1, vars.end());
  poly::RingPtr target = poly::make_ring(target_vars, r.original_weights);
  std::vector<QPolynomial> images{QPolynomial::constant(target, c)};
  for (std::size_t i = 0; i < target_vars.size(); ++i) images.push_back(QPolynomial::variable(target, i));
  std::vector<QPolynomial> rel;
  for (const auto& g : r.presentation.relations) rel.push_back(poly::evaluate_on_locus(g, images, target));
  return WeightedPresentation::make(target, std::move(rel));
}

bool same_ideal(const WeightedPresentation& a, const WeightedPresentation& b) {
  if (a.vars() != b.vars()) return false;
  poly::Ideal<Rational> ia = a.ideal().with_basis(a.ring->order);
  poly::Ideal<Rational> ib = b.ideal().with_basis(a.ring->order);
  for (const auto& g : b.relations) {
    if (!poly::ideal_membership(g.in_ring(a.ring), ia, a.ring->order)) return false;
  }
  for (const auto& g : a.relations) {
    if (!poly::ideal_membership(g, ib, a.ring->order)) return false;
  }
  return true;
}

}  // namespace logcy
