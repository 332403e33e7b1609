#include "logcy/mirror_examples.hpp"

#include <algorithm>

#include "logcy/errors.hpp"
#include "logcy/laurent.hpp"

namespace logcy::examples {

using poly::LaurentCoeff;
using poly::Monomial;
using poly::QPolynomial;

void ConicBundleFixture::validate() const {
  if (n < 2) throw InputError("conic bundle needs n >= 2");
  if (n > 12) throw InputError("conic bundle n is limited to 12");
  if (!weights.empty() && weights.size() != static_cast<std::size_t>(n) + 2) {
    throw InputError("conic bundle weights are (u_1..u_n, w1, w2)");
  }
}

WeightedPresentation conic_bundle_presentation(const ConicBundleFixture& f) {
  f.validate();
  std::vector<std::string> vars;
  for (int j = 1; j <= f.n; ++j) vars.push_back("u" + std::to_string(j));
  vars.push_back("w1");
  vars.push_back("w2");
  std::vector<Rational> w = f.weights;
  if (w.empty()) {
    w.assign(static_cast<std::size_t>(f.n), Rational(1));
    w.push_back(1);
    w.push_back(2);
  }
  poly::RingPtr ring = poly::make_ring(vars, w);
  Monomial prod(ring->size());
  for (int j = 0; j < f.n; ++j) prod.e[static_cast<std::size_t>(j)] = 1;
  const std::size_t w1 = static_cast<std::size_t>(f.n), w2 = w1 + 1;
  QPolynomial r1 = QPolynomial::monomial(ring, prod, Rational(1)) - QPolynomial::constant(ring, f.na) -
                   QPolynomial::variable(ring, w1).scaled(Rational(f.nb));
  QPolynomial r2 = QPolynomial::variable(ring, w1) * QPolynomial::variable(ring, w2) - QPolynomial::constant(ring, 1);
  return WeightedPresentation::make(ring, {r1, r2});
}

std::vector<ConicSmoothness> conic_bundle_smooth_check(const ConicBundleFixture& f, int n_max) {
  if (f.na == 0 && f.nb == 0) throw InputError("smoothness check needs Na or Nb nonzero");
  std::vector<ConicSmoothness> out;
  for (int n = 2; n <= n_max; ++n) {
    ConicBundleFixture g = f;
    g.n = n;
    if (n != f.n) g.weights.clear();
    WeightedPresentation p = conic_bundle_presentation(g);
    ConicSmoothness s;
    s.n = n;
    s.certificate = poly::jacobian_smooth(p.ideal(), 2);
    s.smooth = s.certificate.smooth;
    s.minor_count = s.certificate.minor_count;
    if (s.smooth) {
      s.replays_to_one = poly::combine(s.certificate.cofactors, s.certificate.generators) ==
                         QPolynomial::constant(p.ring, 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Exponent4> mirror_family_admissible_monomials(int box) {
  std::vector<Exponent4> out;
  for (int e1 = 0; e1 <= box; ++e1) {
    for (int e2 = 0; e2 <= box; ++e2) {
      for (int e3 = 0; e3 <= box; ++e3) {
        for (int eu = 0; eu <= box; ++eu) {
          if (e3 + eu > 1) continue;
          if (e1 + eu > 2 || e2 + eu > 2) continue;
          if (e1 + e2 - e3 + eu != 2) continue;
          out.push_back({e1, e2, e3, eu});
        }
      }
    }
  }
  return out;
}

std::vector<Exponent4> mirror_family_expected_monomials() {
  return {{1, 1, 0, 0}, {2, 0, 0, 0}, {0, 2, 0, 0}, {2, 1, 1, 0}, {1, 2, 1, 0}, {1, 0, 0, 1}, {0, 1, 0, 1}};
}

namespace {

const std::vector<std::string> kVars{"x1", "x2", "x3", "u"};

template <class C>
SingularLineReport restrict_to_line(const poly::Polynomial<C>& f, const poly::RingPtr& line) {
  const poly::RingPtr& ring = f.ring();
  using P = poly::Polynomial<C>;
  std::vector<P> images{P(line), P(line), P::variable(line, 0), P(line)};
  SingularLineReport r;
  r.vanishes = true;
  std::vector<P> checks{f};
  for (std::size_t v = 0; v < ring->size(); ++v) checks.push_back(f.derivative(v));
  for (std::size_t i = 0; i < checks.size(); ++i) {
    P res = poly::evaluate_on_locus(checks[i], images, line);
    r.residuals[i] = res.to_string();
    if (!res.is_zero()) r.vanishes = false;
  }
  return r;
}

template <class C>
poly::Polynomial<C> lift(const QPolynomial& q, const poly::RingPtr& ring) {
  std::vector<typename poly::Polynomial<C>::Term> terms;
  for (const auto& [m, c] : q.terms()) terms.emplace_back(m, poly::coeff_from_rational<C>(c, *ring));
  return poly::Polynomial<C>::from_terms(ring, std::move(terms));
}

// f_a with coefficients supplied per admissible monomial
template <class C>
poly::Polynomial<C> f_family(const poly::RingPtr& ring, const std::vector<C>& a, const std::string& perturbation) {
  using P = poly::Polynomial<C>;
  poly::RingPtr qring = poly::make_ring(kVars);
  P f = lift<C>(poly::parse_polynomial("u*(x1*x2*x3 - u)", qring), ring);
  auto mons = mirror_family_expected_monomials();
  for (std::size_t i = 0; i < mons.size(); ++i) {
    Monomial m(4);
    for (std::size_t j = 0; j < 4; ++j) m.e[j] = static_cast<std::uint32_t>(mons[i][j]);
    f -= P::monomial(ring, m, a[i]);
  }
  if (!perturbation.empty()) f += lift<C>(poly::parse_polynomial(perturbation, qring), ring);
  return f;
}

}  // namespace

SingularLineReport mirror_family_singular_line_symbolic(const std::string& perturbation) {
  std::vector<std::string> params;
  for (int i = 1; i <= 7; ++i) params.push_back("a" + std::to_string(i));
  poly::RingPtr ring = poly::make_ring(kVars, {}, 0, params);
  poly::RingPtr line = poly::make_ring({"c"}, {}, 0, params);
  std::vector<LaurentCoeff> a;
  for (std::size_t i = 0; i < 7; ++i) a.push_back(LaurentCoeff::parameter(ring->parameters, i));
  return restrict_to_line(f_family<LaurentCoeff>(ring, a, perturbation), line);
}

SingularLineReport mirror_family_singular_line_numeric(const std::vector<Rational>& coeffs,
                                                    const std::string& perturbation) {
  if (coeffs.size() != 7) throw InputError("numeric mode needs exactly 7 coefficients a1..a7");
  poly::RingPtr ring = poly::make_ring(kVars);
  poly::RingPtr line = poly::make_ring({"c"});
  return restrict_to_line(f_family<Rational>(ring, coeffs, perturbation), line);
}

DivisorConfiguration mirror_family_configuration() {
  std::map<DivisorSet, std::vector<long>> strata;
  for (DivisorSet s = 0; s < 7; ++s) strata[s] = {0};
  strata[7] = {1, 2};
  return DivisorConfiguration::build(3, {1, 1, 1}, {1, 1, 1}, strata, {});
}

WeightedPresentation mirror_family_sr_presentation(std::optional<std::vector<Rational>> weights) {
  std::vector<Rational> w = weights ? *weights : std::vector<Rational>{1, 1, 1, 3, 3};
  return WeightedPresentation::make({"x1", "x2", "x3", "u", "v"}, w, {"x1*x2*x3 - u - v", "u*v"});
}

QPolynomial mirror_family_hypersurface() {
  return poly::parse_polynomial("u*(x1*x2*x3 - u)", poly::make_ring(kVars));
}

}  // namespace logcy::examples
