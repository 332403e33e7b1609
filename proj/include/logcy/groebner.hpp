#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <type_traits>
#include <utility>
#include <vector>

#include "logcy/errors.hpp"
#include "logcy/poly_core.hpp"

namespace logcy::poly {

template <class C>
concept FieldCoefficient = std::is_same_v<C, Rational> || std::is_same_v<C, ModP>;

/// Reduced Gröbner basis together with, when requested, the cofactors
/// expressing each basis element in the input generators:
/// basis[i] = Σ_j cofactors[i][j] · generators[j].
template <class C>
struct GroebnerBasis {
  std::vector<Polynomial<C>> basis;
  std::vector<std::vector<Polynomial<C>>> cofactors;
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;

  bool is_unit_ideal() const { return basis.size() == 1 && basis[0].is_constant(); }
};

namespace detail {

template <class C>
struct Tracked {
  Polynomial<C> p;
  std::vector<Polynomial<C>> cof;
};

/// Full reduction of `f` by `basis`, recording the quotients in `f.cof`.
template <class C>
void reduce_tracked(Tracked<C>& f, const std::vector<Tracked<C>>& basis, bool track,
                    std::size_t skip = static_cast<std::size_t>(-1)) {
  const auto& ring = f.p.ring();
  Polynomial<C> remainder(ring);
  std::vector<typename Polynomial<C>::Term> rem_terms;
  Polynomial<C> rest = f.p;
  while (!rest.is_zero()) {
    const Monomial& lm = rest.leading_monomial();
    std::size_t hit = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == skip || basis[i].p.is_zero()) continue;
      if (basis[i].p.leading_monomial().divides(lm)) {
        hit = i;
        break;
      }
    }
    if (hit == basis.size()) {
      rem_terms.push_back(rest.terms().front());
      rest = rest - Polynomial<C>::monomial(ring, lm, rest.leading_coefficient());
      continue;
    }
    const auto& g = basis[hit].p;
    Monomial q = lm / g.leading_monomial();
    C c = rest.leading_coefficient() / g.leading_coefficient();
    rest = rest - g.times_term(q, c);
    if (track) {
      for (std::size_t j = 0; j < f.cof.size(); ++j) {
        f.cof[j] = f.cof[j] - basis[hit].cof[j].times_term(q, c);
      }
    }
  }
  f.p = Polynomial<C>::from_terms(ring, std::move(rem_terms));
}

template <class C>
void make_monic(Tracked<C>& t, bool track) {
  if (t.p.is_zero()) return;
  C inv = make_coeff<C>(1, *t.p.ring()) / t.p.leading_coefficient();
  t.p = t.p.scaled(inv);
  if (track) {
    for (auto& c : t.cof) c = c.scaled(inv);
  }
}

}  // namespace detail

/// Buchberger's algorithm with the normal pair-selection strategy (smallest
/// lcm first, ties by pair index), the coprime-leading-term criterion and
/// Buchberger's chain criterion. Output is the reduced, monic basis sorted by
/// ascending leading monomial. Deterministic for a fixed input sequence.
template <FieldCoefficient C>
GroebnerBasis<C> buchberger(const std::vector<Polynomial<C>>& generators, bool track_cofactors = false) {
  GroebnerBasis<C> out;
  if (generators.empty()) throw InputError("Gröbner basis of an empty generator list");
  const RingPtr ring = generators.front().ring();
  if (!ring) throw InputError("generators need a ring");
  for (const auto& g : generators) {
    if (g.ring() && g.ring()->vars != ring->vars) throw InputError("generators from different rings");
  }
  const MonomialOrder& ord = ring->order;
  const std::size_t m = generators.size();
  using T = detail::Tracked<C>;
  std::vector<T> g;

  auto unit_vector = [&](std::size_t j) {
    std::vector<Polynomial<C>> v(track_cofactors ? m : 0, Polynomial<C>(ring));
    if (track_cofactors) v[j] = Polynomial<C>::constant(ring, 1);
    return v;
  };

  auto finish_unit = [&](T unit) {
    detail::make_monic(unit, track_cofactors);
    out.basis = {unit.p};
    if (track_cofactors) out.cofactors = {unit.cof};
    return out;
  };

  for (std::size_t j = 0; j < m; ++j) {
    T t{generators[j].ring() ? generators[j].in_ring(ring) : Polynomial<C>(ring), unit_vector(j)};
    if (t.p.is_zero()) continue;
    detail::make_monic(t, track_cofactors);
    if (t.p.is_constant()) return finish_unit(std::move(t));
    g.push_back(std::move(t));
  }
  if (g.empty()) {
    out.basis = {};
    return out;
  }

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
  }

  auto lcm_of = [&](std::size_t i, std::size_t j) {
    return g[i].p.leading_monomial().lcm(g[j].p.leading_monomial());
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    auto best = pending.begin();
    Monomial best_lcm = lcm_of(best->first, best->second);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm_of(it->first, it->second);
      if (ord.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);
    ++out.pairs_considered;

    const Monomial& li = g[i].p.leading_monomial();
    const Monomial& lj = g[j].p.leading_monomial();
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (g[k].p.leading_monomial().divides(best_lcm) && !is_pending(i, k) && !is_pending(j, k)) {
        chain = true;
      }
    }
    if (chain) continue;

    ++out.pairs_reduced;
    Monomial qi = best_lcm / li;
    Monomial qj = best_lcm / lj;
    const C one = make_coeff<C>(1, *ring);
    T s{g[i].p.times_term(qi, one) - g[j].p.times_term(qj, one), {}};
    if (track_cofactors) {
      s.cof.resize(m, Polynomial<C>(ring));
      for (std::size_t k = 0; k < m; ++k) {
        s.cof[k] = g[i].cof[k].times_term(qi, one) - g[j].cof[k].times_term(qj, one);
      }
    }
    detail::reduce_tracked(s, g, track_cofactors);
    if (s.p.is_zero()) continue;
    detail::make_monic(s, track_cofactors);
    if (s.p.is_constant()) return finish_unit(std::move(s));
    g.push_back(std::move(s));
    const std::size_t n = g.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
  }

  // Minimize: drop elements whose leading monomial is divisible by another's.
  std::vector<bool> keep(g.size(), true);
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      const auto& la = g[a].p.leading_monomial();
      const auto& lb = g[b].p.leading_monomial();
      if (lb.divides(la) && (!(la == lb) || b < a)) keep[a] = false;
    }
  }
  std::vector<T> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (keep[a]) minimal.push_back(std::move(g[a]));
  }
  // Interreduce: each element reduced by the others. Leading terms are
  // untouched because the basis is minimal.
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    detail::reduce_tracked(minimal[a], minimal, track_cofactors, a);
    detail::make_monic(minimal[a], track_cofactors);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const T& x, const T& y) {
    return ord.compare(x.p.leading_monomial(), y.p.leading_monomial()) < 0;
  });
  for (auto& t : minimal) {
    out.basis.push_back(std::move(t.p));
    if (track_cofactors) out.cofactors.push_back(std::move(t.cof));
  }
  return out;
}

/// Remainder of f modulo a Gröbner basis (unique for a reduced basis).
template <FieldCoefficient C>
Polynomial<C> normal_form(const Polynomial<C>& f, const std::vector<Polynomial<C>>& basis) {
  detail::Tracked<C> t{f, {}};
  std::vector<detail::Tracked<C>> b;
  for (const auto& p : basis) b.push_back({p.in_ring(f.ring()), {}});
  detail::reduce_tracked(t, b, false);
  return t.p;
}

/// The S-polynomial of two basis elements.
template <FieldCoefficient C>
Polynomial<C> s_polynomial(const Polynomial<C>& f, const Polynomial<C>& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  return f.times_term(l / f.leading_monomial(), make_coeff<C>(1, *f.ring()) / f.leading_coefficient()) -
         g.times_term(l / g.leading_monomial(), make_coeff<C>(1, *g.ring()) / g.leading_coefficient());
}

/// Re-verification oracle: every S-polynomial reduces to zero.
template <FieldCoefficient C>
bool is_groebner_basis(const std::vector<Polynomial<C>>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

/// Finitely generated ideal with an optional cached reduced Gröbner basis.
/// Values are immutable: computing a basis yields a new Ideal.
template <FieldCoefficient C>
class Ideal {
 public:
  explicit Ideal(std::vector<Polynomial<C>> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) throw InputError("an ideal needs at least one generator");
  }

  const std::vector<Polynomial<C>>& generators() const { return generators_; }
  const RingPtr& ring() const { return generators_.front().ring(); }
  bool has_basis_for(const MonomialOrder& ord) const { return basis_ && order_ && *order_ == ord; }

  /// Returns this ideal with a reduced basis cached under `ord`, recomputing
  /// when the cached order differs.
  Ideal with_basis(const MonomialOrder& ord) const {
    if (has_basis_for(ord)) return *this;
    RingPtr r = with_order(ring(), ord);
    std::vector<Polynomial<C>> gens;
    for (const auto& g : generators_) gens.push_back(g.in_ring(r));
    Ideal out = *this;
    out.basis_ = buchberger(gens).basis;
    out.order_ = ord;
    return out;
  }
  Ideal with_basis() const { return with_basis(ring()->order); }
  const std::vector<Polynomial<C>>& basis() const {
    if (!basis_) throw InputError("no Gröbner basis cached");
    return *basis_;
  }
  const MonomialOrder& basis_order() const { return *order_; }

 private:
  std::vector<Polynomial<C>> generators_;
  std::optional<std::vector<Polynomial<C>>> basis_;
  std::optional<MonomialOrder> order_;
};

template <FieldCoefficient C>
Ideal<C> groebner(const Ideal<C>& ideal, const MonomialOrder& ord) {
  return ideal.with_basis(ord);
}

template <FieldCoefficient C>
Polynomial<C> normal_form(const Polynomial<C>& f, const Ideal<C>& ideal, const MonomialOrder& ord) {
  Ideal<C> with = ideal.with_basis(ord);
  RingPtr r = with.basis().empty() ? with_order(f.ring(), ord) : with.basis().front().ring();
  return normal_form(f.in_ring(r), with.basis());
}

template <FieldCoefficient C>
bool ideal_membership(const Polynomial<C>& f, const Ideal<C>& ideal, const MonomialOrder& ord) {
  return normal_form(f, ideal, ord).is_zero();
}

/// Dimension of each weight level of k[x]/I, counted as standard monomials of
/// exactly that weight. Levels are the multiples of 1/L up to `bound`, where L
/// is the common denominator of the weights; keys are the weights themselves.
std::map<Rational, std::size_t> standard_monomial_counts(const std::vector<Monomial>& leading,
                                                         const MonomialOrder& ord,
                                                         const Rational& bound);

template <FieldCoefficient C>
std::map<Rational, std::size_t> hilbert_function_up_to(const Ideal<C>& ideal, const MonomialOrder& ord,
                                                       const Rational& bound) {
  Ideal<C> with = ideal.with_basis(ord);
  std::vector<Monomial> leading;
  for (const auto& g : with.basis()) leading.push_back(g.leading_monomial());
  return standard_monomial_counts(leading, ord, bound);
}

/// Outcome of the Jacobian criterion for a complete-intersection candidate.
template <class C>
struct SmoothnessCertificate {
  bool smooth = false;
  /// relations followed by the nonzero maximal minors of the Jacobian
  std::vector<Polynomial<C>> generators;
  /// 1 = Σ cofactors[j] · generators[j] when smooth
  std::vector<Polynomial<C>> cofactors;
  std::size_t minor_count = 0;
};

template <class C>
Polynomial<C> determinant(const std::vector<std::vector<Polynomial<C>>>& m) {
  const std::size_t n = m.size();
  const RingPtr& ring = m[0][0].ring();
  if (n == 1) return m[0][0];
  Polynomial<C> det(ring);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial<C>>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial<C>> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      sub.push_back(std::move(row));
    }
    Polynomial<C> term = m[0][col] * determinant(sub);
    det = (col % 2 == 0) ? det + term : det - term;
  }
  return det;
}

/// Σ cofactors[j]·generators[j], for certificate replay.
template <class C>
Polynomial<C> combine(const std::vector<Polynomial<C>>& cofactors,
                      const std::vector<Polynomial<C>>& generators) {
  Polynomial<C> acc(generators.front().ring());
  for (std::size_t j = 0; j < generators.size(); ++j) acc += cofactors[j] * generators[j];
  return acc;
}

/// Jacobian criterion: the affine variety cut out by `expected_codim`
/// relations is smooth when 1 lies in I + (maximal minors of the Jacobian).
/// A true verdict carries a replayable cofactor certificate; false only means
/// smoothness was not established.
template <FieldCoefficient C>
SmoothnessCertificate<C> jacobian_smooth(const Ideal<C>& ideal, std::size_t expected_codim) {
  const auto& rel = ideal.generators();
  if (rel.size() != expected_codim) {
    throw UnsupportedError("smoothness check needs exactly " + std::to_string(expected_codim) +
                           " relations (complete intersection), got " + std::to_string(rel.size()));
  }
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->size();
  if (expected_codim == 0 || expected_codim > n) throw UnsupportedError("codimension out of range");
  std::vector<std::vector<Polynomial<C>>> jac(expected_codim);
  for (std::size_t r = 0; r < expected_codim; ++r) {
    for (std::size_t v = 0; v < n; ++v) jac[r].push_back(rel[r].derivative(v));
  }
  SmoothnessCertificate<C> cert;
  cert.generators = rel;
  std::vector<std::size_t> cols(expected_codim);
  for (std::size_t i = 0; i < expected_codim; ++i) cols[i] = i;
  for (;;) {
    std::vector<std::vector<Polynomial<C>>> sub(expected_codim);
    for (std::size_t r = 0; r < expected_codim; ++r) {
      for (std::size_t c : cols) sub[r].push_back(jac[r][c]);
    }
    Polynomial<C> minor = determinant(sub);
    if (!minor.is_zero()) {
      cert.generators.push_back(std::move(minor));
      ++cert.minor_count;
    }
    // next column combination in lexicographic order
    std::size_t pos = expected_codim;
    while (pos > 0 && cols[pos - 1] == n - expected_codim + pos - 1) --pos;
    if (pos == 0) break;
    ++cols[pos - 1];
    for (std::size_t i = pos; i < expected_codim; ++i) cols[i] = cols[i - 1] + 1;
  }
  GroebnerBasis<C> gb = buchberger(cert.generators, true);
  if (gb.is_unit_ideal()) {
    cert.smooth = true;
    cert.cofactors = gb.cofactors[0];
    for (auto& c : cert.cofactors) c = c.in_ring(ring);
  }
  return cert;
}

}  // namespace logcy::poly
