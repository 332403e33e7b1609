#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "logcy/errors.hpp"
#include "logcy/laurent.hpp"
#include "logcy/rational.hpp"

namespace logcy::poly {

/// Exponent vector over the ambient variables.
struct Monomial {
  std::vector<std::uint32_t> e;

  Monomial() = default;
  explicit Monomial(std::size_t n) : e(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

  std::size_t size() const { return e.size(); }
  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& m) const;
  bool coprime(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  /// m / d, assuming d divides m.
  Monomial operator/(const Monomial& d) const;
  Monomial lcm(const Monomial& m) const;
  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& o) const { return e < o.e; }
};

/// Weight order: higher weighted degree wins, ties broken graded-lexicographically
/// (total degree, then lex with x_1 > x_2 > …). Weights are positive rationals,
/// compared exactly after scaling to integers by their common denominator.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<Rational> weights);
  static MonomialOrder standard(std::size_t n) {
    return MonomialOrder(std::vector<Rational>(n, Rational(1)));
  }

  std::size_t size() const { return weights_.size(); }
  const std::vector<Rational>& weights() const { return weights_; }
  /// Common denominator L of the weights; scaled weights are w_i·L.
  const Integer& scale() const { return scale_; }
  const std::vector<std::int64_t>& scaled_weights() const { return scaled_; }
  std::int64_t scaled_weight(const Monomial& m) const;
  Rational weight(const Monomial& m) const;
  /// Three-way comparison: positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool operator==(const MonomialOrder& o) const { return weights_ == o.weights_; }

 private:
  std::vector<Rational> weights_;
  std::vector<std::int64_t> scaled_;
  Integer scale_ = 1;
};

/// Variable names, monomial order and coefficient context shared by the
/// polynomials of one ring.
struct PolyRing {
  std::vector<std::string> vars;
  MonomialOrder order;
  std::uint32_t characteristic = 0;  // nonzero selects F_p for ModP coefficients
  LaurentCoeff::Names parameters;    // parameter names for LaurentCoeff coefficients

  std::size_t size() const { return vars.size(); }
  /// Index of a variable, or -1.
  int index_of(const std::string& name) const;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars, std::vector<Rational> weights = {},
                  std::uint32_t characteristic = 0, std::vector<std::string> parameters = {});
/// Same variables and coefficients, different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

template <class C>
C make_coeff(long n, const PolyRing& ring);

template <>
inline Rational make_coeff<Rational>(long n, const PolyRing&) {
  return Rational(n);
}
template <>
inline ModP make_coeff<ModP>(long n, const PolyRing& ring) {
  if (ring.characteristic == 0) throw InputError("F_p coefficients need a prime characteristic");
  return ModP(n, ring.characteristic);
}
template <>
inline LaurentCoeff make_coeff<LaurentCoeff>(long n, const PolyRing& ring) {
  return LaurentCoeff(ring.parameters, Rational(n));
}

template <class C>
C coeff_from_rational(const Rational& q, const PolyRing& ring);
template <>
inline Rational coeff_from_rational<Rational>(const Rational& q, const PolyRing&) {
  return q;
}
template <>
inline ModP coeff_from_rational<ModP>(const Rational& q, const PolyRing& ring) {
  if (ring.characteristic == 0) throw InputError("F_p coefficients need a prime characteristic");
  Integer n = q.get_num() % ring.characteristic;
  Integer d = q.get_den() % ring.characteristic;
  if (d == 0) throw InputError("denominator vanishes in F_p");
  return ModP(n.get_si(), ring.characteristic) / ModP(d.get_si(), ring.characteristic);
}
template <>
inline LaurentCoeff coeff_from_rational<LaurentCoeff>(const Rational& q, const PolyRing& ring) {
  return LaurentCoeff(ring.parameters, q);
}

inline bool coeff_is_zero(const Rational& c) { return logcy::is_zero(c); }
inline bool coeff_is_zero(const ModP& c) { return logcy::is_zero(c); }
inline bool coeff_is_zero(const LaurentCoeff& c) { return c.is_zero(); }

/// Sparse polynomial with terms kept strictly descending in the ring's order
/// and no zero coefficients.
template <class C>
class Polynomial {
 public:
  using Term = std::pair<Monomial, C>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const C& c);
  static Polynomial constant(RingPtr ring, long n) {
    C c = make_coeff<C>(n, *ring);
    return constant(std::move(ring), c);
  }
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, const C& c);
  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  const Monomial& leading_monomial() const { return terms_.front().first; }
  const C& leading_coefficient() const { return terms_.front().second; }
  std::uint64_t total_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const C& c) const;
  Polynomial times_term(const Monomial& m, const C& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial pow(unsigned e) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Divides by the leading coefficient (field coefficients only).
  Polynomial monic() const;
  /// Re-sorts the terms for another order on the same variables.
  Polynomial in_ring(RingPtr other) const;
  Polynomial derivative(std::size_t var) const;
  /// Terms of maximal weight under the ring's weight vector.
  Polynomial top_form() const;
  /// Maximal weight of a term (scaled by the order's common denominator).
  std::int64_t top_scaled_weight() const;
  bool is_weight_homogeneous() const;

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------

template <class C>
void Polynomial<C>::check_ring(const Polynomial& o) const {
  if (ring_ == o.ring_) return;
  if (!ring_ || !o.ring_ || ring_->vars != o.ring_->vars || !(ring_->order == o.ring_->order) ||
      ring_->characteristic != o.ring_->characteristic) {
    throw InputError("polynomials from different rings");
  }
}

template <class C>
Polynomial<C> Polynomial<C>::constant(RingPtr ring, const C& c) {
  Polynomial p(ring);
  if (!coeff_is_zero(c)) p.terms_.emplace_back(Monomial(ring->size()), c);
  return p;
}

template <class C>
Polynomial<C> Polynomial<C>::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw InputError("variable index out of range");
  Monomial m(ring->size());
  m.e[index] = 1;
  return monomial(ring, std::move(m), make_coeff<C>(1, *ring));
}

template <class C>
Polynomial<C> Polynomial<C>::monomial(RingPtr ring, Monomial m, const C& c) {
  if (m.size() != ring->size()) throw InputError("monomial has the wrong number of variables");
  Polynomial p(ring);
  if (!coeff_is_zero(c)) p.terms_.emplace_back(std::move(m), c);
  return p;
}

template <class C>
Polynomial<C> Polynomial<C>::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& ord = ring->order;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.first, b.first) > 0; });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (t.first.size() != ring->size()) throw InputError("monomial has the wrong number of variables");
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (coeff_is_zero(p.terms_.back().second)) p.terms_.pop_back();
    } else if (!coeff_is_zero(t.second)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

template <class C>
std::uint64_t Polynomial<C>::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

template <class C>
Polynomial<C> Polynomial<C>::operator+(const Polynomial& o) const {
  if (!ring_) return o;
  if (!o.ring_) return *this;
  check_ring(o);
  const auto& ord = ring_->order;
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size()) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      int cmp = ord.compare(terms_[i].first, o.terms_[j].first);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        C s = terms_[i].second + o.terms_[j].second;
        if (!coeff_is_zero(s)) r.terms_.emplace_back(terms_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
  }
  return r;
}

template <class C>
Polynomial<C> Polynomial<C>::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

template <class C>
Polynomial<C> Polynomial<C>::operator-(const Polynomial& o) const {
  return *this + (-o);
}

template <class C>
Polynomial<C> Polynomial<C>::times_term(const Monomial& m, const C& c) const {
  Polynomial r(ring_);
  if (coeff_is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  // multiplying by a monomial preserves the order
  for (const auto& t : terms_) {
    C prod = t.second * c;
    if (!coeff_is_zero(prod)) r.terms_.emplace_back(t.first * m, std::move(prod));
  }
  return r;
}

template <class C>
Polynomial<C> Polynomial<C>::scaled(const C& c) const {
  if (!ring_) return *this;
  return times_term(Monomial(ring_->size()), c);
}

template <class C>
Polynomial<C> Polynomial<C>::operator*(const Polynomial& o) const {
  if (!ring_ || !o.ring_) return Polynomial(ring_ ? ring_ : o.ring_);
  check_ring(o);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) acc.emplace_back(a.first * b.first, a.second * b.second);
  }
  return from_terms(ring_, std::move(acc));
}

template <class C>
Polynomial<C> Polynomial<C>::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

template <class C>
bool Polynomial<C>::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].first == o.terms_[i].first) || !(terms_[i].second == o.terms_[i].second)) {
      return false;
    }
  }
  return true;
}

template <class C>
Polynomial<C> Polynomial<C>::monic() const {
  if (terms_.empty()) return *this;
  C inv = make_coeff<C>(1, *ring_) / leading_coefficient();
  return scaled(inv);
}

template <class C>
Polynomial<C> Polynomial<C>::in_ring(RingPtr other) const {
  if (other->vars.size() != (ring_ ? ring_->size() : other->size())) {
    throw InputError("cannot move a polynomial between rings of different size");
  }
  return from_terms(std::move(other), terms_);
}

template <class C>
Polynomial<C> Polynomial<C>::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Monomial d = m;
    long mult = d.e[var];
    d.e[var] -= 1;
    out.emplace_back(std::move(d), c * make_coeff<C>(mult, *ring_));
  }
  return from_terms(ring_, std::move(out));
}

template <class C>
std::int64_t Polynomial<C>::top_scaled_weight() const {
  if (terms_.empty()) throw InputError("the zero polynomial has no top weight");
  // terms_ are sorted by weight first, so the leading term is heaviest
  return ring_->order.scaled_weight(terms_.front().first);
}

template <class C>
Polynomial<C> Polynomial<C>::top_form() const {
  Polynomial r(ring_);
  if (terms_.empty()) return r;
  const std::int64_t top = top_scaled_weight();
  for (const auto& t : terms_) {
    if (ring_->order.scaled_weight(t.first) == top) r.terms_.push_back(t);
  }
  return r;
}

template <class C>
bool Polynomial<C>::is_weight_homogeneous() const {
  return top_form().term_count() == term_count();
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

namespace detail {
inline bool coeff_negative(const Rational& q) { return sgn(q) < 0; }
inline bool coeff_negative(const ModP&) { return false; }
inline bool coeff_negative(const LaurentCoeff&) { return false; }
inline std::string coeff_text(const Rational& q) { return logcy::to_string(Rational(abs(q))); }
inline std::string coeff_text(const ModP& a) { return logcy::to_string(a); }
inline std::string coeff_text(const LaurentCoeff& c) {
  return c.terms().size() == 1 ? c.to_string() : "(" + c.to_string() + ")";
}
inline bool coeff_is_one(const Rational& q) { return abs(q) == 1; }
inline bool coeff_is_one(const ModP& a) { return a.value() == 1; }
inline bool coeff_is_one(const LaurentCoeff& c) {
  return c.terms().size() == 1 && c.terms().begin()->second == 1 &&
         std::all_of(c.terms().begin()->first.begin(), c.terms().begin()->first.end(),
                     [](int e) { return e == 0; });
}
}  // namespace detail

template <class C>
std::string Polynomial<C>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool neg = detail::coeff_negative(c);
    std::string mono = monomial_to_string(m, ring_->vars);
    std::string piece;
    if (mono.empty()) {
      piece = detail::coeff_text(c);
    } else if (detail::coeff_is_one(c)) {
      piece = mono;
    } else {
      piece = detail::coeff_text(c) + "*" + mono;
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + piece;
    } else {
      out += (neg ? " - " : " + ") + piece;
    }
  }
  return out;
}

using QPolynomial = Polynomial<Rational>;

/// Substitutes a polynomial of the target ring for each variable.
template <class C>
Polynomial<C> evaluate_on_locus(const Polynomial<C>& f, const std::vector<Polynomial<C>>& images,
                                const RingPtr& target) {
  if (images.size() != f.ring()->size()) {
    throw InputError("substitution must assign every variable");
  }
  for (const auto& img : images) {
    if (img.ring() && img.ring()->vars != target->vars) {
      throw InputError("substitution images must live in the target ring");
    }
  }
  std::vector<Polynomial<C>> inputs;
  for (const auto& img : images) inputs.push_back(img.ring() ? img.in_ring(target) : Polynomial<C>(target));
  std::map<std::pair<std::size_t, unsigned>, Polynomial<C>> powers;
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial<C>& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, inputs[var].pow(e)).first;
    return it->second;
  };
  Polynomial<C> result(target);
  for (const auto& [m, c] : f.terms()) {
    Polynomial<C> term = Polynomial<C>::constant(target, c);
    for (std::size_t v = 0; v < m.size() && !term.is_zero(); ++v) {
      if (m.e[v]) term = term * power(v, m.e[v]);
    }
    result += term;
  }
  return result;
}

/// Parses the polynomial text grammar (integers, rationals p/q, variables,
/// + - * ^, parentheses) over the given ring. Throws InputError with the
/// offending position.
QPolynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace logcy::poly
