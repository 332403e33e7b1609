#include "logcy/sr_algebra.hpp"

#include <algorithm>
#include <cctype>

#include "logcy/errors.hpp"

namespace logcy {

Rational weight_of(const DivisorConfiguration& config, const MultiIndex& v) {
  Rational w = 0;
  for (std::size_t i = 0; i < v.size(); ++i) w += config.kappa()[i] * static_cast<long>(v.v[i]);
  return w;
}

void validate_basis_element(const DivisorConfiguration& config, const ThetaBasisElement& x) {
  if (!in_bmd(config, x.v)) throw InputError("multiplicity vector is not in B(M,D)");
  DivisorSet s = x.v.support();
  if (x.c < 0 || x.c >= config.component_count(s)) {
    throw InputError("component index " + std::to_string(x.c) + " is not a component of the stratum");
  }
}

ThetaBasisElement theta_unit(const DivisorConfiguration& config) {
  return {MultiIndex{std::vector<std::int64_t>(static_cast<std::size_t>(config.k()), 0)}, 0};
}

Rational ThetaElement::normalize(const Rational& c) const {
  if (prime_ == 0) return c;
  Integer n = c.get_num() % prime_;
  Integer d = c.get_den() % prime_;
  if (d == 0) throw InputError("coefficient denominator vanishes mod " + std::to_string(prime_));
  ModP q = ModP(n.get_si(), prime_) / ModP(d.get_si(), prime_);
  return Rational(static_cast<unsigned long>(q.value()));
}

ThetaElement ThetaElement::basis(const ThetaBasisElement& x, std::uint32_t prime) {
  ThetaElement e(prime);
  e.add(x, 1);
  return e;
}

void ThetaElement::add(const ThetaBasisElement& x, const Rational& c) {
  Rational sum = normalize(terms_.count(x) ? terms_[x] + c : c);
  if (sgn(sum) == 0) {
    terms_.erase(x);
  } else {
    terms_[x] = sum;
  }
}

ThetaElement ThetaElement::operator+(const ThetaElement& o) const {
  if (prime_ != o.prime_) throw InputError("theta elements over different fields");
  ThetaElement r = *this;
  for (const auto& [x, c] : o.terms_) r.add(x, c);
  return r;
}

ThetaElement ThetaElement::scaled(const Rational& c) const {
  ThetaElement r(prime_);
  for (const auto& [x, a] : terms_) r.add(x, a * c);
  return r;
}

std::vector<std::pair<ThetaBasisElement, Rational>> ThetaElement::ordered_terms(
    const DivisorConfiguration& config) const {
  std::vector<std::pair<ThetaBasisElement, Rational>> out(terms_.begin(), terms_.end());
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    Rational wa = weight_of(config, a.first.v), wb = weight_of(config, b.first.v);
    if (wa != wb) return wa < wb;
    return a.first < b.first;
  });
  return out;
}

std::string ThetaElement::to_string(const DivisorConfiguration& config) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [x, c] : ordered_terms(config)) {
    Rational a = c;
    if (s.empty()) {
      if (sgn(a) < 0) s += "-";
    } else {
      s += sgn(a) < 0 ? " - " : " + ";
    }
    a = abs(a);
    if (a != 1) s += logcy::to_string(a) + "*";
    s += "theta[";
    for (std::size_t i = 0; i < x.v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(x.v.v[i]);
    }
    s += ";" + std::to_string(config.component_ids(x.v.support())[static_cast<std::size_t>(x.c)]) + "]";
  }
  return s;
}

ThetaElement multiply_basis(const DivisorConfiguration& config, const ThetaBasisElement& x,
                            const ThetaBasisElement& y) {
  validate_basis_element(config, x);
  validate_basis_element(config, y);
  ThetaElement out;
  MultiIndex s = x.v + y.v;
  DivisorSet S = s.support();
  if (!config.nonempty(S) || !in_bmd(config, s)) return out;
  DivisorSet sx = x.v.support(), sy = y.v.support();
  for (int c = 0; c < config.component_count(S); ++c) {
    if (config.map_component(S, sx, c) == x.c && config.map_component(S, sy, c) == y.c) {
      out.add({s, c}, 1);
    }
  }
  return out;
}

ThetaElement multiply(const DivisorConfiguration& config, const ThetaElement& f, const ThetaElement& g) {
  if (f.prime() != g.prime()) throw InputError("theta elements over different fields");
  ThetaElement out(f.prime());
  for (const auto& [x, a] : f.terms()) {
    for (const auto& [y, b] : g.terms()) {
      ThetaElement p = multiply_basis(config, x, y);
      for (const auto& [z, c] : p.terms()) out.add(z, a * b * c);
    }
  }
  return out;
}

namespace {

class ThetaParser {
 public:
  ThetaParser(const DivisorConfiguration& config, const std::string& text, std::uint32_t prime)
      : config_(config), s_(text), out_(prime) {}

  ThetaElement parse() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek('+')) {
        ++pos_;
      } else if (peek('-')) {
        ++pos_;
        sign = -1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      term(sign);
      first = false;
    }
    return out_;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("theta expression error at position " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string number() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    if (start == pos_) fail("expected a number");
    return s_.substr(start, pos_ - start);
  }

  void term(int sign) {
    skip();
    Rational coeff = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff = parse_rational(number());
      if (!peek('*')) {
        if (sgn(coeff) != 0) fail("a bare number is only allowed as 0");
        return;
      }
      ++pos_;
    }
    skip();
    if (s_.compare(pos_, 5, "theta") != 0) fail("expected 'theta['");
    pos_ += 5;
    expect('[');
    std::vector<std::int64_t> v;
    while (true) {
      v.push_back(std::stoll(number()));
      if (peek(',')) {
        ++pos_;
        continue;
      }
      break;
    }
    expect(';');
    long id = std::stol(number());
    expect(']');
    if (v.size() != static_cast<std::size_t>(config_.k())) fail("multiplicity vector has the wrong length");
    MultiIndex mi{v};
    for (auto e : v) {
      if (e < 0) fail("negative multiplicity");
    }
    int c = config_.component_index(mi.support(), id);
    if (c < 0) fail("component id " + std::to_string(id) + " does not occur in the stratum");
    ThetaBasisElement x{mi, c};
    validate_basis_element(config_, x);
    out_.add(x, coeff * sign);
  }

  const DivisorConfiguration& config_;
  std::string s_;
  std::size_t pos_ = 0;
  ThetaElement out_;
};

}  // namespace

ThetaElement parse_theta(const DivisorConfiguration& config, const std::string& text, std::uint32_t prime) {
  if (prime != 0 && !is_prime(prime)) throw InputError("field characteristic must be prime");
  return ThetaParser(config, text, prime).parse();
}

WeightedPresentation sr_presentation(const SimplicialComplex& cx, std::optional<std::vector<Rational>> weights) {
  const int n = cx.vertex_count();
  if (n == 0) throw InputError("Stanley-Reisner presentation needs at least one vertex");
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  std::vector<Rational> w = weights ? *weights : std::vector<Rational>(static_cast<std::size_t>(n), Rational(1));
  if (w.size() != vars.size()) throw InputError("one weight per vertex is required");
  poly::RingPtr ring = poly::make_ring(vars, w);
  std::vector<poly::QPolynomial> rel;
  for (VertexSet f : cx.minimal_non_faces()) {
    poly::Monomial m(ring->size());
    for (int i = 0; i < n; ++i) {
      if (f >> i & 1) m.e[static_cast<std::size_t>(i)] = 1;
    }
    rel.push_back(poly::QPolynomial::monomial(ring, m, Rational(1)));
  }
  return WeightedPresentation::make(ring, std::move(rel));
}

namespace {

template <class F>
void for_each_vector(const std::vector<std::int64_t>& w, std::int64_t budget, F&& visit) {
  std::vector<std::int64_t> v(w.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t used) -> void {
    if (i == w.size()) {
      visit(v, used);
      return;
    }
    for (std::int64_t e = 0; used + e * w[i] <= budget; ++e) {
      v[i] = e;
      self(self, i + 1, used + e * w[i]);
    }
    v[i] = 0;
  };
  rec(rec, 0, 0);
}

std::pair<std::vector<std::int64_t>, std::int64_t> scaled_kappa(const DivisorConfiguration& config,
                                                                const Rational& bound, Integer& scale) {
  for (const auto& k : config.kappa()) {
    if (sgn(k) <= 0) throw InputError("kappa must be positive");
  }
  scale = common_denominator(config.kappa());
  std::vector<std::int64_t> w;
  for (const auto& k : config.kappa()) w.push_back(Rational(k * scale).get_num().get_si());
  std::int64_t budget = -1;
  if (sgn(bound) >= 0) {
    Rational s = bound * scale;
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    if (f > 100000) throw InputError("weight bound too large");
    budget = f.get_si();
  }
  return {w, budget};
}

}  // namespace

std::map<Rational, std::size_t> graded_dimension(const DivisorConfiguration& config, const Rational& bound) {
  Integer scale;
  auto [w, budget] = scaled_kappa(config, bound, scale);
  std::map<Rational, std::size_t> out;
  if (budget < 0) return out;
  std::vector<std::size_t> counts(static_cast<std::size_t>(budget) + 1, 0);
  for_each_vector(w, budget, [&](const std::vector<std::int64_t>& v, std::int64_t used) {
    MultiIndex mi{v};
    if (in_bmd(config, mi)) counts[static_cast<std::size_t>(used)] += static_cast<std::size_t>(config.component_count(mi.support()));
  });
  for (std::int64_t i = 0; i <= budget; ++i) {
    out[make_rational(Integer(static_cast<long>(i)), scale)] = counts[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<ThetaBasisElement> basis_up_to(const DivisorConfiguration& config, const Rational& bound) {
  Integer scale;
  auto [w, budget] = scaled_kappa(config, bound, scale);
  std::vector<std::pair<std::int64_t, ThetaBasisElement>> all;
  if (budget < 0) return {};
  for_each_vector(w, budget, [&](const std::vector<std::int64_t>& v, std::int64_t used) {
    MultiIndex mi{v};
    if (!in_bmd(config, mi)) return;
    for (int c = 0; c < config.component_count(mi.support()); ++c) all.push_back({used, {mi, c}});
  });
  std::sort(all.begin(), all.end());
  std::vector<ThetaBasisElement> out;
  for (auto& e : all) out.push_back(std::move(e.second));
  return out;
}

}  // namespace logcy
