#include "logcy/poly_core.hpp"

#include <cctype>

namespace logcy::poly {

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > m.e[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& m) const {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] && m.e[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& d) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= d.e[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& m) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(e[i], m.e[i]);
  return r;
}

MonomialOrder::MonomialOrder(std::vector<Rational> weights) : weights_(std::move(weights)) {
  for (const auto& w : weights_) {
    if (sgn(w) <= 0) throw InputError("monomial order weights must be positive");
  }
  scale_ = common_denominator(weights_);
  for (const auto& w : weights_) {
    Rational s = w * scale_;
    if (!s.get_num().fits_slong_p()) throw InputError("weight too large");
    scaled_.push_back(s.get_num().get_si());
  }
}

std::int64_t MonomialOrder::scaled_weight(const Monomial& m) const {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < m.e.size(); ++i) w += scaled_[i] * static_cast<std::int64_t>(m.e[i]);
  return w;
}

Rational MonomialOrder::weight(const Monomial& m) const {
  return make_rational(Integer(static_cast<long>(scaled_weight(m))), scale_);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  std::int64_t wa = scaled_weight(a), wb = scaled_weight(b);
  if (wa != wb) return wa > wb ? 1 : -1;
  std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  }
  return 0;
}

int PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == name) return static_cast<int>(i);
  }
  return -1;
}

RingPtr make_ring(std::vector<std::string> vars, std::vector<Rational> weights,
                  std::uint32_t characteristic, std::vector<std::string> parameters) {
  if (weights.empty()) weights.assign(vars.size(), Rational(1));
  if (weights.size() != vars.size()) throw InputError("one weight per variable is required");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[i] == vars[j]) throw InputError("duplicate variable '" + vars[i] + "'");
    }
  }
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw InputError("characteristic must be 0 or a prime");
  }
  auto ring = std::make_shared<PolyRing>();
  ring->vars = std::move(vars);
  ring->order = MonomialOrder(std::move(weights));
  ring->characteristic = characteristic;
  ring->parameters = std::make_shared<const std::vector<std::string>>(std::move(parameters));
  return ring;
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (order.size() != ring->size()) throw InputError("order size does not match the ring");
  auto r = std::make_shared<PolyRing>(*ring);
  r->order = std::move(order);
  return r;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const RingPtr& ring) : s_(text), ring_(ring) {}

  QPolynomial parse() {
    QPolynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at position " + std::to_string(pos_) + ": " + what +
                     " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  QPolynomial expr() {
    QPolynomial acc;
    bool first = true;
    for (;;) {
      skip();
      bool neg = false;
      if (accept('-')) {
        neg = true;
      } else if (!first && !accept('+')) {
        break;
      } else if (first) {
        accept('+');
      }
      QPolynomial t = term();
      if (neg) t = -t;
      acc = first ? t : acc + t;
      first = false;
    }
    return acc;
  }

  QPolynomial term() {
    QPolynomial acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  QPolynomial power() {
    QPolynomial base = primary();
    if (accept('^')) {
      skip();
      std::string d = digits();
      if (d.empty()) fail("expected a nonnegative integer exponent");
      if (d.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(d)));
    }
    return base;
  }

  QPolynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QPolynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      std::size_t save = pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        den = digits();
        if (den.empty()) fail("expected a denominator");
      } else {
        pos_ = save;
      }
      if (Integer(den, 10) == 0) fail("zero denominator");
      Rational q = make_rational(Integer(num, 10), Integer(den, 10));
      return QPolynomial::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string name = s_.substr(start, pos_ - start);
      int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return QPolynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

QPolynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  QPolynomial p = Parser(text, ring).parse();
  if (!p.ring()) return QPolynomial(ring);
  return p;
}

}  // namespace logcy::poly
