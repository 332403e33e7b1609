#include "logcy/rational.hpp"

#include <cctype>

#include "logcy/errors.hpp"

namespace logcy {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);

  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer common_denominator(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ModP::ModP(std::int64_t value, std::uint32_t prime) : prime_(prime) {
  if (prime < 2) throw InputError("F_p requires a prime modulus");
  std::int64_t r = value % static_cast<std::int64_t>(prime);
  if (r < 0) r += prime;
  value_ = static_cast<std::uint32_t>(r);
}

ModP ModP::operator+(const ModP& o) const {
  std::uint32_t p = prime_ ? prime_ : o.prime_;
  std::uint64_t s = static_cast<std::uint64_t>(value_) + o.value_;
  return ModP(static_cast<std::int64_t>(s % p), p);
}

ModP ModP::operator-(const ModP& o) const {
  std::uint32_t p = prime_ ? prime_ : o.prime_;
  std::int64_t s = static_cast<std::int64_t>(value_) - o.value_;
  return ModP(s, p);
}

ModP ModP::operator*(const ModP& o) const {
  std::uint32_t p = prime_ ? prime_ : o.prime_;
  std::uint64_t s = static_cast<std::uint64_t>(value_) * o.value_;
  return ModP(static_cast<std::int64_t>(s % p), p);
}

ModP ModP::operator-() const { return ModP(-static_cast<std::int64_t>(value_), prime_); }

ModP ModP::inverse() const {
  if (value_ == 0) throw std::domain_error("inverse of zero in F_p");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = value_, e = prime_ - 2;
  while (e) {
    if (e & 1) result = result * base % prime_;
    base = base * base % prime_;
    e >>= 1;
  }
  return ModP(static_cast<std::int64_t>(result), prime_);
}

ModP ModP::operator/(const ModP& o) const { return *this * o.inverse(); }

std::string to_string(const ModP& a) { return std::to_string(a.value()); }

}  // namespace logcy
