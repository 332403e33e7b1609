#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace logcy {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// num/den in canonical form.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Least common multiple of the denominators.
Integer common_denominator(const std::vector<Rational>& values);

/// Element of the prime field F_p. The modulus travels with the value so that
/// polynomials over different primes cannot be mixed silently.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t value, std::uint32_t prime);

  std::uint32_t prime() const { return prime_; }
  std::uint32_t value() const { return value_; }

  ModP operator+(const ModP& o) const;
  ModP operator-(const ModP& o) const;
  ModP operator*(const ModP& o) const;
  ModP operator/(const ModP& o) const;
  ModP operator-() const;
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  ModP inverse() const;

  bool operator==(const ModP& o) const { return value_ == o.value_ && prime_ == o.prime_; }

 private:
  std::uint32_t value_ = 0;
  std::uint32_t prime_ = 0;
};

inline bool is_zero(const ModP& a) { return a.value() == 0; }
std::string to_string(const ModP& a);

bool is_prime(std::uint64_t n);

}  // namespace logcy
