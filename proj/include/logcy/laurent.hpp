#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "logcy/rational.hpp"

namespace logcy::poly {

/// Element of Q[p_1^±1, …, p_m^±1]: exact rationals with formal Laurent
/// parameters. Models coefficients in the group ring Λ and the symbolic
/// coefficient vectors of example families. Ring operations only; there is no
/// division, so Gröbner computations are not available over this ring.
class LaurentCoeff {
 public:
  using Names = std::shared_ptr<const std::vector<std::string>>;
  using Exponent = std::vector<int>;

  LaurentCoeff() = default;
  LaurentCoeff(Names names, const Rational& constant);
  static LaurentCoeff parameter(Names names, std::size_t index, int power = 1);

  const Names& names() const { return names_; }
  std::size_t parameter_count() const { return names_ ? names_->size() : 0; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentCoeff operator+(const LaurentCoeff& o) const;
  LaurentCoeff operator-(const LaurentCoeff& o) const;
  LaurentCoeff operator*(const LaurentCoeff& o) const;
  LaurentCoeff operator-() const;
  LaurentCoeff& operator+=(const LaurentCoeff& o) { return *this = *this + o; }
  LaurentCoeff& operator-=(const LaurentCoeff& o) { return *this = *this - o; }
  LaurentCoeff& operator*=(const LaurentCoeff& o) { return *this = *this * o; }
  bool operator==(const LaurentCoeff& o) const { return terms_ == o.terms_; }

  /// Substitutes rational values for every parameter (all nonzero when a
  /// negative power occurs).
  Rational evaluate(const std::vector<Rational>& values) const;
  std::string to_string() const;

 private:
  Names pick_names(const LaurentCoeff& o) const { return names_ ? names_ : o.names_; }
  Names names_;
  std::map<Exponent, Rational> terms_;
};

inline bool is_zero(const LaurentCoeff& c) { return c.is_zero(); }
inline std::string to_string(const LaurentCoeff& c) { return c.to_string(); }

}  // namespace logcy::poly
