#include "logcy/laurent.hpp"

#include "logcy/errors.hpp"

namespace logcy::poly {

LaurentCoeff::LaurentCoeff(Names names, const Rational& constant) : names_(std::move(names)) {
  if (sgn(constant) != 0) terms_[Exponent(parameter_count(), 0)] = constant;
}

LaurentCoeff LaurentCoeff::parameter(Names names, std::size_t index, int power) {
  LaurentCoeff c(names, 0);
  if (index >= c.parameter_count()) throw InputError("parameter index out of range");
  Exponent e(c.parameter_count(), 0);
  e[index] = power;
  c.terms_[e] = 1;
  return c;
}

LaurentCoeff LaurentCoeff::operator+(const LaurentCoeff& o) const {
  LaurentCoeff r = *this;
  r.names_ = pick_names(o);
  for (const auto& [e, q] : o.terms_) {
    Rational& slot = r.terms_[e];
    slot += q;
    if (sgn(slot) == 0) r.terms_.erase(e);
  }
  return r;
}

LaurentCoeff LaurentCoeff::operator-() const {
  LaurentCoeff r = *this;
  for (auto& [e, q] : r.terms_) q = -q;
  return r;
}

LaurentCoeff LaurentCoeff::operator-(const LaurentCoeff& o) const { return *this + (-o); }

LaurentCoeff LaurentCoeff::operator*(const LaurentCoeff& o) const {
  LaurentCoeff r;
  r.names_ = pick_names(o);
  for (const auto& [e1, q1] : terms_) {
    for (const auto& [e2, q2] : o.terms_) {
      if (e1.size() != e2.size()) throw InputError("Laurent coefficients over different parameters");
      Exponent e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      Rational& slot = r.terms_[e];
      slot += q1 * q2;
      if (sgn(slot) == 0) r.terms_.erase(e);
    }
  }
  return r;
}

Rational LaurentCoeff::evaluate(const std::vector<Rational>& values) const {
  if (values.size() != parameter_count()) throw InputError("wrong number of parameter values");
  Rational total = 0;
  for (const auto& [e, q] : terms_) {
    Rational term = q;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 && sgn(values[i]) == 0) throw InputError("negative power of a zero parameter");
      Rational base = e[i] < 0 ? Rational(1 / values[i]) : values[i];
      for (int p = 0; p < std::abs(e[i]); ++p) term *= base;
    }
    total += term;
  }
  return total;
}

std::string LaurentCoeff::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest exponent first, matching the descending term order of polynomials
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, q] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names_ ? (*names_)[i] : "p" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    Rational mag = abs(q);
    std::string piece;
    if (mono.empty()) {
      piece = logcy::to_string(mag);
    } else if (mag == 1) {
      piece = mono;
    } else {
      piece = logcy::to_string(mag) + "*" + mono;
    }
    if (out.empty()) {
      out = (sgn(q) < 0 ? "-" : "") + piece;
    } else {
      out += (sgn(q) < 0 ? " - " : " + ") + piece;
    }
  }
  return out;
}

}  // namespace logcy::poly
