#include "logcy/energy_filtration.hpp"

#include "logcy/errors.hpp"

namespace logcy {

void EnergyParameters::validate() const {
  for (const auto& k : kappa) {
    if (sgn(k) <= 0) throw InputError("kappa entries must be positive");
  }
  if (sgn(eps1) <= 0 || eps1 >= 1) throw InputError("eps1 must lie in (0,1)");
  if (!eps_pert.empty() && eps_pert.size() != kappa.size()) throw InputError("epsPert needs one entry per divisor");
}

Rational EnergyParameters::damping() const { return 1 - eps1 * eps1 / 2; }

Rational EnergyParameters::damping(std::size_t i) const {
  Rational e = eps1 + (eps_pert.empty() ? Rational(0) : eps_pert[i]);
  return 1 - e * e / 2;
}

namespace {

void check_length(const EnergyParameters& p, const MultiIndex& v) {
  if (v.size() != p.k()) {
    throw InputError("winding vector has length " + std::to_string(v.size()) + ", expected " + std::to_string(p.k()));
  }
}

}  // namespace

void ChordLabel::validate(std::size_t k) const {
  if (alpha0.size() != indices.size() || alpha1.size() != indices.size()) {
    throw InputError("chord needs one angle pair per index in I");
  }
  if (v.size() != k) throw InputError("chord winding vector has the wrong length");
  DivisorSet in = 0;
  for (std::size_t j = 0; j < indices.size(); ++j) {
    int i = indices[j];
    if (i < 0 || static_cast<std::size_t>(i) >= k) throw InputError("chord index outside 1..k");
    if (j && indices[j - 1] >= i) throw InputError("chord indices must be strictly increasing");
    in |= DivisorSet(1) << i;
    for (const Rational* a : {&alpha0[j], &alpha1[j]}) {
      if (sgn(*a) < 0 || *a >= 1) throw InputError("angles are turn fractions in [0,1)");
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (v.v[i] < 0) throw InputError("winding entries must be nonnegative");
    if (v.v[i] != 0 && !(in >> i & 1)) throw InputError("winding support must lie in I");
  }
}

Rational weighted_winding(const EnergyParameters& p, const MultiIndex& v) {
  check_length(p, v);
  Rational w = 0;
  for (std::size_t i = 0; i < v.size(); ++i) w += p.kappa[i] * static_cast<long>(v.v[i]);
  return w;
}

Rational orbit_action_approx(const EnergyParameters& p, const MultiIndex& v) {
  return -weighted_winding(p, v) * p.damping();
}

Rational pss_energy(const EnergyParameters& p, const MultiIndex& v, const Rational& orbit_action) {
  return weighted_winding(p, v) + orbit_action;
}

Rational pss_energy_approx(const EnergyParameters& p, const MultiIndex& v, const OrbitLabel& x0) {
  return weighted_winding(p, v) - weighted_winding(p, x0.v) * p.damping();
}

MultiIndex short_chord_winding(const ChordLabel& c, std::size_t k) {
  c.validate(k);
  MultiIndex vs{std::vector<std::int64_t>(k, 0)};
  for (std::size_t j = 0; j < c.indices.size(); ++j) {
    if (c.alpha0[j] == c.alpha1[j]) {
      throw InputError("degenerate chord: equal angles at index " + std::to_string(c.indices[j] + 1));
    }
    vs.v[static_cast<std::size_t>(c.indices[j])] = c.alpha1[j] > c.alpha0[j] ? 1 : 0;
  }
  return vs;
}

Rational chord_weight(const EnergyParameters& p, const ChordLabel& c) {
  MultiIndex vs = short_chord_winding(c, p.k());
  Rational w = (c.f0 - c.f1) / p.damping();
  for (std::size_t j = 0; j < c.indices.size(); ++j) {
    auto i = static_cast<std::size_t>(c.indices[j]);
    w += p.kappa[i] * (c.alpha0[j] + static_cast<long>(c.v.v[i] + vs.v[i]) - c.alpha1[j]);
  }
  return w;
}

Rational chord_action_approx(const EnergyParameters& p, const ChordLabel& c) {
  MultiIndex vs = short_chord_winding(c, p.k());
  Rational a = c.f1 - c.f0;
  for (std::size_t j = 0; j < c.indices.size(); ++j) {
    auto i = static_cast<std::size_t>(c.indices[j]);
    a += p.kappa[i] * p.damping(i) * (c.alpha1[j] - static_cast<long>(c.v.v[i] + vs.v[i]) - c.alpha0[j]);
  }
  return a;
}

bool filtration_monotone(const Rational& from_weight, const Rational& to_weight) { return to_weight <= from_weight; }

}  // namespace logcy
