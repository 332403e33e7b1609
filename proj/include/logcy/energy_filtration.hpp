#pragma once

#include <cstdint>
#include <vector>

#include "logcy/rational.hpp"
#include "logcy/stratum_poset.hpp"

namespace logcy {

struct EnergyParameters {
  std::vector<Rational> kappa;
  Rational eps1;
  std::vector<Rational> eps_pert;  // one per divisor; empty means all zero

  /// Throws InputError unless κ > 0, 0 < ε₁ < 1 and the ε^pert have length k.
  void validate() const;
  std::size_t k() const { return kappa.size(); }
  /// 1 − ε₁²/2
  Rational damping() const;
  /// 1 − (ε₁ + ε_i^pert)²/2
  Rational damping(std::size_t i) const;
};

struct OrbitLabel {
  MultiIndex v;
  long component = 0;
};

/// A chord near a corner with angle tuples indexed by I. Angles are turn
/// fractions in [0,1); `alpha0[j]`, `alpha1[j]` belong to divisor `indices[j]`
/// (0-based, ascending).
struct ChordLabel {
  long y = 0;
  std::vector<int> indices;
  std::vector<Rational> alpha0;
  std::vector<Rational> alpha1;
  MultiIndex v;
  Rational f0;
  Rational f1;

  void validate(std::size_t k) const;
};

/// w(v) = Σ κ_i v_i
Rational weighted_winding(const EnergyParameters& p, const MultiIndex& v);
/// −w(v)(1 − ε₁²/2)
Rational orbit_action_approx(const EnergyParameters& p, const MultiIndex& v);
/// w(v) + A(x₀)
Rational pss_energy(const EnergyParameters& p, const MultiIndex& v, const Rational& orbit_action);
/// w(v) − w(x₀)(1 − ε₁²/2)
Rational pss_energy_approx(const EnergyParameters& p, const MultiIndex& v, const OrbitLabel& x0);

/// v_s: per divisor 1 when α₁ > α₀, 0 when α₁ < α₀. Throws InputError when equal.
MultiIndex short_chord_winding(const ChordLabel& c, std::size_t k);
/// (f₀ − f₁)/(1 − ε₁²/2) + Σ_{i∈I} κ_i (α₀,i + v_i + v_s,i − α₁,i)
Rational chord_weight(const EnergyParameters& p, const ChordLabel& c);
/// f₁ − f₀ + Σ_{i∈I} κ_i (1 − (ε₁+ε_i^pert)²/2)(α₁,i − v_i − v_s,i − α₀,i)
Rational chord_action_approx(const EnergyParameters& p, const ChordLabel& c);

/// toWeight ≤ fromWeight
bool filtration_monotone(const Rational& from_weight, const Rational& to_weight);

}  // namespace logcy
