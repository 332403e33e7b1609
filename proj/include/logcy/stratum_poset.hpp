#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "logcy/rational.hpp"
#include "logcy/simplicial_complex.hpp"

namespace logcy {

/// Subset I ⊆ {1..k} of divisor indices; bit i-1 stands for D_i.
using DivisorSet = std::uint64_t;

/// Multiplicity vector v = (v_1..v_k).
struct MultiIndex {
  std::vector<std::int64_t> v;

  std::size_t size() const { return v.size(); }
  DivisorSet support() const;
  bool is_zero() const { return support() == 0; }
  MultiIndex operator+(const MultiIndex& o) const;
  auto operator<=>(const MultiIndex&) const = default;
};

/// A normal-crossings divisor D_1 ∪ … ∪ D_k described by the poset of its
/// strata D_I, the connected components of each stratum, and the maps sending
/// a component of D_J to the component of D_I containing it (I ⊆ J).
///
/// Components are numbered 0..n_I-1 inside each stratum; `component_ids`
/// keeps the opaque identifiers used by the input so they can be echoed back.
class DivisorConfiguration {
 public:
  struct MapSpec {
    DivisorSet from;  // J
    DivisorSet to;    // I ⊆ J
    std::map<long, long> assign;  // component id of D_J -> component id of D_I
  };

  /// Validates and completes the data. Maps into single-component strata are
  /// implied; remaining maps are derived by composition. Throws InputError on
  /// any violated invariant.
  static DivisorConfiguration build(int k, std::vector<Rational> kappa,
                                    std::vector<Rational> discrepancy,
                                    std::map<DivisorSet, std::vector<long>> strata,
                                    const std::vector<MapSpec>& maps,
                                    std::optional<bool> log_nef = std::nullopt);

  int k() const { return k_; }
  const std::vector<Rational>& kappa() const { return kappa_; }
  const std::vector<Rational>& discrepancy() const { return discrepancy_; }
  bool log_nef() const { return log_nef_; }

  /// Number of connected components of D_I (0 when empty).
  int component_count(DivisorSet stratum) const;
  bool nonempty(DivisorSet stratum) const { return component_count(stratum) > 0; }
  const std::vector<long>& component_ids(DivisorSet stratum) const;
  /// Local index of the component with the given id; -1 when absent.
  int component_index(DivisorSet stratum, long id) const;
  /// map_{J→I} applied to the component with local index c of D_J.
  int map_component(DivisorSet from, DivisorSet to, int c) const;
  /// All nonempty strata, ascending.
  std::vector<DivisorSet> nonempty_strata() const;
  bool all_strata_connected() const;

 private:
  int k_ = 0;
  std::vector<Rational> kappa_;
  std::vector<Rational> discrepancy_;
  bool log_nef_ = false;
  std::vector<std::vector<long>> ids_;  // indexed by DivisorSet
  std::map<std::pair<DivisorSet, DivisorSet>, std::vector<int>> maps_;
};

/// v ∈ B(M,D): D_|v| nonempty and Σ (1 − a_i) v_i = 0.
bool in_bmd(const DivisorConfiguration& config, const MultiIndex& v);

/// Dual intersection complex Δ(D); vertex i-1 is D_i. Throws UnsupportedError
/// naming the first disconnected stratum.
SimplicialComplex dual_complex(const DivisorConfiguration& config);

/// Subcomplex of Δ(D) induced on the divisors along which the volume form has
/// a simple pole (a_i = 1).
SimplicialComplex delta_zero_subcomplex(const DivisorConfiguration& config);

}  // namespace logcy
