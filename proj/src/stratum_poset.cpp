#include "logcy/stratum_poset.hpp"

#include <algorithm>

#include "logcy/errors.hpp"

namespace logcy {

namespace {

constexpr int kMaxDivisors = 12;

std::string set_to_string(DivisorSet s) { return face_to_string(s); }

}  // namespace

DivisorSet MultiIndex::support() const {
  DivisorSet s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) s |= DivisorSet{1} << i;
  }
  return s;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (o.v.size() != v.size()) throw InputError("multi-index length mismatch");
  MultiIndex r = *this;
  for (std::size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
  return r;
}

DivisorConfiguration DivisorConfiguration::build(int k, std::vector<Rational> kappa,
                                                 std::vector<Rational> discrepancy,
                                                 std::map<DivisorSet, std::vector<long>> strata,
                                                 const std::vector<MapSpec>& maps,
                                                 std::optional<bool> log_nef) {
  if (k < 1 || k > kMaxDivisors) {
    throw InputError("k must lie in 1.." + std::to_string(kMaxDivisors));
  }
  if (static_cast<int>(kappa.size()) != k) throw InputError("kappa must have k entries");
  if (static_cast<int>(discrepancy.size()) != k) throw InputError("a must have k entries");
  for (const auto& q : kappa) {
    if (sgn(q) <= 0) throw InputError("kappa entries must be positive");
  }
  const bool all_at_most_one =
      std::all_of(discrepancy.begin(), discrepancy.end(), [](const Rational& a) { return a <= 1; });
  if (log_nef.value_or(all_at_most_one) && !all_at_most_one) {
    throw InputError("a log nef configuration needs every a_i <= 1");
  }

  DivisorConfiguration c;
  c.k_ = k;
  c.kappa_ = std::move(kappa);
  c.discrepancy_ = std::move(discrepancy);
  c.log_nef_ = log_nef.value_or(all_at_most_one);
  const DivisorSet full = (DivisorSet{1} << k) - 1;
  c.ids_.assign(full + 1, {});
  if (!strata.count(0)) strata[0] = {0};
  for (auto& [stratum, ids] : strata) {
    if (!is_subset(stratum, full)) throw InputError("stratum index outside 1..k");
    std::vector<long> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("duplicate component id in stratum " + set_to_string(stratum));
    }
    c.ids_[stratum] = ids;
  }
  if (c.ids_[0].size() != 1) throw InputError("D_∅ = M must have exactly one component");

  for (DivisorSet j = 0; j <= full; ++j) {
    if (c.ids_[j].empty()) continue;
    for (int i = 0; i < k; ++i) {
      DivisorSet sub = j & ~(DivisorSet{1} << i);
      if (sub != j && c.ids_[sub].empty()) {
        throw InputError("stratum " + set_to_string(j) + " is nonempty but " +
                         set_to_string(sub) + " is empty");
      }
    }
  }

  for (const auto& m : maps) {
    if (!is_subset(m.to, m.from)) throw InputError("component map target must be a subset");
    if (c.ids_[m.from].empty()) throw InputError("component map from an empty stratum");
    std::vector<int> table(c.ids_[m.from].size(), -1);
    for (const auto& [src, dst] : m.assign) {
      int s = c.component_index(m.from, src);
      int d = c.component_index(m.to, dst);
      if (s < 0 || d < 0) {
        throw InputError("component map " + set_to_string(m.from) + "->" + set_to_string(m.to) +
                         " names an unknown component");
      }
      table[s] = d;
    }
    if (std::find(table.begin(), table.end(), -1) != table.end()) {
      throw InputError("component map " + set_to_string(m.from) + "->" + set_to_string(m.to) +
                       " is not total");
    }
    c.maps_[{m.from, m.to}] = std::move(table);
  }

  // Identity, forced constant maps, then closure under composition.
  for (DivisorSet j = 0; j <= full; ++j) {
    if (c.ids_[j].empty()) continue;
    for (DivisorSet i = j;; i = (i - 1) & j) {
      auto key = std::make_pair(j, i);
      std::vector<int> forced;
      if (i == j) {
        forced.resize(c.ids_[j].size());
        for (std::size_t x = 0; x < forced.size(); ++x) forced[x] = static_cast<int>(x);
      } else if (c.ids_[i].size() == 1) {
        forced.assign(c.ids_[j].size(), 0);
      }
      if (!forced.empty()) {
        auto it = c.maps_.find(key);
        if (it != c.maps_.end() && it->second != forced) {
          throw InputError("component map " + set_to_string(j) + "->" + set_to_string(i) +
                           " contradicts the forced map");
        }
        c.maps_[key] = forced;
      }
      if (i == 0) break;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (DivisorSet j = 0; j <= full; ++j) {
      if (c.ids_[j].empty()) continue;
      for (DivisorSet i = j;; i = (i - 1) & j) {
        if (!c.maps_.count({j, i})) {
          // try J → K → I for an intermediate K with both maps known
          for (DivisorSet kk = j; kk != i; kk = (kk - 1) & j) {
            if (!is_subset(i, kk)) continue;
            auto a = c.maps_.find({j, kk});
            auto b = c.maps_.find({kk, i});
            if (a == c.maps_.end() || b == c.maps_.end()) continue;
            std::vector<int> composed(a->second.size());
            for (std::size_t x = 0; x < composed.size(); ++x) composed[x] = b->second[a->second[x]];
            c.maps_[{j, i}] = std::move(composed);
            changed = true;
            break;
          }
        }
        if (i == 0) break;
      }
    }
  }

  for (DivisorSet j = 0; j <= full; ++j) {
    if (c.ids_[j].empty()) continue;
    for (DivisorSet i = j;; i = (i - 1) & j) {
      if (!c.maps_.count({j, i})) {
        throw InputError("no component map " + set_to_string(j) + "->" + set_to_string(i) +
                         " given or derivable");
      }
      if (i == 0) break;
    }
  }
  // composition invariant map_{J→I} = map_{K→I} ∘ map_{J→K}
  for (DivisorSet j = 0; j <= full; ++j) {
    if (c.ids_[j].empty()) continue;
    for (DivisorSet kk = j;; kk = (kk - 1) & j) {
      for (DivisorSet i = kk;; i = (i - 1) & kk) {
        const auto& jk = c.maps_.at({j, kk});
        const auto& ki = c.maps_.at({kk, i});
        const auto& ji = c.maps_.at({j, i});
        for (std::size_t x = 0; x < jk.size(); ++x) {
          if (ki[jk[x]] != ji[x]) {
            throw InputError("component maps do not compose: " + set_to_string(j) + "->" +
                             set_to_string(kk) + "->" + set_to_string(i));
          }
        }
        if (i == 0) break;
      }
      if (kk == 0) break;
    }
  }
  return c;
}

int DivisorConfiguration::component_count(DivisorSet stratum) const {
  if (stratum >= ids_.size()) return 0;
  return static_cast<int>(ids_[stratum].size());
}

const std::vector<long>& DivisorConfiguration::component_ids(DivisorSet stratum) const {
  static const std::vector<long> none;
  return stratum < ids_.size() ? ids_[stratum] : none;
}

int DivisorConfiguration::component_index(DivisorSet stratum, long id) const {
  const auto& ids = component_ids(stratum);
  auto it = std::find(ids.begin(), ids.end(), id);
  return it == ids.end() ? -1 : static_cast<int>(it - ids.begin());
}

int DivisorConfiguration::map_component(DivisorSet from, DivisorSet to, int c) const {
  auto it = maps_.find({from, to});
  if (it == maps_.end()) throw InputError("no component map between the given strata");
  return it->second.at(c);
}

std::vector<DivisorSet> DivisorConfiguration::nonempty_strata() const {
  std::vector<DivisorSet> out;
  for (DivisorSet s = 0; s < ids_.size(); ++s) {
    if (!ids_[s].empty()) out.push_back(s);
  }
  return out;
}

bool DivisorConfiguration::all_strata_connected() const {
  return std::all_of(ids_.begin(), ids_.end(), [](const auto& ids) { return ids.size() <= 1; });
}

bool in_bmd(const DivisorConfiguration& config, const MultiIndex& v) {
  if (static_cast<int>(v.size()) != config.k()) {
    throw InputError("multi-index has length " + std::to_string(v.size()) + ", expected " +
                     std::to_string(config.k()));
  }
  for (auto x : v.v) {
    if (x < 0) throw InputError("multi-index entries must be nonnegative");
  }
  if (!config.nonempty(v.support())) return false;
  Rational sum = 0;
  for (int i = 0; i < config.k(); ++i) sum += (1 - config.discrepancy()[i]) * v.v[i];
  return sgn(sum) == 0;
}

SimplicialComplex dual_complex(const DivisorConfiguration& config) {
  std::vector<VertexSet> faces;
  for (DivisorSet s : config.nonempty_strata()) {
    if (config.component_count(s) > 1) {
      throw UnsupportedError("stratum D_" + face_to_string(s) + " has " +
                             std::to_string(config.component_count(s)) +
                             " components; the dual complex is not simplicial");
    }
    faces.push_back(s);
  }
  return SimplicialComplex::from_faces(config.k(), std::move(faces));
}

SimplicialComplex delta_zero_subcomplex(const DivisorConfiguration& config) {
  if (!config.log_nef()) throw InputError("Δ(D)_0 is defined for log nef configurations");
  VertexSet simple_pole = 0;
  for (int i = 0; i < config.k(); ++i) {
    if (config.discrepancy()[i] == 1) simple_pole |= VertexSet{1} << i;
  }
  return dual_complex(config).induced(simple_pole);
}

}  // namespace logcy
