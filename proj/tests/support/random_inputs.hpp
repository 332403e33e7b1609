#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "logcy/filtered_rees.hpp"
#include "logcy/log_trees.hpp"
#include "logcy/simplicial_complex.hpp"
#include "logcy/stratum_poset.hpp"

namespace logcy::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random configuration built from "atoms": each atom lies on a random set of
/// divisors, D_I collects the atoms on every divisor of I, and its components
/// partition those atoms. Partitions coarsen from larger to smaller strata so
/// every component map exists and composition holds automatically.
inline DivisorConfiguration random_configuration(Rng& rng, int k, int max_components = 2,
                                                 bool calabi_yau = true) {
  const DivisorSet full = (DivisorSet{1} << k) - 1;
  const int atoms = uniform(rng, 1, 4);
  std::vector<DivisorSet> on(static_cast<std::size_t>(atoms));
  for (auto& s : on) s = static_cast<DivisorSet>(uniform(rng, 0, static_cast<int>(full)));

  // class label of each atom inside each stratum; -1 when the atom is absent
  std::vector<std::vector<int>> cls(full + 1, std::vector<int>(static_cast<std::size_t>(atoms), -1));
  std::vector<DivisorSet> order(full + 1);
  std::iota(order.begin(), order.end(), DivisorSet{0});
  std::sort(order.begin(), order.end(), [](DivisorSet a, DivisorSet b) {
    return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b;
  });
  for (DivisorSet s : order) {
    std::vector<int> members;
    for (int a = 0; a < atoms; ++a) {
      if (is_subset(s, on[static_cast<std::size_t>(a)])) members.push_back(a);
    }
    if (members.empty()) continue;
    // union-find over members, joined by every finer stratum
    std::vector<int> parent(static_cast<std::size_t>(atoms));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (int i = 0; i < k; ++i) {
      DivisorSet up = s | (DivisorSet{1} << i);
      if (up == s) continue;
      for (int a : members) {
        for (int b : members) {
          int ca = cls[up][static_cast<std::size_t>(a)], cb = cls[up][static_cast<std::size_t>(b)];
          if (ca >= 0 && ca == cb) parent[static_cast<std::size_t>(find(a))] = find(b);
        }
      }
    }
    std::vector<int> roots;
    for (int a : members) {
      int r = find(a);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    // random merges until the component budget holds (M itself is connected)
    const int budget = s == 0 ? 1 : uniform(rng, 1, max_components);
    while (static_cast<int>(roots.size()) > budget) {
      std::size_t x = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(roots.size()) - 1));
      parent[static_cast<std::size_t>(roots[x])] = roots[0];
      roots.erase(roots.begin() + static_cast<long>(x));
    }
    for (int a : members) {
      int r = find(a);
      cls[s][static_cast<std::size_t>(a)] =
          static_cast<int>(std::find(roots.begin(), roots.end(), r) - roots.begin());
    }
  }

  std::map<DivisorSet, std::vector<long>> strata;
  std::vector<DivisorConfiguration::MapSpec> maps;
  for (DivisorSet s = 0; s <= full; ++s) {
    int n = 0;
    for (int c : cls[s]) n = std::max(n, c + 1);
    if (n == 0) continue;
    // opaque ids: offset so they differ from local indices
    for (int c = 0; c < n; ++c) strata[s].push_back(10 * c + 7);
    for (DivisorSet t = (s - 1) & s;; t = (t - 1) & s) {
      if (t == s) break;
      DivisorConfiguration::MapSpec m{s, t, {}};
      for (int a = 0; a < atoms; ++a) {
        int c = cls[s][static_cast<std::size_t>(a)];
        if (c >= 0) m.assign[10 * c + 7] = 10 * cls[t][static_cast<std::size_t>(a)] + 7;
      }
      maps.push_back(std::move(m));
      if (t == 0) break;
    }
  }
  std::vector<Rational> kappa, a;
  for (int i = 0; i < k; ++i) {
    kappa.push_back(make_rational(uniform(rng, 1, 3), uniform(rng, 1, 2)));
    a.push_back(calabi_yau || uniform(rng, 0, 2) ? Rational(1) : Rational(0));
  }
  return DivisorConfiguration::build(k, kappa, a, strata, maps);
}

/// Downward closure of a few random facets on n vertices.
inline SimplicialComplex random_complex(Rng& rng, int n, int facets) {
  std::vector<VertexSet> f;
  for (int i = 0; i < facets; ++i) f.push_back(static_cast<VertexSet>(uniform(rng, 1, (1 << n) - 1)));
  return SimplicialComplex::from_facets(n, f);
}

/// Random valid unmarked tree: the root has a single neighbour so the tree
/// minus the root stays connected. With `balanced` the contacts come from a
/// positive solution of the balancing system (λ_e = 1), so one exists.
inline LogPssTree random_tree(Rng& rng, int k, int vertex_count, bool balanced) {
  LogPssTree t;
  t.k = k;
  t.deg_x0 = uniform(rng, 0, 6);
  const IndexSet range = (IndexSet{1} << k) - 1;
  std::vector<std::vector<std::int64_t>> pos(static_cast<std::size_t>(vertex_count),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(k), 0));
  for (int v = 0; v < vertex_count; ++v) {
    IndexSet d = v == 0 ? 0 : static_cast<IndexSet>(uniform(rng, 0, static_cast<int>(range)));
    t.vertices.push_back({100 + v, d});
    for (int i = 0; i < k; ++i) {
      if (d >> i & 1) pos[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = uniform(rng, 1, 3);
    }
  }
  t.root = 0;
  t.legs.push_back({0, 0});
  for (int v = 1; v < vertex_count; ++v) {
    std::size_t parent = v == 1 ? 0 : static_cast<std::size_t>(uniform(rng, 1, v - 1));
    TreeEdge e;
    // random orientation of the stored pair
    bool forward = uniform(rng, 0, 1);
    e.a = forward ? static_cast<std::size_t>(v) : parent;
    e.b = forward ? parent : static_cast<std::size_t>(v);
    e.depth = t.vertices[e.a].depth | t.vertices[e.b].depth;
    e.contact.assign(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
      if (!(e.depth >> i & 1)) continue;
      auto ii = static_cast<std::size_t>(i);
      e.contact[ii] = balanced ? pos[e.a][ii] - pos[e.b][ii] : uniform(rng, -2, 2);
    }
    t.edges.push_back(std::move(e));
  }
  return t;
}

/// Random weighted presentation over at most three variables with at most two
/// relations of degree at most three.
inline WeightedPresentation random_presentation(Rng& rng) {
  static const std::vector<std::string> names{"x", "y", "z"};
  const int n = uniform(rng, 1, 3);
  std::vector<std::string> vars(names.begin(), names.begin() + n);
  std::vector<Rational> w;
  for (int i = 0; i < n; ++i) w.push_back(make_rational(uniform(rng, 1, 3), uniform(rng, 1, 2)));
  poly::RingPtr ring = poly::make_ring(vars, w);
  std::vector<poly::QPolynomial> rel;
  const int m = uniform(rng, 1, 2);
  for (int r = 0; r < m; ++r) {
    poly::QPolynomial f(ring);
    const int terms = uniform(rng, 1, 4);
    for (int j = 0; j < terms; ++j) {
      poly::Monomial mono(static_cast<std::size_t>(n));
      int budget = uniform(rng, 0, 3);
      for (int s = 0; s < budget; ++s) ++mono.e[static_cast<std::size_t>(uniform(rng, 0, n - 1))];
      int c = uniform(rng, -3, 3);
      if (c == 0) c = 1;
      f += poly::QPolynomial::monomial(ring, mono, Rational(c));
    }
    if (!f.is_zero()) rel.push_back(std::move(f));
  }
  if (rel.empty()) rel.push_back(poly::QPolynomial::variable(ring, 0));
  return WeightedPresentation::make(ring, rel);
}

}  // namespace logcy::testing
