#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logcy/linalg.hpp"
#include "logcy/simplicial_complex.hpp"

namespace logcy {

/// Coefficient field: Q when prime == 0, otherwise F_prime.
struct Field {
  std::uint32_t prime = 0;
  static Field rationals() { return {0}; }
  static Field fp(std::uint32_t p);
  std::string name() const;
};

/// Betti numbers in consecutive degrees first_degree, first_degree+1, …
/// For reduced homology first_degree is -1.
struct BettiTable {
  Field field;
  int first_degree = -1;
  std::vector<long> betti;

  /// Rank in degree i; 0 outside the stored range.
  long at(int i) const;
  int last_degree() const { return first_degree + static_cast<int>(betti.size()) - 1; }
  long euler_characteristic() const;
};

/// Boundary map ∂_d from d-faces to (d-1)-faces with the usual alternating signs
/// (vertices in increasing order).
linalg::SparseMatrix boundary_matrix(const SimplicialComplex& cx, int d);

/// Reduced Betti numbers b̃_{-1..dim}. Throws InputError on the void complex.
BettiTable reduced_homology(const SimplicialComplex& cx, Field field = Field::rationals());

/// H_i(|Δ|, |Δ| minus a point interior to F) = H̃_{i-j-1}(lk F), F of dimension j.
/// An empty link is S^{-1}, so a facet of dimension j gets rank 1 in degree j.
BettiTable local_homology_at_face(const SimplicialComplex& cx, VertexSet face,
                                  Field field = Field::rationals());

struct GorensteinFailure {
  VertexSet face = 0;       // 0 stands for the whole complex
  std::string condition;    // "sphere", "link" or "core"
  int degree = 0;           // degree where the expected sphere lives
  std::vector<long> found;  // reduced Betti numbers from degree -1
};

struct GorensteinReport {
  bool verdict = false;
  int dimension = -1;
  bool core_equals_whole = false;
  std::vector<GorensteinFailure> failures;
};

/// Homology criterion for the Stanley–Reisner ring of `cx` to be Gorenstein:
/// Δ is a homology (d)-sphere, every link lk F is a homology (d-|F|)-sphere
/// in the sense of reduced Betti numbers, and core(Δ) = Δ. `workers` > 1
/// spreads the link computations over threads; the report does not depend on it.
GorensteinReport gorenstein_verdict(const SimplicialComplex& cx, Field field = Field::rationals(),
                                    unsigned workers = 1);

/// b̃_i = 0 for i < dim and b̃_dim = 1.
bool is_homology_sphere(const SimplicialComplex& cx, Field field = Field::rationals());
/// Every nonempty face passes the link condition.
bool is_homology_manifold(const SimplicialComplex& cx, Field field = Field::rationals(),
                          unsigned workers = 1);

/// Elementary divisors of every boundary matrix, keyed by the source dimension.
std::vector<std::vector<Integer>> boundary_elementary_divisors(const SimplicialComplex& cx);

}  // namespace logcy
