#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "logcy/rational.hpp"

namespace logcy::linalg {

/// Sparse integer matrix stored by rows: (column, nonzero value), columns ascending.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> data;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r) {}
  void set(std::size_t r, std::size_t c, const Integer& v);
  Integer get(std::size_t r, std::size_t c) const;
  std::vector<std::vector<Integer>> dense() const;
};

/// Rank over Q by fraction-free elimination.
std::size_t rank_rational(const SparseMatrix& m);
/// Rank over F_p.
std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p);
/// Rank over Q (p = 0) or F_p.
std::size_t rank(const SparseMatrix& m, std::uint32_t p);

/// Nonzero diagonal entries d_1 | d_2 | … of the Smith normal form, positive.
std::vector<Integer> elementary_divisors(std::vector<std::vector<Integer>> m);

/// Basis of the right kernel over Q, one vector per free column.
std::vector<std::vector<Rational>> kernel_basis(const std::vector<std::vector<Rational>>& m,
                                                std::size_t cols);

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Maximizes c·x subject to A x = b, x ≥ 0, by the two-phase simplex method
/// over exact rationals with Bland's rule.
LpResult maximize(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  const std::vector<Rational>& c);

}  // namespace logcy::linalg
