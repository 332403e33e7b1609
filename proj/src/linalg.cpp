#include "logcy/linalg.hpp"

#include <algorithm>
#include <map>

#include "logcy/errors.hpp"

namespace logcy::linalg {

void SparseMatrix::set(std::size_t r, std::size_t c, const Integer& v) {
  auto& row = data[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v == 0) {
      row.erase(it);
    } else {
      it->second = v;
    }
  } else if (v != 0) {
    row.insert(it, {c, v});
  }
}

Integer SparseMatrix::get(std::size_t r, std::size_t c) const {
  for (const auto& [col, v] : data[r]) {
    if (col == c) return v;
  }
  return 0;
}

std::vector<std::vector<Integer>> SparseMatrix::dense() const {
  std::vector<std::vector<Integer>> out(rows, std::vector<Integer>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (const auto& [c, v] : data[r]) out[r][c] = v;
  }
  return out;
}

namespace {

using Row = std::vector<std::pair<std::size_t, Integer>>;

// a*row - b*pivot, both rows sorted by column.
Row combine_rows(const Row& row, const Integer& a, const Row& pivot, const Integer& b) {
  Row out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      Integer v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void remove_content(Row& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::size_t rank_rational(const SparseMatrix& m) {
  // rows keyed by their leading column; each new row is reduced against the
  // stored pivots until it is zero or claims a fresh leading column
  std::map<std::size_t, Row> pivots;
  for (const auto& input : m.data) {
    Row row = input;
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        remove_content(row);
        std::size_t lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      const Row& p = it->second;
      Integer a = p.front().second, b = row.front().second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      a /= g;
      b /= g;
      row = combine_rows(row, a, p, b);
      remove_content(row);
    }
  }
  return pivots.size();
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
  if (!is_prime(p)) throw InputError("field characteristic must be prime");
  using R = std::vector<std::pair<std::size_t, std::uint64_t>>;
  std::map<std::size_t, R> pivots;
  auto reduce = [p](const Integer& v) {
    Integer r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r.get_ui());
  };
  for (const auto& input : m.data) {
    R row;
    for (const auto& [c, v] : input) {
      std::uint64_t x = reduce(v);
      if (x) row.emplace_back(c, x);
    }
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        // normalize to a monic pivot
        std::uint64_t inv = ModP(static_cast<std::int64_t>(row.front().second), p).inverse().value();
        for (auto& e : row) e.second = e.second * inv % p;
        std::size_t lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      const R& piv = it->second;
      std::uint64_t f = row.front().second;
      R out;
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          out.push_back(row[i++]);
        } else if (i == row.size() || piv[j].first < row[i].first) {
          out.emplace_back(piv[j].first, (p - f * piv[j].second % p) % p);
          ++j;
        } else {
          std::uint64_t v = (row[i].second + p - f * piv[j].second % p) % p;
          if (v) out.emplace_back(row[i].first, v);
          ++i;
          ++j;
        }
      }
      row = std::move(out);
    }
  }
  return pivots.size();
}

std::size_t rank(const SparseMatrix& m, std::uint32_t p) {
  return p == 0 ? rank_rational(m) : rank_mod_p(m, p);
}

std::vector<Integer> elementary_divisors(std::vector<std::vector<Integer>> m) {
  std::vector<Integer> out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pick the smallest nonzero entry in the trailing block as pivot
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (m[r][c] != 0 && (pr == rows || abs(m[r][c]) < abs(m[pr][pc]))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) {
          std::swap(m[t], m[r]);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][c].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) {
          for (auto& row : m) std::swap(row[t], row[c]);
          clean = false;
        }
      }
      if (clean) {
        // the pivot must divide the whole trailing block
        for (std::size_t r = t + 1; r < rows && clean; ++r) {
          for (std::size_t c = t + 1; c < cols; ++c) {
            if (m[r][c] % m[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) m[t][k] += m[r][k];
              clean = false;
              break;
            }
          }
        }
      }
    }
    out.push_back(abs(m[t][t]));
    ++t;
  }
  return out;
}

std::vector<std::vector<Rational>> kernel_basis(const std::vector<std::vector<Rational>>& m,
                                                std::size_t cols) {
  std::vector<std::vector<Rational>> a = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Tableau simplex on rows [A | b]; basis[i] is the basic column of row i.
// Returns false when unbounded.
bool run_simplex(std::vector<std::vector<Rational>>& t, std::vector<Rational>& obj,
                 std::vector<std::size_t>& basis, std::size_t ncols,
                 const std::vector<bool>& allowed) {
  const std::size_t m = t.size();
  for (;;) {
    // Bland: entering column is the lowest index with positive reduced cost
    std::size_t enter = ncols;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (allowed[j] && sgn(obj[j]) > 0) {
        enter = j;
        break;
      }
    }
    if (enter == ncols) return true;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][ncols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return false;
    Rational inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (obj[enter] != 0) {
      Rational f = obj[enter];
      for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
}

}  // namespace

LpResult maximize(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  for (const auto& row : a) {
    if (row.size() != n) throw InputError("constraint row length mismatch");
  }
  if (b.size() != m) throw InputError("right-hand side length mismatch");
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(b[i]) < 0) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
    }
  }
  // phase one: artificial columns n..n+m-1, minimize their sum
  const std::size_t ncols = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(ncols + 1, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][ncols] = b[i];
    basis[i] = n + i;
  }
  // objective row holds reduced costs of max(-Σ artificials); last entry is -value
  std::vector<Rational> obj(ncols + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) obj[j] += t[i][j];
    obj[ncols] += t[i][ncols];
  }
  std::vector<bool> allowed(ncols, true);
  run_simplex(t, obj, basis, ncols, allowed);
  LpResult res;
  if (sgn(obj[ncols]) != 0) return res;

  // drive remaining artificials out of the basis where possible
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    std::size_t j = 0;
    while (j < n && t[i][j] == 0) ++j;
    if (j == n) continue;  // redundant row
    Rational inv = 1 / t[i][j];
    for (auto& x : t[i]) x *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == i || t[r][j] == 0) continue;
      Rational f = t[r][j];
      for (std::size_t k = 0; k <= ncols; ++k) t[r][k] -= f * t[i][k];
    }
    basis[i] = j;
  }
  for (std::size_t j = n; j < ncols; ++j) allowed[j] = false;

  // phase two
  std::fill(obj.begin(), obj.end(), Rational(0));
  for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n || c[basis[i]] == 0) continue;
    Rational f = c[basis[i]];
    for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= f * t[i][j];
  }
  if (!run_simplex(t, obj, basis, ncols, allowed)) {
    res.status = LpStatus::unbounded;
    return res;
  }
  res.status = LpStatus::optimal;
  res.x.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) res.x[basis[i]] = t[i][ncols];
  }
  res.value = 0;
  for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

}  // namespace logcy::linalg
