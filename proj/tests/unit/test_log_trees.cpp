#include "doctest.h"
#include "logcy/errors.hpp"
#include "logcy/log_trees.hpp"
#include "random_inputs.hpp"

using namespace logcy;

namespace {

LogPssTree single_vertex(int k, std::int64_t deg) {
  LogPssTree t;
  t.k = k;
  t.vertices = {{1, 0}};
  t.legs = {{0, 0}};
  t.deg_x0 = deg;
  return t;
}

// root to ν with I^ν = I^e = {1} and v(e_{ν,root}) = (m)
LogPssTree one_edge(std::int64_t m) {
  LogPssTree t = single_vertex(1, 0);
  t.vertices.push_back({2, 1});
  t.edges.push_back({1, 0, 1, {m}});
  return t;
}

LogPssTree chain() {
  LogPssTree t = single_vertex(2, 4);
  t.vertices.push_back({2, 0b01});
  t.vertices.push_back({3, 0b11});
  t.edges.push_back({1, 0, 0b01, {1, 0}});
  t.edges.push_back({2, 1, 0b11, {1, 1}});
  return t;
}

bool has_clause(const std::vector<Violation>& v, const std::string& needle) {
  for (const auto& x : v) {
    if (x.clause.find(needle) != std::string::npos) return true;
  }
  return false;
}

std::vector<Rational> rho_times(const linalg::SparseMatrix& m, const std::vector<Rational>& x) {
  std::vector<Rational> y(m.rows, 0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (const auto& [c, v] : m.data[r]) y[r] += Rational(v) * x[c];
  }
  return y;
}

bool all_zero(const std::vector<Rational>& y) {
  for (const auto& q : y) {
    if (sgn(q) != 0) return false;
  }
  return true;
}

// brute-force count of the ways to colour r ordered points with r0 of colour 0
long colourings(int r, int r0) {
  long n = 0;
  for (int mask = 0; mask < (1 << r); ++mask) n += __builtin_popcount(static_cast<unsigned>(mask)) == r0;
  return n;
}

}  // namespace

TEST_CASE("validation clauses") {
  CHECK(validate(single_vertex(2, 3)).empty());
  CHECK(validate(one_edge(2)).empty());

  auto bad_union = one_edge(0);
  bad_union.edges[0].depth = 0;
  CHECK(has_clause(validate(bad_union), "union condition"));

  auto split = single_vertex(1, 0);
  split.vertices.push_back({2, 1});
  split.vertices.push_back({3, 1});
  split.edges.push_back({1, 0, 1, {1}});
  split.edges.push_back({2, 0, 1, {1}});
  CHECK(has_clause(validate(split), "minus the root is disconnected"));

  auto root_depth = single_vertex(1, 0);
  root_depth.vertices[0].depth = 1;
  CHECK(has_clause(validate(root_depth), "root depth"));

  auto support = one_edge(1);
  support.k = 2;
  support.edges[0].contact = {1, 1};
  CHECK(has_clause(validate(support), "contact support"));

  auto cycle = chain();
  cycle.edges.push_back({2, 0, 0b11, {1, 1}});
  CHECK(has_clause(validate(cycle), "not a tree"));

  auto legs = single_vertex(1, 0);
  legs.legs.push_back({0, 0});
  CHECK(has_clause(validate(legs), "exactly one leg"));

  CHECK_THROWS_AS(build_rho(bad_union), InputError);
}

TEST_CASE("marked trees need stable vertices") {
  LogPssTree t = one_edge(1);
  t.marked = true;
  t.k_marked = 1;
  t.edges[0].contact = {1, 0};
  CHECK(has_clause(validate(t), "stability"));
  t.legs.push_back({1, 1});
  t.legs.push_back({1, 1});
  CHECK(validate(t).empty());
  CHECK(marked_contact(t, 1) == std::vector<std::int64_t>{0, 1});
  CHECK_THROWS_AS(marked_contact(t, 2), InputError);
}

TEST_CASE("rho and dimensions for one edge") {
  auto t = one_edge(3);
  auto rho = build_rho(t);
  CHECK(rho.matrix.dense() == std::vector<std::vector<Integer>>{{3, 1}});
  auto d = tree_dimensions(t);
  CHECK(d.rank == 1);
  CHECK(d.kernel_dim == 1);
  CHECK(d.obstruction_dim == 0);
  CHECK(d.obstruction_dim_rank == 0);
  CHECK(d.vdim_plog == -2);
  CHECK(d.vdim_log == -2);
  auto flipped = build_rho(t, {true});
  CHECK(flipped.matrix.dense() == std::vector<std::vector<Integer>>{{-3, -1}});
}

TEST_CASE("single vertex is the main stratum") {
  auto t = single_vertex(3, 7);
  auto d = tree_dimensions(t);
  CHECK(d.kernel_dim == 0);
  CHECK(d.obstruction_dim == 0);
  CHECK(d.vdim_plog == 7);
  CHECK(d.vdim_log == 7);
  auto cert = balancing_feasible(t);
  REQUIRE(cert);
  CHECK(verify_certificate(t, *cert));
}

TEST_CASE("two-edge chain by explicit matrix") {
  auto t = chain();
  auto rho = build_rho(t);
  // rows (e1,1), (e2,1), (e2,2); columns e1, e2, (ν1,1), (ν2,1), (ν2,2)
  std::vector<std::vector<Integer>> expect{{1, 0, 1, 0, 0}, {0, 1, -1, 1, 0}, {0, 1, 0, 0, 1}};
  CHECK(rho.matrix.dense() == expect);
  auto d = tree_dimensions(t);
  CHECK(d.rank == 3);
  CHECK(d.kernel_dim == 2);
  CHECK(d.obstruction_dim == 0);
  CHECK(d.vdim_plog == 4 + 2 * (1 - 3));
  CHECK(d.vdim_log == 0);
  auto cert = balancing_feasible(t);
  REQUIRE(cert);
  CHECK(verify_certificate(t, *cert));
  CHECK(all_zero(rho_times(rho.matrix, certificate_vector(t, *cert))));
}

TEST_CASE("balancing sign obstruction") {
  CHECK_FALSE(balancing_feasible(one_edge(-1)));
  auto cert = balancing_feasible(one_edge(1));
  REQUIRE(cert);
  CHECK((cert->v[1][0] == make_rational(1, 2)));
  CHECK((cert->lambda[0] == make_rational(1, 2)));
  CHECK(verify_certificate(one_edge(1), *cert));
  auto tampered = *cert;
  tampered.lambda[0] = 1;
  CHECK_FALSE(verify_certificate(one_edge(1), tampered));
}

TEST_CASE("partition counts") {
  CHECK(partition_count(0, 0, 0) == 1);
  CHECK(partition_count(4, 2, 2) == 6);
  for (int r = 0; r <= 8; ++r) {
    for (int r0 = 0; r0 <= r; ++r0) CHECK(partition_count(r, r0, r - r0) == colourings(r, r0));
  }
  CHECK_THROWS_AS(partition_count(3, 1, 1), InputError);
  CHECK_THROWS_AS(partition_count(-1, 0, -1), InputError);
}

TEST_CASE("property: random trees") {
  testing::Rng rng(99);
  int feasible = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const bool balanced = trial % 2 == 0;
    auto t = testing::random_tree(rng, testing::uniform(rng, 1, 3), testing::uniform(rng, 1, 6), balanced);
    REQUIRE(validate(t).empty());
    auto d = tree_dimensions(t);
    CHECK(d.obstruction_dim == d.obstruction_dim_rank);
    CHECK(d.vdim_log <= d.vdim_plog);
    std::vector<bool> flip(t.edges.size());
    for (std::size_t e = 0; e < flip.size(); ++e) flip[e] = testing::uniform(rng, 0, 1);
    auto df = tree_dimensions(t, flip);
    CHECK(df.kernel_dim == d.kernel_dim);
    CHECK(df.obstruction_dim == d.obstruction_dim);
    auto cert = balancing_feasible(t);
    if (balanced) CHECK(cert.has_value());
    if (!cert) continue;
    ++feasible;
    CHECK(verify_certificate(t, *cert));
    auto rho = build_rho(t);
    CHECK(all_zero(rho_times(rho.matrix, certificate_vector(t, *cert))));
    if (!t.edges.empty()) CHECK(d.vdim_log <= t.deg_x0 - 2);
  }
  CHECK(feasible >= 60);
}
