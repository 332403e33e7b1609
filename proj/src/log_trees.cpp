#include "logcy/log_trees.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

#include "logcy/errors.hpp"

namespace logcy {

namespace {

std::string set_to_string(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i) {
    if (!(s >> i & 1)) continue;
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::string vertex_name(const LogPssTree& t, std::size_t v) { return "vertex " + std::to_string(t.vertices[v].id); }

std::string edge_name(const LogPssTree& t, const TreeEdge& e) {
  auto id = [&](std::size_t p) { return p < t.vertices.size() ? std::to_string(t.vertices[p].id) : "?"; };
  return "edge " + id(e.a) + "-" + id(e.b);
}

// number of components of the graph on `alive` vertices using the given edges
std::size_t components(std::size_t n, const std::vector<TreeEdge>& edges, const std::vector<bool>& alive) {
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : edges) {
    if (e.a >= n || e.b >= n || !alive[e.a] || !alive[e.b]) continue;
    parent[find(e.a)] = find(e.b);
  }
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (alive[i] && find(i) == i) ++c;
  }
  return c;
}

int bits(IndexSet s) { return std::popcount(s); }

}  // namespace

long LogPssTree::position_of(long id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id == id) return static_cast<long>(i);
  }
  return -1;
}

std::vector<Violation> validate(const LogPssTree& t) {
  std::vector<Violation> out;
  auto add = [&](std::string where, std::string clause) { out.push_back({std::move(where), std::move(clause)}); };
  const std::size_t n = t.vertices.size();
  if (t.k < 0 || t.k_marked < 0 || t.index_count() > 63) {
    add("tree", "index counts must satisfy 0 <= k, k' and k + k' <= 63");
    return out;
  }
  if (n == 0) {
    add("tree", "at least one vertex (the root) is required");
    return out;
  }
  if (t.root >= n) {
    add("tree", "root is not a vertex");
    return out;
  }
  const IndexSet range = t.index_count() == 0 ? 0 : (IndexSet(1) << t.index_count()) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (t.vertices[i].id == t.vertices[j].id) add(vertex_name(t, i), "duplicate vertex id");
    }
    if (t.vertices[i].depth & ~range) add(vertex_name(t, i), "depth uses an index outside 1.." + std::to_string(t.index_count()));
  }
  if (t.vertices[t.root].depth != 0) add(vertex_name(t, t.root), "root depth must be empty");

  for (const auto& e : t.edges) {
    if (e.a >= n || e.b >= n) {
      add(edge_name(t, e), "endpoint is not a vertex");
      continue;
    }
    if (e.a == e.b) add(edge_name(t, e), "loop edge");
    if (e.depth & ~range) add(edge_name(t, e), "depth uses an index outside 1.." + std::to_string(t.index_count()));
    if ((t.vertices[e.a].depth | t.vertices[e.b].depth) != e.depth) {
      add(edge_name(t, e), "union condition I^a ∪ I^b = I^e fails: " + set_to_string(t.vertices[e.a].depth) + " ∪ " +
                               set_to_string(t.vertices[e.b].depth) + " ≠ " + set_to_string(e.depth));
    }
    if (e.contact.size() != static_cast<std::size_t>(t.index_count())) {
      add(edge_name(t, e), "contact vector must have length " + std::to_string(t.index_count()));
      continue;
    }
    for (std::size_t i = 0; i < e.contact.size(); ++i) {
      if (e.contact[i] != 0 && !(e.depth >> i & 1)) {
        add(edge_name(t, e), "contact support is not contained in I^e (index " + std::to_string(i + 1) + ")");
      }
    }
  }

  std::vector<bool> all(n, true);
  if (t.edges.size() + 1 != n || components(n, t.edges, all) != 1) add("tree", "underlying graph is not a tree");
  std::vector<bool> no_root = all;
  no_root[t.root] = false;
  if (n > 1 && components(n, t.edges, no_root) != 1) {
    add("tree", t.marked ? "removing the root and its legs disconnects the tree"
                         : "tree minus the root is disconnected");
  }

  int l0 = 0;
  for (const auto& leg : t.legs) {
    if (leg.vertex >= n) {
      add("tree", "leg attached to a missing vertex");
      continue;
    }
    if (leg.label < 0 || leg.label > t.k_marked) add("tree", "leg label outside 0.." + std::to_string(t.k_marked));
    if (leg.label == 0) ++l0;
  }
  if (!t.legs.empty() && l0 != 1) add("tree", "exactly one leg l_0 is required");

  if (t.marked) {
    for (std::size_t v = 0; v < n; ++v) {
      if (v == t.root) continue;
      std::size_t deg = 0;
      for (const auto& e : t.edges) deg += (e.a == v) + (e.b == v);
      for (const auto& leg : t.legs) deg += leg.vertex == v;
      if (deg < 3) add(vertex_name(t, v), "stability |E(v)| + |L(v)| >= 3 fails (" + std::to_string(deg) + ")");
    }
  }
  return out;
}

namespace {

void require_valid(const LogPssTree& t) {
  auto v = validate(t);
  if (!v.empty()) throw InputError("invalid tree: " + v[0].where + ": " + v[0].clause);
}

}  // namespace

RhoMap build_rho(const LogPssTree& t, const std::vector<bool>& flip) {
  require_valid(t);
  if (!flip.empty() && flip.size() != t.edges.size()) throw InputError("one orientation flag per edge");
  RhoMap r;
  r.flipped = flip.empty() ? std::vector<bool>(t.edges.size(), false) : flip;
  std::map<std::pair<std::size_t, int>, std::size_t> row_index;
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    for (int i = 0; i < t.index_count(); ++i) {
      if (t.edges[e].depth >> i & 1) {
        row_index[{e, i}] = r.rows.size();
        r.rows.emplace_back(e, i);
      }
    }
  }
  for (std::size_t e = 0; e < t.edges.size(); ++e) r.columns.emplace_back(e, -1);
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    for (int i = 0; i < t.index_count(); ++i) {
      if (t.vertices[v].depth >> i & 1) r.columns.emplace_back(v, i);
    }
  }
  r.matrix = linalg::SparseMatrix(r.rows.size(), r.columns.size());
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const auto& edge = t.edges[e];
    const long sign = r.flipped[e] ? -1 : 1;
    for (int i = 0; i < t.index_count(); ++i) {
      if (edge.depth >> i & 1) r.matrix.set(row_index.at({e, i}), e, sign * edge.contact[static_cast<std::size_t>(i)]);
    }
  }
  for (std::size_t c = t.edges.size(); c < r.columns.size(); ++c) {
    auto [v, i] = r.columns[c];
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      const auto& edge = t.edges[e];
      std::size_t tail = r.flipped[e] ? edge.b : edge.a;
      std::size_t head = r.flipped[e] ? edge.a : edge.b;
      if (v == tail) r.matrix.set(row_index.at({e, i}), c, 1);
      if (v == head) r.matrix.set(row_index.at({e, i}), c, -1);
    }
  }
  return r;
}

TreeDimensions tree_dimensions(const LogPssTree& t, const std::vector<bool>& flip) {
  RhoMap rho = build_rho(t, flip);
  TreeDimensions d;
  d.rank = linalg::rank_rational(rho.matrix);
  d.kernel_dim = rho.columns.size() - d.rank;
  std::int64_t sum_e = 0, sum_e_minus = 0, sum_v = 0;
  for (const auto& e : t.edges) {
    sum_e += bits(e.depth);
    sum_e_minus += bits(e.depth) - 1;
  }
  for (const auto& v : t.vertices) sum_v += bits(v.depth);
  const auto kdim = static_cast<std::int64_t>(d.kernel_dim);
  d.obstruction_dim = 2 * (sum_e_minus - sum_v + kdim);
  d.obstruction_dim_rank = 2 * (sum_e - static_cast<std::int64_t>(d.rank));
  if (d.obstruction_dim != d.obstruction_dim_rank) {
    throw std::logic_error("obstruction dimension counts disagree: " + std::to_string(d.obstruction_dim) +
                           " vs " + std::to_string(d.obstruction_dim_rank));
  }
  d.vdim_plog = t.deg_x0 + 2 * (sum_e_minus - sum_v);
  d.vdim_log = t.deg_x0 - 2 * kdim;
  return d;
}

std::size_t kernel_dim(const LogPssTree& t) { return tree_dimensions(t).kernel_dim; }
std::int64_t obstruction_dim(const LogPssTree& t) { return tree_dimensions(t).obstruction_dim; }
std::int64_t vdim_plog(const LogPssTree& t) { return tree_dimensions(t).vdim_plog; }
std::int64_t vdim_log(const LogPssTree& t) { return tree_dimensions(t).vdim_log; }

std::optional<BalancingCertificate> balancing_feasible(const LogPssTree& t) {
  require_valid(t);
  const std::size_t n = t.vertices.size();
  const std::size_t ne = t.edges.size();
  const int kk = t.index_count();
  BalancingCertificate cert;
  cert.v.assign(n, std::vector<Rational>(static_cast<std::size_t>(kk), 0));
  if (ne == 0) return cert;  // vacuous system

  // variables: λ_e, then v_{ν,i} for i ∈ I^ν, then δ, then one slack per lower bound
  std::map<std::pair<std::size_t, int>, std::size_t> vcol;
  std::size_t nv = ne;
  for (std::size_t v = 0; v < n; ++v) {
    for (int i = 0; i < kk; ++i) {
      if (t.vertices[v].depth >> i & 1) vcol[{v, i}] = nv++;
    }
  }
  const std::size_t delta = nv;
  const std::size_t bounded = nv;  // λ's and v's each get λ − δ − s = 0
  const std::size_t total = nv + 1 + bounded;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (std::size_t e = 0; e < ne; ++e) {
    const auto& edge = t.edges[e];
    for (int i = 0; i < kk; ++i) {
      if (!(edge.depth >> i & 1)) continue;
      std::vector<Rational> row(total, 0);
      if (vcol.count({edge.a, i})) row[vcol[{edge.a, i}]] += 1;
      if (vcol.count({edge.b, i})) row[vcol[{edge.b, i}]] -= 1;
      row[e] -= static_cast<long>(edge.contact[static_cast<std::size_t>(i)]);
      a.push_back(std::move(row));
      b.push_back(0);
    }
  }
  for (std::size_t j = 0; j < bounded; ++j) {
    std::vector<Rational> row(total, 0);
    row[j] = 1;
    row[delta] = -1;
    row[nv + 1 + j] = -1;
    a.push_back(std::move(row));
    b.push_back(0);
  }
  std::vector<Rational> norm(total, 0);
  for (std::size_t j = 0; j < nv; ++j) norm[j] = 1;
  a.push_back(std::move(norm));
  b.push_back(1);
  std::vector<Rational> c(total, 0);
  c[delta] = 1;

  linalg::LpResult res = linalg::maximize(std::move(a), std::move(b), c);
  if (res.status != linalg::LpStatus::optimal || sgn(res.value) <= 0) return std::nullopt;
  cert.delta = res.value;
  for (std::size_t e = 0; e < ne; ++e) cert.lambda.push_back(res.x[e]);
  for (const auto& [key, col] : vcol) cert.v[key.first][static_cast<std::size_t>(key.second)] = res.x[col];
  return cert;
}

bool verify_certificate(const LogPssTree& t, const BalancingCertificate& cert) {
  const int kk = t.index_count();
  if (cert.v.size() != t.vertices.size() || cert.lambda.size() != t.edges.size()) return false;
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    if (cert.v[v].size() != static_cast<std::size_t>(kk)) return false;
    for (int i = 0; i < kk; ++i) {
      bool in = t.vertices[v].depth >> i & 1;
      int s = sgn(cert.v[v][static_cast<std::size_t>(i)]);
      if (in ? s <= 0 : s != 0) return false;
    }
  }
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const auto& edge = t.edges[e];
    if (sgn(cert.lambda[e]) <= 0) return false;
    for (int i = 0; i < kk; ++i) {
      auto ii = static_cast<std::size_t>(i);
      if (cert.v[edge.a][ii] - cert.v[edge.b][ii] != cert.lambda[e] * static_cast<long>(edge.contact[ii])) return false;
    }
  }
  return true;
}

std::vector<Rational> certificate_vector(const LogPssTree& t, const BalancingCertificate& cert) {
  std::vector<Rational> x;
  for (const auto& l : cert.lambda) x.push_back(-l);
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    for (int i = 0; i < t.index_count(); ++i) {
      if (t.vertices[v].depth >> i & 1) x.push_back(cert.v[v][static_cast<std::size_t>(i)]);
    }
  }
  return x;
}

std::vector<std::int64_t> marked_contact(const LogPssTree& t, int j) {
  if (j < 1 || j > t.k_marked) throw InputError("marked divisor index out of range");
  std::vector<std::int64_t> v(static_cast<std::size_t>(t.index_count()), 0);
  v[static_cast<std::size_t>(t.k + j - 1)] = 1;
  return v;
}

Integer partition_count(long r, long r0, long r1) {
  if (r < 0 || r0 < 0 || r1 < 0 || r0 + r1 != r) throw InputError("partition counts need r0 + r1 = r, all nonnegative");
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(r0));
  return out;
}

}  // namespace logcy
