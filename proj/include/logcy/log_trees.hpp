#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logcy/linalg.hpp"
#include "logcy/rational.hpp"

namespace logcy {

/// Index sets I ⊆ {1..k} (or {1..k} ⊔ {1..k'} for marked trees, the marked
/// divisor E_j being index k+j); bit i-1 stands for index i.
using IndexSet = std::uint64_t;

struct TreeVertex {
  long id = 0;
  IndexSet depth = 0;
};

struct TreeEdge {
  std::size_t a = 0;  // vertex positions
  std::size_t b = 0;
  IndexSet depth = 0;
  /// v(e_{a,b}); v(e_{b,a}) is its negative
  std::vector<std::int64_t> contact;
};

struct TreeLeg {
  std::size_t vertex = 0;
  int label = 0;  // 0 for l_0, 1..k' for the extra marked legs
};

/// A rooted tree decorated with depth and contact functions.
struct LogPssTree {
  int k = 0;
  int k_marked = 0;  // k'
  std::vector<TreeVertex> vertices;
  std::vector<TreeEdge> edges;
  std::size_t root = 0;
  std::vector<TreeLeg> legs;
  std::int64_t deg_x0 = 0;
  bool marked = false;

  int index_count() const { return k + k_marked; }
  /// Position of the vertex with the given id, or -1.
  long position_of(long id) const;
};

struct Violation {
  std::string where;   // "vertex 3", "edge 1-2", "tree"
  std::string clause;
};

std::vector<Violation> validate(const LogPssTree& t);

/// ρ: Z^E ⊕ ⊕_ν Z^{I^ν} → ⊕_e Z^{I^e}. Columns list the edges first, then the
/// pairs (ν, i) vertex by vertex with i ascending; rows are the pairs (e, i).
struct RhoMap {
  linalg::SparseMatrix matrix;
  std::vector<bool> flipped;  // edge e oriented b→a instead of a→b
  std::vector<std::pair<std::size_t, int>> columns;  // (edge, -1) or (vertex, i)
  std::vector<std::pair<std::size_t, int>> rows;     // (edge, i)
};

/// Orientation per edge: `flip[e]` uses e_{b,a}. Throws InputError on an invalid tree.
RhoMap build_rho(const LogPssTree& t, const std::vector<bool>& flip = {});

struct TreeDimensions {
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::int64_t obstruction_dim = 0;        // 2(Σ_e(|I^e|-1) - Σ_ν|I^ν| + dim K)
  std::int64_t obstruction_dim_rank = 0;   // 2(Σ_e|I^e| - rank ρ)
  std::int64_t vdim_plog = 0;
  std::int64_t vdim_log = 0;
};

/// All dimension counts; throws std::logic_error if the two obstruction
/// counts disagree.
TreeDimensions tree_dimensions(const LogPssTree& t, const std::vector<bool>& flip = {});
std::size_t kernel_dim(const LogPssTree& t);
std::int64_t obstruction_dim(const LogPssTree& t);
std::int64_t vdim_plog(const LogPssTree& t);
std::int64_t vdim_log(const LogPssTree& t);

struct BalancingCertificate {
  std::vector<std::vector<Rational>> v;  // per vertex, length k (+k')
  std::vector<Rational> lambda;          // per edge
  Rational delta;                        // optimal margin of the LP
};

/// Strict feasibility of the balancing system by exact LP; nullopt when infeasible.
std::optional<BalancingCertificate> balancing_feasible(const LogPssTree& t);

/// Substitutes the certificate back into the balancing system.
bool verify_certificate(const LogPssTree& t, const BalancingCertificate& cert);

/// The certificate as an element of D(Γ): edge coordinates -λ_e, vertex
/// coordinates v_{ν,i}; it lies in ker ρ for the a→b orientation.
std::vector<Rational> certificate_vector(const LogPssTree& t, const BalancingCertificate& cert);

/// Contact vector v_{E_j} of a marked tree: 1 in position k+j.
std::vector<std::int64_t> marked_contact(const LogPssTree& t, int j);

/// r! / (r0! r1!) with r0 + r1 = r.
Integer partition_count(long r, long r0, long r1);

}  // namespace logcy
