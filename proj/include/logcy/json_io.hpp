#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "logcy/energy_filtration.hpp"
#include "logcy/filtered_rees.hpp"
#include "logcy/log_trees.hpp"
#include "logcy/simplicial_complex.hpp"
#include "logcy/stratum_poset.hpp"

namespace logcy::io {

using Json = nlohmann::json;

/// Parses JSON text; malformed input raises InputError with the byte offset.
Json parse_json(const std::string& text, const std::string& source = "input");

/// Rationals travel as strings "p" or "p/q"; plain JSON integers are accepted on input.
Rational rational_from(const Json& j, const std::string& what);
Json rational_to(const Rational& q);
std::vector<Rational> rationals_from(const Json& j, const std::string& what);
Json rationals_to(const std::vector<Rational>& qs);

/// 1-based index lists ⇄ bit sets.
std::uint64_t index_set_from(const Json& j, int limit, const std::string& what);
Json index_set_to(std::uint64_t s);

/// {"k", "kappa", "a", "strata": [{"I", "components"}], "maps": [{"from", "to", "assign"}], "logNef"?}
DivisorConfiguration config_from(const Json& j);
Json config_to(const DivisorConfiguration& c);

/// {"vertices"?: n, "facets": [[1,2],[2,3]]} with 1-based vertex labels.
SimplicialComplex complex_from(const Json& j);
Json complex_to(const SimplicialComplex& cx);

/// {"vars": [...], "weights": [...], "relations": ["x^2 - y", ...]}
WeightedPresentation presentation_from(const Json& j);
Json presentation_to(const WeightedPresentation& p);

/// {"k", "kPrime"?, "marked"?, "vertices": [{"id", "depth"}], "edges": [{"a", "b", "depthE",
///  "contact": {"a->b": [...]}}], "root", "legs"?: [{"vertex", "label"}], "deg_x0"}
/// Edge endpoints, the root and leg vertices are vertex ids.
LogPssTree tree_from(const Json& j);

/// {"kappa", "eps1", "epsPert"?}
EnergyParameters energy_params_from(const Json& j);
MultiIndex multi_index_from(const Json& j, std::size_t k, const std::string& what);
Json multi_index_to(const MultiIndex& v);
/// {"v", "component"?}
OrbitLabel orbit_from(const Json& j, std::size_t k);
/// {"y"?, "I": [1-based], "alpha0", "alpha1", "v", "f0", "f1"}
ChordLabel chord_from(const Json& j, std::size_t k);

/// Schemas printed by `--schema`.
Json schema_for(const std::string& kind);

}  // namespace logcy::io
