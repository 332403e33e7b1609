#include "logcy/json_io.hpp"

#include <algorithm>

#include "logcy/errors.hpp"

namespace logcy::io {

namespace {

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw InputError(what + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(what + " is missing \"" + key + "\"");
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

long integer_from(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  return j.get<long>();
}

std::string string_from(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + " must be a string");
  return j.get<std::string>();
}

const Json& array_from(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  return j;
}

std::vector<std::int64_t> integers_from(const Json& j, const std::string& what) {
  std::vector<std::int64_t> out;
  for (const auto& x : array_from(j, what)) out.push_back(integer_from(x, what + " entry"));
  return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + source + " at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Rational rational_from(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError(what + " must be a rational string \"p/q\"");
}

Json rational_to(const Rational& q) { return logcy::to_string(q); }

std::vector<Rational> rationals_from(const Json& j, const std::string& what) {
  std::vector<Rational> out;
  for (const auto& x : array_from(j, what)) out.push_back(rational_from(x, what + " entry"));
  return out;
}

Json rationals_to(const std::vector<Rational>& qs) {
  Json out = Json::array();
  for (const auto& q : qs) out.push_back(rational_to(q));
  return out;
}

std::uint64_t index_set_from(const Json& j, int limit, const std::string& what) {
  std::uint64_t s = 0;
  for (const auto& x : array_from(j, what)) {
    long i = integer_from(x, what + " entry");
    if (i < 1 || i > limit) throw InputError(what + " uses index " + std::to_string(i) + " outside 1.." + std::to_string(limit));
    s |= std::uint64_t{1} << (i - 1);
  }
  return s;
}

Json index_set_to(std::uint64_t s) {
  Json out = Json::array();
  for (int i = 0; i < 64; ++i) {
    if (s >> i & 1) out.push_back(i + 1);
  }
  return out;
}

DivisorConfiguration config_from(const Json& j) {
  const std::string what = "configuration";
  long k = integer_from(field(j, "k", what), "k");
  if (k < 1 || k > 12) throw InputError("k must lie in 1..12");
  auto kappa = rationals_from(field(j, "kappa", what), "kappa");
  auto a = rationals_from(field(j, "a", what), "a");
  std::map<DivisorSet, std::vector<long>> strata;
  for (const auto& s : array_from(field(j, "strata", what), "strata")) {
    DivisorSet I = index_set_from(field(s, "I", "stratum"), static_cast<int>(k), "stratum I");
    if (strata.count(I)) throw InputError("stratum " + face_to_string(I) + " listed twice");
    std::vector<long> ids;
    for (const auto& c : array_from(field(s, "components", "stratum"), "components")) {
      ids.push_back(integer_from(c, "component id"));
    }
    strata[I] = ids;
  }
  std::vector<DivisorConfiguration::MapSpec> maps;
  if (const Json* m = optional_field(j, "maps")) {
    for (const auto& x : array_from(*m, "maps")) {
      DivisorConfiguration::MapSpec spec;
      spec.from = index_set_from(field(x, "from", "map"), static_cast<int>(k), "map from");
      spec.to = index_set_from(field(x, "to", "map"), static_cast<int>(k), "map to");
      const Json& assign = field(x, "assign", "map");
      if (!assign.is_object()) throw InputError("map assign must be an object {id: id}");
      for (const auto& [src, dst] : assign.items()) {
        long s;
        try {
          std::size_t used = 0;
          s = std::stol(src, &used);
          if (used != src.size()) throw std::invalid_argument(src);
        } catch (const std::exception&) {
          throw InputError("map assign key \"" + src + "\" is not an integer id");
        }
        spec.assign[s] = integer_from(dst, "map assign value");
      }
      maps.push_back(std::move(spec));
    }
  }
  std::optional<bool> log_nef;
  if (const Json* ln = optional_field(j, "logNef")) {
    if (!ln->is_boolean()) throw InputError("logNef must be a boolean");
    log_nef = ln->get<bool>();
  }
  return DivisorConfiguration::build(static_cast<int>(k), kappa, a, strata, maps, log_nef);
}

Json config_to(const DivisorConfiguration& c) {
  Json strata = Json::array();
  Json maps = Json::array();
  const auto nonempty = c.nonempty_strata();
  for (DivisorSet s : nonempty) strata.push_back({{"I", index_set_to(s)}, {"components", c.component_ids(s)}});
  for (DivisorSet from : nonempty) {
    for (DivisorSet to : nonempty) {
      if (to == from || !is_subset(to, from) || c.component_count(to) < 2) continue;
      Json assign = Json::object();
      const auto& src = c.component_ids(from);
      for (std::size_t i = 0; i < src.size(); ++i) {
        assign[std::to_string(src[i])] = c.component_ids(to)[static_cast<std::size_t>(c.map_component(from, to, static_cast<int>(i)))];
      }
      maps.push_back({{"from", index_set_to(from)}, {"to", index_set_to(to)}, {"assign", assign}});
    }
  }
  return {{"k", c.k()}, {"kappa", rationals_to(c.kappa())}, {"a", rationals_to(c.discrepancy())},
          {"strata", strata}, {"maps", maps}, {"logNef", c.log_nef()}};
}

SimplicialComplex complex_from(const Json& j) {
  const std::string what = "complex";
  const Json& facets = array_from(field(j, "facets", what), "facets");
  long n = 0;
  for (const auto& f : facets) {
    for (const auto& v : array_from(f, "facet")) n = std::max(n, integer_from(v, "vertex"));
  }
  if (const Json* given = optional_field(j, "vertices")) {
    long m = integer_from(*given, "vertices");
    if (m < n) throw InputError("facets use vertex " + std::to_string(n) + " but vertices = " + std::to_string(m));
    n = m;
  }
  if (n > 63) throw InputError("complexes are limited to 63 vertices");
  std::vector<VertexSet> fs;
  for (const auto& f : facets) fs.push_back(index_set_from(f, static_cast<int>(n), "facet"));
  return SimplicialComplex::from_facets(static_cast<int>(n), fs);
}

Json complex_to(const SimplicialComplex& cx) {
  Json facets = Json::array();
  for (VertexSet f : cx.facets()) facets.push_back(index_set_to(f));
  return {{"vertices", cx.vertex_count()}, {"facets", facets}};
}

WeightedPresentation presentation_from(const Json& j) {
  const std::string what = "presentation";
  std::vector<std::string> vars;
  for (const auto& v : array_from(field(j, "vars", what), "vars")) vars.push_back(string_from(v, "variable name"));
  std::vector<Rational> weights;
  if (const Json* w = optional_field(j, "weights")) {
    weights = rationals_from(*w, "weights");
  } else {
    weights.assign(vars.size(), Rational(1));
  }
  std::vector<std::string> rel;
  for (const auto& r : array_from(field(j, "relations", what), "relations")) rel.push_back(string_from(r, "relation"));
  return WeightedPresentation::make(vars, weights, rel);
}

Json presentation_to(const WeightedPresentation& p) {
  Json rel = Json::array();
  for (const auto& r : p.relations) rel.push_back(r.to_string());
  return {{"vars", p.vars()}, {"weights", rationals_to(p.weights())}, {"relations", rel}};
}

LogPssTree tree_from(const Json& j) {
  const std::string what = "tree";
  LogPssTree t;
  t.k = static_cast<int>(integer_from(field(j, "k", what), "k"));
  if (const Json* kp = optional_field(j, "kPrime")) t.k_marked = static_cast<int>(integer_from(*kp, "kPrime"));
  if (const Json* m = optional_field(j, "marked")) {
    if (!m->is_boolean()) throw InputError("marked must be a boolean");
    t.marked = m->get<bool>();
  }
  if (t.k < 0 || t.k_marked < 0 || t.index_count() > 63) throw InputError("index counts out of range");
  const int limit = t.index_count();
  for (const auto& v : array_from(field(j, "vertices", what), "vertices")) {
    t.vertices.push_back({integer_from(field(v, "id", "vertex"), "vertex id"),
                          index_set_from(field(v, "depth", "vertex"), limit, "vertex depth")});
  }
  auto position = [&](const Json& id, const std::string& role) {
    long p = t.position_of(integer_from(id, role));
    if (p < 0) throw InputError(role + " names an unknown vertex id " + id.dump());
    return static_cast<std::size_t>(p);
  };
  for (const auto& e : array_from(field(j, "edges", what), "edges")) {
    TreeEdge edge;
    edge.a = position(field(e, "a", "edge"), "edge endpoint a");
    edge.b = position(field(e, "b", "edge"), "edge endpoint b");
    edge.depth = index_set_from(field(e, "depthE", "edge"), limit, "edge depthE");
    const Json& contact = field(e, "contact", "edge");
    if (!contact.is_object()) throw InputError("edge contact must be an object {\"a->b\": [...]}");
    if (const Json* ab = optional_field(contact, "a->b")) {
      edge.contact = integers_from(*ab, "contact");
    } else if (const Json* ba = optional_field(contact, "b->a")) {
      edge.contact = integers_from(*ba, "contact");
      for (auto& x : edge.contact) x = -x;
    } else {
      throw InputError("edge contact needs an \"a->b\" or \"b->a\" entry");
    }
    t.edges.push_back(std::move(edge));
  }
  t.root = position(field(j, "root", what), "root");
  if (const Json* legs = optional_field(j, "legs")) {
    for (const auto& l : array_from(*legs, "legs")) {
      long label = 0;
      if (const Json* lb = optional_field(l, "label")) label = integer_from(*lb, "leg label");
      t.legs.push_back({position(field(l, "vertex", "leg"), "leg vertex"), static_cast<int>(label)});
    }
  }
  t.deg_x0 = integer_from(field(j, "deg_x0", what), "deg_x0");
  return t;
}

EnergyParameters energy_params_from(const Json& j) {
  EnergyParameters p;
  p.kappa = rationals_from(field(j, "kappa", "parameters"), "kappa");
  p.eps1 = rational_from(field(j, "eps1", "parameters"), "eps1");
  if (const Json* e = optional_field(j, "epsPert")) p.eps_pert = rationals_from(*e, "epsPert");
  p.validate();
  return p;
}

MultiIndex multi_index_from(const Json& j, std::size_t k, const std::string& what) {
  MultiIndex v{integers_from(j, what)};
  if (v.size() != k) throw InputError(what + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(k));
  for (auto x : v.v) {
    if (x < 0) throw InputError(what + " entries must be nonnegative");
  }
  return v;
}

Json multi_index_to(const MultiIndex& v) { return v.v; }

OrbitLabel orbit_from(const Json& j, std::size_t k) {
  OrbitLabel o;
  o.v = multi_index_from(field(j, "v", "orbit"), k, "orbit v");
  if (const Json* c = optional_field(j, "component")) o.component = integer_from(*c, "orbit component");
  return o;
}

ChordLabel chord_from(const Json& j, std::size_t k) {
  const std::string what = "chord";
  ChordLabel c;
  if (const Json* y = optional_field(j, "y")) c.y = integer_from(*y, "chord y");
  for (const auto& i : array_from(field(j, "I", what), "chord I")) {
    long x = integer_from(i, "chord index");
    if (x < 1 || static_cast<std::size_t>(x) > k) throw InputError("chord index outside 1..k");
    c.indices.push_back(static_cast<int>(x - 1));
  }
  c.alpha0 = rationals_from(field(j, "alpha0", what), "alpha0");
  c.alpha1 = rationals_from(field(j, "alpha1", what), "alpha1");
  c.v = MultiIndex{integers_from(field(j, "v", what), "chord v")};
  c.f0 = rational_from(field(j, "f0", what), "f0");
  c.f1 = rational_from(field(j, "f1", what), "f1");
  c.validate(k);
  return c;
}

namespace {

Json rational_schema() { return {{"type", {"string", "integer"}}, {"pattern", "^-?[0-9]+(/[0-9]+)?$"}}; }
Json array_of(Json item) { return {{"type", "array"}, {"items", std::move(item)}}; }
Json index_list() { return array_of({{"type", "integer"}, {"minimum", 1}}); }
Json object(Json props, std::vector<std::string> required) {
  return {{"type", "object"}, {"properties", std::move(props)}, {"required", std::move(required)}};
}

}  // namespace

Json schema_for(const std::string& kind) {
  if (kind == "config") {
    return object({{"k", {{"type", "integer"}, {"minimum", 1}, {"maximum", 12}}},
                   {"kappa", array_of(rational_schema())},
                   {"a", array_of(rational_schema())},
                   {"strata", array_of(object({{"I", index_list()}, {"components", array_of({{"type", "integer"}})}},
                                              {"I", "components"}))},
                   {"maps", array_of(object({{"from", index_list()},
                                             {"to", index_list()},
                                             {"assign", {{"type", "object"}, {"additionalProperties", {{"type", "integer"}}}}}},
                                            {"from", "to", "assign"}))},
                   {"logNef", {{"type", "boolean"}}}},
                  {"k", "kappa", "a", "strata"});
  }
  if (kind == "complex") {
    return object({{"vertices", {{"type", "integer"}}}, {"facets", array_of(index_list())}}, {"facets"});
  }
  if (kind == "presentation") {
    return object({{"vars", array_of({{"type", "string"}})},
                   {"weights", array_of(rational_schema())},
                   {"relations", array_of({{"type", "string"}})}},
                  {"vars", "relations"});
  }
  if (kind == "tree") {
    Json contact = {{"type", "object"},
                    {"properties", {{"a->b", array_of({{"type", "integer"}})}, {"b->a", array_of({{"type", "integer"}})}}}};
    return object({{"k", {{"type", "integer"}}},
                   {"kPrime", {{"type", "integer"}}},
                   {"marked", {{"type", "boolean"}}},
                   {"vertices", array_of(object({{"id", {{"type", "integer"}}}, {"depth", index_list()}}, {"id", "depth"}))},
                   {"edges", array_of(object({{"a", {{"type", "integer"}}},
                                              {"b", {{"type", "integer"}}},
                                              {"depthE", index_list()},
                                              {"contact", contact}},
                                             {"a", "b", "depthE", "contact"}))},
                   {"root", {{"type", "integer"}}},
                   {"legs", array_of(object({{"vertex", {{"type", "integer"}}}, {"label", {{"type", "integer"}}}}, {"vertex"}))},
                   {"deg_x0", {{"type", "integer"}}}},
                  {"k", "vertices", "edges", "root", "deg_x0"});
  }
  if (kind == "energy-params") {
    return object({{"kappa", array_of(rational_schema())}, {"eps1", rational_schema()}, {"epsPert", array_of(rational_schema())}},
                  {"kappa", "eps1"});
  }
  if (kind == "orbit") {
    return object({{"v", array_of({{"type", "integer"}, {"minimum", 0}})}, {"component", {{"type", "integer"}}}}, {"v"});
  }
  if (kind == "chord") {
    return object({{"y", {{"type", "integer"}}},
                   {"I", index_list()},
                   {"alpha0", array_of(rational_schema())},
                   {"alpha1", array_of(rational_schema())},
                   {"v", array_of({{"type", "integer"}, {"minimum", 0}})},
                   {"f0", rational_schema()},
                   {"f1", rational_schema()}},
                  {"I", "alpha0", "alpha1", "v", "f0", "f1"});
  }
  if (kind == "manifest") {
    return object({{"jobs", array_of(object({{"args", array_of({{"type", "string"}})}}, {"args"}))}}, {"jobs"});
  }
  throw std::logic_error("no schema named " + kind);
}

}  // namespace logcy::io
