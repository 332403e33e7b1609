#include "logcy/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "logcy/energy_filtration.hpp"
#include "logcy/errors.hpp"
#include "logcy/filtered_rees.hpp"
#include "logcy/homology.hpp"
#include "logcy/json_io.hpp"
#include "logcy/log_trees.hpp"
#include "logcy/mirror_examples.hpp"
#include "logcy/sr_algebra.hpp"

namespace logcy::cli {

using io::Json;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return out.str();
}

unsigned workers_from_env() {
  const char* env = std::getenv("LOGCY_WORKERS");
  if (!env) return 1;
  char* end = nullptr;
  long n = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || n < 1) return 1;
  return static_cast<unsigned>(std::min(n, 64L));
}

namespace {

// Every option any leaf command understands; each leaf binds the subset it uses.
struct Options {
  bool schema = false;
  std::string faces, config, pres, sr_config, tree, params, input, manifest;
  std::string field = "Q";
  std::string face;
  std::string lhs, rhs;
  std::string bound;
  std::string t;
  std::string vars, weights;
  std::vector<std::string> gens;
  std::string flip;
  std::string mode = "symbolic", coeffs, check = "admissible", perturbation;
  int n = 2;
  long na = 1, nb = 1;
  int box = 4;
  bool smooth = false, gr = false;
  bool require_degree_one = false;
  long codim = -1;
  std::string output, select;
};

class Context {
 public:
  Context(const RunOptions& o, unsigned workers) : base_(o.base), workers_(workers) {}

  unsigned workers() const { return workers_; }
  const std::filesystem::path& base() const { return base_; }

  std::filesystem::path resolve(const std::string& path) const {
    std::filesystem::path p(path);
    return p.is_absolute() ? p : base_ / p;
  }

  Json load(const std::string& path, const std::string& flag) {
    if (path.empty()) throw InputError("missing " + flag);
    auto full = resolve(path);
    std::ifstream in(full, std::ios::binary);
    if (!in) throw InputError("cannot read " + flag + " file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    loaded_[path] = sha256_hex(text);
    return io::parse_json(text, path);
  }

  /// Raw arguments with input paths replaced by the digest of their contents.
  std::string digest(const std::vector<std::string>& args) const {
    std::string joined;
    for (std::size_t i = 0; i < args.size(); ++i) {
      const std::string& a = args[i];
      // where the report goes is not an input
      if (a == "--output") {
        ++i;
        continue;
      }
      if (a.rfind("--output=", 0) == 0) continue;
      std::string token = a;
      auto it = loaded_.find(a);
      if (it != loaded_.end()) {
        token = "sha256:" + it->second;
      } else if (auto eq = a.find('='); a.rfind("--", 0) == 0 && eq != std::string::npos) {
        auto jt = loaded_.find(a.substr(eq + 1));
        if (jt != loaded_.end()) token = a.substr(0, eq + 1) + "sha256:" + jt->second;
      }
      joined += token;
      joined.push_back('\0');
    }
    return sha256_hex(joined);
  }

 private:
  std::filesystem::path base_;
  unsigned workers_;
  std::map<std::string, std::string> loaded_;
};

using Handler = std::function<Json(const Options&, Context&)>;
using SchemaFn = std::function<Json()>;

struct Leaf {
  CLI::App* app;
  std::string path;
  Handler handler;
  SchemaFn schema;
};

// ---- shared parsing helpers ----

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  for (auto& x : out) {
    auto b = x.find_first_not_of(" \t");
    auto e = x.find_last_not_of(" \t");
    x = b == std::string::npos ? "" : x.substr(b, e - b + 1);
  }
  return out;
}

Rational rational_arg(const std::string& text, const std::string& flag) {
  if (text.empty()) throw InputError("missing " + flag);
  return parse_rational(text);
}

Rational positive_bound(const std::string& text, const std::string& fallback) {
  Rational b = rational_arg(text.empty() ? fallback : text, "--bound");
  if (sgn(b) < 0) throw InputError("--bound must be nonnegative");
  return b;
}

Field field_arg(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.size() > 1 && text[0] == 'F') {
    try {
      std::size_t used = 0;
      unsigned long p = std::stoul(text.substr(1), &used);
      if (used == text.size() - 1) return Field::fp(static_cast<std::uint32_t>(p));
    } catch (const std::logic_error&) {
    }
  }
  throw InputError("--field must be Q or F<p>, e.g. F2; got " + text);
}

Json hilbert_json(const std::map<Rational, std::size_t>& h) {
  Json out = Json::array();
  for (const auto& [w, d] : h) out.push_back({{"weight", io::rational_to(w)}, {"dim", d}});
  return out;
}

Json polys_json(const std::vector<poly::QPolynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Json theta_json(const DivisorConfiguration& config, const ThetaElement& f) {
  Json terms = Json::array();
  for (const auto& [x, c] : f.ordered_terms(config)) {
    terms.push_back({{"v", x.v.v},
                     {"component", config.component_ids(x.v.support())[static_cast<std::size_t>(x.c)]},
                     {"coeff", io::rational_to(c)}});
  }
  return {{"text", f.is_zero() ? "0" : f.to_string(config)}, {"terms", terms}};
}

SimplicialComplex load_complex(const Options& o, Context& ctx) { return io::complex_from(ctx.load(o.faces, "--faces")); }
DivisorConfiguration load_config(const std::string& path, const std::string& flag, Context& ctx) {
  return io::config_from(ctx.load(path, flag));
}

WeightedPresentation load_presentation(const Options& o, Context& ctx) {
  if (!o.pres.empty()) return io::presentation_from(ctx.load(o.pres, "--pres"));
  if (o.vars.empty()) throw InputError("give --pres or --vars/--weights/--gens");
  auto vars = split(o.vars, ',');
  std::vector<Rational> w;
  if (o.weights.empty()) {
    w.assign(vars.size(), Rational(1));
  } else {
    for (const auto& x : split(o.weights, ',')) w.push_back(parse_rational(x));
  }
  std::vector<std::string> rel;
  for (const auto& g : o.gens) {
    for (const auto& piece : split(g, ';')) {
      if (!piece.empty()) rel.push_back(piece);
    }
  }
  return WeightedPresentation::make(vars, w, rel);
}

Json gorenstein_json(const GorensteinReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"face", io::index_set_to(f.face)}, {"condition", f.condition}, {"degree", f.degree}, {"found", f.found}});
  }
  return {{"verdict", r.verdict}, {"dimension", r.dimension}, {"core_equals_whole", r.core_equals_whole},
          {"failures", failures}};
}

Json betti_json(const BettiTable& b) {
  return {{"field", b.field.name()}, {"first_degree", b.first_degree}, {"betti", b.betti},
          {"euler_characteristic", b.euler_characteristic()}};
}

Json schema_pair(const std::string& params) {
  return {{"params", io::schema_for("energy-params")}, {"input", io::schema_for(params)}};
}

Json vector_input_schema() {
  return {{"type", "object"},
          {"properties", {{"v", {{"type", "array"}, {"items", {{"type", "integer"}, {"minimum", 0}}}}}}},
          {"required", {"v"}}};
}

// ---- complex ----

Json complex_homology(const Options& o, Context& ctx) {
  return betti_json(reduced_homology(load_complex(o, ctx), field_arg(o.field)));
}

Json complex_gorenstein(const Options& o, Context& ctx) {
  return gorenstein_json(gorenstein_verdict(load_complex(o, ctx), field_arg(o.field), ctx.workers()));
}

Json complex_link(const Options& o, Context& ctx) {
  auto cx = load_complex(o, ctx);
  if (o.face.empty()) throw InputError("missing --face");
  Json labels = Json::array();
  for (const auto& x : split(o.face, ',')) {
    try {
      labels.push_back(std::stol(x));
    } catch (const std::logic_error&) {
      throw InputError("--face must list 1-based vertices, e.g. 1,2");
    }
  }
  VertexSet f = io::index_set_from(labels, cx.vertex_count(), "--face");
  if (!cx.contains(f)) throw InputError("--face " + face_to_string(f) + " is not a face of the complex");
  auto lk = cx.link(f);
  return {{"face", io::index_set_to(f)}, {"link", io::complex_to(lk)},
          {"reduced_betti", betti_json(reduced_homology(lk, field_arg(o.field)))}};
}

Json complex_core(const Options& o, Context& ctx) {
  auto cx = load_complex(o, ctx);
  auto core = cx.core();
  return {{"core", io::complex_to(core)}, {"removed", io::index_set_to(cx.vertex_support() & ~core.vertex_support())},
          {"core_equals_whole", core == cx}};
}

// ---- sr ----

std::uint32_t prime_of(const std::string& field) {
  Field f = field_arg(field);
  return f.prime;
}

Json sr_multiply(const Options& o, Context& ctx) {
  auto config = load_config(o.config, "--config", ctx);
  if (o.lhs.empty() || o.rhs.empty()) throw InputError("missing --lhs or --rhs");
  const auto p = prime_of(o.field);
  auto f = parse_theta(config, o.lhs, p), g = parse_theta(config, o.rhs, p);
  return {{"lhs", theta_json(config, f)}, {"rhs", theta_json(config, g)}, {"product", theta_json(config, multiply(config, f, g))}};
}

Json sr_hilbert(const Options& o, Context& ctx) {
  auto config = load_config(o.config, "--config", ctx);
  auto bound = positive_bound(o.bound, "");
  return {{"bound", io::rational_to(bound)}, {"graded_dimension", hilbert_json(graded_dimension(config, bound))}};
}

Json sr_present(const Options& o, Context& ctx) {
  auto config = load_config(o.config, "--config", ctx);
  auto cx = dual_complex(config);
  auto p = sr_presentation(cx, config.kappa());
  Json nonfaces = Json::array();
  for (VertexSet s : cx.minimal_non_faces()) nonfaces.push_back(io::index_set_to(s));
  return {{"dual_complex", io::complex_to(cx)}, {"minimal_non_faces", nonfaces}, {"presentation", io::presentation_to(p)}};
}

// ---- ring ----

Json ring_grob(const Options& o, Context& ctx) {
  auto p = load_presentation(o, ctx);
  Json out = {{"vars", p.vars()}, {"weights", io::rationals_to(p.weights())}, {"basis", polys_json(p.groebner_basis())}};
  if (!o.bound.empty()) out["hilbert_function"] = hilbert_json(p.hilbert_function(positive_bound(o.bound, "")));
  return out;
}

Json ring_gr(const Options& o, Context& ctx) {
  auto p = load_presentation(o, ctx);
  auto gr = associated_graded(p);
  Json out = {{"gr", io::presentation_to(gr)}};
  if (!o.bound.empty()) out["hilbert_function"] = hilbert_json(gr.hilbert_function(positive_bound(o.bound, "")));
  return out;
}

Json ring_rees(const Options& o, Context& ctx) {
  auto r = rees_algebra(load_presentation(o, ctx));
  return {{"rees", io::presentation_to(r.presentation)}, {"t", r.t_name}, {"scale", r.scale.get_str()},
          {"original_weights", io::rationals_to(r.original_weights)}};
}

Json ring_fiber(const Options& o, Context& ctx) {
  auto p = load_presentation(o, ctx);
  auto c = rational_arg(o.t, "--t");
  auto f = fiber_at(rees_algebra(p), c);
  Json out = {{"t", io::rational_to(c)}, {"fiber", io::presentation_to(f)}};
  if (!o.bound.empty()) out["hilbert_function"] = hilbert_json(f.hilbert_function(positive_bound(o.bound, "")));
  return out;
}

// the complex whose Stanley–Reisner ideal is generated by `basis`, if every
// element is a squarefree monomial with coefficient 1
std::optional<SimplicialComplex> stanley_reisner_complex(const std::vector<poly::QPolynomial>& basis, int n) {
  std::vector<VertexSet> nonfaces;
  for (const auto& g : basis) {
    if (g.term_count() != 1 || g.leading_coefficient() != 1) return std::nullopt;
    VertexSet s = 0;
    for (std::size_t i = 0; i < g.leading_monomial().size(); ++i) {
      auto e = g.leading_monomial().e[i];
      if (e > 1) return std::nullopt;
      if (e == 1) s |= VertexSet{1} << i;
    }
    if (s == 0) return std::nullopt;
    nonfaces.push_back(s);
  }
  std::vector<VertexSet> faces;
  for (VertexSet f = 0; f < (VertexSet{1} << n); ++f) {
    bool ok = std::none_of(nonfaces.begin(), nonfaces.end(), [&](VertexSet m) { return is_subset(m, f); });
    if (ok) faces.push_back(f);
  }
  return SimplicialComplex::from_faces(n, faces);
}

Json ring_degenerate(const Options& o, Context& ctx) {
  auto p = load_presentation(o, ctx);
  if (o.require_degree_one && !p.all_weights_one()) {
    throw InputError("--require-degree-one: the presentation has generators of weight other than 1");
  }
  auto config = load_config(o.sr_config, "--sr-config", ctx);
  auto bound = positive_bound(o.bound, "8");
  auto cx = dual_complex(config);
  auto gr = associated_graded(p);
  auto h_gr = gr.hilbert_function(bound);
  auto h_sr = sr_presentation(cx, config.kappa()).hilbert_function(bound);
  auto h_theta = graded_dimension(config, bound);

  Json out = {{"bound", io::rational_to(bound)},
              {"gr", io::presentation_to(gr)},
              {"hilbert_gr", hilbert_json(h_gr)},
              {"hilbert_sr", hilbert_json(h_sr)},
              {"graded_dimension", hilbert_json(h_theta)},
              {"hilbert_agree", h_gr == h_sr && h_sr == h_theta}};

  bool recognized = false;
  if (static_cast<int>(p.vars().size()) == config.k() && p.weights() == config.kappa()) {
    auto gcx = stanley_reisner_complex(gr.groebner_basis(), config.k());
    recognized = gcx && *gcx == cx;
  }
  out["gr_is_stanley_reisner"] = recognized;
  if (recognized) {
    auto report = gorenstein_verdict(cx, Field::rationals(), ctx.workers());
    out["gorenstein"] = gorenstein_json(report);
    out["conclusion"] = report.verdict ? "gr is Gorenstein by the homology criterion, hence A is Gorenstein"
                                       : "gr fails the homology criterion; no conclusion for A";
  } else {
    out["gorenstein"] = nullptr;
    out["conclusion"] = "gr is not the Stanley-Reisner ring of the configuration; no conclusion for A";
  }
  return out;
}

Json ring_smooth(const Options& o, Context& ctx) {
  auto p = load_presentation(o, ctx);
  std::size_t codim = o.codim < 0 ? p.relations.size() : static_cast<std::size_t>(o.codim);
  auto cert = poly::jacobian_smooth(p.ideal(), codim);
  Json out = {{"smooth", cert.smooth}, {"minor_count", cert.minor_count}};
  if (cert.smooth) {
    auto one = poly::combine(cert.cofactors, cert.generators);
    out["replays_to_one"] = one == poly::QPolynomial::constant(one.ring(), 1);
    out["certificate"] = {{"generators", polys_json(cert.generators)}, {"cofactors", polys_json(cert.cofactors)}};
  }
  return out;
}

// ---- tree ----

LogPssTree load_tree(const Options& o, Context& ctx) { return io::tree_from(ctx.load(o.tree, "--tree")); }

std::vector<bool> flip_arg(const LogPssTree& t, const std::string& text) {
  std::vector<bool> flip(t.edges.size(), false);
  if (text.empty()) return flip;
  for (const auto& x : split(text, ',')) {
    long e = 0;
    try {
      e = std::stol(x);
    } catch (const std::logic_error&) {
      throw InputError("--flip lists 1-based edge numbers");
    }
    if (e < 1 || static_cast<std::size_t>(e) > flip.size()) throw InputError("--flip edge " + x + " out of range");
    flip[static_cast<std::size_t>(e - 1)] = true;
  }
  return flip;
}

void require_valid(const LogPssTree& t) {
  auto v = validate(t);
  if (!v.empty()) throw InputError("invalid tree: " + v[0].where + ": " + v[0].clause);
}

Json tree_validate(const Options& o, Context& ctx) {
  auto t = load_tree(o, ctx);
  Json violations = Json::array();
  for (const auto& v : validate(t)) violations.push_back({{"where", v.where}, {"clause", v.clause}});
  return {{"valid", violations.empty()}, {"violations", violations}};
}

Json tree_rho(const Options& o, Context& ctx) {
  auto t = load_tree(o, ctx);
  auto rho = build_rho(t, flip_arg(t, o.flip));
  Json matrix = Json::array();
  for (const auto& row : rho.matrix.dense()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    matrix.push_back(r);
  }
  auto label = [&](const std::pair<std::size_t, int>& c, bool column) -> Json {
    if (column && c.second < 0) return {{"edge", c.first + 1}};
    if (column) return {{"vertex", t.vertices[c.first].id}, {"index", c.second + 1}};
    return {{"edge", c.first + 1}, {"index", c.second + 1}};
  };
  Json rows = Json::array(), cols = Json::array();
  for (const auto& r : rho.rows) rows.push_back(label(r, false));
  for (const auto& c : rho.columns) cols.push_back(label(c, true));
  return {{"matrix", matrix}, {"rows", rows}, {"columns", cols}};
}

Json tree_vdim(const Options& o, Context& ctx) {
  auto t = load_tree(o, ctx);
  auto d = tree_dimensions(t, flip_arg(t, o.flip));
  return {{"rank", d.rank},
          {"kernel_dim", d.kernel_dim},
          {"obstruction_dim", d.obstruction_dim},
          {"obstruction_dim_rank", d.obstruction_dim_rank},
          {"vdim_plog", d.vdim_plog},
          {"vdim_log", d.vdim_log}};
}

Json tree_feasible(const Options& o, Context& ctx) {
  auto t = load_tree(o, ctx);
  require_valid(t);
  auto cert = balancing_feasible(t);
  if (!cert) return {{"feasible", false}, {"certificate", nullptr}};
  Json v = Json::array();
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    v.push_back({{"vertex", t.vertices[i].id}, {"v", io::rationals_to(cert->v[i])}});
  }
  return {{"feasible", true},
          {"verified", verify_certificate(t, *cert)},
          {"certificate", {{"v", v}, {"lambda", io::rationals_to(cert->lambda)}, {"delta", io::rational_to(cert->delta)}}}};
}

// ---- energy ----

Json energy_run(const std::string& which, const Options& o, Context& ctx) {
  auto p = io::energy_params_from(ctx.load(o.params, "--params"));
  Json in = ctx.load(o.input, "--input");
  if (!in.is_object()) throw InputError("--input must be a JSON object");
  const std::size_t k = p.k();
  auto vec = [&](const char* key) {
    auto it = in.find(key);
    if (it == in.end()) throw InputError(std::string("--input is missing \"") + key + "\"");
    return io::multi_index_from(*it, k, key);
  };
  if (which == "winding") return {{"w", io::rational_to(weighted_winding(p, vec("v")))}};
  if (which == "orbit-action") return {{"action", io::rational_to(orbit_action_approx(p, vec("v")))}};
  if (which == "pss") {
    auto v = vec("v");
    auto x0it = in.find("x0");
    if (x0it == in.end()) throw InputError("--input is missing \"x0\"");
    auto x0 = io::orbit_from(*x0it, k);
    Rational action = orbit_action_approx(p, x0.v);
    if (auto a = in.find("orbit_action"); a != in.end()) action = io::rational_from(*a, "orbit_action");
    return {{"energy", io::rational_to(pss_energy(p, v, action))},
            {"energy_approx", io::rational_to(pss_energy_approx(p, v, x0))}};
  }
  auto c = io::chord_from(in, k);
  if (which == "chord-weight") {
    return {{"weight", io::rational_to(chord_weight(p, c))}, {"short_winding", short_chord_winding(c, k).v}};
  }
  return {{"action_approx", io::rational_to(chord_action_approx(p, c))}, {"weight", io::rational_to(chord_weight(p, c))}};
}

// ---- example ----

Json exponent_json(const examples::Exponent4& e) {
  static const char* names[] = {"x1", "x2", "x3", "u"};
  std::string text;
  for (int i = 0; i < 4; ++i) {
    if (e[static_cast<std::size_t>(i)] == 0) continue;
    if (!text.empty()) text += "*";
    text += names[i];
    if (e[static_cast<std::size_t>(i)] > 1) text += "^" + std::to_string(e[static_cast<std::size_t>(i)]);
  }
  return text.empty() ? "1" : text;
}

Json example_conic(const Options& o, Context&) {
  examples::ConicBundleFixture f{o.n, o.na, o.nb, {}};
  auto p = examples::conic_bundle_presentation(f);
  Json out = {{"presentation", io::presentation_to(p)}};
  if (o.smooth) {
    auto checks = examples::conic_bundle_smooth_check(f, o.n);
    const auto& c = checks.back();
    out["smooth"] = {{"smooth", c.smooth}, {"replays_to_one", c.replays_to_one}, {"minor_count", c.minor_count}};
  }
  if (o.gr) {
    auto gr = associated_graded(p);
    out["gr"] = io::presentation_to(gr);
    out["hilbert_function"] = hilbert_json(gr.hilbert_function(positive_bound(o.bound, "10")));
  }
  return out;
}

Json example_appc(const Options& o, Context&) {
  if (o.check == "admissible") {
    auto found = examples::mirror_family_admissible_monomials(o.box);
    auto expected = examples::mirror_family_expected_monomials();
    Json mons = Json::array();
    for (const auto& e : found) mons.push_back(exponent_json(e));
    std::sort(found.begin(), found.end());
    std::sort(expected.begin(), expected.end());
    return {{"box", o.box}, {"monomials", mons}, {"matches_expected", found == expected}};
  }
  if (o.check == "singular-line") {
    examples::SingularLineReport r;
    if (o.mode == "symbolic") {
      r = examples::mirror_family_singular_line_symbolic(o.perturbation);
    } else if (o.mode == "numeric") {
      std::vector<Rational> coeffs;
      if (o.coeffs.empty()) throw InputError("numeric mode needs --coeffs a1,...,a7");
      for (const auto& x : split(o.coeffs, ',')) coeffs.push_back(parse_rational(x));
      r = examples::mirror_family_singular_line_numeric(coeffs, o.perturbation);
    } else {
      throw InputError("--mode must be symbolic or numeric");
    }
    Json res = Json::object();
    static const char* names[] = {"f", "d/dx1", "d/dx2", "d/dx3", "d/du"};
    for (std::size_t i = 0; i < 5; ++i) res[names[i]] = r.residuals[i];
    return {{"mode", o.mode}, {"vanishes", r.vanishes}, {"residuals", res}};
  }
  if (o.check == "sr") {
    auto bound = positive_bound(o.bound, "5");
    auto p = examples::mirror_family_sr_presentation();
    auto h = p.hilbert_function(bound);
    auto g = graded_dimension(examples::mirror_family_configuration(), bound);
    return {{"presentation", io::presentation_to(p)}, {"hilbert_function", hilbert_json(h)},
            {"graded_dimension", hilbert_json(g)}, {"agree", h == g}};
  }
  throw InputError("--check must be admissible, singular-line or sr");
}

// ---- batch ----

Json batch_schema() { return io::schema_for("manifest"); }

struct BatchOutcome {
  int exit_code = 0;
  Json report;
};

std::pair<Json, int> run_batch(const Options& o, Context& ctx) {
  Json manifest = ctx.load(o.manifest, "--manifest");
  const Json* jobs_ptr = manifest.is_array() ? &manifest : nullptr;
  if (!jobs_ptr) {
    auto it = manifest.is_object() ? manifest.find("jobs") : manifest.end();
    if (!manifest.is_object() || it == manifest.end() || !it->is_array()) {
      throw InputError("manifest must be {\"jobs\": [{\"args\": [...]}, ...]}");
    }
    jobs_ptr = &*it;
  }
  std::vector<std::vector<std::string>> jobs;
  for (const auto& j : *jobs_ptr) {
    std::vector<std::string> args;
    const Json* a = j.is_array() ? &j : (j.is_object() && j.contains("args") ? &j["args"] : nullptr);
    if (!a || !a->is_array()) throw InputError("each manifest job needs an \"args\" array");
    for (const auto& x : *a) {
      if (!x.is_string()) throw InputError("manifest job args must be strings");
      args.push_back(x.get<std::string>());
    }
    jobs.push_back(std::move(args));
  }

  RunOptions sub;
  sub.base = ctx.resolve(o.manifest).parent_path();
  sub.workers = 1;
  std::vector<BatchOutcome> outcomes(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      if (!jobs[i].empty() && jobs[i][0] == "batch") {
        outcomes[i] = {kExitInput, {{"error", {{"kind", "input"}, {"message", "nested batch jobs are not allowed"}}}}};
        continue;
      }
      auto r = run(jobs[i], sub);
      outcomes[i].exit_code = r.exit_code;
      outcomes[i].report = Json::parse(r.output);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(ctx.workers(), static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  int code = kExitOk;
  Json reports = Json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    code = std::max(code, outcomes[i].exit_code);
    reports.push_back({{"index", i}, {"exit_code", outcomes[i].exit_code}, {"report", outcomes[i].report}});
  }
  return {{{"jobs", reports}}, code};
}

// ---- wiring ----

void bind_file(CLI::App* app, const std::string& flag, std::string& target, const std::string& help) {
  app->add_option(flag, target, help);
}

Json error_report(const std::string& subcommand, const std::string& kind, const std::string& message) {
  return {{"subcommand", subcommand}, {"error", {{"kind", kind}, {"message", message}}}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json select_path(const Json& result, const std::string& path) {
  const Json* cur = &result;
  for (const auto& key : split(path, '.')) {
    if (!cur->is_object() || !cur->contains(key)) throw InputError("--select: no field \"" + key + "\" in the result");
    cur = &(*cur)[key];
  }
  return *cur;
}

}  // namespace

RunResult run(const std::vector<std::string>& args, const RunOptions& options) {
  Options o;
  CLI::App app{"Exact combinatorics and commutative algebra for log Calabi-Yau mirror constructions", "logcy"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", o.output, "write the report to this file instead of stdout");
  app.add_option("--select", o.select, "report only this dotted field of the result");

  std::vector<Leaf> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h, SchemaFn s) {
    CLI::App* a = parent->add_subcommand(name, help);
    a->add_flag("--schema", o.schema, "print the input JSON schema and exit");
    leaves.push_back({a, parent->get_name() + " " + name, std::move(h), std::move(s)});
    return a;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  {
    auto* g = group("complex", "simplicial complexes given as facet lists");
    auto complex_schema = [] { return io::schema_for("complex"); };
    auto* h = leaf(g, "homology", "reduced Betti numbers", complex_homology, complex_schema);
    auto* gor = leaf(g, "gorenstein", "homology criterion for the Stanley-Reisner ring", complex_gorenstein, complex_schema);
    auto* lk = leaf(g, "link", "link of a face", complex_link, complex_schema);
    auto* core = leaf(g, "core", "core subcomplex", complex_core, complex_schema);
    for (auto* a : {h, gor, lk, core}) bind_file(a, "--faces", o.faces, "complex JSON");
    for (auto* a : {h, gor, lk}) a->add_option("--field", o.field, "Q or F<p>");
    lk->add_option("--face", o.face, "1-based vertices, e.g. 1,2");
  }
  {
    auto* g = group("sr", "Stanley-Reisner theta rings");
    auto config_schema = [] { return io::schema_for("config"); };
    auto* m = leaf(g, "multiply", "product of theta expressions", sr_multiply, config_schema);
    auto* h = leaf(g, "hilbert", "graded dimensions by weight", sr_hilbert, config_schema);
    auto* p = leaf(g, "present", "Stanley-Reisner presentation of the dual complex", sr_present, config_schema);
    for (auto* a : {m, h, p}) bind_file(a, "--config", o.config, "divisor configuration JSON");
    m->add_option("--lhs", o.lhs);
    m->add_option("--rhs", o.rhs);
    m->add_option("--field", o.field, "Q or F<p>");
    h->add_option("--bound", o.bound, "weight bound");
  }
  {
    auto* g = group("ring", "weighted presentations, Groebner bases and degenerations");
    auto pres_schema = [] { return io::schema_for("presentation"); };
    auto* grob = leaf(g, "grob", "reduced Groebner basis", ring_grob, pres_schema);
    auto* gr = leaf(g, "gr", "associated graded ring", ring_gr, pres_schema);
    auto* rees = leaf(g, "rees", "Rees algebra", ring_rees, pres_schema);
    auto* fib = leaf(g, "fiber", "fiber of the Rees family at t = c", ring_fiber, pres_schema);
    auto* deg = leaf(g, "degenerate", "compare gr with a Stanley-Reisner configuration", ring_degenerate, [] {
      return Json{{"pres", io::schema_for("presentation")}, {"sr-config", io::schema_for("config")}};
    });
    auto* sm = leaf(g, "smooth", "Jacobian criterion certificate", ring_smooth, pres_schema);
    for (auto* a : {grob, gr, rees, fib, deg, sm}) {
      bind_file(a, "--pres", o.pres, "presentation JSON");
      a->add_option("--vars", o.vars, "comma-separated variables");
      a->add_option("--weights", o.weights, "comma-separated rational weights");
      a->add_option("--gens", o.gens, "relations; several values or ';'-separated");
    }
    for (auto* a : {grob, gr, fib, deg}) a->add_option("--bound", o.bound, "weight bound for Hilbert functions");
    fib->add_option("--t", o.t, "rational value of t");
    bind_file(deg, "--sr-config", o.sr_config, "divisor configuration JSON");
    deg->add_flag("--require-degree-one", o.require_degree_one, "reject generators of weight other than 1");
    sm->add_option("--codim", o.codim, "expected codimension (default: number of relations)");
  }
  {
    auto* g = group("tree", "log-PSS trees");
    auto tree_schema = [] { return io::schema_for("tree"); };
    auto* v = leaf(g, "validate", "check the tree conditions", tree_validate, tree_schema);
    auto* r = leaf(g, "rho", "the rho matrix", tree_rho, tree_schema);
    auto* d = leaf(g, "vdim", "kernel, obstruction and virtual dimensions", tree_vdim, tree_schema);
    auto* f = leaf(g, "feasible", "balancing certificate by exact LP", tree_feasible, tree_schema);
    for (auto* a : {v, r, d, f}) bind_file(a, "--tree", o.tree, "tree JSON");
    for (auto* a : {r, d}) a->add_option("--flip", o.flip, "1-based edges to orient b->a");
  }
  {
    auto* g = group("energy", "action and energy arithmetic");
    const std::vector<std::pair<std::string, std::string>> names = {
        {"winding", "vector"}, {"orbit-action", "vector"}, {"pss", "pss"}, {"chord-weight", "chord"}, {"chord-action", "chord"}};
    for (const auto& [name, kind] : names) {
      SchemaFn schema;
      if (kind == "vector") {
        schema = [] { return Json{{"params", io::schema_for("energy-params")}, {"input", vector_input_schema()}}; };
      } else if (kind == "pss") {
        schema = [] {
          Json in = vector_input_schema();
          in["properties"]["x0"] = io::schema_for("orbit");
          in["properties"]["orbit_action"] = {{"type", {"string", "integer"}}};
          in["required"] = {"v", "x0"};
          return Json{{"params", io::schema_for("energy-params")}, {"input", in}};
        };
      } else {
        schema = [] { return schema_pair("chord"); };
      }
      std::string which = name;
      auto* a = leaf(g, name, name, [which](const Options& oo, Context& c) { return energy_run(which, oo, c); }, schema);
      bind_file(a, "--params", o.params, "energy parameters JSON");
      bind_file(a, "--input", o.input, "input JSON");
    }
  }
  {
    auto* g = group("example", "worked polynomial examples");
    auto none = [] { return Json{{"type", "null"}, {"description", "no input file"}}; };
    auto* c = leaf(g, "conic", "conic bundle family", example_conic, none);
    c->add_option("--n", o.n);
    c->add_option("--na", o.na);
    c->add_option("--nb", o.nb);
    c->add_flag("--smooth", o.smooth);
    c->add_flag("--gr", o.gr);
    c->add_option("--bound", o.bound);
    auto* a = leaf(g, "appc", "mirror family with a singular line", example_appc, none);
    a->add_option("--mode", o.mode, "symbolic or numeric");
    a->add_option("--coeffs", o.coeffs, "a1,...,a7 for numeric mode");
    a->add_option("--check", o.check, "admissible, singular-line or sr");
    a->add_option("--perturbation", o.perturbation, "polynomial in x1,x2,x3,u added to f");
    a->add_option("--box", o.box, "search box for admissible monomials");
    a->add_option("--bound", o.bound, "weight bound for the sr check");
  }
  CLI::App* batch = app.add_subcommand("batch", "run a manifest of jobs");
  batch->add_flag("--schema", o.schema, "print the manifest schema and exit");
  bind_file(batch, "--manifest", o.manifest, "manifest JSON");

  std::string subcommand;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    return {kExitOk, out.str()};
  } catch (const CLI::ParseError& e) {
    return {kExitInput, dump(error_report("", "usage", e.what()))};
  }

  Context ctx(options, options.workers ? options.workers : workers_from_env());
  Json result;
  int code = kExitOk;
  try {
    if (batch->parsed()) {
      subcommand = "batch";
      if (o.schema) return {kExitOk, dump(batch_schema())};
      std::tie(result, code) = run_batch(o, ctx);
    } else {
      const Leaf* chosen = nullptr;
      for (const auto& l : leaves) {
        if (l.app->parsed()) chosen = &l;
      }
      if (!chosen) return {kExitInput, dump(error_report("", "usage", "no subcommand given"))};
      subcommand = chosen->path;
      if (o.schema) return {kExitOk, dump(chosen->schema())};
      result = chosen->handler(o, ctx);
    }
    if (!o.select.empty()) result = select_path(result, o.select);
  } catch (const InputError& e) {
    return {kExitInput, dump(error_report(subcommand, "input", e.what()))};
  } catch (const UnsupportedError& e) {
    return {kExitUnsupported, dump(error_report(subcommand, "unsupported", e.what()))};
  } catch (const std::exception& e) {
    return {kExitInternal, dump(error_report(subcommand, "internal", e.what()))};
  }

  Json report = {{"subcommand", subcommand}, {"input_digest", ctx.digest(args)}, {"result", result}};
  std::string text = dump(report);
  if (!o.output.empty()) {
    std::ofstream out(ctx.resolve(o.output), std::ios::binary);
    if (!out) return {kExitInput, dump(error_report(subcommand, "input", "cannot write " + o.output))};
    out << text;
    return {code, ""};
  }
  return {code, text};
}

}  // namespace logcy::cli
