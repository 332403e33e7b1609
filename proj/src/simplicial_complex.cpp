#include "logcy/simplicial_complex.hpp"

#include <algorithm>
#include <set>

#include "logcy/errors.hpp"

namespace logcy {

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > 63) throw InputError("complexes are limited to 63 vertices");
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int vertex_count,
                                                 const std::vector<VertexSet>& facets) {
  check_vertex_count(vertex_count);
  const VertexSet all = vertex_count == 0 ? 0 : ((VertexSet{1} << vertex_count) - 1);
  std::set<VertexSet> closure{0};
  for (VertexSet f : facets) {
    if (!is_subset(f, all)) throw InputError("facet uses a vertex outside 0..n-1");
    if (closure.count(f)) continue;
    // enumerate all submasks of f
    for (VertexSet s = f;; s = (s - 1) & f) {
      closure.insert(s);
      if (s == 0) break;
    }
  }
  SimplicialComplex cx;
  cx.vertex_count_ = vertex_count;
  cx.faces_.assign(closure.begin(), closure.end());
  return cx;
}

SimplicialComplex SimplicialComplex::from_faces(int vertex_count, std::vector<VertexSet> faces) {
  check_vertex_count(vertex_count);
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex cx;
  cx.vertex_count_ = vertex_count;
  cx.faces_ = std::move(faces);
  for (VertexSet f : cx.faces_) {
    for (int v = 0; v < vertex_count; ++v) {
      VertexSet bit = VertexSet{1} << v;
      if ((f & bit) && !cx.contains(f & ~bit)) {
        throw InputError("face family is not downward closed at " + face_to_string(f));
      }
    }
    if (f >> vertex_count) throw InputError("face uses a vertex outside 0..n-1");
  }
  return cx;
}

SimplicialComplex SimplicialComplex::simplex_boundary(int n) {
  std::vector<VertexSet> facets;
  const VertexSet all = (VertexSet{1} << n) - 1;
  for (int v = 0; v < n; ++v) facets.push_back(all & ~(VertexSet{1} << v));
  return from_facets(n, facets);
}

SimplicialComplex SimplicialComplex::simplex(int n) {
  return from_facets(n, {(VertexSet{1} << n) - 1});
}

int SimplicialComplex::dimension() const {
  if (faces_.empty()) throw InputError("the void complex has no dimension");
  int d = -1;
  for (VertexSet f : faces_) d = std::max(d, popcount(f) - 1);
  return d;
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face);
}

std::vector<VertexSet> SimplicialComplex::faces_of_dimension(int d) const {
  std::vector<VertexSet> out;
  for (VertexSet f : faces_) {
    if (popcount(f) == d + 1) out.push_back(f);
  }
  return out;
}

std::vector<VertexSet> SimplicialComplex::facets() const {
  std::vector<VertexSet> out;
  for (VertexSet f : faces_) {
    bool maximal = true;
    for (int v = 0; v < vertex_count_ && maximal; ++v) {
      VertexSet bit = VertexSet{1} << v;
      if (!(f & bit) && contains(f | bit)) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

VertexSet SimplicialComplex::vertex_support() const {
  VertexSet s = 0;
  for (VertexSet f : faces_) s |= f;
  return s;
}

SimplicialComplex SimplicialComplex::link(VertexSet face) const {
  if (!contains(face)) throw InputError("link: " + face_to_string(face) + " is not a face");
  SimplicialComplex out;
  out.vertex_count_ = vertex_count_;
  for (VertexSet g : faces_) {
    if ((g & face) == 0 && contains(g | face)) out.faces_.push_back(g);
  }
  return out;
}

SimplicialComplex SimplicialComplex::star(VertexSet face) const {
  if (!contains(face)) throw InputError("star: " + face_to_string(face) + " is not a face");
  SimplicialComplex out;
  out.vertex_count_ = vertex_count_;
  for (VertexSet g : faces_) {
    if (contains(g | face)) out.faces_.push_back(g);
  }
  return out;
}

SimplicialComplex SimplicialComplex::induced(VertexSet vertices) const {
  SimplicialComplex out;
  out.vertex_count_ = vertex_count_;
  for (VertexSet g : faces_) {
    if (is_subset(g, vertices)) out.faces_.push_back(g);
  }
  return out;
}

SimplicialComplex SimplicialComplex::core() const {
  VertexSet keep = 0;
  const VertexSet support = vertex_support();
  for (int v = 0; v < vertex_count_; ++v) {
    VertexSet bit = VertexSet{1} << v;
    if (!(support & bit)) continue;
    // star(v) is everything iff every face joins with v
    bool whole = std::all_of(faces_.begin(), faces_.end(),
                             [&](VertexSet g) { return contains(g | bit); });
    if (!whole) keep |= bit;
  }
  return induced(keep);
}

std::vector<VertexSet> SimplicialComplex::minimal_non_faces() const {
  std::set<VertexSet> out;
  for (VertexSet f : faces_) {
    for (int v = 0; v < vertex_count_; ++v) {
      VertexSet bit = VertexSet{1} << v;
      if (f & bit) continue;
      VertexSet s = f | bit;
      if (contains(s)) continue;
      bool minimal = true;
      for (int u = 0; u < vertex_count_ && minimal; ++u) {
        VertexSet ub = VertexSet{1} << u;
        if ((s & ub) && !contains(s & ~ub)) minimal = false;
      }
      if (minimal) out.insert(s);
    }
  }
  std::vector<VertexSet> result(out.begin(), out.end());
  std::sort(result.begin(), result.end(), [](VertexSet a, VertexSet b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  return result;
}

SimplicialComplex SimplicialComplex::cone() const {
  check_vertex_count(vertex_count_ + 1);
  const VertexSet apex = VertexSet{1} << vertex_count_;
  std::vector<VertexSet> facets_with_apex;
  for (VertexSet f : facets()) facets_with_apex.push_back(f | apex);
  return from_facets(vertex_count_ + 1, facets_with_apex);
}

long SimplicialComplex::reduced_euler_characteristic() const {
  long chi = 0;
  for (VertexSet f : faces_) chi += (popcount(f) % 2 == 1) ? 1 : -1;
  // Faces of dimension d contribute (-1)^d; popcount = d+1, so odd popcount is even d.
  return chi;
}

std::string face_to_string(VertexSet face) {
  std::string s = "{";
  bool first = true;
  for (int v = 0; v < 64; ++v) {
    if (face & (VertexSet{1} << v)) {
      if (!first) s += ",";
      s += std::to_string(v + 1);
      first = false;
    }
  }
  return s + "}";
}

}  // namespace logcy
