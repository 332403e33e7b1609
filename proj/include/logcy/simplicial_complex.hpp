#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace logcy {

/// Vertex subset of a complex on at most 64 vertices.
using VertexSet = std::uint64_t;

inline int popcount(VertexSet s) { return std::popcount(s); }
inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

/// Finite abstract simplicial complex on vertices 0..n-1, stored as the full
/// downward-closed face family. Faces are kept sorted so two complexes with
/// the same faces compare equal.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of the given facets. No facets gives the complex {∅}.
  static SimplicialComplex from_facets(int vertex_count, const std::vector<VertexSet>& facets);
  /// Takes an already downward-closed family; throws InputError otherwise.
  static SimplicialComplex from_faces(int vertex_count, std::vector<VertexSet> faces);

  /// The boundary of the simplex on n vertices (an (n-2)-sphere).
  static SimplicialComplex simplex_boundary(int n);
  /// The full simplex on n vertices.
  static SimplicialComplex simplex(int n);

  int vertex_count() const { return vertex_count_; }
  /// Maximum face dimension; -1 for {∅}. Calling on the void complex is an error.
  int dimension() const;
  bool empty() const { return faces_.empty(); }
  bool contains(VertexSet face) const;
  const std::vector<VertexSet>& faces() const { return faces_; }
  std::vector<VertexSet> faces_of_dimension(int d) const;
  std::vector<VertexSet> facets() const;
  /// Vertices that actually occur as 0-faces.
  VertexSet vertex_support() const;

  SimplicialComplex link(VertexSet face) const;
  /// Closed star: faces containing `face` and all their subfaces.
  SimplicialComplex star(VertexSet face) const;
  SimplicialComplex induced(VertexSet vertices) const;
  /// Subcomplex induced on vertices whose star is not the whole complex.
  SimplicialComplex core() const;
  /// Minimal subsets of the occurring vertex range 0..n-1 that are not faces.
  std::vector<VertexSet> minimal_non_faces() const;
  /// Cone with a new apex vertex n.
  SimplicialComplex cone() const;

  /// Alternating face count Σ (-1)^dim, including the empty face as -1.
  long reduced_euler_characteristic() const;

  bool operator==(const SimplicialComplex& o) const {
    return vertex_count_ == o.vertex_count_ && faces_ == o.faces_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<VertexSet> faces_;  // ascending numeric order
};

/// Renders a face as "{1,3}" using 1-based vertex labels.
std::string face_to_string(VertexSet face);

}  // namespace logcy
