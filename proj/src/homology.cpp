#include "logcy/homology.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <thread>

#include "logcy/errors.hpp"

namespace logcy {

Field Field::fp(std::uint32_t p) {
  if (!is_prime(p)) throw InputError("F_p needs a prime p, got " + std::to_string(p));
  return {p};
}

std::string Field::name() const { return prime == 0 ? "Q" : "F" + std::to_string(prime); }

long BettiTable::at(int i) const {
  if (i < first_degree || i > last_degree()) return 0;
  return betti[static_cast<std::size_t>(i - first_degree)];
}

long BettiTable::euler_characteristic() const {
  long chi = 0;
  for (int i = first_degree; i <= last_degree(); ++i) chi += (i % 2 == 0 ? 1 : -1) * at(i);
  return chi;
}

linalg::SparseMatrix boundary_matrix(const SimplicialComplex& cx, int d) {
  std::vector<VertexSet> src = cx.faces_of_dimension(d);
  std::vector<VertexSet> dst = cx.faces_of_dimension(d - 1);
  std::map<VertexSet, std::size_t> index;
  for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
  linalg::SparseMatrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    int k = 0;
    for (VertexSet rest = src[c]; rest; rest &= rest - 1, ++k) {
      VertexSet v = rest & (~rest + 1);
      m.set(index.at(src[c] & ~v), c, k % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

BettiTable reduced_homology(const SimplicialComplex& cx, Field field) {
  if (cx.empty()) throw InputError("homology of the void complex (no faces at all) is undefined");
  const int dim = cx.dimension();
  BettiTable out;
  out.field = field;
  out.first_degree = -1;
  // rank ∂_i for i = -1..dim+1; ∂_{-1} and ∂_{dim+1} vanish
  std::vector<std::size_t> ranks(static_cast<std::size_t>(dim) + 3, 0);
  for (int i = 0; i <= dim; ++i) {
    ranks[static_cast<std::size_t>(i + 1)] = linalg::rank(boundary_matrix(cx, i), field.prime);
  }
  for (int i = -1; i <= dim; ++i) {
    long chains = static_cast<long>(cx.faces_of_dimension(i).size());
    long b = chains - static_cast<long>(ranks[static_cast<std::size_t>(i + 1)]) -
             static_cast<long>(ranks[static_cast<std::size_t>(i + 2)]);
    out.betti.push_back(b);
  }
  return out;
}

BettiTable local_homology_at_face(const SimplicialComplex& cx, VertexSet face, Field field) {
  if (face == 0) throw InputError("local homology needs a nonempty face");
  if (!cx.contains(face)) throw InputError("local homology: " + face_to_string(face) + " is not a face");
  BettiTable lk = reduced_homology(cx.link(face), field);
  lk.first_degree += popcount(face);
  return lk;
}

namespace {

// b̃_i = 0 below `degree` and b̃_degree = 1
bool sphere_shaped(const BettiTable& b, int degree) {
  for (int i = b.first_degree; i < degree; ++i) {
    if (b.at(i) != 0) return false;
  }
  return b.at(degree) == 1;
}

std::vector<GorensteinFailure> link_failures(const SimplicialComplex& cx, Field field, unsigned workers) {
  const int d = cx.dimension();
  std::vector<VertexSet> faces;
  for (VertexSet f : cx.faces()) {
    if (f != 0) faces.push_back(f);
  }
  std::vector<std::optional<GorensteinFailure>> slot(faces.size());
  auto check = [&](std::size_t i) {
    VertexSet f = faces[i];
    int degree = d - popcount(f);  // d - j - 1 with j = |F| - 1
    BettiTable b = reduced_homology(cx.link(f), field);
    if (!sphere_shaped(b, degree)) slot[i] = GorensteinFailure{f, "link", degree, b.betti};
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(faces.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < faces.size(); ++i) check(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < faces.size(); i += workers) check(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<GorensteinFailure> out;
  for (auto& s : slot) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace

GorensteinReport gorenstein_verdict(const SimplicialComplex& cx, Field field, unsigned workers) {
  if (cx.empty()) throw InputError("Gorenstein test of the void complex");
  GorensteinReport r;
  r.dimension = cx.dimension();
  BettiTable whole = reduced_homology(cx, field);
  if (!sphere_shaped(whole, r.dimension)) {
    r.failures.push_back({0, "sphere", r.dimension, whole.betti});
  }
  for (auto& f : link_failures(cx, field, workers)) r.failures.push_back(std::move(f));
  r.core_equals_whole = cx.core() == cx;
  if (!r.core_equals_whole) {
    GorensteinFailure f;
    f.condition = "core";
    f.face = cx.vertex_support() & ~cx.core().vertex_support();
    f.degree = r.dimension;
    r.failures.push_back(f);
  }
  r.verdict = r.failures.empty() && r.core_equals_whole;
  return r;
}

bool is_homology_sphere(const SimplicialComplex& cx, Field field) {
  return sphere_shaped(reduced_homology(cx, field), cx.dimension());
}

bool is_homology_manifold(const SimplicialComplex& cx, Field field, unsigned workers) {
  if (cx.empty()) throw InputError("manifold test of the void complex");
  return link_failures(cx, field, workers).empty();
}

std::vector<std::vector<Integer>> boundary_elementary_divisors(const SimplicialComplex& cx) {
  std::vector<std::vector<Integer>> out;
  for (int d = 0; d <= cx.dimension(); ++d) out.push_back(linalg::elementary_divisors(boundary_matrix(cx, d).dense()));
  return out;
}

}  // namespace logcy
