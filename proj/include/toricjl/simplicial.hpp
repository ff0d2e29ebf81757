// Finite abstract simplicial complexes on at most 64 vertices, stored as
// bitset faces grouped by size, with exact (reduced) simplicial homology.
#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricjl/field.hpp"
#include "toricjl/matrix.hpp"

namespace toricjl {

using Face = std::uint64_t;
using VertexSet = std::uint64_t;

constexpr std::size_t kMaxVertices = 64;

inline std::size_t face_size(Face f) { return static_cast<std::size_t>(std::popcount(f)); }
inline Face singleton(std::size_t v) { return Face(1) << v; }
inline VertexSet all_vertices(std::size_t n) { return n >= 64 ? ~VertexSet(0) : (VertexSet(1) << n) - 1; }
std::vector<std::size_t> face_vertices(Face f);

class SimplicialComplex;

/// Simple graph on vertices 0..n-1, adjacency kept as bitsets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n, std::vector<std::string> labels = {});

  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return (adj_[u] >> v) & 1; }
  VertexSet neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t vertex_count() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Connected components of the subgraph induced on `w`.
  std::size_t component_count(VertexSet w) const;
  bool connected(VertexSet w) const { return w == 0 || component_count(w) == 1; }

 private:
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<VertexSet> adj_;
};

/// Reduced homology over a field; dims[i + 1] = dim H~_i for i >= -1.
struct ReducedHomology {
  std::vector<std::size_t> dims;
  std::size_t operator()(long i) const {
    const long k = i + 1;
    return k >= 0 && k < static_cast<long>(dims.size()) ? dims[k] : 0;
  }
  bool acyclic_through(long top) const {
    for (long i = -1; i <= top; ++i)
      if ((*this)(i) != 0) return false;
    return true;
  }
};

/// Reduced integral homology; index i + 1 holds H~_i = Z^betti + torsion.
struct IntegralHomology {
  std::vector<std::size_t> betti;
  std::vector<std::vector<Integer>> torsion;
  bool vanishes(long i) const;
  /// Human-readable group, e.g. "Z^2 + Z/2" or "0".
  std::string group(long i) const;
};

class SimplicialComplex {
 public:
  /// The empty complex {∅} with no vertices.
  SimplicialComplex() : SimplicialComplex(0, {}) {}
  /// The empty complex {∅} with `n` ambient vertex slots (none of them faces).
  SimplicialComplex(std::size_t n, std::vector<std::string> labels);

  /// Downward closure of the given faces plus every vertex 0..n-1.
  static SimplicialComplex from_maximal_faces(const std::vector<std::vector<std::size_t>>& faces, std::size_t n,
                                              std::vector<std::string> labels = {});
  /// Downward closure of bitset faces; vertex set = union of the faces.
  static SimplicialComplex from_faces(const std::vector<Face>& faces, std::size_t n, std::vector<std::string> labels);

  /// Number of ambient vertex slots (vertices may be absent as faces in links).
  std::size_t ambient_size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  VertexSet vertices() const { return vertices_; }
  std::size_t vertex_count() const { return face_size(vertices_); }
  /// dim L = max |σ| - 1; -1 for {∅}.
  long dimension() const { return static_cast<long>(by_size_.size()) - 2; }

  bool contains(Face f) const;
  /// Faces with exactly `k` vertices, in increasing bitset order.
  const std::vector<Face>& faces(std::size_t k) const;
  std::size_t face_count(std::size_t k) const { return faces(k).size(); }
  /// Position of a face inside faces(|f|); throws if absent.
  std::size_t index_of(Face f) const;
  std::vector<Face> all_faces() const;
  std::vector<Face> maximal_faces() const;

  /// d_k(L) = number of faces with k vertices, k = 0..dim+1 (d_0 = 1 for ∅).
  std::vector<std::size_t> f_vector() const;

  SimplicialComplex induced(VertexSet w) const;
  /// lk_{L_W}(σ) = {τ ⊆ W : τ ∪ σ ∈ L}; σ must be a face disjoint from W.
  SimplicialComplex link(Face sigma, VertexSet w) const;
  SimplicialComplex link(Face sigma) const { return link(sigma, vertices_ & ~sigma); }

  Graph one_skeleton() const;
  bool is_flag() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) { return a.by_size_ == b.by_size_; }

  std::string face_label(Face f) const;

 private:
  static SimplicialComplex assemble(std::size_t n, std::vector<std::string> labels, std::vector<Face> closed);

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  VertexSet vertices_ = 0;
  std::vector<std::vector<Face>> by_size_;  // by_size_[k] sorted; by_size_[0] = {0}
};

SimplicialComplex flag_complex(const Graph& g);
/// Join with a fresh apex vertex appended at index ambient_size().
SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex_label);
/// Order complex of the nonempty faces; vertex labels join the face labels with '-'.
SimplicialComplex barycentric_subdivide(const SimplicialComplex& l);

/// Boundary of the chain complex from faces of size k to faces of size k-1,
/// rows indexed by faces(k-1) and columns by faces(k); ∂(v_0..v_m) = Σ (-1)^j (… v̂_j …).
/// For k = 1 this is the augmentation onto the ∅ face.
Matrix<Integer> boundary_matrix(const SimplicialComplex& l, std::size_t k);

ReducedHomology reduced_homology(const SimplicialComplex& l, const FieldSpec& k);
IntegralHomology reduced_homology_integral(const SimplicialComplex& l);
/// dim im(∂_{i+1}: C_{i+1} → C_i) in the unreduced chain complex.
std::size_t boundary_dim(const SimplicialComplex& l, std::size_t i, const FieldSpec& k);
/// d_k(L) for k = 0..dim+1; the Betti numbers of the toric complex T_L.
std::vector<std::size_t> toric_betti(const SimplicialComplex& l);

struct FlagificationDefect {
  std::optional<std::size_t> p;                 // nullopt = infinity (L is flag)
  std::optional<std::size_t> coinvariant_rank;  // d_{p+1}(Δ) - d_{p+1}(L)
};
FlagificationDefect flagification_defect(const SimplicialComplex& l);

/// Rank over k of an integer matrix reduced into the field.
std::size_t rank_over(const Matrix<Integer>& m, const FieldSpec& k);

}  // namespace toricjl
