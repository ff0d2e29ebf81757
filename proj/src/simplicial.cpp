#include "toricjl/simplicial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace toricjl {

std::vector<std::size_t> face_vertices(Face f) {
  std::vector<std::size_t> out;
  while (f) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(f)));
    f &= f - 1;
  }
  return out;
}

namespace {

std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels) {
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  if (labels.size() != n) throw std::invalid_argument("label count does not match vertex count");
  return labels;
}

void check_vertex_count(std::size_t n) {
  if (n > kMaxVertices)
    throw std::invalid_argument("complexes are limited to " + std::to_string(kMaxVertices) + " vertices");
}

void add_subfaces(Face f, std::vector<Face>& out) {
  for (Face s = f;; s = (s - 1) & f) {
    out.push_back(s);
    if (s == 0) break;
  }
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<std::string> labels)
    : n_(n), labels_(default_labels(n, std::move(labels))), adj_(n, 0) {
  check_vertex_count(n);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("graphs are simple: no loops");
  adj_[u] |= singleton(v);
  adj_[v] |= singleton(u);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v : face_vertices(adj_[u]))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::component_count(VertexSet w) const {
  std::size_t count = 0;
  VertexSet left = w;
  while (left) {
    VertexSet comp = left & (~left + 1), frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (std::size_t v : face_vertices(frontier)) next |= adj_[v];
      next &= w & ~comp;
      comp |= next;
      frontier = next;
    }
    left &= ~comp;
    ++count;
  }
  return count;
}

bool IntegralHomology::vanishes(long i) const {
  const long k = i + 1;
  if (k < 0 || k >= static_cast<long>(betti.size())) return true;
  return betti[k] == 0 && torsion[k].empty();
}

std::string IntegralHomology::group(long i) const {
  if (vanishes(i)) return "0";
  const std::size_t k = static_cast<std::size_t>(i + 1);
  std::vector<std::string> parts;
  if (betti[k] == 1) parts.push_back("Z");
  else if (betti[k] > 1) parts.push_back("Z^" + std::to_string(betti[k]));
  for (const auto& t : torsion[k]) parts.push_back("Z/" + t.get_str());
  std::string s;
  for (std::size_t j = 0; j < parts.size(); ++j) s += (j ? " + " : "") + parts[j];
  return s;
}

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<std::string> labels)
    : n_(n), labels_(default_labels(n, std::move(labels))), by_size_{{Face(0)}} {
  check_vertex_count(n);
}

SimplicialComplex SimplicialComplex::assemble(std::size_t n, std::vector<std::string> labels,
                                              std::vector<Face> closed) {
  SimplicialComplex l(n, std::move(labels));
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  for (Face f : closed) {
    if (n < 64 && (f >> n) != 0) throw std::invalid_argument("face references a vertex outside the complex");
    const std::size_t k = face_size(f);
    if (k >= l.by_size_.size()) l.by_size_.resize(k + 1);
    if (k > 0) l.by_size_[k].push_back(f);
    if (k == 1) l.vertices_ |= f;
  }
  return l;
}

SimplicialComplex SimplicialComplex::from_maximal_faces(const std::vector<std::vector<std::size_t>>& faces,
                                                        std::size_t n, std::vector<std::string> labels) {
  check_vertex_count(n);
  std::vector<Face> closed;
  for (std::size_t v = 0; v < n; ++v) closed.push_back(singleton(v));
  for (const auto& face : faces) {
    Face f = 0;
    for (std::size_t v : face) {
      if (v >= n) throw std::invalid_argument("face references vertex " + std::to_string(v) + " >= " + std::to_string(n));
      if (f & singleton(v)) throw std::invalid_argument("duplicate vertex inside a face");
      f |= singleton(v);
    }
    add_subfaces(f, closed);
  }
  return assemble(n, std::move(labels), std::move(closed));
}

SimplicialComplex SimplicialComplex::from_faces(const std::vector<Face>& faces, std::size_t n,
                                                std::vector<std::string> labels) {
  std::vector<Face> closed;
  for (Face f : faces) add_subfaces(f, closed);
  return assemble(n, std::move(labels), std::move(closed));
}

const std::vector<Face>& SimplicialComplex::faces(std::size_t k) const {
  static const std::vector<Face> none;
  return k < by_size_.size() ? by_size_[k] : none;
}

bool SimplicialComplex::contains(Face f) const {
  const auto& bucket = faces(face_size(f));
  return std::binary_search(bucket.begin(), bucket.end(), f);
}

std::size_t SimplicialComplex::index_of(Face f) const {
  const auto& bucket = faces(face_size(f));
  auto it = std::lower_bound(bucket.begin(), bucket.end(), f);
  if (it == bucket.end() || *it != f) throw std::invalid_argument("not a face: " + face_label(f));
  return static_cast<std::size_t>(it - bucket.begin());
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  for (const auto& bucket : by_size_) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

std::vector<Face> SimplicialComplex::maximal_faces() const {
  std::vector<Face> out;
  for (std::size_t k = by_size_.size(); k-- > 0;)
    for (Face f : by_size_[k])
      if (std::none_of(out.begin(), out.end(), [f](Face g) { return (f & ~g) == 0; })) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& bucket : by_size_) out.push_back(bucket.size());
  return out;
}

SimplicialComplex SimplicialComplex::induced(VertexSet w) const {
  std::vector<Face> kept;
  for (const auto& bucket : by_size_)
    for (Face f : bucket)
      if ((f & ~w) == 0) kept.push_back(f);
  return assemble(n_, labels_, std::move(kept));
}

SimplicialComplex SimplicialComplex::link(Face sigma, VertexSet w) const {
  if (!contains(sigma)) throw std::invalid_argument("link: " + face_label(sigma) + " is not a face");
  if (sigma & w) throw std::invalid_argument("link: simplex meets the restriction set");
  std::vector<Face> kept;
  for (std::size_t k = face_size(sigma); k < by_size_.size(); ++k)
    for (Face f : by_size_[k])
      if ((f & sigma) == sigma && ((f & ~sigma) & ~w) == 0) kept.push_back(f & ~sigma);
  return assemble(n_, labels_, std::move(kept));
}

Graph SimplicialComplex::one_skeleton() const {
  Graph g(n_, labels_);
  for (Face e : faces(2)) {
    auto v = face_vertices(e);
    g.add_edge(v[0], v[1]);
  }
  return g;
}

bool SimplicialComplex::is_flag() const { return flag_complex(one_skeleton()) == *this; }

std::string SimplicialComplex::face_label(Face f) const {
  std::string s = "{";
  bool first = true;
  for (std::size_t v : face_vertices(f)) {
    if (!first) s += ",";
    s += v < labels_.size() ? labels_[v] : std::to_string(v);
    first = false;
  }
  return s + "}";
}

SimplicialComplex flag_complex(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Face> cliques;
  // Extend cliques only by vertices above the current maximum.
  auto grow = [&](auto&& self, Face clique, VertexSet candidates) -> void {
    cliques.push_back(clique);
    while (candidates) {
      const std::size_t v = static_cast<std::size_t>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      self(self, clique | singleton(v), candidates & g.neighbors(v));
    }
  };
  grow(grow, 0, all_vertices(n));
  std::vector<std::string> labels = g.labels();
  SimplicialComplex l = SimplicialComplex::from_faces(cliques, n, std::move(labels));
  return l;
}

SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex_label) {
  const auto& labels = k.labels();
  if (std::find(labels.begin(), labels.end(), apex_label) != labels.end())
    throw std::invalid_argument("cone apex '" + apex_label + "' collides with an existing vertex");
  const std::size_t n = k.ambient_size();
  if (n + 1 > kMaxVertices) throw std::invalid_argument("cone would exceed the vertex limit");
  std::vector<std::string> new_labels = labels;
  new_labels.push_back(apex_label);
  std::vector<Face> faces;
  for (Face f : k.maximal_faces()) faces.push_back(f | singleton(n));
  if (faces.empty()) faces.push_back(singleton(n));
  return SimplicialComplex::from_faces(faces, n + 1, std::move(new_labels));
}

SimplicialComplex barycentric_subdivide(const SimplicialComplex& l) {
  std::vector<Face> cells;
  for (long k = 1; k <= l.dimension() + 1; ++k)
    for (Face f : l.faces(static_cast<std::size_t>(k))) cells.push_back(f);
  if (cells.size() > kMaxVertices) throw std::invalid_argument("barycentric subdivision would exceed the vertex limit");
  std::vector<std::string> labels;
  for (Face f : cells) {
    std::string s;
    for (std::size_t v : face_vertices(f)) s += (s.empty() ? "" : "-") + l.labels()[v];
    labels.push_back(s);
  }
  Graph g(cells.size(), labels);
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      const Face a = cells[i], b = cells[j];
      if (a != b && ((a & ~b) == 0 || (b & ~a) == 0)) g.add_edge(i, j);
    }
  return flag_complex(g);
}

Matrix<Integer> boundary_matrix(const SimplicialComplex& l, std::size_t k) {
  if (k == 0) throw std::invalid_argument("boundary_matrix: k must be positive");
  const auto& cols = l.faces(k);
  const auto& rows = l.faces(k - 1);
  Matrix<Integer> m(rows.size(), cols.size(), Integer(0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::size_t j = 0;
    for (std::size_t v : face_vertices(cols[c])) {
      m(l.index_of(cols[c] & ~singleton(v)), c) = (j % 2 == 0) ? 1 : -1;
      ++j;
    }
  }
  return m;
}

std::size_t rank_over(const Matrix<Integer>& m, const FieldSpec& k) {
  if (k.is_rational()) return rank(m);
  Matrix<Fp> f(m.rows(), m.cols(), Fp(0, k.characteristic()));
  const Integer p = k.characteristic();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer v = m(r, c) % p;
      f(r, c) = Fp(v.get_si(), k.characteristic());
    }
  return rank(f);
}

ReducedHomology reduced_homology(const SimplicialComplex& l, const FieldSpec& k) {
  const std::size_t top = static_cast<std::size_t>(l.dimension() + 1);  // largest face size
  std::vector<std::size_t> ranks(top + 2, 0);
  for (std::size_t s = 1; s <= top; ++s) ranks[s] = rank_over(boundary_matrix(l, s), k);
  ReducedHomology h;
  for (std::size_t s = 0; s <= top; ++s) h.dims.push_back(l.face_count(s) - ranks[s] - ranks[s + 1]);
  return h;
}

IntegralHomology reduced_homology_integral(const SimplicialComplex& l) {
  const std::size_t top = static_cast<std::size_t>(l.dimension() + 1);
  std::vector<IntSmithForm> snf(top + 2);
  for (std::size_t s = 1; s <= top; ++s) snf[s] = snf_int(boundary_matrix(l, s));
  IntegralHomology h;
  for (std::size_t s = 0; s <= top; ++s) {
    h.betti.push_back(l.face_count(s) - snf[s].rank - snf[s + 1].rank);
    std::vector<Integer> tors;
    for (const auto& d : snf[s + 1].invariant_factors)
      if (d != 1) tors.push_back(d);
    h.torsion.push_back(std::move(tors));
  }
  return h;
}

std::size_t boundary_dim(const SimplicialComplex& l, std::size_t i, const FieldSpec& k) {
  if (l.face_count(i + 2) == 0 || l.face_count(i + 1) == 0) return 0;
  return rank_over(boundary_matrix(l, i + 2), k);
}

std::vector<std::size_t> toric_betti(const SimplicialComplex& l) { return l.f_vector(); }

FlagificationDefect flagification_defect(const SimplicialComplex& l) {
  const SimplicialComplex delta = flag_complex(l.one_skeleton());
  if (delta == l) return {};
  const auto dd = delta.f_vector();
  const auto dl = l.f_vector();
  for (std::size_t k = 0; k < dd.size(); ++k) {
    const std::size_t lk = k < dl.size() ? dl[k] : 0;
    if (dd[k] != lk) return {k - 1, dd[k] - lk};
  }
  throw std::logic_error("flagification_defect: complexes differ but f-vectors agree");
}

}  // namespace toricjl
