#include "toricjl/aomoto.hpp"

#include <stdexcept>

namespace toricjl {

DegreeOneClass indicator_class(VertexSet w, std::size_t n) {
  DegreeOneClass z(n, Rational(0));
  for (std::size_t v : face_vertices(w)) {
    if (v >= n) throw std::out_of_range("indicator_class: vertex outside the complex");
    z[v] = 1;
  }
  return z;
}

VertexSet class_support(const DegreeOneClass& z, const FieldSpec& k) {
  VertexSet s = 0;
  with_scalar(k, [&]<class T>(std::type_identity<T>) {
    for (std::size_t v = 0; v < z.size(); ++v)
      if (!is_zero(scalar<T>(z[v], k))) s |= singleton(v);
  });
  return s;
}

int exterior_sign(Face a, Face b) {
  if (a & b) return 0;
  std::size_t inversions = 0;
  for (std::size_t u : face_vertices(b)) inversions += face_size(a >> u);
  return inversions % 2 == 0 ? 1 : -1;
}

template <FieldScalar T>
Matrix<T> aomoto_differential(const SimplicialComplex& l, const DegreeOneClass& z, const FieldSpec& k,
                              std::size_t i) {
  if (z.size() < l.ambient_size()) throw std::invalid_argument("degree-one class is shorter than the vertex count");
  const auto& cols = l.faces(i);
  const auto& rows = l.faces(i + 1);
  Matrix<T> m(rows.size(), cols.size(), scalar<T>(0, k));
  std::vector<T> coef;
  for (std::size_t v = 0; v < l.ambient_size(); ++v) coef.push_back(scalar<T>(z[v], k));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Face sigma = cols[c];
    for (std::size_t v : face_vertices(l.vertices() & ~sigma)) {
      if (is_zero(coef[v])) continue;
      const Face tau = sigma | singleton(v);
      if (!l.contains(tau)) continue;
      const std::size_t j = face_size(sigma & (singleton(v) - 1));
      m(l.index_of(tau), c) = (j % 2 == 0) ? coef[v] : -coef[v];
    }
  }
  return m;
}

template Matrix<Rational> aomoto_differential(const SimplicialComplex&, const DegreeOneClass&, const FieldSpec&,
                                              std::size_t);
template Matrix<Fp> aomoto_differential(const SimplicialComplex&, const DegreeOneClass&, const FieldSpec&,
                                        std::size_t);

std::vector<std::size_t> aomoto_betti_direct(const SimplicialComplex& l, const DegreeOneClass& z, const FieldSpec& k,
                                             std::size_t i_max) {
  return with_scalar(k, [&]<class T>(std::type_identity<T>) {
    std::vector<std::size_t> ranks(i_max + 2, 0);  // ranks[i] = rank δ^i
    for (std::size_t i = 0; i <= i_max; ++i) {
      if (l.face_count(i) == 0 || l.face_count(i + 1) == 0) continue;
      ranks[i] = rank(aomoto_differential<T>(l, z, k, i));
    }
    std::vector<std::size_t> beta;
    for (std::size_t i = 0; i <= i_max; ++i)
      beta.push_back(l.face_count(i) - ranks[i] - (i > 0 ? ranks[i - 1] : 0));
    return beta;
  });
}

std::vector<std::size_t> aomoto_betti_aah(const SimplicialComplex& l, VertexSet w, const FieldSpec& k,
                                          std::size_t i_max) {
  w &= l.vertices();
  std::vector<std::size_t> beta(i_max + 1, 0);
  const VertexSet rest = l.vertices() & ~w;
  for (Face sigma : l.induced(rest).all_faces()) {
    const long s = static_cast<long>(face_size(sigma));
    if (s > static_cast<long>(i_max) + 1) continue;
    const ReducedHomology h = reduced_homology(l.link(sigma, w), k);
    for (std::size_t i = 0; i <= i_max; ++i) {
      const long j = static_cast<long>(i) - 1 - s;
      if (j >= -1) beta[i] += h(j);
    }
  }
  return beta;
}

std::size_t beta1_closed_form(const SimplicialComplex& l, VertexSet w) {
  w &= l.vertices();
  const std::size_t reduced_b0 = w == 0 ? 0 : l.one_skeleton().component_count(w) - 1;
  std::size_t undominated = 0;
  const Graph g = l.one_skeleton();
  for (std::size_t v : face_vertices(l.vertices() & ~w))
    if ((g.neighbors(v) & w) == 0) ++undominated;
  return reduced_b0 + undominated;
}

namespace {

// Subspace of k^n kept in reduced row echelon form.
template <FieldScalar T>
struct Echelon {
  std::size_t n;
  FieldSpec k;
  std::vector<std::vector<T>> rows;
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot;

  Echelon(std::size_t n, const FieldSpec& k) : n(n), k(k), is_pivot(n, false) {}

  void reduce(std::vector<T>& v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const T c = v[pivots[r]];
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] -= c * rows[r][j];
    }
  }

  void add(std::vector<T> v) {
    reduce(v);
    std::size_t p = 0;
    while (p < n && is_zero(v[p])) ++p;
    if (p == n) return;
    const T inv = inverse(v[p]);
    for (auto& x : v) x *= inv;
    for (auto& row : rows) {
      const T c = row[p];
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < n; ++j) row[j] -= c * v[j];
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    is_pivot[p] = true;
  }
};

Rational to_rational(const Rational& q) { return q; }
Rational to_rational(const Fp& a) { return Rational(static_cast<unsigned long>(a.value())); }

template <FieldScalar T>
QuotientRing quotient_impl(const SimplicialComplex& l, const DegreeOneClass& z, const FieldSpec& k, std::size_t r) {
  QuotientRing q;
  q.field = k;
  q.top = r;
  std::vector<Echelon<T>> image;
  std::vector<std::vector<std::size_t>> basis_index;  // positions in faces(i) of the representatives
  for (std::size_t i = 0; i <= r; ++i) {
    Echelon<T> e(l.face_count(i), k);
    if (i > 0 && l.face_count(i) > 0) {
      const Matrix<T> d = aomoto_differential<T>(l, z, k, i - 1);
      for (std::size_t c = 0; c < d.cols(); ++c) {
        std::vector<T> col(d.rows(), scalar<T>(0, k));
        for (std::size_t row = 0; row < d.rows(); ++row) col[row] = d(row, c);
        e.add(std::move(col));
      }
    }
    std::vector<Face> reps;
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < l.face_count(i); ++j)
      if (!e.is_pivot[j]) {
        reps.push_back(l.faces(i)[j]);
        idx.push_back(j);
      }
    q.basis.push_back(std::move(reps));
    basis_index.push_back(std::move(idx));
    image.push_back(std::move(e));
  }
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; i + j <= r; ++j)
      for (std::size_t a = 0; a < q.basis[i].size(); ++a)
        for (std::size_t b = 0; b < q.basis[j].size(); ++b) {
          const Face s = q.basis[i][a], t = q.basis[j][b];
          std::vector<T> v(l.face_count(i + j), scalar<T>(0, k));
          const int sign = exterior_sign(s, t);
          if (sign != 0 && l.contains(s | t)) v[l.index_of(s | t)] = scalar<T>(sign, k);
          image[i + j].reduce(v);
          QuotientRing::Product p{i, a, j, b, {}};
          for (std::size_t pos : basis_index[i + j]) p.coords.push_back(to_rational(v[pos]));
          q.products.push_back(std::move(p));
        }
  return q;
}

}  // namespace

std::vector<std::size_t> QuotientRing::dims() const {
  std::vector<std::size_t> out;
  for (const auto& b : basis) out.push_back(b.size());
  return out;
}

const QuotientRing::Product& QuotientRing::product(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const {
  for (const auto& p : products)
    if (p.i == i && p.a == a && p.j == j && p.b == b) return p;
  throw std::out_of_range("quotient ring product outside the truncation");
}

QuotientRing truncated_quotient(const SimplicialComplex& l, const DegreeOneClass& z, const FieldSpec& k,
                                std::size_t r) {
  return with_scalar(k, [&]<class T>(std::type_identity<T>) { return quotient_impl<T>(l, z, k, r); });
}

}  // namespace toricjl
