#include "toricjl/lie_ranks.hpp"

#include <stdexcept>

#include "toricjl/errors.hpp"
#include "toricjl/jump_loci.hpp"
#include "toricjl/zcover.hpp"

namespace toricjl {

std::vector<Integer> clique_polynomial(const Graph& g) {
  std::vector<Integer> out;
  for (std::size_t c : flag_complex(g).f_vector()) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

std::vector<Integer> cut_polynomial(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kCutPolynomialCap)
    throw std::invalid_argument("cut_polynomial: " + std::to_string(n) + " vertices exceed the enumeration cap of " +
                                std::to_string(kCutPolynomialCap));
  std::vector<Integer> q(n + 1, Integer(0));
  for (VertexSet w = 1; w <= all_vertices(n); ++w) q[face_size(w)] += static_cast<unsigned long>(g.component_count(w) - 1);
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

namespace {

Series clique_series_at_minus_t(const Graph& g, std::size_t order) {
  std::vector<Integer> p = clique_polynomial(g);
  for (std::size_t k = 1; k < p.size(); k += 2) p[k] = -p[k];
  return Series::polynomial(p, order);
}

void check_degree(std::size_t K) {
  if (K < 1 || K > kMaxLcsDegree)
    throw std::invalid_argument("truncation degree must lie in 1.." + std::to_string(kMaxLcsDegree));
}

void require_trivial_h1_action(const Graph& g) {
  const SimplicialComplex l = flag_complex(g);
  const auto mono = monodromy_trivial(l, Character::diagonal(g.vertex_count()), FieldSpec::rationals(), 1);
  if (!mono.trivial)
    throw Refusal("Z acts non-trivially on H_1 of the Bestvina-Brady group (graph disconnected)",
                  "beta_" + std::to_string(mono.witness->i) + "(Q<L>, V) = " + std::to_string(mono.witness->beta));
}

}  // namespace

GradedRanks extract_lcs_ranks(const Series& target, std::size_t K) {
  if (target.order() < K) throw std::invalid_argument("extract_lcs_ranks: target truncated below K");
  if (target[0] != 1) throw std::invalid_argument("extract_lcs_ranks: target must have constant term 1");
  GradedRanks out{RankKind::LCS, 1, {}};
  Series current(target.coefficients(), K);
  for (std::size_t k = 1; k <= K; ++k) {
    const Rational phi = -current[k];
    if (phi.get_den() != 1 || phi < 0)
      throw Refusal("lower central series rank is not a non-negative integer",
                    "phi_" + std::to_string(k) + " = " + phi.get_str());
    out.ranks.push_back(phi.get_num());
    current = current / Series::one_minus_power(k, phi.get_num(), K);
  }
  return out;
}

GradedRanks lcs_ranks(const Graph& g, std::size_t K) {
  check_degree(K);
  require_trivial_h1_action(g);
  Series target = clique_series_at_minus_t(g, K) * Series::one_minus_power(1, 1, K).inverse();
  return extract_lcs_ranks(target, K);
}

GradedRanks raag_lcs_ranks(const Graph& g, std::size_t K) {
  check_degree(K);
  return extract_lcs_ranks(clique_series_at_minus_t(g, K), K);
}

GradedRanks chen_ranks(const Graph& g, std::size_t K) {
  check_degree(K);
  require_trivial_h1_action(g);
  const Series q = Series::polynomial(cut_polynomial(g), K);
  const Series theta = series_compose(q, Series::geometric_shift(K), K);
  GradedRanks out{RankKind::Chen, 2, {}};
  for (std::size_t k = 2; k <= K; ++k) {
    if (theta[k].get_den() != 1 || theta[k] < 0)
      throw Refusal("Chen rank is not a non-negative integer", "theta_" + std::to_string(k) + " = " + theta[k].get_str());
    out.ranks.push_back(theta[k].get_num());
  }
  return out;
}

Series lcs_product(const GradedRanks& phi, std::size_t order) {
  Series s = Series::one(order);
  for (std::size_t k = phi.first; k < phi.first + phi.ranks.size() && k <= order; ++k)
    s = s * Series::one_minus_power(k, phi.at(k), order);
  return s;
}

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i >= j || j >= n) throw std::out_of_range("pair_index expects i < j < n");
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

HolonomyPresentation holonomy_presentation(const QuotientRing& a) {
  if (a.top < 2) throw std::invalid_argument("holonomy_presentation needs the algebra through degree 2");
  HolonomyPresentation h;
  h.n = a.basis[1].size();
  const std::size_t pairs = h.n * (h.n - (h.n > 0 ? 1 : 0)) / 2;
  h.relations = Matrix<Rational>(a.basis[2].size(), pairs, Rational(0));
  for (std::size_t x = 0; x < h.n; ++x)
    for (std::size_t y = x + 1; y < h.n; ++y) {
      const auto& coords = a.product(1, x, 1, y).coords;
      for (std::size_t c = 0; c < coords.size(); ++c) h.relations(c, pair_index(x, y, h.n)) = coords[c];
    }
  return h;
}

HolonomyPresentation raag_holonomy(const Graph& g) {
  const SimplicialComplex l = flag_complex(g);
  return holonomy_presentation(
      truncated_quotient(l, DegreeOneClass(l.ambient_size(), Rational(0)), FieldSpec::rationals(), 2));
}

std::vector<HallTriple> lie3_hall_basis(std::size_t n) {
  std::vector<HallTriple> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = i; k < n; ++k) out.push_back({i, j, k});
  return out;
}

namespace {

std::size_t hall_index(std::size_t i, std::size_t j, std::size_t k, std::size_t n) {
  // Triples are ordered by (i, j, k); count those before (i, j, i).
  std::size_t idx = 0;
  for (std::size_t a = 0; a < i; ++a) idx += (n - a - 1) * (n - a);
  idx += (j - i - 1) * (n - i);
  return idx + (k - i);
}

}  // namespace

std::vector<Rational> lie3_coordinates(std::size_t i, std::size_t j, std::size_t k, std::size_t n) {
  std::vector<Rational> v(n * (n * n - 1) / 3, Rational(0));
  if (i == j) return v;
  Rational sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  if (k >= i) {
    v[hall_index(i, j, k, n)] += sign;
  } else {
    // Jacobi: [[x_i, x_j], x_k] = [[x_k, x_j], x_i] - [[x_k, x_i], x_j] for k < i < j.
    v[hall_index(k, j, i, n)] += sign;
    v[hall_index(k, i, j, n)] -= sign;
  }
  return v;
}

GradedRanks holonomy_dims(const HolonomyPresentation& a, std::size_t up_to) {
  if (up_to < 1 || up_to > 3) throw std::invalid_argument("holonomy_dims: up_to must lie in 1..3");
  const std::size_t n = a.n;
  GradedRanks out{RankKind::Holonomy, 1, {Integer(static_cast<unsigned long>(n))}};
  if (up_to >= 2) {
    const std::size_t rel_rank = rank(a.relations);
    out.ranks.push_back(Integer(static_cast<unsigned long>(n * (n - (n > 0 ? 1 : 0)) / 2 - rel_rank)));
  }
  if (up_to >= 3) {
    const std::size_t lie3 = n * (n * n - 1) / 3;
    if (lie3_hall_basis(n).size() != lie3) throw std::logic_error("Hall basis of Lie_3 has the wrong size");
    std::vector<std::vector<Rational>> rows;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t r = 0; r < a.relations.rows(); ++r) {
        std::vector<Rational> v(lie3, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) {
            const Rational& c = a.relations(r, pair_index(i, j, n));
            if (sgn(c) == 0) continue;
            // [x, [x_i, x_j]] = -[[x_i, x_j], x]
            const auto coords = lie3_coordinates(i, j, x, n);
            for (std::size_t t = 0; t < lie3; ++t) v[t] -= c * coords[t];
          }
        rows.push_back(std::move(v));
      }
    Matrix<Rational> m(rows.size(), lie3, Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t t = 0; t < lie3; ++t) m(r, t) = rows[r][t];
    out.ranks.push_back(Integer(static_cast<unsigned long>(lie3 - rank(m))));
  }
  return out;
}

QuotientHolonomyReport quotient_holonomy_check(const SimplicialComplex& l, const DegreeOneClass& a, std::size_t r) {
  if (r < 1 || r > 2) throw std::invalid_argument("quotient_holonomy_check: r must be 1 or 2");
  const FieldSpec q = FieldSpec::rationals();
  for (std::size_t i = 1; i <= r; ++i)
    if (resonance_membership(l, a, q, i, 1))
      throw Refusal("the class lies in a resonance variety", "a in R^" + std::to_string(i) + "_1(A)");
  const auto ha = holonomy_dims(
      holonomy_presentation(truncated_quotient(l, DegreeOneClass(l.ambient_size(), Rational(0)), q, 2)), 3);
  const auto hb = holonomy_dims(holonomy_presentation(truncated_quotient(l, a, q, 2)), 3);
  QuotientHolonomyReport rep;
  rep.r = r;
  for (std::size_t s = 2; s <= std::min<std::size_t>(r + 1, 3); ++s) {
    rep.h_a.push_back(ha.at(s));
    rep.h_b.push_back(hb.at(s));
  }
  if (rep.h_a != rep.h_b) throw std::logic_error("quotient_holonomy_check: holonomy dimensions of A and A/aA differ");
  return rep;
}

}  // namespace toricjl
