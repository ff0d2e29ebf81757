#include "toricjl/zcover.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "toricjl/aomoto.hpp"
#include "toricjl/jump_loci.hpp"

namespace toricjl {

namespace {

std::uint64_t abs_weight(std::int64_t m) { return m < 0 ? static_cast<std::uint64_t>(-m) : static_cast<std::uint64_t>(m); }

// Splits n = p^s · rest with p ∤ rest; returns {p^s, rest}.
std::pair<std::uint64_t, std::uint64_t> split_prime_power(std::uint64_t n, std::uint64_t p) {
  std::uint64_t pp = 1;
  while (n % p == 0) {
    n /= p;
    pp *= p;
  }
  return {pp, n};
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

void check_character(const SimplicialComplex& l, const Character& chi) {
  if (chi.size() != l.ambient_size())
    throw std::invalid_argument("character has " + std::to_string(chi.size()) + " weights for " +
                                std::to_string(l.ambient_size()) + " vertices");
}

std::vector<std::size_t> trim_zeros(std::vector<std::size_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

bool links_acyclic(const SimplicialComplex& l, VertexSet w, const FieldSpec& k, std::size_t r) {
  for (Face sigma : l.induced(l.vertices() & ~w).all_faces()) {
    const long top = static_cast<long>(r) - 1 - static_cast<long>(face_size(sigma));
    if (top < -1) continue;
    if (!reduced_homology(l.link(sigma, w), k).acyclic_through(top)) return false;
  }
  return true;
}

std::vector<std::size_t> betti_at(const SimplicialComplex& l, VertexSet w, const FieldSpec& k, std::size_t r) {
  return aomoto_betti_direct(l, indicator_class(w, l.ambient_size()), k, r);
}

}  // namespace

Character normalize_character(const Character& chi, std::int64_t* divisor) {
  std::uint64_t g = 0;
  for (auto m : chi.m) g = std::gcd(g, abs_weight(m));
  if (g == 0) throw std::invalid_argument("character is identically zero");
  Character out = chi;
  for (auto& m : out.m) m /= static_cast<std::int64_t>(g);
  if (divisor) *divisor = static_cast<std::int64_t>(g);
  return out;
}

VertexSet support(const Character& chi, std::uint64_t q) {
  if (q != 0 && !is_prime(q)) throw std::invalid_argument("support: modulus " + std::to_string(q) + " is not prime");
  VertexSet s = 0;
  for (std::size_t v = 0; v < chi.size(); ++v) {
    const std::uint64_t a = abs_weight(chi.m[v]);
    if (q == 0 ? a != 0 : a % q != 0) s |= singleton(v);
  }
  return s;
}

std::vector<std::uint64_t> prime_set(const Character& chi) {
  std::vector<std::uint64_t> out;
  for (auto m : chi.m) {
    std::uint64_t a = abs_weight(m);
    for (std::uint64_t q = 2; q * q <= a; ++q)
      if (a % q == 0) {
        out.push_back(q);
        while (a % q == 0) a /= q;
      }
    if (a > 1) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  const VertexSet v0 = support(chi, 0);
  std::erase_if(out, [&](std::uint64_t q) { return support(chi, q) == v0; });
  return out;
}

std::vector<Rational> character_class(const Character& chi) {
  std::vector<Rational> z;
  for (auto m : chi.m) z.emplace_back(static_cast<long>(m));
  return z;
}

std::uint64_t euler_phi(std::uint64_t d) {
  std::uint64_t result = d, n = d;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      result -= result / q;
    }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t d) {
  if (d == 1) return 1;
  if (std::gcd(p, d) != 1) throw std::invalid_argument("multiplicative_order: arguments are not coprime");
  std::uint64_t x = p % d, k = 1;
  while (x != 1) {
    x = x * p % d;
    ++k;
  }
  return k;
}

FClass make_fclass(std::uint64_t d, const FieldSpec& k) {
  if (d == 0) throw std::invalid_argument("class order must be positive");
  const std::uint64_t p = k.characteristic();
  if (p == 0) return {d, euler_phi(d), 1};
  if (d % p == 0) throw std::invalid_argument("class order " + std::to_string(d) + " is divisible by the characteristic");
  const std::uint64_t deg = multiplicative_order(p, d);
  return {d, deg, euler_phi(d) / deg};
}

BVector b_vector(const Character& chi, std::uint64_t d, const FieldSpec& k) {
  const std::uint64_t p = k.characteristic();
  if (d == 0) throw std::invalid_argument("class order must be positive");
  if (p != 0 && d % p == 0) throw std::invalid_argument("class order " + std::to_string(d) + " is divisible by the characteristic");
  BVector b;
  for (auto m : chi.m) {
    const std::uint64_t a = abs_weight(m);
    if (a == 0) {
      b.push_back(std::nullopt);
    } else if (p == 0) {
      b.push_back(a % d == 0 ? 1 : 0);
    } else {
      auto [pp, rest] = split_prime_power(a, p);
      b.push_back(rest % d == 0 ? pp : 0);
    }
  }
  return b;
}

std::vector<std::uint64_t> relevant_orders(const Character& chi, const FieldSpec& k) {
  std::vector<std::uint64_t> out;
  for (auto m : chi.m) {
    std::uint64_t a = abs_weight(m);
    if (a == 0) continue;
    if (!k.is_rational()) a = split_prime_power(a, k.characteristic()).second;
    for (auto d : divisors(a)) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool DegreeDecomposition::trivial_monodromy() const {
  if (free_rank != 0) return false;
  for (const auto& t : torsion)
    if (t.cls.d != 1 || t.multiplicities.size() > 1) return false;
  return true;
}

std::vector<std::size_t> free_ranks(const SimplicialComplex& l, const Character& chi, const FieldSpec& k,
                                    std::size_t i_max) {
  check_character(l, chi);
  return aomoto_betti_aah(l, support(chi, 0), k, i_max);
}

template <FieldScalar T>
PolyMatrix<T> monomial_boundary(const SimplicialComplex& l, const BVector& b, const FieldSpec& k, std::size_t s) {
  const auto& cols = l.faces(s);
  const auto& rows = l.faces(s - 1);
  PolyMatrix<T> m(rows.size(), cols.size(), Poly<T>(k));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::size_t j = 0;
    for (std::size_t v : face_vertices(cols[c])) {
      if (b[v]) m(l.index_of(cols[c] & ~singleton(v)), c) = Poly<T>::monomial(j % 2 == 0 ? 1 : -1, *b[v], k);
      ++j;
    }
  }
  return m;
}

template <FieldScalar T>
PolyMatrix<T> equivariant_boundary(const SimplicialComplex& l, const Character& chi, const FieldSpec& k,
                                   std::size_t s) {
  const auto& cols = l.faces(s);
  const auto& rows = l.faces(s - 1);
  PolyMatrix<T> m(rows.size(), cols.size(), Poly<T>(k));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::size_t j = 0;
    for (std::size_t v : face_vertices(cols[c])) {
      const std::uint64_t a = abs_weight(chi.m[v]);
      if (a != 0) {
        Poly<T> e = Poly<T>::power_minus_one(a, k);
        m(l.index_of(cols[c] & ~singleton(v)), c) = j % 2 == 0 ? e : -e;
      }
      ++j;
    }
  }
  return m;
}

template PolyMatrix<Rational> monomial_boundary(const SimplicialComplex&, const BVector&, const FieldSpec&, std::size_t);
template PolyMatrix<Fp> monomial_boundary(const SimplicialComplex&, const BVector&, const FieldSpec&, std::size_t);
template PolyMatrix<Rational> equivariant_boundary(const SimplicialComplex&, const Character&, const FieldSpec&,
                                                   std::size_t);
template PolyMatrix<Fp> equivariant_boundary(const SimplicialComplex&, const Character&, const FieldSpec&,
                                             std::size_t);

std::vector<std::vector<std::size_t>> torsion_multiplicities(const SimplicialComplex& l, const Character& chi,
                                                             std::uint64_t d, const FieldSpec& k, std::size_t i_max) {
  check_character(l, chi);
  const BVector b = b_vector(chi, d, k);
  return with_scalar(k, [&]<class T>(std::type_identity<T>) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i <= i_max; ++i) {
      std::vector<std::size_t> eps;
      if (l.face_count(i + 1) > 0 && l.face_count(i) > 0) {
        for (const auto& f : snf_poly(monomial_boundary<T>(l, b, k, i + 1)).invariant_factors) {
          const std::size_t a = f.t_valuation();
          if (a == 0) continue;
          if (eps.size() < a) eps.resize(a, 0);
          ++eps[a - 1];
        }
      }
      out.push_back(trim_zeros(std::move(eps)));
    }
    return out;
  });
}

ZModuleDecomposition full_decomposition(const SimplicialComplex& l, const Character& chi, const FieldSpec& k,
                                        std::size_t i_max) {
  const auto ranks = free_ranks(l, chi, k, i_max);
  ZModuleDecomposition out{k, std::vector<DegreeDecomposition>(i_max + 1)};
  for (std::size_t i = 0; i <= i_max; ++i) out.degrees[i].free_rank = ranks[i];
  for (std::uint64_t d : relevant_orders(chi, k)) {
    const FClass cls = make_fclass(d, k);
    const auto eps = torsion_multiplicities(l, chi, d, k, i_max);
    for (std::size_t i = 0; i <= i_max; ++i)
      if (!eps[i].empty()) out.degrees[i].torsion.push_back({cls, eps[i]});
  }
  return out;
}

namespace {

template <FieldScalar T>
ZModuleDecomposition oracle_impl(const SimplicialComplex& l, const Character& chi, const FieldSpec& k,
                                 std::size_t i_max) {
  const std::uint64_t p = k.characteristic();
  std::uint64_t max_weight = 0;
  for (auto m : chi.m) max_weight = std::max(max_weight, abs_weight(m));
  std::vector<FClass> classes;
  std::vector<Poly<T>> phis;
  for (std::uint64_t d = 1; d <= max_weight; ++d) {
    if (p != 0 && d % p == 0) continue;
    classes.push_back(make_fclass(d, k));
    phis.push_back(cyclotomic<T>(d, k));
  }

  auto boundary_rank_and_factors = [&](std::size_t s) -> PolySmithForm<T> {
    if (s == 0 || l.face_count(s) == 0 || l.face_count(s - 1) == 0) return {};
    return snf_poly(equivariant_boundary<T>(l, chi, k, s));
  };

  ZModuleDecomposition out{k, {}};
  PolySmithForm<T> lower = boundary_rank_and_factors(0);
  for (std::size_t i = 0; i <= i_max; ++i) {
    if (i > 0) lower = boundary_rank_and_factors(i);
    const PolySmithForm<T> upper = boundary_rank_and_factors(i + 1);
    DegreeDecomposition deg;
    deg.free_rank = l.face_count(i) - lower.rank - upper.rank;

    // totals[c][j - 1] = Σ over invariant factors g and irreducible f in the class of [ord_f(g) >= j]
    std::vector<std::vector<std::size_t>> totals(classes.size());
    for (const auto& f : upper.invariant_factors) {
      Poly<T> g = f.exact_div(Poly<T>::monomial(1, f.t_valuation(), k));
      if (g.is_constant()) continue;
      Poly<T> rest = g;
      for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto delta = static_cast<long>(classes[c].degree);
        Poly<T> power = phis[c];
        long prev = 0;
        for (std::size_t j = 1;; ++j) {
          const long common = gcd(g, power).degree();
          if (common % delta != 0) throw std::logic_error("direct oracle: gcd degree not a multiple of the class degree");
          const long cj = common / delta;
          if (cj == prev) break;
          if (totals[c].size() < j) totals[c].resize(j, 0);
          totals[c][j - 1] += static_cast<std::size_t>(cj - prev);
          prev = cj;
          power = power * phis[c];
        }
        for (Poly<T> h = gcd(rest, phis[c]); !h.is_constant(); h = gcd(rest, phis[c])) rest = rest.exact_div(h);
      }
      if (!rest.is_constant()) throw std::logic_error("direct oracle: unclassified torsion factor " + rest.to_string());
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (totals[c].empty()) continue;
      std::vector<std::size_t> at_least;
      for (std::size_t n : totals[c]) {
        if (n % classes[c].count != 0)
          throw std::logic_error("direct oracle: multiplicities differ inside the class d=" + std::to_string(classes[c].d));
        at_least.push_back(n / classes[c].count);
      }
      std::vector<std::size_t> e(at_least.size());
      for (std::size_t j = 0; j < at_least.size(); ++j)
        e[j] = at_least[j] - (j + 1 < at_least.size() ? at_least[j + 1] : 0);
      deg.torsion.push_back({classes[c], trim_zeros(std::move(e))});
    }
    out.degrees.push_back(std::move(deg));
  }
  return out;
}

}  // namespace

ZModuleDecomposition direct_oracle(const SimplicialComplex& l, const Character& chi, const FieldSpec& k,
                                   std::size_t i_max) {
  check_character(l, chi);
  return with_scalar(k, [&]<class T>(std::type_identity<T>) { return oracle_impl<T>(l, chi, k, i_max); });
}

std::vector<std::size_t> fraction_field_free_ranks(const SimplicialComplex& l, const Character& chi,
                                                   const FieldSpec& k, std::size_t i_max) {
  check_character(l, chi);
  return with_scalar(k, [&]<class T>(std::type_identity<T>) {
    std::vector<std::size_t> ranks(i_max + 2, 0);  // ranks[s] for the boundary out of size-s faces
    for (std::size_t s = 1; s <= i_max + 1; ++s)
      if (l.face_count(s) > 0 && l.face_count(s - 1) > 0)
        ranks[s] = rank_fraction_field(equivariant_boundary<T>(l, chi, k, s));
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= i_max; ++i) out.push_back(l.face_count(i) - ranks[i] - ranks[i + 1]);
    return out;
  });
}

ZModuleDecomposition bb_decomposition(const SimplicialComplex& l, const FieldSpec& k, std::size_t i_max) {
  const ReducedHomology h = reduced_homology(l, k);
  ZModuleDecomposition out{k, {}};
  for (std::size_t i = 0; i <= i_max; ++i) {
    DegreeDecomposition deg;
    deg.free_rank = h(static_cast<long>(i) - 1);
    // Reduced boundaries B_{i-1}: image of faces of size i+1 in faces of size i.
    const std::size_t b = (l.face_count(i + 1) > 0 && l.face_count(i) > 0) ? rank_over(boundary_matrix(l, i + 1), k) : 0;
    if (b > 0) deg.torsion.push_back({make_fclass(1, k), {b}});
    out.degrees.push_back(std::move(deg));
  }
  return out;
}

std::pair<SimplicialComplex, Character> realization_cone(const SimplicialComplex& k, std::int64_t m,
                                                          const std::string& apex_label) {
  if (m == 0) throw std::invalid_argument("realization_cone: apex weight must be nonzero");
  SimplicialComplex l = cone(k, apex_label);
  Character chi{std::vector<std::int64_t>(l.ambient_size(), 0)};
  for (std::size_t v : face_vertices(k.vertices())) chi.m[v] = 1;
  chi.m[l.ambient_size() - 1] = m;
  return {std::move(l), std::move(chi)};
}

MonodromyReport monodromy_trivial(const SimplicialComplex& l, const Character& chi, const FieldSpec& k,
                                  std::size_t r) {
  check_character(l, chi);
  std::vector<std::uint64_t> moduli{k.characteristic()};
  for (std::uint64_t q : prime_set(chi))
    if (q != k.characteristic()) moduli.push_back(q);
  for (std::uint64_t q : moduli) {
    const VertexSet w = support(chi, q);
    const auto beta = betti_at(l, w, k, r);
    for (std::size_t i = 0; i <= r; ++i)
      if (beta[i] != 0) return {false, MonodromyWitness{i, q, w, beta[i]}};
  }
  return {};
}

FiniteDimReport finite_dim_test(const SimplicialComplex& l, const Character& chi, const FieldSpec& k, std::size_t r) {
  check_character(l, chi);
  const VertexSet w = support(chi, 0);
  FiniteDimReport rep;
  const auto beta = betti_at(l, w, k, r);
  for (std::size_t i = 0; i <= r; ++i)
    if (beta[i] != 0) {
      rep.finite = false;
      rep.failing_degree = i;
      break;
    }
  rep.links_acyclic = links_acyclic(l, w, k, r);
  if (rep.links_acyclic != rep.finite)
    throw std::logic_error("finite_dim_test: Aomoto-Betti and link-acyclicity formulations disagree");
  if (k.is_rational()) {
    bool outside = true;
    const auto z = character_class(chi);
    for (std::size_t i = 0; i <= r && outside; ++i)
      if (resonance_membership(l, z, k, i, 1)) outside = false;
    rep.outside_resonance = outside;
    if (outside != rep.finite)
      throw std::logic_error("finite_dim_test: resonance formulation disagrees with the Betti numbers");
  }
  return rep;
}

}  // namespace toricjl
