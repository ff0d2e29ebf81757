// Homology of the infinite cyclic cover T_L^χ as a module over Λ = k[t^{±1}]:
// free ranks, torsion multiplicities per cyclotomic class, a direct PID oracle,
// and the monodromy / finite-dimensionality tests.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricjl/field.hpp"
#include "toricjl/matrix.hpp"
#include "toricjl/simplicial.hpp"

namespace toricjl {

/// Integer weight m_v per ambient vertex.
struct Character {
  std::vector<std::int64_t> m;

  static Character diagonal(std::size_t n) { return {std::vector<std::int64_t>(n, 1)}; }
  std::size_t size() const { return m.size(); }
  friend bool operator==(const Character&, const Character&) = default;
};

/// Divides by the gcd of the weights; `divisor` receives that gcd. Throws if
/// every weight is zero.
Character normalize_character(const Character& chi, std::int64_t* divisor = nullptr);

/// V_q(χ) = {v : m_v ≢ 0 mod q}; q = 0 reads m_v ≠ 0. Throws on composite q.
VertexSet support(const Character& chi, std::uint64_t q);
/// Primes q with V_q(χ) strictly smaller than V_0(χ).
std::vector<std::uint64_t> prime_set(const Character& chi);
/// χ as a degree-one class Σ m_v v*.
std::vector<Rational> character_class(const Character& chi);

/// Torsion class indexed by the order d of the roots of unity involved. In
/// characteristic p, Φ_d splits into `count` irreducibles of degree `degree`.
struct FClass {
  std::uint64_t d = 1;
  std::uint64_t degree = 1;
  std::uint64_t count = 1;
  friend bool operator==(const FClass&, const FClass&) = default;
};

FClass make_fclass(std::uint64_t d, const FieldSpec& k);
std::uint64_t euler_phi(std::uint64_t d);
/// Multiplicative order of p modulo d (d > 1 coprime to p); 1 for d = 1.
std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t d);

/// b_v = ord_f(t^{m_v} - 1) for any irreducible f in the class; nullopt stands for -∞ (m_v = 0).
using BVector = std::vector<std::optional<std::uint64_t>>;
BVector b_vector(const Character& chi, std::uint64_t d, const FieldSpec& k);

/// Class orders d that can carry torsion: divisors of the nonzero |m_v|
/// with the p-part removed in characteristic p.
std::vector<std::uint64_t> relevant_orders(const Character& chi, const FieldSpec& k);

struct TorsionClass {
  FClass cls;
  std::vector<std::size_t> multiplicities;  // multiplicities[j - 1] = e_j, trailing zeros trimmed
  friend bool operator==(const TorsionClass&, const TorsionClass&) = default;
};

struct DegreeDecomposition {
  std::size_t free_rank = 0;
  std::vector<TorsionClass> torsion;  // nonzero classes only, sorted by d
  bool trivial_monodromy() const;
  friend bool operator==(const DegreeDecomposition&, const DegreeDecomposition&) = default;
};

struct ZModuleDecomposition {
  FieldSpec field;
  std::vector<DegreeDecomposition> degrees;  // index i = homological degree
  friend bool operator==(const ZModuleDecomposition&, const ZModuleDecomposition&) = default;
};

/// r_i = β_i(k<L>, V_0(χ)) for i = 0..i_max.
std::vector<std::size_t> free_ranks(const SimplicialComplex& l, const Character& chi, const FieldSpec& k,
                                    std::size_t i_max);

/// ε^i_j for i = 0..i_max from t-adic valuations of the invariant factors of ∂^ξ_{i+1}.
std::vector<std::vector<std::size_t>> torsion_multiplicities(const SimplicialComplex& l, const Character& chi,
                                                             std::uint64_t d, const FieldSpec& k, std::size_t i_max);

/// Boundary ∂^ξ from faces of size s to size s-1 with entries ±t^{b_v}.
template <FieldScalar T>
PolyMatrix<T> monomial_boundary(const SimplicialComplex& l, const BVector& b, const FieldSpec& k, std::size_t s);
/// Λ-equivariant boundary from faces of size s to size s-1 with entries ±(t^{|m_v|} - 1).
template <FieldScalar T>
PolyMatrix<T> equivariant_boundary(const SimplicialComplex& l, const Character& chi, const FieldSpec& k,
                                   std::size_t s);

ZModuleDecomposition full_decomposition(const SimplicialComplex& l, const Character& chi, const FieldSpec& k,
                                        std::size_t i_max);
/// Homology of the defining k[t]-chain complex via Smith forms; torsion split
/// into classes by gcds with powers of cyclotomic polynomials.
ZModuleDecomposition direct_oracle(const SimplicialComplex& l, const Character& chi, const FieldSpec& k,
                                   std::size_t i_max);
/// Free ranks from ranks over k(t) of the equivariant chain complex.
std::vector<std::size_t> fraction_field_free_ranks(const SimplicialComplex& l, const Character& chi,
                                                   const FieldSpec& k, std::size_t i_max);
/// χ = ν closed form: H_i = Λ^{dim H~_{i-1}(L)} ⊕ (Λ/(t-1))^{dim B_{i-1}(L)}.
ZModuleDecomposition bb_decomposition(const SimplicialComplex& l, const FieldSpec& k, std::size_t i_max);

/// Cone v_0 * K with weight 1 on K and m on the apex; for d | m the cover
/// carries nontrivial Φ_d-primary torsion.
std::pair<SimplicialComplex, Character> realization_cone(const SimplicialComplex& k, std::int64_t m,
                                                          const std::string& apex_label = "v0");

struct MonodromyWitness {
  std::size_t i = 0;
  std::uint64_t modulus = 0;  // the characteristic p, or a prime q from P(χ)
  VertexSet w = 0;
  std::size_t beta = 0;
};

struct MonodromyReport {
  bool trivial = true;
  std::optional<MonodromyWitness> witness;
};

/// Z acts trivially on H_{<=r}(T_L^χ, k).
MonodromyReport monodromy_trivial(const SimplicialComplex& l, const Character& chi, const FieldSpec& k,
                                  std::size_t r);

struct FiniteDimReport {
  bool finite = true;
  bool links_acyclic = true;                  // link-acyclicity formulation
  std::optional<bool> outside_resonance;      // characteristic 0 only
  std::optional<std::size_t> failing_degree;  // first i with β_i(V_0) > 0
};

/// dim_k H_{<=r}(T_L^χ, k) < ∞; throws std::logic_error if the equivalent
/// formulations disagree.
FiniteDimReport finite_dim_test(const SimplicialComplex& l, const Character& chi, const FieldSpec& k, std::size_t r);

extern template PolyMatrix<Rational> monomial_boundary(const SimplicialComplex&, const BVector&, const FieldSpec&,
                                                      std::size_t);
extern template PolyMatrix<Fp> monomial_boundary(const SimplicialComplex&, const BVector&, const FieldSpec&,
                                                std::size_t);
extern template PolyMatrix<Rational> equivariant_boundary(const SimplicialComplex&, const Character&,
                                                          const FieldSpec&, std::size_t);
extern template PolyMatrix<Fp> equivariant_boundary(const SimplicialComplex&, const Character&, const FieldSpec&,
                                                    std::size_t);

}  // namespace toricjl
