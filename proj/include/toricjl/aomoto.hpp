// The exterior face ring k<L> = H*(T_L, k), its Aomoto complexes and
// Aomoto-Betti numbers, and truncated quotients k<L>^{<=r} / (z).
#pragma once

#include <cstddef>
#include <vector>

#include "toricjl/field.hpp"
#include "toricjl/matrix.hpp"
#include "toricjl/simplicial.hpp"

namespace toricjl {

/// Degree-one class z = Σ z_v v*, one rational coefficient per ambient vertex
/// (reduced into the field where used).
using DegreeOneClass = std::vector<Rational>;

/// z_W = Σ_{v ∈ W} v*.
DegreeOneClass indicator_class(VertexSet w, std::size_t n);
/// Vertices whose coefficient is nonzero in the field.
VertexSet class_support(const DegreeOneClass& z, const FieldSpec& k);

/// Sign of t_a · t_b = ±t_{a∪b} in the exterior algebra; 0 when a and b meet.
int exterior_sign(Face a, Face b);

/// Right multiplication by z, A^i → A^{i+1}; rows faces(i+1), columns faces(i).
/// The entry at (σ ∪ v, σ) is (-1)^j z_v with j the position of v in σ ∪ v.
template <FieldScalar T>
Matrix<T> aomoto_differential(const SimplicialComplex& l, const DegreeOneClass& z, const FieldSpec& k, std::size_t i);

/// β_i(k<L>, z) for i = 0..i_max from ranks of the Aomoto differentials.
std::vector<std::size_t> aomoto_betti_direct(const SimplicialComplex& l, const DegreeOneClass& z, const FieldSpec& k,
                                             std::size_t i_max);
/// β_i(k<L>, z_W) = Σ_{σ ∈ L_{V∖W}} dim H~_{i-1-|σ|}(lk_{L_W}(σ), k).
std::vector<std::size_t> aomoto_betti_aah(const SimplicialComplex& l, VertexSet w, const FieldSpec& k,
                                          std::size_t i_max);
/// b~_0(L_W) + #{v ∉ W : lk_{L_W}(v) = {∅}}.
std::size_t beta1_closed_form(const SimplicialComplex& l, VertexSet w);

/// Graded quotient k<L>^{<=r} / (z). Coset representatives are monomials not
/// hit by a pivot when the image z·A^{i-1} is put in echelon form.
struct QuotientRing {
  FieldSpec field;
  std::size_t top = 0;
  std::vector<std::vector<Face>> basis;  // basis[i]: representative monomials of degree i
  std::vector<std::size_t> dims() const;

  struct Product {
    std::size_t i, a, j, b;       // basis[i][a] · basis[j][b]
    std::vector<Rational> coords;  // in basis[i + j]; char-p entries are residues 0..p-1
  };
  std::vector<Product> products;   // all pairs with i, j >= 1 and i + j <= top
  const Product& product(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const;
};

QuotientRing truncated_quotient(const SimplicialComplex& l, const DegreeOneClass& z, const FieldSpec& k,
                                std::size_t r);

extern template Matrix<Rational> aomoto_differential(const SimplicialComplex&, const DegreeOneClass&,
                                                     const FieldSpec&, std::size_t);
extern template Matrix<Fp> aomoto_differential(const SimplicialComplex&, const DegreeOneClass&, const FieldSpec&,
                                               std::size_t);

}  // namespace toricjl
