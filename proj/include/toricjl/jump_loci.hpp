// Resonance and characteristic varieties of toric complexes as families of
// coordinate subspaces k^W / subtori (k^x)^W, and rank-one local systems.
#pragma once

#include <cstddef>
#include <vector>

#include "toricjl/aomoto.hpp"
#include "toricjl/simplicial.hpp"

namespace toricjl {

constexpr std::size_t kDefaultStrataCap = 20;

/// Maximal W with β_i(k<L>, W) >= d. The same antichain describes the
/// resonance variety (∪ k^W) and the characteristic variety (∪ (k^x)^W).
struct SubspaceFamily {
  std::size_t i = 0;
  std::size_t d = 0;
  FieldSpec field;
  std::vector<VertexSet> members;  // sorted lexicographically by vertex list

  bool contains_subset(VertexSet w) const;
};

SubspaceFamily strata(const SimplicialComplex& l, const FieldSpec& k, std::size_t i, std::size_t d,
                      std::size_t cap = kDefaultStrataCap);

/// z ∈ R^i_d(k<L>), i.e. β_i(k<L>, z) >= d.
bool resonance_membership(const SimplicialComplex& l, const DegreeOneClass& z, const FieldSpec& k, std::size_t i,
                          std::size_t d);

/// dim H_i(T_L, k_ρ) for i = 0..i_max, with every ρ_v a unit of k.
std::vector<std::size_t> local_system_betti(const SimplicialComplex& l, const std::vector<Rational>& rho,
                                            const FieldSpec& k, std::size_t i_max);

}  // namespace toricjl
