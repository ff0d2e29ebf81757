// Graded ranks of Artin kernels and right-angled Artin groups: lower central
// series ranks, Chen ranks, and holonomy Lie algebra dimensions in degrees <= 3.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toricjl/aomoto.hpp"
#include "toricjl/series.hpp"
#include "toricjl/simplicial.hpp"

namespace toricjl {

enum class RankKind { LCS, Chen, Holonomy };

struct GradedRanks {
  RankKind kind = RankKind::LCS;
  std::size_t first = 1;       // degree of ranks[0]
  std::vector<Integer> ranks;  // ranks[k - first]
  Integer at(std::size_t k) const { return ranks.at(k - first); }
};

constexpr std::size_t kMaxLcsDegree = 30;
constexpr std::size_t kCutPolynomialCap = 24;

/// P(t) = Σ f_k t^k with f_k the number of k-cliques (f_0 = 1).
std::vector<Integer> clique_polynomial(const Graph& g);
/// Q(t) = Σ_j (Σ_{|W| = j} b~_0(Γ_W)) t^j.
std::vector<Integer> cut_polynomial(const Graph& g);

/// φ_1..φ_K with Π_k (1 - t^k)^{φ_k} = target; refuses non-integral or negative ranks.
GradedRanks extract_lcs_ranks(const Series& target, std::size_t K);
/// LCS ranks of the Bestvina-Brady group N_Γ: Π (1 - t^k)^{φ_k} = P(-t) / (1 - t).
/// Refuses when Z acts non-trivially on H_1(N; Q) (Γ disconnected).
GradedRanks lcs_ranks(const Graph& g, std::size_t K);
/// LCS ranks of the right-angled Artin group itself: Π (1 - t^k)^{φ_k} = P(-t).
GradedRanks raag_lcs_ranks(const Graph& g, std::size_t K);
/// θ_2..θ_K with Σ θ_k t^k = Q(t / (1 - t)).
GradedRanks chen_ranks(const Graph& g, std::size_t K);
/// Π (1 - t^k)^{φ_k} through degree `order`.
Series lcs_product(const GradedRanks& phi, std::size_t order);

/// Quadratic part of a graded algebra: n generators of A_1 and the relation
/// space im(∇) ⊆ A_1 ∧ A_1, one row per basis element of A^2 in the
/// coordinates x_i ∧ x_j (i < j) of pair_index.
struct HolonomyPresentation {
  std::size_t n = 0;
  Matrix<Rational> relations;
};

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);

HolonomyPresentation holonomy_presentation(const QuotientRing& a);
/// H^{<=2}(G_Γ, Q) = Q<Δ_Γ>^{<=2}.
HolonomyPresentation raag_holonomy(const Graph& g);

/// Hall basis [[x_i, x_j], x_k] of Lie_3 with i < j and k >= i.
struct HallTriple {
  std::size_t i, j, k;
};
std::vector<HallTriple> lie3_hall_basis(std::size_t n);
/// Coordinates of [[x_i, x_j], x_k] (any i ≠ j, any k) in lie3_hall_basis(n).
std::vector<Rational> lie3_coordinates(std::size_t i, std::size_t j, std::size_t k, std::size_t n);

/// h_1..h_{up_to} (up_to <= 3).
GradedRanks holonomy_dims(const HolonomyPresentation& a, std::size_t up_to);

struct QuotientHolonomyReport {
  std::size_t r = 0;
  std::vector<Integer> h_a;  // h_2..h_{min(r+1,3)} of A
  std::vector<Integer> h_b;  // same degrees for B = A / aA
};

/// Compares holonomy dimensions of A = Q<L>^{<=2} and B = A / aA for
/// 2 <= s <= min(r + 1, 3). Refuses unless β_i(A, a) = 0 for 1 <= i <= r;
/// throws std::logic_error if the dimensions differ.
QuotientHolonomyReport quotient_holonomy_check(const SimplicialComplex& l, const DegreeOneClass& a, std::size_t r);

}  // namespace toricjl
