#include <catch2/catch_amalgamated.hpp>

#include "testkit.hpp"
#include "toricjl/errors.hpp"
#include "toricjl/io.hpp"
#include "toricjl/lie_ranks.hpp"

using namespace toricjl;
using testkit::binomial;
using testkit::witt;

namespace {

Graph graph_of(const std::string& name) { return fixture(name).one_skeleton(); }

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

std::vector<Integer> ints(std::vector<long> v) { return {v.begin(), v.end()}; }

// [[x_i, x_j], x_k] expanded in the tensor algebra: words of length 3, index (a, b, c) -> a n^2 + b n + c.
std::vector<Rational> tensor_bracket(std::size_t i, std::size_t j, std::size_t k, std::size_t n) {
  std::vector<Rational> w(n * n * n, Rational(0));
  auto add = [&](std::size_t a, std::size_t b, std::size_t c, long s) { w[a * n * n + b * n + c] += s; };
  add(i, j, k, 1);
  add(j, i, k, -1);
  add(k, i, j, -1);
  add(k, j, i, 1);
  return w;
}

std::vector<Integer> own_cut_polynomial(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Integer> q(n + 1, 0);
  for (VertexSet w = 1; w < (VertexSet(1) << n); ++w) {
    // components by repeated neighbourhood growth
    std::size_t comps = 0;
    VertexSet left = w;
    while (left) {
      VertexSet comp = left & (~left + 1), grow = 0;
      while (grow != comp) {
        grow = comp;
        for (std::size_t v : face_vertices(comp)) comp |= g.neighbors(v) & w;
      }
      left &= ~comp;
      ++comps;
    }
    q[face_size(w)] += comps - 1;
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

}  // namespace

TEST_CASE("clique and cut polynomials") {
  CHECK(clique_polynomial(graph_of("path3")) == ints({1, 3, 2}));
  CHECK(clique_polynomial(graph_of("cycle4")) == ints({1, 4, 4}));
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto p = clique_polynomial(complete(n));
    for (std::size_t k = 0; k <= n; ++k) CHECK(p[k] == binomial(n, k));
  }
  CHECK(cut_polynomial(graph_of("path3")) == ints({0, 0, 1}));
  CHECK(cut_polynomial(graph_of("cycle4")) == ints({0, 0, 2}));
  CHECK(cut_polynomial(complete(5)).empty());
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testkit::random_graph(rng, 6, 0.4);
    CHECK(cut_polynomial(g) == own_cut_polynomial(g));
  }
}

TEST_CASE("lower central series ranks") {
  const auto path = lcs_ranks(graph_of("path3"), 8);
  for (long k = 1; k <= 8; ++k) CHECK(path.at(k) == witt(2, k));
  const auto c4 = lcs_ranks(graph_of("cycle4"), 8);
  CHECK(c4.at(1) == 3);
  CHECK(c4.at(2) == 2);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto kn = lcs_ranks(complete(n), 8);
    CHECK(kn.at(1) == static_cast<long>(n) - 1);
    for (std::size_t k = 2; k <= 8; ++k) CHECK(kn.at(k) == 0);
  }
  CHECK_THROWS_AS(lcs_ranks(graph_of("2k2"), 5), Refusal);
  CHECK_THROWS(lcs_ranks(graph_of("path3"), kMaxLcsDegree + 1));
  // free group: the RAAG on a discrete graph
  const auto free3 = raag_lcs_ranks(Graph(3), 7);
  for (long k = 1; k <= 7; ++k) CHECK(free3.at(k) == witt(3, k));
}

TEST_CASE("rank extraction refuses non-integral ranks") {
  Series target = Series::polynomial({1, -1}, 4);
  target[2] = Rational(1, 2);
  CHECK_THROWS_AS(extract_lcs_ranks(target, 4), Refusal);
  CHECK_THROWS_AS(extract_lcs_ranks(Series::polynomial({1, 1}, 4), 4), Refusal);
}

TEST_CASE("the kernel's product formula recovers the clique polynomial") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> n(1, 6);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testkit::random_connected_graph(rng, n(rng), 0.5);
    const auto phi = lcs_ranks(g, 10);
    const auto lhs = lcs_product(phi, 10) * Series::polynomial({1, -1}, 10);
    auto p = clique_polynomial(g);
    for (std::size_t k = 1; k < p.size(); k += 2) p[k] = -p[k];
    CHECK(lhs == Series::polynomial(p, 10));
    for (const auto& r : phi.ranks) CHECK(r >= 0);
  }
}

TEST_CASE("Chen ranks") {
  const auto path = chen_ranks(graph_of("path3"), 8);
  CHECK(path.first == 2);
  for (long k = 2; k <= 8; ++k) CHECK(path.at(k) == k - 1);
  const auto c4 = chen_ranks(graph_of("cycle4"), 8);
  for (long k = 2; k <= 8; ++k) CHECK(c4.at(k) == 2 * (k - 1));
  for (long k = 2; k <= 8; ++k) CHECK(chen_ranks(complete(4), 8).at(k) == 0);
  // trees on n vertices: Chen ranks of the free group of rank n - 1, (k - 1) C(n + k - 3, k)
  for (std::size_t n = 3; n <= 5; ++n) {
    Graph star(n);
    for (std::size_t v = 1; v < n; ++v) star.add_edge(0, v);
    const auto th = chen_ranks(star, 7);
    for (long k = 2; k <= 7; ++k) CHECK(th.at(k) == (k - 1) * binomial(static_cast<long>(n) + k - 3, k));
  }
}

TEST_CASE("Hall basis of Lie_3 embeds in the tensor algebra") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto basis = lie3_hall_basis(n);
    CHECK(basis.size() == n * (n * n - 1) / 3);
    std::vector<std::vector<Rational>> rows;
    for (const auto& h : basis) rows.push_back(tensor_bracket(h.i, h.j, h.k, n));
    CHECK(testkit::naive_rank<Rational>(rows) == basis.size());
    // every bracket equals its Hall coordinates in T^3
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const auto coords = lie3_coordinates(i, j, k, n);
          std::vector<Rational> sum(n * n * n, Rational(0));
          for (std::size_t b = 0; b < basis.size(); ++b) {
            if (sgn(coords[b]) == 0) continue;
            const auto w = tensor_bracket(basis[b].i, basis[b].j, basis[b].k, n);
            for (std::size_t t = 0; t < w.size(); ++t) sum[t] += coords[b] * w[t];
          }
          CHECK(sum == tensor_bracket(i, j, k, n));
        }
  }
}

TEST_CASE("holonomy dimensions") {
  const auto p = holonomy_dims(raag_holonomy(graph_of("path3")), 3);
  CHECK(p.ranks == ints({3, 1, 2}));
  for (std::size_t n = 1; n <= 5; ++n) {
    HolonomyPresentation free{n, Matrix<Rational>(0, n * (n - 1) / 2, Rational(0))};
    const auto h = holonomy_dims(free, 3);
    for (long s = 1; s <= 3; ++s) CHECK(h.at(s) == witt(static_cast<long>(n), s));
    const auto ab = holonomy_dims(raag_holonomy(complete(n)), 3);
    CHECK(ab.at(2) == 0);
    CHECK(ab.at(3) == 0);
  }
  CHECK_THROWS(holonomy_dims(raag_holonomy(complete(2)), 4));
}

TEST_CASE("holonomy of right-angled Artin groups matches their LCS ranks") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& g : testkit::all_graphs(n)) {
      const auto h = holonomy_dims(raag_holonomy(g), 3);
      const auto phi = raag_lcs_ranks(g, 3);
      CHECK(h.ranks == phi.ranks);
    }
}

TEST_CASE("quotient holonomy comparisons") {
  const FieldSpec q = FieldSpec::rationals();
  const auto path = fixture("path3");
  const auto rep = quotient_holonomy_check(path, DegreeOneClass(3, Rational(1)), 2);
  CHECK(rep.h_a == ints({1, 2}));
  CHECK(rep.h_b == ints({1, 2}));
  // B is the cohomology algebra of F_2 through degree 2
  const auto b = truncated_quotient(path, DegreeOneClass(3, Rational(1)), q, 2);
  CHECK(b.dims() == std::vector<std::size_t>{1, 2, 0});

  const auto s3 = fixture("simplex3");
  const auto r3 = quotient_holonomy_check(s3, DegreeOneClass(3, Rational(1)), 2);
  CHECK(r3.h_a == r3.h_b);

  CHECK_THROWS_AS(quotient_holonomy_check(path, DegreeOneClass(3, Rational(0)), 1), Refusal);
  const auto point = SimplicialComplex::from_maximal_faces({}, 1);
  const auto one = quotient_holonomy_check(point, DegreeOneClass(1, Rational(1)), 1);
  CHECK(one.h_a == one.h_b);
  // a free algebra on two or more generators resonates in degree one for every a
  CHECK_THROWS_AS(quotient_holonomy_check(SimplicialComplex::from_maximal_faces({}, 3), DegreeOneClass(3, Rational(1)), 1),
                  Refusal);
}
