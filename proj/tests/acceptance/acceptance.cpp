// One line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "testkit.hpp"
#include "toricjl/aomoto.hpp"
#include "toricjl/errors.hpp"
#include "toricjl/io.hpp"
#include "toricjl/jump_loci.hpp"
#include "toricjl/kernel_tests.hpp"
#include "toricjl/lie_ranks.hpp"
#include "toricjl/zcover.hpp"

using namespace toricjl;

namespace {

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    else if (!ok) failures.push_back("");
  }
};

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

TorsionClass block(std::uint64_t d, const FieldSpec& k, std::vector<std::size_t> e) { return {make_fclass(d, k), e}; }

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

std::string str(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (auto x : v) os << x << ' ';
  return os.str();
}

// ---------------------------------------------------------------------------

void aah_direct(Check& c) {
  auto compare = [&](const SimplicialComplex& l) {
    const std::size_t n = l.ambient_size();
    for (const auto& k : testkit::test_fields())
      for (VertexSet w = 0; w < (VertexSet(1) << n); ++w) {
        const auto direct = aomoto_betti_direct(l, indicator_class(w, n), k, 3);
        const auto aah = aomoto_betti_aah(l, w, k, 3);
        c.expect(direct == aah, format_complex(l) + " W=" + std::to_string(w) + " " + k.name() + ": " + str(direct) +
                                    "vs " + str(aah));
      }
  };
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& l : testkit::all_complexes(n)) compare(l);
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<std::size_t> n(5, 7);
  for (int trial = 0; trial < 200; ++trial) compare(testkit::random_complex(rng, n(rng)));
}

void path_example(Check& c) {
  const auto path = fixture("path3");
  const Character chi{{1, 2, 1}};
  for (const auto& k : {Q, FieldSpec::prime(3), FieldSpec::prime(5)}) {
    c.expect(!resonance_membership(path, character_class(chi), k, 1, 1), k.name() + ": chi in R^1_1");
    c.expect(!monodromy_trivial(path, chi, k, 1).trivial, k.name() + ": monodromy trivial");
  }
  c.expect(finite_dim_test(path, chi, F2, 1).finite, "p2: not finite-dimensional");
  std::vector<Rational> reduced;
  for (auto m : chi.m) reduced.push_back(Rational(((m % 2) + 2) % 2));
  c.expect(resonance_membership(path, reduced, F2, 1, 1), "p2: chi mod 2 not in R^1_1");
  c.expect(finitely_presented(path.one_skeleton(), chi).verdict == Verdict::Yes, "kernel not finitely presented");
}

void two_step_oracle(Check& c) {
  std::size_t interesting = 0;
  const auto path = fixture("path3");
  const Character chi{{1, 2, 1}};
  const auto q = full_decomposition(path, chi, Q, 1);
  c.expect(q.degrees[1].free_rank == 0 &&
               q.degrees[1].torsion == std::vector<TorsionClass>{block(1, Q, {2}), block(2, Q, {1})},
           "path char 0 H_1");
  const auto two = full_decomposition(path, chi, F2, 1);
  c.expect(two.degrees[1].free_rank == 0 && two.degrees[1].torsion == std::vector<TorsionClass>{block(1, F2, {1, 1})},
           "path char 2 H_1");
  const auto three = full_decomposition(path, chi, FieldSpec::prime(3), 1);
  c.expect(three == direct_oracle(path, chi, FieldSpec::prime(3), 1), "path char 3");
  c.expect(q == direct_oracle(path, chi, Q, 1) && two == direct_oracle(path, chi, F2, 1), "path fixtures vs oracle");

  for (const auto& k : testkit::test_fields()) {
    std::mt19937_64 rng(2000 + k.characteristic());
    std::uniform_int_distribution<std::size_t> n(2, 6);
    for (int trial = 0; trial < 100; ++trial) {
      const auto l = testkit::random_complex(rng, n(rng));
      const auto chi_r = testkit::random_character(rng, l.ambient_size());
      const auto full = full_decomposition(l, chi_r, k, 2);
      const auto oracle = direct_oracle(l, chi_r, k, 2);
      c.expect(full == oracle, k.name() + " " + format_complex(l));
      for (const auto& deg : oracle.degrees)
        for (const auto& tc : deg.torsion) interesting += tc.cls.d > 1 || tc.multiplicities.size() > 1;
    }
  }
  c.expect(interesting > 0, "random corpus never produced torsion beyond (t-1)");
}

void bb_cover(Check& c) {
  for (const std::string name : {"path3", "cycle4", "2k2", "simplex1", "simplex2", "simplex3", "simplex4", "rp2-flag"}) {
    const auto l = fixture(name);
    for (const auto& k : testkit::test_fields()) {
      const std::size_t top = name == "rp2-flag" ? 3 : static_cast<std::size_t>(l.dimension() + 1);
      c.expect(bb_decomposition(l, k, top) == full_decomposition(l, Character::diagonal(l.ambient_size()), k, top),
               name + " " + k.name());
    }
  }
  const auto c4 = full_decomposition(fixture("cycle4"), Character::diagonal(4), Q, 2);
  c.expect(c4.degrees[2].free_rank == 1 && c4.degrees[2].torsion.empty(), "cycle4 H_2 = L");
  c.expect(c4.degrees[1].free_rank == 0 && c4.degrees[1].torsion == std::vector<TorsionClass>{block(1, Q, {3})},
           "cycle4 H_1 = (L/(t-1))^3");
}

void non_propagation(Check& c) {
  const auto k22 = fixture("2k2");
  c.expect(strata(k22, Q, 1, 1).members == std::vector<VertexSet>{0b1111}, "2K2 i=1");
  c.expect(strata(k22, Q, 2, 1).members == std::vector<VertexSet>{0b0011, 0b1100}, "2K2 i=2");
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto s = fixture("simplex" + std::to_string(n));
    for (std::size_t i = 1; i <= n; ++i)
      for (const auto& k : testkit::test_fields())
        c.expect(strata(s, k, i, 1).members == std::vector<VertexSet>{0},
                 "simplex" + std::to_string(n) + " i=" + std::to_string(i));
  }
}

bool oracle_trivial(const DegreeDecomposition& d) {
  if (d.free_rank != 0) return false;
  for (const auto& tc : d.torsion) {
    if (tc.cls.d != 1) return false;
    for (std::size_t j = 1; j < tc.multiplicities.size(); ++j)
      if (tc.multiplicities[j] != 0) return false;
  }
  return true;
}

void monodromy_equivalence(Check& c) {
  std::size_t seen[2] = {0, 0};
  for (const auto& k : testkit::test_fields()) {
    std::mt19937_64 rng(2000 + k.characteristic());
    std::uniform_int_distribution<std::size_t> n(2, 6);
    for (int trial = 0; trial < 100; ++trial) {
      const auto l = testkit::random_complex(rng, n(rng));
      const auto chi = testkit::random_character(rng, l.ambient_size());
      const auto oracle = direct_oracle(l, chi, k, 2);
      for (std::size_t r = 0; r <= 2; ++r) {
        bool trivial = true;
        for (std::size_t i = 0; i <= r; ++i) trivial = trivial && oracle_trivial(oracle.degrees[i]);
        ++seen[trivial];
        c.expect(monodromy_trivial(l, chi, k, r).trivial == trivial,
                 k.name() + " r=" + std::to_string(r) + " " + format_complex(l));
      }
    }
  }
  c.expect(seen[0] > 0 && seen[1] > 0, "random corpus exercised only one verdict");
}

void bb_four_way(Check& c) {
  auto run = [&](const SimplicialComplex& l, const std::string& name) {
    for (const auto& k : testkit::test_fields())
      for (std::size_t r = 1; r <= 2; ++r) {
        try {
          bb_summary(l, k, r);
        } catch (const std::logic_error& e) {
          c.expect(false, name + " " + k.name() + ": " + e.what());
        }
      }
  };
  for (const auto& name : fixture_names()) run(fixture(name), name);
  std::mt19937_64 rng(3000);
  std::uniform_int_distribution<std::size_t> n(2, 7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto l = flag_complex(testkit::random_connected_graph(rng, n(rng), 0.5));
    run(l, format_complex(l));
  }
  const auto rp2 = fixture("rp2-flag");
  const auto q = bb_summary(rp2, Q, 2), p = bb_summary(rp2, F2, 2);
  c.expect(q.trivial_action && q.finite_dimensional && q.outside_resonance && q.acyclic_below_r, "rp2-flag char 0");
  c.expect(!p.trivial_action && !p.finite_dimensional && !p.outside_resonance && !p.acyclic_below_r, "rp2-flag char 2");
}

void lie_ranks(Check& c) {
  const auto path = fixture("path3").one_skeleton();
  const auto phi = lcs_ranks(path, 8);
  const auto theta = chen_ranks(path, 8);
  for (long k = 1; k <= 8; ++k) c.expect(phi.at(k) == testkit::witt(2, k), "path phi_" + std::to_string(k));
  for (long k = 2; k <= 8; ++k) c.expect(theta.at(k) == k - 1, "path theta_" + std::to_string(k));
  const auto c4 = fixture("cycle4").one_skeleton();
  const auto phi4 = lcs_ranks(c4, 8);
  c.expect(phi4.at(1) == 3 && phi4.at(2) == 2, "cycle4 phi");
  const auto theta4 = chen_ranks(c4, 8);
  for (long k = 2; k <= 8; ++k) c.expect(theta4.at(k) == 2 * (k - 1), "cycle4 theta_" + std::to_string(k));
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto kn = lcs_ranks(complete(n), 8);
    for (long k = 1; k <= 8; ++k)
      c.expect(kn.at(k) == (k == 1 ? static_cast<long>(n) - 1 : 0), "K_" + std::to_string(n));
  }
  std::mt19937_64 rng(4000);
  std::uniform_int_distribution<std::size_t> n(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testkit::random_connected_graph(rng, n(rng), 0.5);
    const auto f = lcs_ranks(g, 10);
    auto p = clique_polynomial(g);
    for (std::size_t k = 1; k < p.size(); k += 2) p[k] = -p[k];
    c.expect(lcs_product(f, 10) * Series::polynomial({1, -1}, 10) == Series::polynomial(p, 10), "series identity");
  }
}

void holonomy(Check& c) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& g : testkit::all_graphs(n))
      c.expect(holonomy_dims(raag_holonomy(g), 3).ranks == raag_lcs_ranks(g, 3).ranks,
               "graph with " + std::to_string(g.edges().size()) + " edges on " + std::to_string(n));
  for (const std::string name : {"path3", "simplex2", "simplex3", "simplex4"}) {
    const auto l = fixture(name);
    for (std::size_t r = 1; r <= 2; ++r) {
      try {
        const auto rep = quotient_holonomy_check(l, DegreeOneClass(l.ambient_size(), Rational(1)), r);
        c.expect(rep.h_a == rep.h_b, name);
      } catch (const std::exception& e) {
        c.expect(false, name + " r=" + std::to_string(r) + ": " + e.what());
      }
    }
  }
}

void flag_defect(Check& c) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& l : testkit::all_complexes(n))
      c.expect(flagification_defect(l).p.has_value() != l.is_flag(), format_complex(l));
  const auto tb = flagification_defect(fixture("triangle-boundary"));
  c.expect(tb.p == 2u && tb.coinvariant_rank == 1u, "triangle-boundary");
}

void cover_ring(Check& c) {
  const auto ring = cover_cohomology_ring(fixture("simplex3"), Character::diagonal(3), Q, 2);
  c.expect(ring.dims() == std::vector<std::size_t>{1, 2, 1}, "simplex3 dims");
  const auto& prod = ring.product(1, 0, 1, 1);
  c.expect(std::any_of(prod.coords.begin(), prod.coords.end(), [](const Rational& x) { return sgn(x) != 0; }),
           "degree-1 product vanishes");
  try {
    cover_cohomology_ring(fixture("path3"), Character{{1, 2, 1}}, Q, 1);
    c.expect(false, "path (1,2,1) not refused");
  } catch (const MonodromyRefusal& e) {
    c.expect(e.data().w == 0b101 && e.data().modulus == 2 && !e.witness().empty(), "witness " + e.witness());
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"AAH formula equals direct Aomoto-Betti numbers", aah_direct},
      {"path (1,2,1) example", path_example},
      {"two-step decomposition equals PID oracle", two_step_oracle},
      {"Bestvina-Brady cover closed form", bb_cover},
      {"resonance non-propagation", non_propagation},
      {"monodromy test equivalence", monodromy_equivalence},
      {"Bestvina-Brady four-way agreement", bb_four_way},
      {"LCS and Chen ranks", lie_ranks},
      {"holonomy dimensions", holonomy},
      {"flagification defect", flag_defect},
      {"cover cohomology ring", cover_ring},
  };
  int failed = 0;
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criteria[j].second(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failures.empty() && error.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << j + 1 << ": " << criteria[j].first << " (" << std::fixed
              << std::setprecision(2) << secs << "s)";
    if (!error.empty()) std::cout << " exception: " << error;
    if (!c.failures.empty()) std::cout << " " << c.failures.size() << " failures, first: " << c.failures.front();
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
