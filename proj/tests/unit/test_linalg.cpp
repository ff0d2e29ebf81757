#include <catch2/catch_amalgamated.hpp>

#include "testkit.hpp"
#include "toricjl/io.hpp"
#include "toricjl/series.hpp"

using namespace toricjl;
using testkit::smith_by_minors;

namespace {

Matrix<Integer> int_matrix(const std::vector<std::vector<long>>& rows) {
  Matrix<Integer> m(rows.size(), rows.empty() ? 0 : rows[0].size(), Integer(0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

template <FieldScalar T>
Poly<T> poly(std::vector<long> c, const FieldSpec& k) {
  std::vector<T> v;
  for (long x : c) v.push_back(scalar<T>(x, k));
  return Poly<T>(v, k);
}

}  // namespace

TEST_CASE("field selectors") {
  CHECK(FieldSpec::parse("q0").is_rational());
  CHECK(FieldSpec::parse("p7").characteristic() == 7);
  CHECK_THROWS(FieldSpec::parse("p4"));
  CHECK_THROWS(FieldSpec::parse("x"));
  CHECK_THROWS(FieldSpec::prime(9));
  CHECK(FieldSpec::prime(5).name() == "p5");
}

TEST_CASE("prime field arithmetic") {
  for (std::uint32_t p : {2u, 3u, 5u, 101u})
    for (std::int64_t a = 1; a < p; ++a) CHECK((Fp(a, p) * Fp(a, p).inverse()).value() == 1);
  CHECK(Fp(-1, 7).value() == 6);
  CHECK((Fp(3, 7) - Fp(5, 7)).value() == 5);
  CHECK_THROWS(scalar<Fp>(Rational(1, 3), FieldSpec::prime(3)));
  CHECK(scalar<Fp>(Rational(1, 2), FieldSpec::prime(3)).value() == 2);
}

TEST_CASE("ranks on small examples") {
  CHECK(rank(int_matrix({{1, 0}, {0, 1}})) == 2);
  CHECK(rank_over(int_matrix({{1, 1}, {1, 1}}), FieldSpec::prime(2)) == 1);
  CHECK(rank_over(int_matrix({{2, 4}, {1, 2}}), FieldSpec::rationals()) == 1);
  CHECK(rank_over(int_matrix({{2, 0}, {0, 3}}), FieldSpec::prime(2)) == 1);
  CHECK(rank(Matrix<Integer>(0, 3, Integer(0))) == 0);
}

TEST_CASE("ranks agree with plain elimination on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(-4, 4), dim(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = dim(rng), cols = dim(rng);
    Matrix<Integer> m(rows, cols, Integer(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
    for (const auto& k : testkit::test_fields()) CHECK(rank_over(m, k) == testkit::naive_rank_over(m, k));
    CHECK(rank(m) == testkit::naive_rank_over(m, FieldSpec::rationals()));
  }
}

TEST_CASE("integer Smith form examples") {
  CHECK(snf_int(Matrix<Integer>(3, 2, Integer(0))).rank == 0);
  const auto d = snf_int(int_matrix({{6, 0}, {0, 4}}));
  REQUIRE(d.invariant_factors.size() == 2);
  CHECK(d.invariant_factors[0] == 2);
  CHECK(d.invariant_factors[1] == 12);
}

TEST_CASE("integer Smith form equals gcd-of-minors ratios") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-6, 6), dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix<Integer> m(dim(rng), dim(rng), Integer(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
    const auto snf = snf_int(m);
    CHECK(snf.invariant_factors == smith_by_minors(m));
    CHECK(snf.rank == snf.invariant_factors.size());
  }
}

TEST_CASE("RP2 boundary has invariant factors 1,...,1,2") {
  const auto rp2 = fixture("rp2");
  const auto snf = snf_int(boundary_matrix(rp2, 3));
  REQUIRE(!snf.invariant_factors.empty());
  CHECK(snf.invariant_factors.back() == 2);
  for (std::size_t j = 0; j + 1 < snf.invariant_factors.size(); ++j) CHECK(snf.invariant_factors[j] == 1);
}

TEST_CASE("polynomial Smith form examples") {
  const auto f2 = FieldSpec::prime(2);
  PolyMatrix<Fp> a(3, 2, Poly<Fp>(f2));
  a(0, 0) = Poly<Fp>::monomial(1, 2, f2);
  a(1, 0) = Poly<Fp>::monomial(1, 1, f2);
  a(1, 1) = Poly<Fp>::monomial(1, 1, f2);
  a(2, 1) = Poly<Fp>::monomial(1, 2, f2);
  const auto s = snf_poly(a);
  REQUIRE(s.invariant_factors.size() == 2);
  CHECK(s.invariant_factors[0] == Poly<Fp>::monomial(1, 1, f2));
  CHECK(s.invariant_factors[1] == Poly<Fp>::monomial(1, 2, f2));

  const auto q = FieldSpec::rationals();
  PolyMatrix<Rational> b(3, 2, Poly<Rational>(q));
  b(0, 0) = Poly<Rational>::monomial(-1, 1, q);
  b(1, 0) = Poly<Rational>::constant(1, q);
  b(1, 1) = Poly<Rational>::constant(-1, q);
  b(2, 1) = Poly<Rational>::monomial(1, 1, q);
  const auto sb = snf_poly(b);
  REQUIRE(sb.invariant_factors.size() == 2);
  CHECK(sb.invariant_factors[0] == Poly<Rational>::constant(1, q));
  CHECK(sb.invariant_factors[1] == Poly<Rational>::monomial(1, 1, q));

  PolyMatrix<Rational> c(1, 1, poly<Rational>({1, 1, 1}, q));
  CHECK(snf_poly(c).invariant_factors == std::vector{poly<Rational>({1, 1, 1}, q)});
}

TEMPLATE_TEST_CASE("polynomial Smith form equals determinantal divisor ratios", "", Rational, Fp) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coef(-2, 2), deg(0, 2), dim(1, 4);
  for (const auto& k : testkit::test_fields()) {
    if (std::is_same_v<TestType, Fp> == k.is_rational()) continue;
    for (int trial = 0; trial < 60; ++trial) {
      PolyMatrix<TestType> m(dim(rng), dim(rng), Poly<TestType>(k));
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
          std::vector<long> cs(deg(rng) + 1);
          for (auto& x : cs) x = coef(rng);
          m(r, c) = poly<TestType>(cs, k);
        }
      const auto s = snf_poly(m);
      CHECK(s.invariant_factors == testkit::poly_smith_by_minors(m, k));
      for (std::size_t j = 0; j + 1 < s.invariant_factors.size(); ++j)
        CHECK(s.invariant_factors[j].divides(s.invariant_factors[j + 1]));
      CHECK(rank_fraction_field(m) == s.rank);
    }
  }
}

TEST_CASE("polynomial valuations") {
  const auto q = FieldSpec::rationals();
  const auto f2 = FieldSpec::prime(2);
  CHECK(poly_ord(Poly<Rational>::power_minus_one(2, q), poly<Rational>({-1, 1}, q)) == 1);
  CHECK(poly_ord(Poly<Fp>::power_minus_one(2, f2), poly<Fp>({-1, 1}, f2)) == 2);
  CHECK(poly_ord(Poly<Rational>::power_minus_one(6, q), poly<Rational>({1, 1, 1}, q)) == 1);
  CHECK_THROWS(poly_ord(Poly<Rational>(q), poly<Rational>({-1, 1}, q)));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(-3, 3);
  const auto f = poly<Rational>({1, 1}, q);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = poly<Rational>({coef(rng), coef(rng), 1}, q);
    auto h = poly<Rational>({coef(rng), 1}, q) * f;
    CHECK(poly_ord(g * h, f) == poly_ord(g, f) + poly_ord(h, f));
  }
}

TEST_CASE("cyclotomic polynomials multiply to t^n - 1") {
  for (const auto& k : testkit::test_fields())
    with_scalar(k, [&]<class T>(std::type_identity<T>) {
      for (std::size_t n = 1; n <= 12; ++n) {
        Poly<T> prod = Poly<T>::constant(1, k);
        for (std::size_t d = 1; d <= n; ++d)
          if (n % d == 0) prod = prod * cyclotomic<T>(d, k);
        CHECK(prod == Poly<T>::power_minus_one(n, k));
        CHECK(static_cast<std::uint64_t>(cyclotomic<T>(n, k).degree()) == euler_phi(n));
      }
    });
}

TEST_CASE("series composition against direct expansion") {
  const auto shift = Series::geometric_shift(5);
  const auto q2 = Series::polynomial({0, 0, 2}, 5);
  const auto c = series_compose(q2, shift, 5);
  for (std::size_t k = 0; k <= 5; ++k) CHECK(c[k] == (k >= 2 ? Rational(2 * (static_cast<long>(k) - 1)) : Rational(0)));

  const auto t = Series::polynomial({0, 1}, 6);
  CHECK(series_compose(t, t, 6) == t);
  CHECK_THROWS(series_compose(t, Series::one(6), 6));

  // Σ q_j (t/(1-t))^j has coefficient Σ_j q_j C(k-1, j-1) at t^k.
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Integer> qc{0};
    for (int j = 1; j <= 5; ++j) qc.push_back(coef(rng));
    const auto got = series_compose(Series::polynomial(qc, 10), Series::geometric_shift(10), 10);
    for (long k = 1; k <= 10; ++k) {
      Integer expect = 0;
      for (long j = 1; j < static_cast<long>(qc.size()); ++j) expect += qc[j] * testkit::binomial(k - 1, j - 1);
      CHECK(got[k] == Rational(expect));
    }
  }
}

TEST_CASE("series inverse and binomial powers") {
  const auto one_minus_t = Series::polynomial({1, -1}, 8);
  const auto geo = one_minus_t.inverse();
  for (std::size_t k = 0; k <= 8; ++k) CHECK(geo[k] == 1);
  CHECK_THROWS(Series::polynomial({0, 1}, 4).inverse());
  const auto p = Series::one_minus_power(2, 3, 8);
  Series expect = Series::one(8);
  for (int j = 0; j < 3; ++j) expect = expect * Series::polynomial({1, 0, -1}, 8);
  CHECK(p == expect);
  CHECK_THROWS(Series::one_minus_power(1, -1, 4));
}
