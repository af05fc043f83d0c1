#include <flagcoh/linalg.hpp>
#include <flagcoh/polynomial.hpp>
#include <flagcoh/univariate.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace flagcoh;

namespace {

Polynomial random_poly(const TablePtr& t, std::mt19937& rng, int max_terms = 4, int max_exp = 2) {
  std::uniform_int_distribution<int> terms(0, max_terms), expo(0, max_exp), num(-5, 5), den(1, 3);
  Polynomial p(t);
  for (int k = terms(rng); k > 0; --k) {
    Exponents e(t->size());
    for (auto& x : e) x = expo(rng);
    Rational c(num(rng), den(rng));
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

}  // namespace

TEST(Rational, ParseAndReject) {
  EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
}

TEST(Polynomial, RingAxiomsOnRandomCases) {
  auto t = make_table({"x", "y", "z"}, {1, 2, 3});
  std::mt19937 rng(12345);
  const Polynomial one(t, 1), zero(t);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_poly(t, rng), b = random_poly(t, rng), c = random_poly(t, rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * one, a);
    ASSERT_EQ(a + zero, a);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ((a + b) - b, a);
  }
}

TEST(Polynomial, PrintParseRoundTrip) {
  auto t = make_table({"q1", "k2", "x3"}, {1, 2, 1});
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    auto a = random_poly(t, rng, 5, 3);
    ASSERT_EQ(Polynomial::parse(t, a.to_string()), a) << a.to_string();
  }
  auto p = Polynomial::parse(t, "3/2*q1^2*k2 - x3");
  EXPECT_EQ(p.to_string(), "3/2*q1^2*k2 - x3");
  EXPECT_EQ(Polynomial::parse(t, "(q1 + x3)^2"), Polynomial::parse(t, "q1^2 + 2*q1*x3 + x3^2"));
  EXPECT_THROW(Polynomial::parse(t, "q1 +"), InputError);
  EXPECT_THROW(Polynomial::parse(t, "w"), InputError);
}

TEST(Polynomial, WeightedDegreeAndHomogeneity) {
  auto t = make_table({"q1", "q2"}, {1, 2});
  auto p = Polynomial::parse(t, "q1^2 - 2*q2");
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_FALSE(Polynomial::parse(t, "q1 + q2").is_homogeneous());
}

TEST(Polynomial, TruncatedInverse) {
  auto t = make_uniform_table("q", 3);
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    SeriesCoefficients p{Polynomial(t, 1)};
    for (int i = 1; i <= 3; ++i) p.push_back(random_poly(t, rng, 2, 1));
    const int cap = 6;
    auto u = truncated_inverse(p, cap);
    auto prod = series_product(p, u);
    EXPECT_EQ(prod[0], Polynomial(t, 1));
    for (int i = 1; i <= cap; ++i) EXPECT_TRUE(prod[static_cast<std::size_t>(i)].is_zero()) << "degree " << i;
  }
  EXPECT_THROW(truncated_inverse({Polynomial(t, 2)}, 3), InputError);
}

TEST(Polynomial, NewtonStyleSymmetricIdentity) {
  // sum_i (-1)^i e_i h_{k-i} = 0 for k >= 1
  auto t = make_uniform_table("x", 4);
  std::vector<std::size_t> vars{0, 1, 2, 3};
  for (int k = 1; k <= 5; ++k) {
    Polynomial s(t);
    for (int i = 0; i <= std::min(k, 4); ++i) {
      auto term = elementary_symmetric(t, i, vars) * complete_homogeneous(t, k - i, vars);
      s += i % 2 ? -term : term;
    }
    EXPECT_TRUE(s.is_zero()) << k;
  }
}

TEST(Univariate, DivisionAndRoots) {
  Univariate p({Rational(2), Rational(-2), Rational(-1), Rational(1)});  // (y^2 - 2)(y - 1)
  EXPECT_EQ(count_real_roots(p), 3);
  auto roots = rational_roots(p);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0], Rational(1));
  Univariate d({Rational(-1), Rational(1)});
  auto [q, r] = p.divmod(d);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q * d, p);
  EXPECT_EQ(count_real_roots(Univariate({Rational(1), Rational(0), Rational(1)})), 0);
}

TEST(Linalg, RankInvariantUnderRowPermutationAndMatchesBareiss) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> entry(-3, 3), dim(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    std::vector<std::vector<Integer>> ints(static_cast<std::size_t>(rows), std::vector<Integer>(static_cast<std::size_t>(cols)));
    DenseMatrix m(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        // sparse-ish to get rank deficiency
        int v = entry(rng) * (entry(rng) > 0 ? 1 : 0);
        ints[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      }
    const auto rank = matrix_rank(m);
    ASSERT_EQ(rank, bareiss_rank(ints));
    auto shuffled = m;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    ASSERT_EQ(matrix_rank(shuffled), rank);

    EchelonBasis basis(static_cast<std::size_t>(cols));
    for (const auto& row : m) {
      SparseVector v;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) v.emplace_back(j, row[j]);
      basis.insert(v);
    }
    ASSERT_EQ(basis.rank(), rank);
    for (const auto& row : m) {
      SparseVector v;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) v.emplace_back(j, row[j]);
      ASSERT_TRUE(basis.reduce(v).empty());
    }
  }
}
