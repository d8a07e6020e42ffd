#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hopfalg;

namespace {

Field Q = Field::rationals();
Field F5 = Field::prime(5);

Fp f5(long v) { return from_int<Fp>(F5, v); }

TEST(FieldArithmetic, PrimeFieldInverse) {
  EXPECT_EQ(f5(2).inverse(), f5(3));
  EXPECT_EQ(f5(4) * f5(4), f5(1));
  EXPECT_EQ(f5(-1), f5(4));
  EXPECT_THROW(Field::prime(6), InvalidInput);
}

TEST(FieldArithmetic, RationalScalarsRoundTrip) {
  mpq_class x = Scalar<mpq_class>::from_json(Q, json("-6/4"));
  EXPECT_EQ(x, mpq_class(-3, 2));
  EXPECT_EQ(Scalar<mpq_class>::to_json(x), json("-3/2"));
  EXPECT_THROW(Scalar<mpq_class>::from_json(Q, json("1/0")), InvalidInput);
  EXPECT_THROW(Scalar<mpq_class>::from_json(Q, json("abc")), InvalidInput);
  EXPECT_EQ(Scalar<Fp>::from_json(F5, json(7)), f5(2));
}

TEST(Kernel, TwoByFourOverF5) {
  Mat<Fp> m(F5, 1, 2);
  m(0, 0) = f5(2);
  m(0, 1) = f5(4);
  Subspace<Fp> k = kernel(m);
  ASSERT_EQ(k.dim(), 1u);
  // 2x + 4y = 0 with x = 1 gives y = -1/2 = 2
  EXPECT_EQ(k.vec(0), (Vec<Fp>{f5(1), f5(2)}));
}

TEST(Solve, InvertibleSystemMatchesInverse) {
  Mat<mpq_class> m(Q, 2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 7;
  m(1, 1) = 4;
  Vec<mpq_class> b{3, 5};
  auto sol = solve_affine(m, b);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->homogeneous.dim(), 0u);
  // inverse of [[2,1],[7,4]] is [[4,-1],[-7,2]]
  EXPECT_EQ(sol->particular, (Vec<mpq_class>{4 * 3 - 5, -7 * 3 + 2 * 5}));
  auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv * m, (Mat<mpq_class>::identity(Q, 2)));
}

TEST(Subspace, ContainsSumOfBasisRows) {
  std::mt19937_64 rng(7);
  std::vector<Vec<mpq_class>> rows;
  for (int i = 0; i < 3; ++i) {
    Vec<mpq_class> v;
    for (int j = 0; j < 5; ++j) v.push_back(Scalar<mpq_class>::random(Q, rng));
    rows.push_back(v);
  }
  Subspace<mpq_class> s = span_of(Q, 5, rows);
  EXPECT_EQ(s.dim(), oracle::rank({rows.begin(), rows.end()}));
  EXPECT_TRUE(s.contains(rows[0] + rows[2]));
  Vec<mpq_class> outside = rows[0];
  outside[4] += 1;
  EXPECT_EQ(s.contains(outside), oracle::in_span({rows.begin(), rows.end()}, outside));
}

TEST(Rank, AgreesWithOracleOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    size_t r = 2 + t % 4, c = 3 + t % 3;
    Mat<mpq_class> m(Q, r, c);
    for (auto& x : m.a) x = (rng() % 3 == 0) ? mpq_class(0) : Scalar<mpq_class>::random(Q, rng);
    if (t % 5 == 0) m.set_row(r - 1, m.row(0) + m.row(1));
    EXPECT_EQ(rank(m), oracle::rank(oracle::rows_of(m)));
    EXPECT_EQ(kernel(m).dim(), c - oracle::rank(oracle::rows_of(m)));
  }
}

}  // namespace
