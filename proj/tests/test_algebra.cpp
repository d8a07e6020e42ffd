#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace hopfalg;

namespace {

Field Q = Field::rationals();

TEST(Algebra, GroupAlgebraAssociativityByHand) {
  FinAlgebra<mpq_class> c2 = cyclic_group_algebra<mpq_class>(Q, 2);
  for (size_t a = 0; a < 2; ++a)
    for (size_t b = 0; b < 2; ++b)
      for (size_t d = 0; d < 2; ++d)
        EXPECT_EQ(oracle::mul(c2, oracle::mul(c2, c2.e(a), c2.e(b)), c2.e(d)), c2.e((a + b + d) % 2));
}

TEST(Algebra, RejectsBrokenUnit) {
  std::vector<std::vector<Vec<mpq_class>>> m(2, std::vector<Vec<mpq_class>>(2));
  m[0][0] = {1, 0};
  m[0][1] = {0, 1};
  m[1][0] = {0, 2};  // e1 e0 = 2 e1
  m[1][1] = {1, 0};
  EXPECT_THROW(mk_algebra<mpq_class>(Q, 2, m, {1, 0}), AxiomFailure);
}

TEST(Algebra, RejectsNonAssociativeTable) {
  // e1 e1 = e2, e1 e2 = 0, e2 e1 = e1: (e1 e1) e1 = e1 but e1 (e1 e1) = 0
  std::vector<std::vector<Vec<mpq_class>>> m(3, std::vector<Vec<mpq_class>>(3, Vec<mpq_class>(3)));
  for (size_t i = 0; i < 3; ++i) {
    m[0][i] = unit_vec<mpq_class>(Q, 3, i);
    m[i][0] = unit_vec<mpq_class>(Q, 3, i);
  }
  m[1][1] = {0, 0, 1};
  m[2][1] = {0, 1, 0};
  EXPECT_THROW(mk_algebra<mpq_class>(Q, 3, m, {1, 0, 0}), AxiomFailure);
}

TEST(Algebra, OppositeOfUpperTriangular) {
  FinAlgebra<mpq_class> ut = upper_triangular2<mpq_class>(Q), op = opposite(ut);
  // basis E11, E12, E22
  EXPECT_EQ(ut.basis_product(0, 1), ut.e(1));
  EXPECT_EQ(op.basis_product(0, 1), op.zero());
  EXPECT_NO_THROW(mk_algebra(Q, 3, op.structure_constants(), op.one()));
}

TEST(Algebra, CentersMatchOracle) {
  for (auto A : {cyclic_group_algebra<mpq_class>(Q, 2), upper_triangular2<mpq_class>(Q), matrix_algebra<mpq_class>(Q, 2),
                 dual_numbers<mpq_class>(Q)}) {
    Subspace<mpq_class> z = center(A);
    EXPECT_EQ(z.dim(), oracle::center_dim(A));
    EXPECT_TRUE(z.contains(A.one()));
  }
  EXPECT_EQ(center(upper_triangular2<mpq_class>(Q)).dim(), 1u);
  EXPECT_EQ(center(matrix_algebra<mpq_class>(Q, 2)).dim(), 1u);
  EXPECT_EQ(center(cyclic_group_algebra<mpq_class>(Q, 2)).dim(), 2u);
}

TEST(Algebra, CenterOfTensorContainsTensorOfCenters) {
  FinAlgebra<mpq_class> a = cyclic_group_algebra<mpq_class>(Q, 2), b = upper_triangular2<mpq_class>(Q);
  Subspace<mpq_class> za = center(a), zb = center(b), zab = center(tensor_algebras(a, b));
  for (size_t i = 0; i < za.dim(); ++i)
    for (size_t j = 0; j < zb.dim(); ++j) EXPECT_TRUE(zab.contains(outer(za.vec(i), zb.vec(j))));
}

TEST(AlgebraMaps, SignCharacterAndFlip) {
  FinAlgebra<mpq_class> c2 = cyclic_group_algebra<mpq_class>(Q, 2);
  Mat<mpq_class> sign = Mat<mpq_class>::identity(Q, 2);
  sign(1, 1) = -1;
  EXPECT_TRUE(is_alg_map(sign, c2, c2, Variance::Homomorphism));
  Mat<mpq_class> bad = Mat<mpq_class>::identity(Q, 2);
  bad(1, 1) = 2;
  EXPECT_FALSE(is_alg_map(bad, c2, c2, Variance::Homomorphism));
  // composition of homomorphisms
  EXPECT_TRUE(is_alg_map(sign * sign, c2, c2, Variance::Homomorphism));

  FinAlgebra<mpq_class> ut = upper_triangular2<mpq_class>(Q);
  FinAlgebra<mpq_class> A = tensor_algebras(ut, opposite(ut));
  Mat<mpq_class> flip(Q, 9, 9);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) flip(j * 3 + i, i * 3 + j) = 1;
  EXPECT_TRUE(is_alg_map(flip, A, A, Variance::AntiHomomorphism));
  EXPECT_FALSE(is_alg_map(flip, A, A, Variance::Homomorphism));
}

}  // namespace
