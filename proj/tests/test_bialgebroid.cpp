#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace hopfalg;

namespace {

Field Q = Field::rationals();

HopfAlgebroidData<mpq_class> lu_ut2() { return lu_algebroid(upper_triangular2<mpq_class>(Q)); }

template <class K>
void expect_valid(const HopfAlgebroidData<K>& h) {
  HopfContext<K> c(h);
  EXPECT_TRUE(hopf_axioms_report(c).ok());
  Report d = derived_identities_report(c);
  EXPECT_TRUE(d.ok()) << (d.first_failure() ? d.first_failure()->name : "");
  EXPECT_NO_THROW(translation_map(c));
}

TEST(Catalog, EveryAlgebroidPassesAxiomsAndDerivedIdentities) {
  for (const std::string& name : catalog_names()) {
    SCOPED_TRACE(name);
    Object o = builtin(name);
    if (auto* q = std::get_if<HopfAlgebroidData<mpq_class>>(&o)) expect_valid(*q);
    if (auto* p = std::get_if<HopfAlgebroidData<Fp>>(&o)) expect_valid(*p);
  }
  EXPECT_THROW(builtin("lu-m3-q"), UnknownName);
}

TEST(Lu, DimensionsAndTrivialBase) {
  EXPECT_EQ(lu_ut2().n(), 9u);
  EXPECT_EQ(lu_algebroid(matrix_algebra<Fp>(Field::prime(5), 2)).n(), 16u);
  EXPECT_EQ(lu_algebroid(base_field_algebra<mpq_class>(Q)).n(), 1u);
}

TEST(Lu, SwappedCounitFails) {
  HopfAlgebroidData<mpq_class> h = lu_ut2();
  BialgebroidData<mpq_class> bad = h.left;
  bad.pi = h.right.pi;  // b1 (x) b2 |-> b2 b1
  Report r = left_bialgebroid_report(bad);
  ASSERT_FALSE(r.ok());
  EXPECT_FALSE(r.first_failure()->witness.empty());
}

TEST(Lu, IdentityAntipodeFailsAxiomFour) {
  HopfAlgebroidData<mpq_class> h = lu_ut2();
  h.S = Mat<mpq_class>::identity(Q, 9);
  Report r = hopf_axioms_report(HopfContext<mpq_class>(h));
  ASSERT_FALSE(r.ok());
  bool iv_fails = false;
  for (auto& ch : r.checks) iv_fails = iv_fails || (ch.status == Status::Fail && ch.name.rfind("iv.", 0) == 0);
  EXPECT_TRUE(iv_fails);
  EXPECT_THROW(mk_hopf_algebroid(h), AxiomFailure);
}

TEST(Sweedler, IdentityAntipodeFailsAxiomFour) {
  HopfAlgebroidData<mpq_class> h = sweedler_h4<mpq_class>(Q);
  h.S = Mat<mpq_class>::identity(Q, 4);
  Report r = hopf_axioms_report(HopfContext<mpq_class>(h));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.first_failure()->name.rfind("iv.", 0), 0u);
}

TEST(GroupAlgebra, IdentityAntipodeIsTheAntipodeOfC2) {
  HopfAlgebroidData<mpq_class> h = cyclic_group_hopf<mpq_class>(Q, 2);
  EXPECT_EQ(h.S, (Mat<mpq_class>::identity(Q, 2)));
  expect_valid(h);
}

TEST(Lu, OppositeOfLeftIsRightBialgebroid) {
  HopfAlgebroidData<mpq_class> h = lu_ut2();
  EXPECT_TRUE(right_bialgebroid_report(op(h.left)).ok());
}

TEST(Coring, GrouplikesAndRegularComodule) {
  HopfAlgebroidData<mpq_class> h = lu_ut2();
  CoringData<mpq_class> C = left_coring(h.left);
  EXPECT_TRUE(check_grouplike(C, h.A().one()));
  EXPECT_TRUE(comodule_report(C, regular_comodule(C, Side::Right)).ok());

  HopfAlgebroidData<mpq_class> c2 = cyclic_group_hopf<mpq_class>(Q, 2);
  CoringData<mpq_class> C2 = left_coring(c2.left);
  EXPECT_TRUE(check_grouplike(C2, c2.A().e(1)));
  EXPECT_FALSE(check_grouplike(C2, c2.A().one() + c2.A().e(1)));  // counit gives 2
}

TEST(BalancedTensor, LuUpperTriangularQuotientDimension) {
  HopfAlgebroidData<mpq_class> h = lu_ut2();
  HopfContext<mpq_class> c(h);
  const auto& A = c.A();
  size_t n = 9;
  // relations t_L(b) x (x) y - x (x) s_L(b) y over basis x, y, b
  std::vector<std::vector<mpq_class>> rel;
  for (size_t b = 0; b < 3; ++b)
    for (size_t x = 0; x < n; ++x)
      for (size_t y = 0; y < n; ++y) {
        Vec<mpq_class> l = oracle::mul(A, c.tL().col(b), A.e(x)), r = oracle::mul(A, c.sL().col(b), A.e(y));
        std::vector<mpq_class> row(n * n);
        for (size_t i = 0; i < n; ++i) {
          row[i * n + y] += l[i];
          row[x * n + i] -= r[i];
        }
        rel.push_back(row);
      }
  size_t expected = n * n - oracle::rank(rel);
  EXPECT_EQ(expected, 27u);
  EXPECT_EQ(c.LL().dim(), expected);
}

TEST(Lu, AntipodeIsInvolutive) {
  HopfAlgebroidData<mpq_class> h = lu_ut2();
  EXPECT_EQ(h.S * h.S, (Mat<mpq_class>::identity(Q, 9)));
}

}  // namespace
