#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hopfalg;

namespace {

Field Q = Field::rationals();

TEST(Integrals, GroupAlgebraC2) {
  HopfContext<mpq_class> c(cyclic_group_hopf<mpq_class>(Q, 2));
  IntegralSpace<mpq_class> L = integral_space(c, IntegralKind::L_in);
  ASSERT_EQ(L.basis.dim(), 1u);
  EXPECT_TRUE(L.basis.contains(Vec<mpq_class>{1, 1}));
}

// h l = eps(h) l on all basis h, by direct multiplication
bool is_left_integral(const HopfAlgebroidData<mpq_class>& h, const Vec<mpq_class>& l) {
  const auto& A = h.A();
  for (size_t a = 0; a < A.dim(); ++a) {
    Vec<mpq_class> lhs = oracle::mul(A, A.e(a), l);
    Vec<mpq_class> rhs = h.left.pi(0, a) * l;
    if (lhs != rhs) return false;
  }
  return true;
}

bool is_right_integral(const HopfAlgebroidData<mpq_class>& h, const Vec<mpq_class>& l) {
  const auto& A = h.A();
  for (size_t a = 0; a < A.dim(); ++a)
    if (oracle::mul(A, l, A.e(a)) != h.right.pi(0, a) * l) return false;
  return true;
}

TEST(Integrals, SweedlerLeftAndRightLines) {
  HopfAlgebroidData<mpq_class> h = sweedler_h4<mpq_class>(Q);
  HopfContext<mpq_class> c(h);
  IntegralSpaces<mpq_class> I = all_integral_spaces(c);
  // basis 1, g, x, gx: x + gx is a left integral, x - gx a right one
  Vec<mpq_class> left{0, 0, 1, 1}, right{0, 0, 1, -1};
  ASSERT_TRUE(is_left_integral(h, left));
  ASSERT_TRUE(is_right_integral(h, right));
  EXPECT_FALSE(is_left_integral(h, right));
  EXPECT_EQ(I.L_in.basis.dim(), 1u);
  EXPECT_EQ(I.R_in.basis.dim(), 1u);
  EXPECT_TRUE(I.L_in.basis.contains(left));
  EXPECT_TRUE(I.R_in.basis.contains(right));
}

TEST(Integrals, LeftIntegralsAreInvariantsOfTheRegularModule) {
  HopfAlgebroidData<mpq_class> h = lu_algebroid(upper_triangular2<mpq_class>(Q));
  HopfContext<mpq_class> c(h);
  std::vector<Mat<mpq_class>> act;
  for (size_t a = 0; a < c.n(); ++a) act.push_back(c.A().left_mult(c.e(a)));
  Subspace<mpq_class> inv = invariants_of_module(h.left, act);
  EXPECT_EQ(inv, integral_space(c, IntegralKind::L_in).basis);
}

template <class K>
void scholia_hold(const HopfAlgebroidData<K>& h) {
  HopfContext<K> c(h);
  IntegralSpaces<K> I = all_integral_spaces(c);
  Report s = scholium_report(c, I);
  EXPECT_TRUE(s.ok()) << s.first_failure()->name;
  Report p = scholium_property_report(c, I, 100, 2024);
  EXPECT_TRUE(p.ok()) << p.first_failure()->name;
}

TEST(Scholia, HoldOnSmallCatalogEntries) {
  scholia_hold(cyclic_group_hopf<mpq_class>(Q, 2));
  scholia_hold(sweedler_h4<mpq_class>(Q));
  scholia_hold(cyclic_group_hopf<Fp>(Field::prime(5), 5));
  scholia_hold(lu_algebroid(upper_triangular2<mpq_class>(Q)));
  scholia_hold(lu_algebroid(dual_numbers<mpq_class>(Q)));
}

// A random integral plus anything outside the integral space must violate every characterization.
template <class K>
void mutations_detected(const HopfAlgebroidData<K>& h) {
  HopfContext<K> c(h);
  IntegralSpaces<K> I = all_integral_spaces(c);
  std::mt19937_64 rng(99);
  for (auto& ch : scholium_characterizations(c)) {
    const Subspace<K>& sp = I.get(ch.kind).basis;
    if (sp.dim() == sp.ambient) continue;
    for (int t = 0; t < 10; ++t) {
      Vec<K> x = random_element(sp, rng), bump = zeros<K>(c.field(), sp.ambient);
      // first coordinate direction not in the space
      for (size_t k = 0; k < sp.ambient; ++k) {
        bump = unit_vec<K>(c.field(), sp.ambient, k);
        if (!sp.contains(bump)) break;
      }
      EXPECT_FALSE(all_zero(ch.residual(x + bump))) << ch.id;
    }
  }
}

TEST(Scholia, MutatedIntegralsAreRejected) {
  mutations_detected(sweedler_h4<mpq_class>(Q));
  mutations_detected(lu_algebroid(upper_triangular2<mpq_class>(Q)));
}

TEST(Duals, GroupAlgebraDualIsFunctionAlgebra) {
  HopfAlgebroidData<mpq_class> h = cyclic_group_hopf<mpq_class>(Q, 2);
  DualAlgebra<mpq_class> D = dual_algebra(h.left, DualKind::StarA);
  ASSERT_EQ(D.dim(), 2u);
  Mat<mpq_class> d1(Q, 1, 2), dg(Q, 1, 2);
  d1(0, 0) = 1;
  dg(0, 1) = 1;
  EXPECT_EQ(dual_product(h.left, DualKind::StarA, d1, d1), d1);
  EXPECT_EQ(dual_product(h.left, DualKind::StarA, dg, dg), dg);
  EXPECT_TRUE(dual_product(h.left, DualKind::StarA, d1, dg).is_zero_mat());
  // unit is the counit
  EXPECT_EQ(D.functional(D.alg.one()), h.left.pi);
  // g is grouplike: g <- delta_g = g and g <- delta_1 = 0
  EXPECT_EQ(harpoon_star_a(h.left, dg, h.A().e(1)), h.A().e(1));
  EXPECT_TRUE(all_zero(harpoon_star_a(h.left, d1, h.A().e(1))));
}

TEST(Duals, LuUpperTriangularDimensionsAndSigmaChi) {
  HopfContext<mpq_class> c(lu_algebroid(upper_triangular2<mpq_class>(Q)));
  SigmaChi<mpq_class> sc = sigma_chi(c);
  EXPECT_EQ(sc.a_upper.dim(), 9u);
  EXPECT_EQ(sc.star_a.dim(), 9u);
  EXPECT_EQ(sc.sigma * sc.sigma_inv, (Mat<mpq_class>::identity(Q, 9)));
  EXPECT_EQ(sc.chi * sc.chi_inv, (Mat<mpq_class>::identity(Q, 9)));
  EXPECT_TRUE(sigma_chi_report(c, sc).ok());
}

}  // namespace
