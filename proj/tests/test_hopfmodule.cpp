#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace hopfalg;

namespace {

Field Q = Field::rationals();

const char* const algebroids[] = {"qc2", "f5c5", "sweedler-h4", "lu-ut2-q", "lu-dualnumbers-q", "lu-m2-q", "lu-m2-f5"};

template <class K>
void fundamental_theorem_holds(const HopfAlgebroidData<K>& h, const std::string& name) {
  HopfContext<K> c(h);
  SigmaChi<K> sc = sigma_chi(c);
  Subspace<K> L = left_dual_integrals(c, sc.a_upper);
  HopfModuleOnDual<K> H = hopf_module_on_dual(c, sc, L);
  EXPECT_TRUE(H.checks.ok()) << name << ": " << H.checks.first_failure()->name;
  EXPECT_EQ(H.E * H.E, H.E) << name;
  EXPECT_EQ(image(H.E), L) << name;

  FundamentalIso<K> F = fundamental_iso(c, sc, H);
  EXPECT_TRUE(F.checks.ok()) << name << ": " << F.checks.first_failure()->name;
  size_t d = sc.a_upper.dim();
  for (auto* iso : {&F.left, &F.right}) {
    EXPECT_EQ(iso->map * iso->inverse, (Mat<K>::identity(c.field(), d))) << name;
    EXPECT_EQ(iso->inverse * iso->map, (Mat<K>::identity(c.field(), d))) << name;
  }

  AntipodeBijectivity<K> B = antipode_bijective(c, sc, L);
  EXPECT_TRUE(B.direct) << name;
  EXPECT_TRUE(B.agree()) << name;
  EXPECT_TRUE(B.checks.ok()) << name << ": " << B.checks.first_failure()->name;
}

TEST(HopfModule, FundamentalTheoremOnTheCatalog) {
  for (const char* name : algebroids)
    std::visit(
        [&](const auto& x) {
          if constexpr (requires { x.left; }) fundamental_theorem_holds(x, name);
        },
        builtin(name));
}

// alpha_L is invertible by an elimination independent of the library.
TEST(HopfModule, AlphaRankByOracle) {
  HopfContext<mpq_class> c(lu_algebroid(upper_triangular2<mpq_class>(Q)));
  SigmaChi<mpq_class> sc = sigma_chi(c);
  HopfModuleOnDual<mpq_class> H = hopf_module_on_dual(c, sc, left_dual_integrals(c, sc.a_upper));
  FundamentalIso<mpq_class> F = fundamental_iso(c, sc, H);
  EXPECT_EQ(oracle::rank(oracle::rows_of(F.left.map)), sc.a_upper.dim());
  EXPECT_EQ(oracle::rank(oracle::rows_of(F.right.map)), sc.a_upper.dim());
}

// E and tau_L do not depend on the chosen generators of A as an L-module.
TEST(HopfModule, ProjectionIndependentOfGenerators) {
  HopfContext<mpq_class> c(lu_algebroid(upper_triangular2<mpq_class>(Q)));
  SigmaChi<mpq_class> sc = sigma_chi(c);
  Subspace<mpq_class> L = left_dual_integrals(c, sc.a_upper);
  HopfModuleOnDual<mpq_class> H = hopf_module_on_dual(c, sc, L);

  size_t n = c.n();
  Mat<mpq_class> g(Q, n, n + 1);
  for (size_t i = 0; i < n; ++i) {
    g(n - 1 - i, i) = 1;
    g(i, i) += i;  // still spanning, no longer a basis permutation
  }
  g.set_col(n, c.A().one());
  HopfModuleOnDual<mpq_class> G = hopf_module_on_dual(c, sc, L, std::optional(g));
  EXPECT_TRUE(G.checks.ok()) << G.checks.first_failure()->name;
  EXPECT_EQ(G.E, H.E);
  for (size_t j = 0; j < sc.a_upper.dim(); ++j)
    EXPECT_EQ(H.left_target.proj(G.tau_L.col(j)), H.left_target.proj(H.tau_L.col(j)));
}

TEST(HopfModule, GroupAlgebraCoinvariantsAreTheIntegralLine) {
  HopfContext<mpq_class> c(cyclic_group_hopf<mpq_class>(Q, 2));
  SigmaChi<mpq_class> sc = sigma_chi(c);
  Subspace<mpq_class> L = left_dual_integrals(c, sc.a_upper);
  HopfModuleOnDual<mpq_class> H = hopf_module_on_dual(c, sc, L);
  ASSERT_EQ(L.dim(), 1u);
  EXPECT_EQ(H.coinv_L, L);
  // the integral on the group algebra is delta_1
  Mat<mpq_class> delta1(Q, 1, 2);
  delta1(0, 0) = 1;
  EXPECT_TRUE(L.contains(sc.a_upper.coords(delta1)));
}

TEST(HopfModule, ProjectionOfCounitIsAnIntegral) {
  HopfContext<mpq_class> c(lu_algebroid(upper_triangular2<mpq_class>(Q)));
  SigmaChi<mpq_class> sc = sigma_chi(c);
  Subspace<mpq_class> L = left_dual_integrals(c, sc.a_upper);
  HopfModuleOnDual<mpq_class> H = hopf_module_on_dual(c, sc, L);
  Vec<mpq_class> p = H.E * sc.a_upper.coords(c.piR());
  EXPECT_TRUE(L.contains(p));
}

}  // namespace
