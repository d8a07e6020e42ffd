#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hopfalg;

namespace {

Field Q = Field::rationals();

template <class K>
Mat<K> mat_of(const Field& f, const json& j) {
  Mat<K> m(f, j.size(), j[0].size());
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t k = 0; k < m.cols; ++k) m(i, k) = Scalar<K>::from_json(f, j[i][k]);
  return m;
}

template <class K>
Vec<K> vec_of(const Field& f, const json& j) {
  Vec<K> v;
  for (auto& x : j) v.push_back(Scalar<K>::from_json(f, x));
  return v;
}

struct Case {
  const char* name;
  bool frobenius;
};

const Case cases[] = {{"qc2", true},     {"f5c5", true},     {"sweedler-h4", true},      {"lu-ut2-q", false},
                      {"lu-m2-q", true}, {"lu-m2-f5", true}, {"lu-dualnumbers-q", true}};

template <class K>
void check_case(const HopfAlgebroidData<K>& h, const Case& cs) {
  HopfContext<K> c(h);
  IntegralSpaces<K> I = all_integral_spaces(c);
  SigmaChi<K> sc = sigma_chi(c);
  FrobeniusReport<K> r = frobenius_decide(c, I, sc, SearchPolicy{});
  ASSERT_NE(r.decision, Decision::UndecidedProbablyNot) << cs.name;
  EXPECT_TRUE(r.undecided.empty()) << cs.name;
  EXPECT_TRUE(r.theorem.agree()) << cs.name;
  EXPECT_TRUE(r.theorem.checks.ok()) << cs.name;
  EXPECT_TRUE(r.checks.ok()) << cs.name;
  EXPECT_EQ(r.decision == Decision::Yes, cs.frobenius) << cs.name;
  EXPECT_EQ(r.theorem.verdict(), cs.frobenius) << cs.name;
  if (!cs.frobenius) return;

  // every emitted system, re-read from JSON, satisfies both identities on every basis element
  const json& sys = r.certificate["systems"];
  std::map<std::string, Mat<K>> ext = {{"s_R", c.sR()}, {"t_L", c.tL()}, {"s_L", c.sL()}, {"t_R", c.tR()}};
  for (auto& [name, e] : ext) {
    ASSERT_TRUE(sys.contains(name)) << cs.name << " " << name;
    Mat<K> psi = mat_of<K>(c.field(), sys[name]["psi"]);
    Vec<K> u = vec_of<K>(c.field(), sys[name]["tensor"]);
    EXPECT_TRUE(oracle::is_frobenius_system(c.A(), e, psi, u)) << cs.name << " " << name;
  }
  EXPECT_EQ(r.certificate["rank_one_generator"], true) << cs.name;
  EXPECT_TRUE(r.theorem.find("2.a")->verdict) << cs.name;

  EXPECT_TRUE(r.lambda_star.has_value());

  // Frobenius implies QF on both sides
  EXPECT_TRUE(qf_decide(c, I, sc, QFSide::Left).theorem.verdict()) << cs.name;
  EXPECT_TRUE(qf_decide(c, I, sc, QFSide::Right).theorem.verdict()) << cs.name;
}

TEST(Frobenius, DecisionsAndVerifiedSystems) {
  for (const Case& cs : cases)
    std::visit(
        [&](const auto& x) {
          if constexpr (requires { x.left; }) check_case(x, cs);
        },
        builtin(cs.name));
}

// UT(2) is not a Frobenius algebra: phi(xy) is degenerate for every phi.
TEST(Frobenius, UpperTriangularFormsAreDegenerate) {
  FinAlgebra<mpq_class> B = upper_triangular2<mpq_class>(Q);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 50; ++t) {
    std::vector<mpq_class> phi = {d(rng), d(rng), d(rng)};
    std::vector<std::vector<mpq_class>> G(3, std::vector<mpq_class>(3));
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) {
        Vec<mpq_class> p = B.basis_product(i, j);
        for (size_t k = 0; k < 3; ++k) G[i][j] += phi[k] * p[k];
      }
    EXPECT_LT(oracle::rank(G), 3u);
  }
}

TEST(Frobenius, SameSeedSameReport) {
  HopfContext<mpq_class> c(lu_algebroid(dual_numbers<mpq_class>(Q)));
  IntegralSpaces<mpq_class> I = all_integral_spaces(c);
  SigmaChi<mpq_class> sc = sigma_chi(c);
  SearchPolicy p;
  p.seed = 42;
  EXPECT_EQ(frobenius_decide(c, I, sc, p).to_json().dump(), frobenius_decide(c, I, sc, p).to_json().dump());
}

}  // namespace
