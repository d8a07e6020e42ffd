#pragma once

#include "hopfalgebroid.hpp"

#include <functional>

namespace hopfalg {

// Algebra from a product rule on basis indices; prod(i, j) returns coordinates of e_i e_j.
template <class K>
FinAlgebra<K> algebra_from(const Field& f, size_t n, const std::function<Vec<K>(size_t, size_t)>& prod,
                           Vec<K> unit) {
  std::vector<std::vector<Vec<K>>> c(n, std::vector<Vec<K>>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) c[i][j] = prod(i, j);
  return mk_algebra(f, n, c, unit);
}

template <class K>
FinAlgebra<K> base_field_algebra(const Field& f) {
  return algebra_from<K>(f, 1, [&](size_t, size_t) { return unit_vec<K>(f, 1, 0); }, unit_vec<K>(f, 1, 0));
}

// M_k: basis E_ij at index i*k + j.
template <class K>
FinAlgebra<K> matrix_algebra(const Field& f, size_t k) {
  size_t n = k * k;
  Vec<K> unit = zeros<K>(f, n);
  for (size_t i = 0; i < k; ++i) unit[i * k + i] = from_int<K>(f, 1);
  return algebra_from<K>(
      f, n,
      [&](size_t a, size_t b) {
        Vec<K> v = zeros<K>(f, n);
        if (a % k == b / k) v[(a / k) * k + b % k] = from_int<K>(f, 1);
        return v;
      },
      unit);
}

// UT(2): basis E11, E12, E22.
template <class K>
FinAlgebra<K> upper_triangular2(const Field& f) {
  const size_t row[3] = {0, 0, 1}, col[3] = {0, 1, 1};
  auto index = [](size_t i, size_t j) { return i == 0 ? (j == 0 ? 0 : 1) : 2; };
  Vec<K> unit = zeros<K>(f, 3);
  unit[0] = unit[2] = from_int<K>(f, 1);
  return algebra_from<K>(
      f, 3,
      [&](size_t a, size_t b) {
        Vec<K> v = zeros<K>(f, 3);
        if (col[a] == row[b]) v[index(row[a], col[b])] = from_int<K>(f, 1);
        return v;
      },
      unit);
}

// k[x]/(x^2): basis 1, x.
template <class K>
FinAlgebra<K> dual_numbers(const Field& f) {
  return algebra_from<K>(
      f, 2,
      [&](size_t a, size_t b) { return a + b < 2 ? unit_vec<K>(f, 2, a + b) : zeros<K>(f, 2); },
      unit_vec<K>(f, 2, 0));
}

// k C_m: basis g^0, ..., g^(m-1).
template <class K>
FinAlgebra<K> cyclic_group_algebra(const Field& f, size_t m) {
  return algebra_from<K>(
      f, m, [&](size_t a, size_t b) { return unit_vec<K>(f, m, (a + b) % m); }, unit_vec<K>(f, m, 0));
}

// A = B (x) B^op with s_L(b) = b(x)1, t_L(b) = 1(x)b, gamma_L(b(x)b') = (b(x)1)(x)(1(x)b'),
// pi_L(b(x)b') = bb', S = flip. Right side: R = B^op, s_R = S s_L, t_R = S t_L,
// gamma_R = (S(x)S) gamma_L^op S (which equals gamma_L), pi_R = pi_L S.
template <class K>
HopfAlgebroidData<K> lu_algebroid(const FinAlgebra<K>& B) {
  Field f = B.field();
  size_t m = B.dim(), n = m * m;
  FinAlgebra<K> A = tensor_algebras(B, opposite(B));
  Mat<K> sL(f, n, m), tL(f, n, m), sR(f, n, m), tR(f, n, m), g(f, n * n, n), piL(f, m, n), piR(f, m, n), S(f, n, n);
  for (size_t b = 0; b < m; ++b) {
    sL.set_col(b, outer(B.e(b), B.one()));
    tL.set_col(b, outer(B.one(), B.e(b)));
  }
  sR = tL;
  tR = sL;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      size_t a = i * m + j;
      g.set_col(a, outer(outer(B.e(i), B.one()), outer(B.one(), B.e(j))));
      piL.set_col(a, B.basis_product(i, j));
      piR.set_col(a, B.basis_product(j, i));
      S(j * m + i, a) = from_int<K>(f, 1);
    }
  HopfAlgebroidData<K> h{{A, B, sL, tL, g, piL}, {A, opposite(B), sR, tR, g, piR}, S};
  return mk_hopf_algebroid(h);
}

// A Hopf algebra (H, gamma, eps, S) as a Hopf algebroid over L = R = k.
template <class K>
HopfAlgebroidData<K> hopf_algebra_embed(const FinAlgebra<K>& H, const Mat<K>& gamma, const Mat<K>& eps,
                                        const Mat<K>& S) {
  Field f = H.field();
  FinAlgebra<K> k = base_field_algebra<K>(f);
  Mat<K> unit(f, H.dim(), 1);
  unit.set_col(0, H.one());
  BialgebroidData<K> side{H, k, unit, unit, gamma, eps};
  return mk_hopf_algebroid(HopfAlgebroidData<K>{side, side, S});
}

template <class K>
HopfAlgebroidData<K> cyclic_group_hopf(const Field& f, size_t m) {
  FinAlgebra<K> H = cyclic_group_algebra<K>(f, m);
  Mat<K> g(f, m * m, m), eps(f, 1, m), S(f, m, m);
  for (size_t i = 0; i < m; ++i) {
    g(i * m + i, i) = from_int<K>(f, 1);
    eps(0, i) = from_int<K>(f, 1);
    S((m - i) % m, i) = from_int<K>(f, 1);
  }
  return hopf_algebra_embed(H, g, eps, S);
}

// Sweedler's four-dimensional Hopf algebra, basis 1, g, x, gx with
// g^2 = 1, x^2 = 0, xg = -gx. Derived products:
//   g.gx = x        x.g = -gx     x.gx = -gx.x = -g x^2 = 0
//   gx.g = g(-gx) = -x            gx.x = g x^2 = 0      gx.gx = -x.x = 0
// gamma(g) = g(x)g, gamma(x) = x(x)1 + g(x)x, so gamma(gx) = gx(x)g + 1(x)gx.
// eps(g) = 1, eps(x) = 0; S(g) = g, S(x) = -gx, S(gx) = S(x)S(g) = -gx.g = x.
template <class K>
HopfAlgebroidData<K> sweedler_h4(const Field& f) {
  const int table[4][4][2] = {
      // {sign, index} with sign 0 meaning zero
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {1, 0}, {1, 3}, {1, 2}},
      {{1, 2}, {-1, 3}, {0, 0}, {0, 0}},
      {{1, 3}, {-1, 2}, {0, 0}, {0, 0}},
  };
  FinAlgebra<K> H = algebra_from<K>(
      f, 4,
      [&](size_t a, size_t b) {
        Vec<K> v = zeros<K>(f, 4);
        if (table[a][b][0]) v[table[a][b][1]] = from_int<K>(f, table[a][b][0]);
        return v;
      },
      unit_vec<K>(f, 4, 0));
  K one = from_int<K>(f, 1);
  Mat<K> g(f, 16, 4), eps(f, 1, 4), S(f, 4, 4);
  g(0 * 4 + 0, 0) = one;
  g(1 * 4 + 1, 1) = one;
  g(2 * 4 + 0, 2) = one;
  g(1 * 4 + 2, 2) = one;
  g(3 * 4 + 1, 3) = one;
  g(0 * 4 + 3, 3) = one;
  eps(0, 0) = eps(0, 1) = one;
  S(0, 0) = S(1, 1) = one;
  S(3, 2) = -one;
  S(2, 3) = one;
  return hopf_algebra_embed(H, g, eps, S);
}

}  // namespace hopfalg
