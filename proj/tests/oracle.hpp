#pragma once

// Small independent reference computations for the tests. Nothing here calls the
// library's elimination code; structure constants are read through basis_product only.

#include <hopfalg.hpp>

#include <gmpxx.h>

#include <vector>

namespace oracle {

using hopfalg::FinAlgebra;
using hopfalg::Mat;
using hopfalg::Vec;

// Rank by plain fraction elimination.
inline size_t rank(std::vector<std::vector<mpq_class>> m) {
  size_t r = 0, rows = m.size(), cols = rows ? m[0].size() : 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class k = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= k * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<mpq_class>> rows_of(const Mat<mpq_class>& a) {
  std::vector<std::vector<mpq_class>> m(a.rows, std::vector<mpq_class>(a.cols));
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < a.cols; ++j) m[i][j] = a(i, j);
  return m;
}

inline bool in_span(std::vector<std::vector<mpq_class>> rows, const std::vector<mpq_class>& v) {
  size_t r = rank(rows);
  rows.push_back(v);
  return rank(rows) == r;
}

// x y through structure constants.
template <class K>
Vec<K> mul(const FinAlgebra<K>& A, const Vec<K>& x, const Vec<K>& y) {
  size_t n = A.dim();
  Vec<K> r = hopfalg::zeros<K>(A.field(), n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (hopfalg::is_zero(x[i]) || hopfalg::is_zero(y[j])) continue;
      Vec<K> p = A.basis_product(i, j);
      for (size_t k = 0; k < n; ++k) r[k] += x[i] * y[j] * p[k];
    }
  return r;
}

template <class K>
Vec<K> apply(const Mat<K>& m, const Vec<K>& v) {
  Vec<K> r = hopfalg::zeros<K>(m.field, m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) r[i] += m(i, j) * v[j];
  return r;
}

// Frobenius system (psi, sum u_ij e_i (x) e_j) for e: B -> A:
// sum e(psi(a e_i)) e_j = a and sum e_i e(psi(e_j a)) = a on every basis a.
template <class K>
bool is_frobenius_system(const FinAlgebra<K>& A, const Mat<K>& e, const Mat<K>& psi, const Vec<K>& u) {
  size_t n = A.dim();
  for (size_t a = 0; a < n; ++a) {
    Vec<K> ea = A.e(a), l = hopfalg::zeros<K>(A.field(), n), r = l;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const K& c = u[i * n + j];
        if (hopfalg::is_zero(c)) continue;
        Vec<K> x = mul(A, oracle::apply(e, oracle::apply(psi, mul(A, ea, A.e(i)))), A.e(j));
        Vec<K> y = mul(A, A.e(i), oracle::apply(e, oracle::apply(psi, mul(A, A.e(j), ea))));
        for (size_t k = 0; k < n; ++k) {
          l[k] += c * x[k];
          r[k] += c * y[k];
        }
      }
    if (l != ea || r != ea) return false;
  }
  return true;
}

// Dimension of the center: n minus the rank of the commutator system.
inline size_t center_dim(const FinAlgebra<mpq_class>& A) {
  size_t n = A.dim();
  std::vector<std::vector<mpq_class>> sys;
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      std::vector<mpq_class> row(n);
      for (size_t z = 0; z < n; ++z) row[z] = A.basis_product(z, i)[k] - A.basis_product(i, z)[k];
      sys.push_back(row);
    }
  return n - rank(sys);
}

}  // namespace oracle
