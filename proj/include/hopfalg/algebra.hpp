#pragma once

#include "exactla.hpp"

#include <string>
#include <vector>

namespace hopfalg {

// An axiom or well-formedness failure with the lexicographically first witness.
struct AxiomFailure : InvalidInput {
  std::string code;
  std::vector<size_t> witness;
  AxiomFailure(std::string c, std::vector<size_t> w, const std::string& what = "")
      : InvalidInput(c + witness_str(w) + (what.empty() ? "" : ": " + what)), code(std::move(c)), witness(std::move(w)) {}

  static std::string witness_str(const std::vector<size_t>& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
  }
};

template <class K>
class FinAlgebra {
 public:
  FinAlgebra() = default;

  // mult[i][j] = coordinates of e_i e_j. Unchecked; see mk_algebra.
  FinAlgebra(const Field& f, size_t n, const std::vector<std::vector<Vec<K>>>& mult, Vec<K> unit)
      : field_(f), n_(n), unit_(std::move(unit)), nz_(n * n) {
    if (mult.size() != n || unit_.size() != n) throw InvalidInput("algebra: shape mismatch");
    for (size_t i = 0; i < n; ++i) {
      if (mult[i].size() != n) throw InvalidInput("algebra: shape mismatch");
      for (size_t j = 0; j < n; ++j) {
        if (mult[i][j].size() != n) throw InvalidInput("algebra: shape mismatch");
        for (size_t k = 0; k < n; ++k)
          if (!is_zero(mult[i][j][k])) nz_[i * n + j].emplace_back(uint32_t(k), mult[i][j][k]);
      }
    }
  }

  const Field& field() const { return field_; }
  size_t dim() const { return n_; }
  const Vec<K>& one() const { return unit_; }
  Vec<K> e(size_t i) const { return unit_vec<K>(field_, n_, i); }
  Vec<K> zero() const { return zeros<K>(field_, n_); }

  Vec<K> basis_product(size_t i, size_t j) const {
    Vec<K> r = zero();
    for (auto& [k, c] : nz_[i * n_ + j]) r[k] = c;
    return r;
  }
  std::vector<std::vector<Vec<K>>> structure_constants() const {
    std::vector<std::vector<Vec<K>>> m(n_, std::vector<Vec<K>>(n_));
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j) m[i][j] = basis_product(i, j);
    return m;
  }

  Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> r = zero();
    for (size_t i = 0; i < n_; ++i) {
      if (is_zero(x[i])) continue;
      for (size_t j = 0; j < n_; ++j) {
        if (is_zero(y[j])) continue;
        K c = x[i] * y[j];
        for (auto& [k, s] : nz_[i * n_ + j]) r[k] += c * s;
      }
    }
    return r;
  }
  Vec<K> mul(const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) const { return mul(mul(x, y), z); }

  // y |-> x y
  Mat<K> left_mult(const Vec<K>& x) const {
    Mat<K> m(field_, n_, n_);
    for (size_t i = 0; i < n_; ++i) {
      if (is_zero(x[i])) continue;
      for (size_t j = 0; j < n_; ++j)
        for (auto& [k, s] : nz_[i * n_ + j]) m(k, j) += x[i] * s;
    }
    return m;
  }
  // y |-> y x
  Mat<K> right_mult(const Vec<K>& x) const {
    Mat<K> m(field_, n_, n_);
    for (size_t j = 0; j < n_; ++j) {
      if (is_zero(x[j])) continue;
      for (size_t i = 0; i < n_; ++i)
        for (auto& [k, s] : nz_[i * n_ + j]) m(k, i) += x[j] * s;
    }
    return m;
  }

  bool operator==(const FinAlgebra& o) const {
    return field_ == o.field_ && n_ == o.n_ && unit_ == o.unit_ && nz_ == o.nz_;
  }

 private:
  Field field_;
  size_t n_ = 0;
  Vec<K> unit_;
  std::vector<std::vector<std::pair<uint32_t, K>>> nz_;
};

template <class K>
void verify_algebra(const FinAlgebra<K>& a) {
  size_t n = a.dim();
  for (size_t i = 0; i < n; ++i) {
    if (a.mul(a.one(), a.e(i)) != a.e(i) || a.mul(a.e(i), a.one()) != a.e(i))
      throw AxiomFailure("UnitLawFails", {i});
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec<K> ij = a.basis_product(i, j);
      for (size_t k = 0; k < n; ++k)
        if (a.mul(ij, a.e(k)) != a.mul(a.e(i), a.basis_product(j, k))) throw AxiomFailure("NotAssociative", {i, j, k});
    }
}

template <class K>
FinAlgebra<K> mk_algebra(const Field& f, size_t n, const std::vector<std::vector<Vec<K>>>& mult, const Vec<K>& unit) {
  FinAlgebra<K> a(f, n, mult, unit);
  verify_algebra(a);
  return a;
}

template <class K>
FinAlgebra<K> opposite(const FinAlgebra<K>& a) {
  auto m = a.structure_constants();
  std::vector<std::vector<Vec<K>>> o(a.dim(), std::vector<Vec<K>>(a.dim()));
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) o[i][j] = m[j][i];
  return FinAlgebra<K>(a.field(), a.dim(), o, a.one());
}

// Basis e_i (x) f_j has index i * dim(b) + j.
template <class K>
FinAlgebra<K> tensor_algebras(const FinAlgebra<K>& a, const FinAlgebra<K>& b) {
  if (!(a.field() == b.field())) throw InvalidInput("tensor_algebras: field mismatch");
  size_t n = a.dim(), m = b.dim(), N = n * m;
  std::vector<std::vector<Vec<K>>> c(N, std::vector<Vec<K>>(N));
  for (size_t i1 = 0; i1 < n; ++i1)
    for (size_t j1 = 0; j1 < m; ++j1)
      for (size_t i2 = 0; i2 < n; ++i2)
        for (size_t j2 = 0; j2 < m; ++j2) {
          Vec<K> x = a.basis_product(i1, i2), y = b.basis_product(j1, j2);
          Vec<K> r = zeros<K>(a.field(), N);
          for (size_t p = 0; p < n; ++p)
            if (!is_zero(x[p]))
              for (size_t q = 0; q < m; ++q) r[p * m + q] = x[p] * y[q];
          c[i1 * m + j1][i2 * m + j2] = std::move(r);
        }
  Vec<K> u = zeros<K>(a.field(), N);
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < m; ++q) u[p * m + q] = a.one()[p] * b.one()[q];
  return FinAlgebra<K>(a.field(), N, c, u);
}

enum class Variance { Homomorphism, AntiHomomorphism };

template <class K>
struct AlgMap {
  Mat<K> matrix;
  Variance variance;
};

template <class K>
AlgMap<K> check_alg_map(const Mat<K>& f, const FinAlgebra<K>& src, const FinAlgebra<K>& tgt, Variance v) {
  if (f.cols != src.dim() || f.rows != tgt.dim()) throw InvalidInput("check_alg_map: shape mismatch");
  if (f * src.one() != tgt.one()) throw AxiomFailure("UnitNotPreserved", {});
  for (size_t i = 0; i < src.dim(); ++i)
    for (size_t j = 0; j < src.dim(); ++j) {
      Vec<K> fi = f.col(i), fj = f.col(j);
      Vec<K> rhs = v == Variance::Homomorphism ? tgt.mul(fi, fj) : tgt.mul(fj, fi);
      if (f * src.basis_product(i, j) != rhs) throw AxiomFailure("NotMultiplicative", {i, j});
    }
  return {f, v};
}

template <class K>
bool is_alg_map(const Mat<K>& f, const FinAlgebra<K>& src, const FinAlgebra<K>& tgt, Variance v) {
  try {
    check_alg_map(f, src, tgt, v);
    return true;
  } catch (const AxiomFailure&) {
    return false;
  }
}

template <class K>
Subspace<K> center(const FinAlgebra<K>& a) {
  size_t n = a.dim();
  Mat<K> sys(a.field(), n * n, n);
  for (size_t i = 0; i < n; ++i) {
    Mat<K> d = a.right_mult(a.e(i)) - a.left_mult(a.e(i));
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) sys(i * n + r, c) = d(r, c);
  }
  return kernel(sys);
}

}  // namespace hopfalg
