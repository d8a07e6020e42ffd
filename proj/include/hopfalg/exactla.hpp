#pragma once

#include "field.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <type_traits>
#include <vector>

namespace hopfalg {

template <class K>
using Vec = std::vector<K>;

template <class K>
Vec<K> zeros(const Field& f, size_t n) {
  return Vec<K>(n, from_int<K>(f, 0));
}

template <class K>
Vec<K> unit_vec(const Field& f, size_t n, size_t i) {
  Vec<K> v = zeros<K>(f, n);
  v[i] = from_int<K>(f, 1);
  return v;
}

template <class K>
bool all_zero(const Vec<K>& v) {
  return std::all_of(v.begin(), v.end(), [](const K& x) { return is_zero(x); });
}

template <class K>
Vec<K> operator+(Vec<K> a, const Vec<K>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
template <class K>
Vec<K> operator-(Vec<K> a, const Vec<K>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
template <class K>
Vec<K> operator*(const std::type_identity_t<K>& c, Vec<K> a) {
  for (auto& x : a) x *= c;
  return a;
}

// a += c*b
template <class K>
void axpy(Vec<K>& a, const std::type_identity_t<K>& c, const Vec<K>& b) {
  if (is_zero(c)) return;
  for (size_t i = 0; i < a.size(); ++i)
    if (!is_zero(b[i])) a[i] += c * b[i];
}

// Dense row-major matrix. A linear map V -> W is a dim W x dim V matrix.
template <class K>
struct Mat {
  Field field;
  size_t rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(const Field& f, size_t r, size_t c) : field(f), rows(r), cols(c), a(r * c, from_int<K>(f, 0)) {}

  static Mat identity(const Field& f, size_t n) {
    Mat m(f, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = from_int<K>(f, 1);
    return m;
  }
  static Mat from_cols(const Field& f, size_t r, const std::vector<Vec<K>>& cs) {
    Mat m(f, r, cs.size());
    for (size_t j = 0; j < cs.size(); ++j) m.set_col(j, cs[j]);
    return m;
  }
  static Mat from_rows(const Field& f, size_t c, const std::vector<Vec<K>>& rs) {
    Mat m(f, rs.size(), c);
    for (size_t i = 0; i < rs.size(); ++i) m.set_row(i, rs[i]);
    return m;
  }

  K& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const K& operator()(size_t i, size_t j) const { return a[i * cols + j]; }

  Vec<K> row(size_t i) const { return Vec<K>(a.begin() + i * cols, a.begin() + (i + 1) * cols); }
  Vec<K> col(size_t j) const {
    Vec<K> v;
    v.reserve(rows);
    for (size_t i = 0; i < rows; ++i) v.push_back((*this)(i, j));
    return v;
  }
  void set_row(size_t i, const Vec<K>& v) { std::copy(v.begin(), v.end(), a.begin() + i * cols); }
  void set_col(size_t j, const Vec<K>& v) {
    for (size_t i = 0; i < rows; ++i) (*this)(i, j) = v[i];
  }

  Vec<K> operator*(const Vec<K>& v) const {
    Vec<K> r = zeros<K>(field, rows);
    for (size_t j = 0; j < cols; ++j) {
      if (is_zero(v[j])) continue;
      for (size_t i = 0; i < rows; ++i)
        if (!is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
    }
    return r;
  }

  Mat operator*(const Mat& o) const {
    Mat r(field, rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t k = 0; k < cols; ++k) {
        const K& x = (*this)(i, k);
        if (is_zero(x)) continue;
        for (size_t j = 0; j < o.cols; ++j)
          if (!is_zero(o(k, j))) r(i, j) += x * o(k, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
  }

  Mat transpose() const {
    Mat r(field, cols, rows);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero_mat() const { return all_zero(a); }
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Kronecker product: (f (x) g)(e_i (x) e_j) = f(e_i) (x) g(e_j), row-major tensor coordinates.
template <class K>
Mat<K> kron(const Mat<K>& f, const Mat<K>& g) {
  Mat<K> r(f.field, f.rows * g.rows, f.cols * g.cols);
  for (size_t i = 0; i < f.rows; ++i)
    for (size_t j = 0; j < f.cols; ++j) {
      if (is_zero(f(i, j))) continue;
      for (size_t k = 0; k < g.rows; ++k)
        for (size_t l = 0; l < g.cols; ++l)
          if (!is_zero(g(k, l))) r(i * g.rows + k, j * g.cols + l) = f(i, j) * g(k, l);
    }
  return r;
}

template <class K>
Mat<K> vstack(const Mat<K>& x, const Mat<K>& y) {
  Mat<K> r(x.field, x.rows + y.rows, x.cols);
  std::copy(x.a.begin(), x.a.end(), r.a.begin());
  std::copy(y.a.begin(), y.a.end(), r.a.begin() + x.a.size());
  return r;
}

template <class K>
Mat<K> hstack(const Mat<K>& x, const Mat<K>& y) {
  Mat<K> r(x.field, x.rows, x.cols + y.cols);
  for (size_t i = 0; i < x.rows; ++i) {
    for (size_t j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
    for (size_t j = 0; j < y.cols; ++j) r(i, x.cols + j) = y(i, j);
  }
  return r;
}

// Row space in fully reduced echelon form, kept as rows are added.
// Fully reduced rows vanish on every other pivot column, so reducing a vector
// against them takes one pass over its pivot coordinates.
template <class K>
class SubspaceBuilder {
 public:
  SubspaceBuilder(const Field& f, size_t n) : f_(f), n_(n) {}

  size_t ambient() const { return n_; }
  size_t dim() const { return rows_.size(); }

  Vec<K> reduce(Vec<K> v) const {
    std::vector<std::pair<const Row*, K>> hits;
    for (auto& [p, r] : rows_)
      if (!is_zero(v[p])) hits.emplace_back(&r, v[p]);
    for (auto& [r, c] : hits)
      for (uint32_t k : r->nz) v[k] -= c * r->d[k];
    return v;
  }

  // Returns true when v enlarged the span.
  bool add(const Vec<K>& v0) {
    Vec<K> v = reduce(v0);
    size_t q = 0;
    while (q < n_ && is_zero(v[q])) ++q;
    if (q == n_) return false;
    K inv = from_int<K>(f_, 1) / v[q];
    Row nr;
    for (size_t k = q; k < n_; ++k)
      if (!is_zero(v[k])) {
        v[k] *= inv;
        nr.nz.push_back(uint32_t(k));
      }
    nr.d = std::move(v);
    for (auto& [p, r] : rows_) {
      if (is_zero(r.d[q])) continue;
      K c = r.d[q];
      for (uint32_t k : nr.nz) r.d[k] -= c * nr.d[k];
      r.nz.clear();
      for (size_t k = p; k < n_; ++k)
        if (!is_zero(r.d[k])) r.nz.push_back(uint32_t(k));
    }
    rows_.emplace(q, std::move(nr));
    return true;
  }

  std::vector<size_t> pivots() const {
    std::vector<size_t> ps;
    for (auto& [p, r] : rows_) ps.push_back(p);
    return ps;
  }
  Mat<K> basis() const {
    Mat<K> m(f_, rows_.size(), n_);
    size_t i = 0;
    for (auto& [p, r] : rows_) m.set_row(i++, r.d);
    return m;
  }

 private:
  struct Row {
    Vec<K> d;
    std::vector<uint32_t> nz;
  };
  Field f_;
  size_t n_;
  std::map<size_t, Row> rows_;
};

template <class K>
struct Subspace {
  Field field;
  size_t ambient = 0;
  Mat<K> basis;  // rows, RREF
  std::vector<size_t> pivots;

  size_t dim() const { return basis.rows; }
  Vec<K> vec(size_t i) const { return basis.row(i); }

  static Subspace zero(const Field& f, size_t n) { return {f, n, Mat<K>(f, 0, n), {}}; }
  static Subspace whole(const Field& f, size_t n) {
    std::vector<size_t> ps(n);
    for (size_t i = 0; i < n; ++i) ps[i] = i;
    return {f, n, Mat<K>::identity(f, n), ps};
  }

  Vec<K> reduce(Vec<K> v) const {
    for (size_t i = 0; i < pivots.size(); ++i) {
      K c = v[pivots[i]];
      if (is_zero(c)) continue;
      for (size_t k = pivots[i]; k < ambient; ++k)
        if (!is_zero(basis(i, k))) v[k] -= c * basis(i, k);
    }
    return v;
  }
  bool contains(const Vec<K>& v) const {
    if (v.size() != ambient) throw std::invalid_argument("span_contains: dimension mismatch");
    return all_zero(reduce(v));
  }
  // Coordinates of v (assumed inside) in the basis rows.
  Vec<K> coords(const Vec<K>& v) const {
    Vec<K> c = zeros<K>(field, dim());
    for (size_t i = 0; i < pivots.size(); ++i) c[i] = v[pivots[i]];
    return c;
  }
  Vec<K> combine(const Vec<K>& c) const {
    Vec<K> v = zeros<K>(field, ambient);
    for (size_t i = 0; i < dim(); ++i)
      if (!is_zero(c[i]))
        for (size_t k = 0; k < ambient; ++k) v[k] += c[i] * basis(i, k);
    return v;
  }
  // Basis vectors as columns: ambient x dim.
  Mat<K> inclusion() const { return basis.transpose(); }

  bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
  bool contains(const Subspace& o) const {
    for (size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.vec(i))) return false;
    return true;
  }
};

template <class K>
Subspace<K> finish(const SubspaceBuilder<K>& b, const Field& f) {
  return {f, b.ambient(), b.basis(), b.pivots()};
}

template <class K>
Subspace<K> row_space(const Mat<K>& m) {
  SubspaceBuilder<K> b(m.field, m.cols);
  for (size_t i = 0; i < m.rows; ++i) b.add(m.row(i));
  return finish(b, m.field);
}

template <class K>
Subspace<K> span_of(const Field& f, size_t n, const std::vector<Vec<K>>& vs) {
  SubspaceBuilder<K> b(f, n);
  for (auto& v : vs) b.add(v);
  return finish(b, f);
}

template <class K>
Subspace<K> image(const Mat<K>& m) {
  return row_space(m.transpose());
}

template <class K>
size_t rank(const Mat<K>& m) {
  return row_space(m).dim();
}

template <class K>
Subspace<K> kernel(const Mat<K>& m) {
  Subspace<K> r = row_space(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (size_t p : r.pivots) is_pivot[p] = 1;
  std::vector<Vec<K>> ks;
  for (size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<K> v = unit_vec<K>(m.field, m.cols, f);
    for (size_t i = 0; i < r.dim(); ++i) v[r.pivots[i]] = -r.basis(i, f);
    ks.push_back(std::move(v));
  }
  return span_of(m.field, m.cols, ks);
}

template <class K>
bool span_contains(const Subspace<K>& s, const Vec<K>& v) {
  return s.contains(v);
}

template <class K>
struct AffineSolution {
  Vec<K> particular;
  Subspace<K> homogeneous;
};

template <class K>
std::optional<AffineSolution<K>> solve_affine(const Mat<K>& m, const Vec<K>& b) {
  if (b.size() != m.rows) throw std::invalid_argument("solve_affine: dimension mismatch");
  Mat<K> aug(m.field, m.rows, m.cols + 1);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[i];
  }
  Subspace<K> r = row_space(aug);
  Vec<K> x = zeros<K>(m.field, m.cols);
  for (size_t i = 0; i < r.dim(); ++i) {
    if (r.pivots[i] == m.cols) return std::nullopt;
    x[r.pivots[i]] = r.basis(i, m.cols);
  }
  return AffineSolution<K>{std::move(x), kernel(m)};
}

template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& m) {
  if (m.rows != m.cols) return std::nullopt;
  Subspace<K> r = row_space(hstack(m, Mat<K>::identity(m.field, m.rows)));
  if (r.dim() != m.rows || (m.rows && r.pivots.back() >= m.cols)) return std::nullopt;
  Mat<K> inv(m.field, m.rows, m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.rows; ++j) inv(i, j) = r.basis(i, m.cols + j);
  return inv;
}

template <class K>
K determinant(Mat<K> m) {
  size_t n = m.rows;
  K det = from_int<K>(m.field, 1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return from_int<K>(m.field, 0);
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    K inv = from_int<K>(m.field, 1) / m(c, c);
    for (size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      K f = m(i, c) * inv;
      for (size_t j = c; j < n; ++j)
        if (!is_zero(m(c, j))) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class K>
Subspace<K> intersect(const Subspace<K>& x, const Subspace<K>& y) {
  // v = sum a_i x_i with v in y: kernel of the reduction of x's rows modulo y.
  Mat<K> m(x.field, x.ambient, x.dim());
  for (size_t i = 0; i < x.dim(); ++i) m.set_col(i, y.reduce(x.vec(i)));
  Subspace<K> k = kernel(m);
  std::vector<Vec<K>> vs;
  for (size_t i = 0; i < k.dim(); ++i) vs.push_back(x.combine(k.vec(i)));
  return span_of(x.field, x.ambient, vs);
}

}  // namespace hopfalg
