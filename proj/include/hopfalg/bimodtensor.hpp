#pragma once

#include "algebra.hpp"

#include <array>
#include <memory>
#include <utility>

namespace hopfalg {

// _B A: b.a = s(b)a   A_B: a.b = t(b)a   A^B: a.b = a s(b)   ^B A: b.a = a t(b)
enum class ModKind { LowerLeft, LowerRight, UpperRight, UpperLeft };

template <class K>
Mat<K> module_action(const FinAlgebra<K>& A, ModKind kind, const Mat<K>& s, const Mat<K>& t, size_t b) {
  switch (kind) {
    case ModKind::LowerLeft: return A.left_mult(s.col(b));
    case ModKind::LowerRight: return A.left_mult(t.col(b));
    case ModKind::UpperRight: return A.right_mult(s.col(b));
    case ModKind::UpperLeft: return A.right_mult(t.col(b));
  }
  return {};
}

// Pairs (action on the first factor, action on the second factor), one per base basis vector.
template <class K>
using Balancing = std::vector<std::pair<Mat<K>, Mat<K>>>;

template <class K>
Balancing<K> balancing(const FinAlgebra<K>& A, const Mat<K>& s, const Mat<K>& t, ModKind first, ModKind second) {
  Balancing<K> acts;
  for (size_t b = 0; b < s.cols; ++b)
    acts.emplace_back(module_action(A, first, s, t, b), module_action(A, second, s, t, b));
  return acts;
}

// x (x) y in row-major coordinates.
template <class K>
Vec<K> outer(const Vec<K>& x, const Vec<K>& y) {
  Vec<K> r(x.size() * y.size(), K());
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j)
      if (!is_zero(x[i]) && !is_zero(y[j])) r[i * y.size() + j] = x[i] * y[j];
  return r;
}

// (f (x) g) v for v in V (x) W with f: V -> V', g: W -> W'.
template <class K>
Vec<K> apply_kron(const Mat<K>& f, const Mat<K>& g, const Vec<K>& v) {
  Vec<K> r = zeros<K>(f.field, f.rows * g.rows);
  for (size_t i = 0; i < f.cols; ++i)
    for (size_t j = 0; j < g.cols; ++j) {
      const K& c = v[i * g.cols + j];
      if (is_zero(c)) continue;
      for (size_t p = 0; p < f.rows; ++p) {
        if (is_zero(f(p, i))) continue;
        K cp = c * f(p, i);
        for (size_t q = 0; q < g.rows; ++q)
          if (!is_zero(g(q, j))) r[p * g.rows + q] += cp * g(q, j);
      }
    }
  return r;
}

// Applies op to each slice x[i, :] (op acts on the trailing factor of size m).
template <class K, class Op>
Vec<K> apply_trailing(const Vec<K>& x, size_t m, Op op) {
  size_t outer_dim = x.size() / m;
  Vec<K> r;
  for (size_t i = 0; i < outer_dim; ++i) {
    Vec<K> slice(x.begin() + i * m, x.begin() + (i + 1) * m);
    Vec<K> y = op(slice);
    if (i == 0) r.reserve(outer_dim * y.size());
    r.insert(r.end(), y.begin(), y.end());
  }
  return r;
}

// Applies op to each slice x[:, k] (op acts on the leading factor; trailing factor has size m).
template <class K, class Op>
Vec<K> apply_leading(const Vec<K>& x, size_t m, Op op, const Field& f) {
  size_t lead = x.size() / m;
  std::vector<Vec<K>> cols;
  for (size_t k = 0; k < m; ++k) {
    Vec<K> slice;
    slice.reserve(lead);
    for (size_t i = 0; i < lead; ++i) slice.push_back(x[i * m + k]);
    cols.push_back(op(slice));
  }
  size_t out = cols.empty() ? 0 : cols[0].size();
  Vec<K> r = zeros<K>(f, out * m);
  for (size_t k = 0; k < m; ++k)
    for (size_t i = 0; i < out; ++i) r[i * m + k] = cols[k][i];
  return r;
}

// (V (x) W) / span{ rho_b(x) (x) y - x (x) lambda_b(y) }.
template <class K>
class BalancedTensor {
 public:
  BalancedTensor() = default;
  BalancedTensor(const Field& f, size_t dv, size_t dw, const Balancing<K>& acts) : field_(f), dv_(dv), dw_(dw) {
    SubspaceBuilder<K> b(f, dv * dw);
    Vec<K> r = zeros<K>(f, dv * dw);
    for (auto& [rho, lam] : acts)
      for (size_t i = 0; i < dv; ++i)
        for (size_t j = 0; j < dw; ++j) {
          std::vector<size_t> touched;
          for (size_t p = 0; p < dv; ++p)
            if (!is_zero(rho(p, i))) {
              r[p * dw + j] += rho(p, i);
              touched.push_back(p * dw + j);
            }
          for (size_t q = 0; q < dw; ++q)
            if (!is_zero(lam(q, j))) {
              r[i * dw + q] -= lam(q, j);
              touched.push_back(i * dw + q);
            }
          b.add(r);
          for (size_t k : touched) r[k] = from_int<K>(f, 0);
        }
    rel_ = finish(b, f);
    std::vector<char> piv(dv * dw, 0);
    for (size_t p : rel_.pivots) piv[p] = 1;
    for (size_t k = 0; k < dv * dw; ++k)
      if (!piv[k]) free_.push_back(k);
  }

  const Field& field() const { return field_; }
  size_t left_dim() const { return dv_; }
  size_t right_dim() const { return dw_; }
  size_t ambient() const { return dv_ * dw_; }
  size_t dim() const { return free_.size(); }
  const Subspace<K>& relations() const { return rel_; }

  Vec<K> proj(const Vec<K>& v) const {
    Vec<K> r = rel_.reduce(v), q;
    q.reserve(free_.size());
    for (size_t k : free_) q.push_back(r[k]);
    return q;
  }
  Vec<K> sect(const Vec<K>& q) const {
    Vec<K> v = zeros<K>(field_, ambient());
    for (size_t i = 0; i < free_.size(); ++i) v[free_[i]] = q[i];
    return v;
  }
  bool equal(const Vec<K>& x, const Vec<K>& y) const { return rel_.contains(x - y); }

  Mat<K> proj_matrix() const {
    Mat<K> m(field_, dim(), ambient());
    for (size_t k = 0; k < ambient(); ++k) m.set_col(k, proj(unit_vec<K>(field_, ambient(), k)));
    return m;
  }
  // proj_matrix, computed once and shared between copies
  const Mat<K>& proj_cached() const {
    if (!proj_cache_) proj_cache_ = std::make_shared<const Mat<K>>(proj_matrix());
    return *proj_cache_;
  }
  Mat<K> sect_matrix() const {
    Mat<K> m(field_, ambient(), dim());
    for (size_t i = 0; i < dim(); ++i) m(free_[i], i) = from_int<K>(field_, 1);
    return m;
  }

 private:
  Field field_;
  size_t dv_ = 0, dw_ = 0;
  Subspace<K> rel_;
  std::vector<size_t> free_;
  mutable std::shared_ptr<const Mat<K>> proj_cache_;
};

template <class K>
BalancedTensor<K> balanced_tensor(const FinAlgebra<K>& A, const Mat<K>& s, const Mat<K>& t, ModKind first,
                                  ModKind second) {
  size_t m = s.cols;
  for (size_t b = 0; b < m; ++b)
    for (size_t c = 0; c < m; ++c)
      if (A.mul(s.col(b), t.col(c)) != A.mul(t.col(c), s.col(b))) throw AxiomFailure("RangesDoNotCommute", {b, c});
  return BalancedTensor<K>(A.field(), A.dim(), A.dim(), balancing(A, s, t, first, second));
}

struct DoesNotDescend : std::runtime_error {
  size_t relation_index;
  explicit DoesNotDescend(size_t i)
      : std::runtime_error("DoesNotDescend(" + std::to_string(i) + ")"), relation_index(i) {}
};

// Induced map on quotients: tgt_proj o f o sect, after checking that f sends every
// relation basis vector of src into the kernel of tgt_proj.
template <class K, class F, class P>
Mat<K> descend_map(F f, const BalancedTensor<K>& src, P tgt_proj, size_t tgt_dim) {
  const Subspace<K>& rel = src.relations();
  for (size_t i = 0; i < rel.dim(); ++i)
    if (!all_zero(tgt_proj(f(rel.vec(i))))) throw DoesNotDescend(i);
  Mat<K> m(src.field(), tgt_dim, src.dim());
  for (size_t j = 0; j < src.dim(); ++j) m.set_col(j, tgt_proj(f(src.sect(unit_vec<K>(src.field(), src.dim(), j)))));
  return m;
}

template <class K, class F>
Mat<K> descend_map(F f, const BalancedTensor<K>& src, const BalancedTensor<K>& tgt) {
  return descend_map<K>(f, src, [&](const Vec<K>& v) { return tgt.proj(v); }, tgt.dim());
}

// proj (f (x) g) v for an endomorphism f (x) g of the ambient space of q.
template <class K>
Vec<K> proj_kron(const BalancedTensor<K>& q, const Mat<K>& f, const Mat<K>& g, const Vec<K>& v) {
  const Mat<K>& P = q.proj_cached();
  size_t dv = q.left_dim(), dw = q.right_dim(), d = q.dim();
  Vec<K> r = zeros<K>(q.field(), d);
  for (size_t i = 0; i < dv; ++i)
    for (size_t j = 0; j < dw; ++j) {
      const K& x = v[i * dw + j];
      if (is_zero(x)) continue;
      for (size_t p = 0; p < dv; ++p) {
        if (is_zero(f(p, i))) continue;
        K xf = x * f(p, i);
        for (size_t s = 0; s < dw; ++s) {
          if (is_zero(g(s, j))) continue;
          K c = xf * g(s, j);
          for (size_t k = 0; k < d; ++k)
            if (!is_zero(P(k, p * dw + s))) r[k] += c * P(k, p * dw + s);
        }
      }
    }
  return r;
}

// Endomorphism f (x) g induced on the quotient; checks descent.
template <class K>
Mat<K> descend_kron(const BalancedTensor<K>& q, const Mat<K>& f, const Mat<K>& g) {
  const Subspace<K>& rel = q.relations();
  for (size_t i = 0; i < rel.dim(); ++i)
    if (!all_zero(proj_kron(q, f, g, rel.vec(i)))) throw DoesNotDescend(i);
  Mat<K> m(q.field(), q.dim(), q.dim());
  for (size_t j = 0; j < q.dim(); ++j) m.set_col(j, proj_kron(q, f, g, q.sect(unit_vec<K>(q.field(), q.dim(), j))));
  return m;
}

// Action of op on the trailing (leading) factor induced on the quotient.
template <class K>
Mat<K> descend_trailing(const BalancedTensor<K>& q, const Mat<K>& op) {
  return descend_kron(q, Mat<K>::identity(q.field(), q.left_dim()), op);
}
template <class K>
Mat<K> descend_leading(const BalancedTensor<K>& q, const Mat<K>& op) {
  return descend_kron(q, op, Mat<K>::identity(q.field(), q.right_dim()));
}

// V1 (x) V2 (x) V3 modulo both middle relations, built as an iterated quotient.
template <class K>
class TripleTensor {
 public:
  TripleTensor() = default;

  // dims = (d1, d2, d3); acts12 balances factors 1,2 and acts23 balances factors 2,3.
  TripleTensor(const Field& f, std::array<size_t, 3> dims, const Balancing<K>& acts12, const Balancing<K>& acts23,
               bool right_bracketed = false)
      : field_(f), d_(dims), right_(right_bracketed) {
    if (!right_) {
      inner_ = BalancedTensor<K>(f, d_[0], d_[1], acts12);
      Balancing<K> acts;
      for (auto& [rho, lam] : acts23) acts.emplace_back(descend_trailing(inner_, rho), lam);
      outer_ = BalancedTensor<K>(f, inner_.dim(), d_[2], acts);
    } else {
      inner_ = BalancedTensor<K>(f, d_[1], d_[2], acts23);
      Balancing<K> acts;
      for (auto& [rho, lam] : acts12) acts.emplace_back(rho, descend_leading(inner_, lam));
      outer_ = BalancedTensor<K>(f, d_[0], inner_.dim(), acts);
    }
  }

  size_t dim() const { return outer_.dim(); }
  size_t ambient() const { return d_[0] * d_[1] * d_[2]; }
  bool right_bracketed() const { return right_; }

  Vec<K> proj(const Vec<K>& x) const {
    if (!right_)
      return outer_.proj(apply_leading<K>(x, d_[2], [&](const Vec<K>& v) { return inner_.proj(v); }, field_));
    return outer_.proj(apply_trailing<K>(x, d_[1] * d_[2], [&](const Vec<K>& v) { return inner_.proj(v); }));
  }
  Vec<K> sect(const Vec<K>& q) const {
    if (!right_)
      return apply_leading<K>(outer_.sect(q), d_[2], [&](const Vec<K>& v) { return inner_.sect(v); }, field_);
    return apply_trailing<K>(outer_.sect(q), inner_.dim(), [&](const Vec<K>& v) { return inner_.sect(v); });
  }
  bool equal(const Vec<K>& x, const Vec<K>& y) const { return all_zero(proj(x - y)); }

  const BalancedTensor<K>& inner() const { return inner_; }
  const BalancedTensor<K>& outer() const { return outer_; }

 private:
  Field field_;
  std::array<size_t, 3> d_{};
  bool right_ = false;
  BalancedTensor<K> inner_, outer_;
};

// Canonical map between the left- and right-bracketed quotients, validated on the
// generators of both relation spaces. Throws DoesNotDescend if not well defined.
template <class K>
Mat<K> bracketing_intertwiner(const TripleTensor<K>& from, const TripleTensor<K>& to, std::array<size_t, 3> d,
                              const Balancing<K>& acts12, const Balancing<K>& acts23) {
  Field f = to.inner().field();
  size_t idx = 0;
  auto check = [&](const Vec<K>& v) {
    if (!all_zero(to.proj(v))) throw DoesNotDescend(idx);
    ++idx;
  };
  // generators rho(x) (x) y (x) z - x (x) lam(y) (x) z, and the analogue on factors 2,3
  for (auto& [rho, lam] : acts12)
    for (size_t i = 0; i < d[0]; ++i)
      for (size_t j = 0; j < d[1]; ++j)
        for (size_t k = 0; k < d[2]; ++k) {
          Vec<K> z = unit_vec<K>(f, d[2], k);
          Vec<K> v = outer(outer(rho.col(i), unit_vec<K>(f, d[1], j)), z) -
                     outer(outer(unit_vec<K>(f, d[0], i), lam.col(j)), z);
          check(v);
        }
  for (auto& [rho, lam] : acts23)
    for (size_t i = 0; i < d[0]; ++i)
      for (size_t j = 0; j < d[1]; ++j)
        for (size_t k = 0; k < d[2]; ++k) {
          Vec<K> x = unit_vec<K>(f, d[0], i);
          Vec<K> v = outer(outer(x, rho.col(j)), unit_vec<K>(f, d[2], k)) -
                     outer(outer(x, unit_vec<K>(f, d[1], j)), lam.col(k));
          check(v);
        }
  Mat<K> m(f, to.dim(), from.dim());
  for (size_t j = 0; j < from.dim(); ++j) m.set_col(j, to.proj(from.sect(unit_vec<K>(f, from.dim(), j))));
  return m;
}

}  // namespace hopfalg
