#pragma once

#include "bimodtensor.hpp"
#include "report.hpp"

namespace hopfalg {

// A as a B-coring. The B-bimodule structure on A is given by two ModKinds
// (the left one and the right one); the coproduct lands in A (x)_B A formed with
// the right structure on the first factor and the left structure on the second.
template <class K>
struct CoringData {
  FinAlgebra<K> A, B;
  Mat<K> s, t;
  ModKind left_kind = ModKind::LowerLeft, right_kind = ModKind::LowerRight;
  Mat<K> gamma;  // lift A -> A (x)_k A, n^2 x n
  Mat<K> pi;     // A -> B

  size_t n() const { return A.dim(); }
  size_t m() const { return B.dim(); }

  std::vector<Mat<K>> left_actions() const {
    std::vector<Mat<K>> v;
    for (size_t b = 0; b < m(); ++b) v.push_back(module_action(A, left_kind, s, t, b));
    return v;
  }
  std::vector<Mat<K>> right_actions() const {
    std::vector<Mat<K>> v;
    for (size_t b = 0; b < m(); ++b) v.push_back(module_action(A, right_kind, s, t, b));
    return v;
  }
  Balancing<K> tensor_balancing() const { return balancing(A, s, t, right_kind, left_kind); }
  BalancedTensor<K> tensor() const { return BalancedTensor<K>(A.field(), n(), n(), tensor_balancing()); }
};

// sum_b v_b acts[b] x
template <class K>
Vec<K> act_by(const std::vector<Mat<K>>& acts, const Vec<K>& v, const Vec<K>& x) {
  Vec<K> r = zeros<K>(acts.empty() ? Field{} : acts[0].field, x.size());
  for (size_t b = 0; b < acts.size(); ++b)
    if (!is_zero(v[b])) axpy(r, v[b], acts[b] * x);
  return r;
}

template <class K>
Report coring_report(const CoringData<K>& c) {
  Report rep;
  rep.title = "coring";
  const auto& A = c.A;
  const auto& B = c.B;
  size_t n = c.n(), m = c.m();
  Field f = A.field();
  auto la = c.left_actions(), ra = c.right_actions();
  Mat<K> id = Mat<K>::identity(f, n);
  BalancedTensor<K> T = c.tensor();

  rep.add("bimodule_commutes", scan3(m, m, n, [&](size_t b, size_t b2, size_t a) {
            return la[b] * (ra[b2] * A.e(a)) == ra[b2] * (la[b] * A.e(a));
          }));
  rep.add("gamma_left_linear", scan2(m, n, [&](size_t b, size_t a) {
            return T.equal(c.gamma * (la[b] * A.e(a)), apply_kron(la[b], id, c.gamma.col(a)));
          }));
  rep.add("gamma_right_linear", scan2(m, n, [&](size_t b, size_t a) {
            return T.equal(c.gamma * (ra[b] * A.e(a)), apply_kron(id, ra[b], c.gamma.col(a)));
          }));
  rep.add("pi_left_linear", scan2(m, n, [&](size_t b, size_t a) {
            return c.pi * (la[b] * A.e(a)) == B.mul(B.e(b), c.pi.col(a));
          }));
  rep.add("pi_right_linear", scan2(m, n, [&](size_t b, size_t a) {
            return c.pi * (ra[b] * A.e(a)) == B.mul(c.pi.col(a), B.e(b));
          }));
  if (!rep.ok()) {
    rep.skip("coassociativity", "bimodule structure invalid");
    rep.skip("counit_left", "bimodule structure invalid");
    rep.skip("counit_right", "bimodule structure invalid");
    return rep;
  }

  TripleTensor<K> T3(f, {n, n, n}, c.tensor_balancing(), c.tensor_balancing());
  rep.add("coassociativity", scan1(n, [&](size_t a) {
            Vec<K> g = c.gamma.col(a);
            return T3.equal(apply_kron(c.gamma, id, g), apply_kron(id, c.gamma, g));
          }));
  // B (x)_B A = A via b (x) a |-> b.a, and symmetrically on the right.
  auto counit_l = [&](const Vec<K>& u) {
    Vec<K> r = zeros<K>(f, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (!is_zero(u[i * n + j])) axpy(r, u[i * n + j], act_by(la, c.pi.col(i), A.e(j)));
    return r;
  };
  auto counit_r = [&](const Vec<K>& u) {
    Vec<K> r = zeros<K>(f, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (!is_zero(u[i * n + j])) axpy(r, u[i * n + j], act_by(ra, c.pi.col(j), A.e(i)));
    return r;
  };
  rep.add("counit_left", scan1(n, [&](size_t a) { return counit_l(c.gamma.col(a)) == A.e(a); }));
  rep.add("counit_right", scan1(n, [&](size_t a) { return counit_r(c.gamma.col(a)) == A.e(a); }));
  return rep;
}

template <class K>
void throw_first_failure(const Report& r) {
  if (const Check* c = r.first_failure()) throw AxiomFailure(c->name, c->witness, r.title);
}

template <class K>
CoringData<K> mk_coring(CoringData<K> c) {
  throw_first_failure<K>(coring_report(c));
  return c;
}

template <class K>
bool check_grouplike(const CoringData<K>& c, const Vec<K>& g) {
  return c.tensor().equal(c.gamma * g, outer(g, g)) && c.pi * g == c.B.one();
}

enum class Side { Left, Right };

// Left: M is a left B-module, coaction lift M -> A (x)_k M.
// Right: M is a right B-module, coaction lift M -> M (x)_k A.
template <class K>
struct Comodule {
  size_t dim = 0;
  Side side = Side::Left;
  std::vector<Mat<K>> base_action;
  Mat<K> coaction;
};

template <class K>
Report comodule_report(const CoringData<K>& c, const Comodule<K>& M) {
  Report rep;
  rep.title = "comodule";
  size_t n = c.n(), d = M.dim;
  Field f = c.A.field();
  Mat<K> idA = Mat<K>::identity(f, n), idM = Mat<K>::identity(f, d);
  auto la = c.left_actions(), ra = c.right_actions();
  Balancing<K> cross;
  Balancing<K> coring_bal = c.tensor_balancing();
  for (size_t b = 0; b < c.m(); ++b) {
    if (M.side == Side::Left)
      cross.emplace_back(ra[b], M.base_action[b]);
    else
      cross.emplace_back(M.base_action[b], la[b]);
  }
  bool left = M.side == Side::Left;
  BalancedTensor<K> T(f, left ? n : d, left ? d : n, cross);
  rep.add("coaction_linear", scan2(c.m(), d, [&](size_t b, size_t x) {
            Vec<K> ex = unit_vec<K>(f, d, x), dx = M.coaction.col(x);
            if (left) return T.equal(M.coaction * (M.base_action[b] * ex), apply_kron(la[b], idM, dx));
            return T.equal(M.coaction * (M.base_action[b] * ex), apply_kron(idM, ra[b], dx));
          }));
  try {
    TripleTensor<K> T3 = left ? TripleTensor<K>(f, {n, n, d}, coring_bal, cross)
                              : TripleTensor<K>(f, {d, n, n}, cross, coring_bal);
    rep.add("coassociativity", scan1(d, [&](size_t x) {
              Vec<K> dx = M.coaction.col(x);
              if (left) return T3.equal(apply_kron(c.gamma, idM, dx), apply_kron(idA, M.coaction, dx));
              return T3.equal(apply_kron(M.coaction, idA, dx), apply_kron(idM, c.gamma, dx));
            }));
  } catch (const DoesNotDescend& e) {
    rep.add("coassociativity", false, {}, e.what());
  }
  rep.add("counit", scan1(d, [&](size_t x) {
            Vec<K> dx = M.coaction.col(x), r = zeros<K>(f, d);
            for (size_t i = 0; i < (left ? n : d); ++i)
              for (size_t j = 0; j < (left ? d : n); ++j) {
                const K& v = dx[i * (left ? d : n) + j];
                if (is_zero(v)) continue;
                if (left)
                  axpy(r, v, act_by(M.base_action, c.pi.col(i), unit_vec<K>(f, d, j)));
                else
                  axpy(r, v, act_by(M.base_action, c.pi.col(j), unit_vec<K>(f, d, i)));
              }
            return r == unit_vec<K>(f, d, x);
          }));
  return rep;
}

template <class K>
Comodule<K> check_comodule(const CoringData<K>& c, Comodule<K> M) {
  throw_first_failure<K>(comodule_report(c, M));
  return M;
}

template <class K>
Comodule<K> regular_comodule(const CoringData<K>& c, Side side) {
  return {c.n(), side, side == Side::Left ? c.left_actions() : c.right_actions(), c.gamma};
}

}  // namespace hopfalg
