#pragma once

#include "coring.hpp"

namespace hopfalg {

// (A, B, s, t, gamma, pi). Read with left-handed conventions for a left bialgebroid
// (coproduct into A_B (x)_B A) and right-handed ones for a right bialgebroid
// (coproduct into A^B (x)^B A).
template <class K>
struct BialgebroidData {
  FinAlgebra<K> A, B;
  Mat<K> s, t, gamma, pi;

  size_t n() const { return A.dim(); }
  size_t m() const { return B.dim(); }
  bool operator==(const BialgebroidData&) const = default;
};

template <class K>
Mat<K> flip_matrix(const Field& f, size_t n) {
  Mat<K> m(f, n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(j * n + i, i * n + j) = from_int<K>(f, 1);
  return m;
}

template <class K>
CoringData<K> left_coring(const BialgebroidData<K>& d) {
  return {d.A, d.B, d.s, d.t, ModKind::LowerLeft, ModKind::LowerRight, d.gamma, d.pi};
}

// A_B (x)_B A: t(b)x (x) y - x (x) s(b)y
template <class K>
Balancing<K> left_balancing(const BialgebroidData<K>& d) {
  return balancing(d.A, d.s, d.t, ModKind::LowerRight, ModKind::LowerLeft);
}

// A_cop = (A, B^op, t, s, flip o gamma, pi)
template <class K>
BialgebroidData<K> cop(const BialgebroidData<K>& d) {
  return {d.A, opposite(d.B), d.t, d.s, flip_matrix<K>(d.A.field(), d.n()) * d.gamma, d.pi};
}

// (A^op, B, t, s, gamma, pi): exchanges left and right bialgebroids.
template <class K>
BialgebroidData<K> op(const BialgebroidData<K>& d) {
  return {opposite(d.A), d.B, d.t, d.s, d.gamma, d.pi};
}

template <class K>
Report left_bialgebroid_report(const BialgebroidData<K>& d) {
  Report rep;
  rep.title = "left bialgebroid";
  const auto& A = d.A;
  const auto& B = d.B;
  size_t n = d.n(), m = d.m();
  Field f = A.field();
  if (d.s.rows != n || d.s.cols != m || d.t.rows != n || d.t.cols != m || d.gamma.rows != n * n ||
      d.gamma.cols != n || d.pi.rows != m || d.pi.cols != n)
    throw InvalidInput("bialgebroid: matrix shapes inconsistent with dimensions");

  auto alg_check = [&](const char* name, const Mat<K>& f_, Variance v) {
    try {
      check_alg_map(f_, B, A, v);
      rep.add(name, true);
    } catch (const AxiomFailure& e) {
      rep.add(name, false, e.witness, e.code);
    }
  };
  alg_check("s_homomorphism", d.s, Variance::Homomorphism);
  alg_check("t_antihomomorphism", d.t, Variance::AntiHomomorphism);
  rep.add("ranges_commute", scan2(m, m, [&](size_t b, size_t c) {
            return A.mul(d.s.col(b), d.t.col(c)) == A.mul(d.t.col(c), d.s.col(b));
          }));
  if (!rep.ok()) {
    for (auto name : {"coring", "takeuchi", "gamma_unit", "gamma_multiplicative", "pi_unit", "pi_weak_mult_s",
                      "pi_weak_mult_t"})
      rep.skip(name, "source/target maps invalid");
    return rep;
  }

  Report cr = coring_report(left_coring(d));
  rep.append(cr, "coring.");
  BalancedTensor<K> T(f, n, n, left_balancing(d));
  Mat<K> id = Mat<K>::identity(f, n);

  // a_(1) t(b) (x) a_(2) - a_(1) (x) a_(2) s(b) lies in the relations
  auto takeuchi = scan2(n, m, [&](size_t a, size_t b) {
    Vec<K> g = d.gamma.col(a);
    Vec<K> v = apply_kron(A.right_mult(d.t.col(b)), id, g) - apply_kron(id, A.right_mult(d.s.col(b)), g);
    return T.relations().contains(v);
  });
  rep.add("takeuchi", takeuchi);
  rep.add("gamma_unit", T.equal(d.gamma * A.one(), outer(A.one(), A.one())));
  auto tensor_mul = [&](const Vec<K>& u, const Vec<K>& v) {
    Vec<K> r = zeros<K>(f, n * n);
    for (size_t i = 0; i < n * n; ++i) {
      if (is_zero(u[i])) continue;
      for (size_t j = 0; j < n * n; ++j) {
        if (is_zero(v[j])) continue;
        axpy(r, u[i] * v[j], outer(A.basis_product(i / n, j / n), A.basis_product(i % n, j % n)));
      }
    }
    return r;
  };
  if (takeuchi)
    rep.skip("gamma_multiplicative", "requires takeuchi");
  else
    rep.add("gamma_multiplicative", scan2(n, n, [&](size_t a, size_t b) {
              return T.equal(d.gamma * A.basis_product(a, b), tensor_mul(d.gamma.col(a), d.gamma.col(b)));
            }));
  rep.add("pi_unit", d.pi * A.one() == B.one());
  rep.add("pi_weak_mult_s", scan2(n, n, [&](size_t a, size_t b) {
            return d.pi * A.mul(A.e(a), d.s * d.pi.col(b)) == d.pi * A.basis_product(a, b);
          }));
  rep.add("pi_weak_mult_t", scan2(n, n, [&](size_t a, size_t b) {
            return d.pi * A.mul(A.e(a), d.t * d.pi.col(b)) == d.pi * A.basis_product(a, b);
          }));
  return rep;
}

template <class K>
Report right_bialgebroid_report(const BialgebroidData<K>& d) {
  Report rep = left_bialgebroid_report(op(d));
  rep.title = "right bialgebroid (checked as its opposite left bialgebroid)";
  return rep;
}

template <class K>
BialgebroidData<K> mk_left_bialgebroid(BialgebroidData<K> d) {
  throw_first_failure<K>(left_bialgebroid_report(d));
  return d;
}

template <class K>
BialgebroidData<K> mk_right_bialgebroid(BialgebroidData<K> d) {
  throw_first_failure<K>(right_bialgebroid_report(d));
  return d;
}

// sum_i v_i acts[i]
template <class K>
Mat<K> sum_action(const std::vector<Mat<K>>& acts, const Vec<K>& v, const Field& f) {
  size_t r = acts.empty() ? 0 : acts[0].rows, c = acts.empty() ? 0 : acts[0].cols;
  Mat<K> m(f, r, c);
  for (size_t i = 0; i < acts.size(); ++i)
    if (!is_zero(v[i]))
      for (size_t k = 0; k < m.a.size(); ++k)
        if (!is_zero(acts[i].a[k])) m.a[k] += v[i] * acts[i].a[k];
  return m;
}

// Inv(M) = {x : a.x = s(pi(a)).x for all a}; action[a] is the matrix of e_a on M.
template <class K>
Subspace<K> invariants_of_module(const BialgebroidData<K>& d, const std::vector<Mat<K>>& action) {
  size_t n = d.n();
  if (action.size() != n) throw InvalidInput("invariants_of_module: need one matrix per basis element");
  size_t dm = action[0].rows;
  Field f = d.A.field();
  if (!(sum_action(action, d.A.one(), f) == Mat<K>::identity(f, dm))) throw AxiomFailure("NotAModule", {});
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!(sum_action(action, d.A.basis_product(i, j), f) == action[i] * action[j]))
        throw AxiomFailure("NotAModule", {i, j});
  Mat<K> sys(f, n * dm, dm);
  for (size_t a = 0; a < n; ++a) {
    Mat<K> diff = action[a] - sum_action(action, d.s * d.pi.col(a), f);
    for (size_t r = 0; r < dm; ++r)
      for (size_t c = 0; c < dm; ++c) sys(a * dm + r, c) = diff(r, c);
  }
  return kernel(sys);
}

}  // namespace hopfalg
