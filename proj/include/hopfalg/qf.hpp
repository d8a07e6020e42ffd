#pragma once

#include "frobenius.hpp"

namespace hopfalg {

enum class QFSide { Left, Right };

inline const char* qf_side_name(QFSide s) { return s == QFSide::Left ? "left" : "right"; }

// Casimir elements (a u = u a) of A (x)_{B'} A, as lifts.
template <class K>
std::vector<Vec<K>> casimir_basis(const FinAlgebra<K>& A, const Mat<K>& e) {
  Extension<K> E = extension(A, "", e);
  Subspace<K> ker = solution_space<K>(A.field(), E.tensor.dim(), [&](const Vec<K>& q) {
    Vec<K> out;
    for (size_t a = 0; a < A.dim(); ++a) append(out, E.left[a] * q - E.right[a] * q);
    return out;
  });
  std::vector<Vec<K>> lifts;
  for (size_t i = 0; i < ker.dim(); ++i) lifts.push_back(E.tensor.sect(ker.vec(i)));
  return lifts;
}

// sum u_i e(psi(v_i)) (left) or sum e(psi(u_i)) v_i (right).
template <class K>
Vec<K> qf_value(const FinAlgebra<K>& A, const Mat<K>& e, const Mat<K>& psi, const Vec<K>& u, QFSide side) {
  size_t n = A.dim();
  Vec<K> r = zeros<K>(A.field(), n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const K& c = u[i * n + j];
      if (is_zero(c)) continue;
      axpy(r, c, side == QFSide::Left ? A.mul(A.e(i), e * (psi * A.e(j))) : A.mul(e * (psi * A.e(i)), A.e(j)));
    }
  return r;
}

// A QF system {psi_k, u_k}.
template <class K>
struct QFSystem {
  std::vector<Mat<K>> psi;
  std::vector<Vec<K>> tensor;

  json to_json() const {
    json j = json::array();
    for (size_t k = 0; k < psi.size(); ++k) j.push_back(frobenius_system_json(psi[k], tensor[k]));
    return j;
  }
};

template <class K>
bool is_qf_system(const FinAlgebra<K>& A, const BaseExtension<K>& x, const QFSystem<K>& s, QFSide side) {
  Extension<K> E = extension(A, x.name, x.e);
  Subspace<K> Psi = bimodule_functionals(A, x);
  Vec<K> total = zeros<K>(A.field(), A.dim());
  for (size_t k = 0; k < s.psi.size(); ++k) {
    if (!Psi.contains(s.psi[k].a)) return false;
    Vec<K> q = E.tensor.proj(s.tensor[k]);
    for (size_t a = 0; a < A.dim(); ++a)
      if (E.left[a] * q != E.right[a] * q) return false;
    total = total + qf_value(A, x.e, s.psi[k], s.tensor[k], side);
  }
  return total == A.one();
}

// The Lemma criterion: 1_A in span{ value(u, psi) } over Casimir basis x bimodule functional basis.
template <class K>
std::optional<QFSystem<K>> qf_lemma(const FinAlgebra<K>& A, const BaseExtension<K>& x, QFSide side) {
  size_t n = A.dim(), m = x.B.dim();
  Field f = A.field();
  auto C = casimir_basis(A, x.e);
  Subspace<K> Psi = bimodule_functionals(A, x);
  std::vector<std::pair<size_t, size_t>> idx;
  std::vector<Vec<K>> vals;
  for (size_t i = 0; i < C.size(); ++i)
    for (size_t k = 0; k < Psi.dim(); ++k) {
      idx.emplace_back(i, k);
      vals.push_back(qf_value(A, x.e, unflat(f, Psi.vec(k), m, n), C[i], side));
    }
  auto sol = solve_affine(Mat<K>::from_cols(f, n, vals), A.one());
  if (!sol) return std::nullopt;
  QFSystem<K> s;
  for (size_t t = 0; t < idx.size(); ++t) {
    const K& c = sol->particular[t];
    if (is_zero(c)) continue;
    s.psi.push_back(unflat(f, Psi.vec(idx[t].second), m, n));
    s.tensor.push_back(c * C[idx[t].first]);
  }
  return s;
}

// 1_B in span{ phi(S(x)) } over bases of the two given spaces; returns coefficients per pair.
template <class K>
std::optional<std::vector<std::tuple<Vec<K>, Mat<K>, K>>> span_criterion(const HopfContext<K>& c,
                                                                         const Subspace<K>& integrals,
                                                                         const Subspace<K>& functionals, size_t m,
                                                                         const Vec<K>& one) {
  Field f = c.field();
  std::vector<Vec<K>> vals;
  for (size_t i = 0; i < integrals.dim(); ++i)
    for (size_t k = 0; k < functionals.dim(); ++k)
      vals.push_back(unflat(f, functionals.vec(k), m, c.n()) * (c.S() * integrals.vec(i)));
  auto sol = solve_affine(Mat<K>::from_cols(f, m, vals), one);
  if (!sol) return std::nullopt;
  std::vector<std::tuple<Vec<K>, Mat<K>, K>> terms;
  for (size_t i = 0; i < integrals.dim(); ++i)
    for (size_t k = 0; k < functionals.dim(); ++k) {
      const K& coef = sol->particular[i * functionals.dim() + k];
      if (!is_zero(coef)) terms.emplace_back(integrals.vec(i), unflat(f, functionals.vec(k), m, c.n()), coef);
    }
  return terms;
}

// M is f.g. projective over B (a right module via act[b] = m |-> m.e_b) iff a dual basis
// {m_i, xi_i} exists on the generators gens (columns): sum_i gens_i . xi_i(m) = m.
template <class K>
bool has_dual_basis(const Field& f, size_t dm, const std::vector<Mat<K>>& hom_basis,
                    const Mat<K>& gens, const std::function<Vec<K>(const Vec<K>&, const Vec<K>&)>& act) {
  // unknowns: coefficients of xi_i in hom_basis, for each generator i
  size_t h = hom_basis.size(), g = gens.cols;
  Vec<K> rhs = Mat<K>::identity(f, dm).a;
  auto sol = solve_linear<K>(f, g * h, rhs, [&](const Vec<K>& x) {
    Mat<K> total(f, dm, dm);
    for (size_t i = 0; i < g; ++i)
      for (size_t k = 0; k < h; ++k) {
        const K& c = x[i * h + k];
        if (is_zero(c)) continue;
        for (size_t mcol = 0; mcol < dm; ++mcol) {
          Vec<K> v = act(gens.col(i), hom_basis[k].col(mcol));
          for (size_t r = 0; r < dm; ++r) total(r, mcol) += c * v[r];
        }
      }
    return total.a;
  });
  return sol.has_value();
}

template <class K>
struct QFReport {
  TheoremReport theorem;
  std::optional<QFSystem<K>> system_from_integrals;
  json to_json() const { return theorem.to_json(); }
};

// Conditions c, e, g of the left family, computed on the given algebroid.
template <class K>
void qf_module_conditions(const HopfContext<K>& c, const IntegralSpaces<K>& I, const SigmaChi<K>& sc,
                          TheoremReport& T, const std::string& prefix, const std::string& of = "") {
  const auto& A = c.A();
  const auto& D = sc.a_upper;
  size_t n = c.n(), mL = c.mL(), d = D.dim();
  Field f = c.field();
  Subspace<K> Ld = left_dual_integrals(c, D);
  size_t dl = Ld.dim();

  // c) L(A^*)^L, lambda.l = lambda(s_L(l) -), is f.g. projective
  std::vector<Mat<K>> act;
  for (size_t l = 0; l < mL; ++l) act.push_back(restrict_to(Ld, left_shift(D, A, c.sL().col(l)), "L(A^*).l"));
  // Hom_L(M_L, L_L): xi(m.l) = xi(m) l
  Subspace<K> H = solution_space<K>(f, mL * dl, [&](const Vec<K>& v) {
    Mat<K> xi = unflat(f, v, mL, dl);
    Vec<K> out;
    for (size_t l = 0; l < mL; ++l) append(out, (xi * act[l] - c.L().right_mult(c.L().e(l)) * xi).a);
    return out;
  });
  std::vector<Mat<K>> hb;
  for (size_t k = 0; k < H.dim(); ++k) hb.push_back(unflat(f, H.vec(k), mL, dl));
  bool proj = has_dual_basis<K>(f, dl, hb, Mat<K>::identity(f, dl), [&](const Vec<K>& m, const Vec<K>& l) {
    return sum_action(act, l, f) * m;
  });
  T.add(prefix + "c", "L(A^*) is a f.g. projective right L-module" + of, proj,
        json{{"dim_L(A^*)", dl}, {"dim_Hom_L", H.dim()}});

  // e) invariants of ^L A (x) L(A^*)^L are the image of L(A) (x) L(A^*)
  Balancing<K> bal;
  for (size_t l = 0; l < mL; ++l) bal.emplace_back(A.right_mult(c.tL().col(l)), act[l]);
  BalancedTensor<K> U(f, n, dl, bal);
  Subspace<K> inv = solution_space<K>(f, U.dim(), [&](const Vec<K>& q) {
    Vec<K> out;
    for (size_t a = 0; a < n; ++a)
      append(out, descend_leading(U, A.left_mult(c.e(a)) - A.left_mult(c.sL() * (c.piL() * c.e(a)))) * q);
    return out;
  });
  std::vector<Vec<K>> gens;
  for (size_t i = 0; i < I.L_in.basis.dim(); ++i)
    for (size_t k = 0; k < dl; ++k) gens.push_back(U.proj(outer(I.L_in.basis.vec(i), unit_vec<K>(f, dl, k))));
  Subspace<K> img = span_of(f, U.dim(), gens);
  T.add(prefix + "e", "invariants of ^L A (x) L(A^*)^L are ^L L(A) (x) L(A^*)^L" + of, img == inv,
        json{{"dim_invariants", inv.dim()}, {"dim_image", img.dim()}});

  // g) _A A^*, a.phi = phi(S(a) -), is f.g. projective with generators L(A^*)
  std::vector<Mat<K>> aact;
  for (size_t a = 0; a < n; ++a) aact.push_back(left_shift(D, A, c.S() * c.e(a)));
  Subspace<K> HA = solution_space<K>(f, n * d, [&](const Vec<K>& v) {
    Mat<K> xi = unflat(f, v, n, d);
    Vec<K> out;
    for (size_t a = 0; a < n; ++a) append(out, (xi * aact[a] - A.left_mult(c.e(a)) * xi).a);
    return out;
  });
  std::vector<Mat<K>> hab;
  for (size_t k = 0; k < HA.dim(); ++k) hab.push_back(unflat(f, HA.vec(k), n, d));
  bool projA = has_dual_basis<K>(f, d, hab, Ld.inclusion(), [&](const Vec<K>& lam, const Vec<K>& a) {
    return sum_action(aact, a, f) * lam;
  });
  T.add(prefix + "g", "_A A^* is f.g. projective with generators in L(A^*)" + of, projA,
        json{{"dim_Hom_A", HA.dim()}, {"generators", dl}});
}

// Left family (conditions 1.x): s_R and t_L left QF. Right family (2.x): s_L and t_R right QF.
template <class K>
QFReport<K> qf_decide(const HopfContext<K>& c, const IntegralSpaces<K>& I, const SigmaChi<K>& sc, QFSide side) {
  const auto& A = c.A();
  QFReport<K> Q;
  TheoremReport& T = Q.theorem;
  T.theorem = std::string("QF (") + qf_side_name(side) + ")";
  Report& rep = T.checks;
  rep.title = "QF certificates";
  auto exts = base_extensions(c);
  bool left = side == QFSide::Left;
  std::string p = left ? "1." : "2.";
  const BaseExtension<K>& xa = left ? exts[0] : exts[2];
  const BaseExtension<K>& xb = left ? exts[3] : exts[1];
  QFSide lemma_side = left ? QFSide::Left : QFSide::Right;

  auto sa = qf_lemma(A, xa, lemma_side), sb = qf_lemma(A, xb, lemma_side);
  T.add(p + "a", xa.name + " is a " + qf_side_name(side) + " QF extension", sa.has_value(),
        sa ? json{{"qf_system", sa->to_json()}} : json(nullptr));
  T.add(p + "b", xb.name + " is a " + qf_side_name(side) + " QF extension", sb.has_value(),
        sb ? json{{"qf_system", sb->to_json()}} : json(nullptr));
  if (sa) rep.add("lemma_system_" + xa.name, is_qf_system(A, xa, *sa, lemma_side));
  if (sb) rep.add("lemma_system_" + xb.name, is_qf_system(A, xb, *sb, lemma_side));

  if (left) {
    qf_module_conditions(c, I, sc, T, p);
  } else {
    HopfContext<K> oc(op_cop(c.data()));
    SigmaChi<K> osc = sigma_chi(oc);
    qf_module_conditions(oc, all_integral_spaces(oc), osc, T, p, " (for the op-coop algebroid)");
  }

  // f) span criterion, then the QF system it induces
  auto terms = left ? span_criterion(c, I.L_in.basis, I.L_on_sstar.basis, c.mR(), c.R().one())
                    : span_criterion(c, I.R_in.basis, I.R_on_star.basis, c.mL(), c.L().one());
  json cert = nullptr;
  if (terms) {
    QFSystem<K> s;
    cert = json::array();
    for (auto& [ell, lam, coef] : *terms) {
      cert.push_back(json{{"integral", vec_to_json(ell)}, {"functional", mat_to_json(lam)}, {"coefficient", Scalar<K>::to_json(coef)}});
      Mat<K> scaled = lam;
      scaled.a = coef * scaled.a;
      s.psi.push_back(scaled);
      // {lambda_k, l^(1) (x) S(l^(2))} for s_R;  {rho_k, S(p_(1)) (x) p_(2)} for s_L
      s.tensor.push_back(left ? apply_kron(c.id(), c.S(), c.gR() * ell) : apply_kron(c.S(), c.id(), c.gL() * ell));
    }
    rep.add("system_from_integrals", is_qf_system(A, xa, s, lemma_side));
    Q.system_from_integrals = s;
  }
  T.add(p + "f",
        left ? "1_R is in the span of lambda(S(l)) for l in L(A), lambda in L(A^*)"
             : "1_L is in the span of rho(S(p)) for p in R(A), rho in R(_*A)",
        terms.has_value(), cert);
  std::stable_sort(T.conditions.begin(), T.conditions.end(),
                   [](const Condition& x, const Condition& y) { return x.id < y.id; });
  return Q;
}

}  // namespace hopfalg
