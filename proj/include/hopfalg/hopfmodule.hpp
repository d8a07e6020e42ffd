#pragma once

#include "maschke.hpp"

namespace hopfalg {

struct NotProjective : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotIso : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// phi |-> phi(x -) on the coordinates of a dual algebra of functionals A -> B.
template <class K>
Mat<K> left_shift(const DualAlgebra<K>& D, const FinAlgebra<K>& A, const Vec<K>& x) {
  Mat<K> lx = A.left_mult(x);
  return operator_matrix<K>(A.field(), D.dim(), D.dim(), [&](const Vec<K>& c) { return D.coords(D.functional(c) * lx); });
}
// phi |-> phi(- x)
template <class K>
Mat<K> right_shift(const DualAlgebra<K>& D, const FinAlgebra<K>& A, const Vec<K>& x) {
  Mat<K> rx = A.right_mult(x);
  return operator_matrix<K>(A.field(), D.dim(), D.dim(), [&](const Vec<K>& c) { return D.coords(D.functional(c) * rx); });
}

// Restriction of an endomorphism of the ambient space to an invariant subspace, in its coordinates.
template <class K>
Mat<K> restrict_to(const Subspace<K>& V, const Mat<K>& op, const char* what) {
  return operator_matrix<K>(V.field, V.dim(), V.dim(), [&](const Vec<K>& c) {
    Vec<K> v = op * V.combine(c);
    if (!V.contains(v)) throw std::logic_error(std::string(what) + ": subspace not invariant");
    return V.coords(v);
  });
}

// Dual basis {b_i} in A, {beta^i} in A_* for the module A_L: sum_i t_L(beta^i(a)) b_i = a.
// The generators b_i are the columns of gens; the beta^i are solved for.
template <class K>
std::vector<Vec<K>> dual_basis_AL(const HopfContext<K>& c, const DualAlgebra<K>& a_star, const Mat<K>& gens) {
  size_t n = c.n(), k = gens.cols, d = a_star.dim();
  Field f = c.field();
  Vec<K> rhs;
  for (size_t a = 0; a < n; ++a) {
    Vec<K> ea = c.e(a);
    rhs.insert(rhs.end(), ea.begin(), ea.end());
  }
  auto sol = solve_linear<K>(f, k * d, rhs, [&](const Vec<K>& x) {
    Vec<K> out = zeros<K>(f, n * n);
    for (size_t i = 0; i < k; ++i) {
      Mat<K> beta = a_star.functional(Vec<K>(x.begin() + i * d, x.begin() + (i + 1) * d));
      for (size_t a = 0; a < n; ++a) {
        Vec<K> v = c.mul(c.tL() * (beta * c.e(a)), gens.col(i));
        for (size_t p = 0; p < n; ++p) out[a * n + p] += v[p];
      }
    }
    return out;
  });
  if (!sol) throw NotProjective("A_L: no dual basis on the given generators");
  std::vector<Vec<K>> beta;
  for (size_t i = 0; i < k; ++i) beta.emplace_back(sol->particular.begin() + i * d, sol->particular.begin() + (i + 1) * d);
  return beta;
}

// A^* as a left-left Hopf module over A_L (tau_L) and a right-right Hopf module over A_R (tau_R).
template <class K>
struct HopfModuleOnDual {
  Mat<K> gens;                     // b_i as columns
  std::vector<Vec<K>> beta;        // beta^i in A_* coordinates
  std::vector<Mat<K>> psi;         // psi[i]: phi |-> chi^-1(beta^i) phi on A^* coordinates
  std::vector<Mat<K>> L_action;    // l.phi = phi(S(s_L(l)) -)
  std::vector<Mat<K>> R_action;    // phi.r = phi(s_R(r) -)
  BalancedTensor<K> left_target;   // A_L (x)_L A^*
  BalancedTensor<K> right_target;  // A^*_R (x) ^R A
  Mat<K> tau_L, tau_R;             // lifts
  Mat<K> E;
  Subspace<K> coinv_L, coinv_R, L_dual;  // inside A^* coordinates
  Report checks;
};

// L(A^*) in A^* coordinates.
template <class K>
Subspace<K> left_dual_integrals(const HopfContext<K>& c, const DualAlgebra<K>& a_upper) {
  IntegralSpace<K> I = integral_space(c, IntegralKind::L_on_sstar);
  std::vector<Vec<K>> vs;
  for (size_t i = 0; i < I.basis.dim(); ++i)
    vs.push_back(a_upper.coords(unflat(c.field(), I.basis.vec(i), c.mR(), c.n())));
  return span_of(c.field(), a_upper.dim(), vs);
}

template <class K>
HopfModuleOnDual<K> hopf_module_on_dual(const HopfContext<K>& c, const SigmaChi<K>& sc, const Subspace<K>& L_dual,
                                        std::optional<Mat<K>> generators = std::nullopt) {
  const auto& A = c.A();
  const auto& D = sc.a_upper;
  size_t n = c.n(), d = D.dim();
  Field f = c.field();
  HopfModuleOnDual<K> H;
  H.gens = generators ? *generators : c.id();
  H.beta = dual_basis_AL(c, sc.a_star, H.gens);
  H.L_dual = L_dual;
  size_t k = H.gens.cols;
  for (auto& b : H.beta) H.psi.push_back(D.alg.left_mult(sc.chi_inv * b));
  for (size_t l = 0; l < c.mL(); ++l) H.L_action.push_back(left_shift(D, A, c.S() * c.sL().col(l)));
  for (size_t r = 0; r < c.mR(); ++r) H.R_action.push_back(left_shift(D, A, c.sR().col(r)));

  Balancing<K> lb, rb;
  for (size_t l = 0; l < c.mL(); ++l) lb.emplace_back(A.left_mult(c.tL().col(l)), H.L_action[l]);
  for (size_t r = 0; r < c.mR(); ++r) rb.emplace_back(H.R_action[r], A.right_mult(c.tR().col(r)));
  H.left_target = BalancedTensor<K>(f, n, d, lb);
  H.right_target = BalancedTensor<K>(f, d, n, rb);

  H.tau_L = Mat<K>(f, n * d, d);
  H.tau_R = Mat<K>(f, d * n, d);
  H.E = Mat<K>(f, d, d);
  std::vector<Mat<K>> S2b;
  for (size_t i = 0; i < k; ++i) S2b.push_back(left_shift(D, A, c.S() * (c.S() * H.gens.col(i))));
  for (size_t j = 0; j < d; ++j) {
    Vec<K> tl = zeros<K>(f, n * d), tr = zeros<K>(f, d * n), e = zeros<K>(f, d);
    for (size_t i = 0; i < k; ++i) {
      Vec<K> p = H.psi[i].col(j);
      tl = tl + outer(H.gens.col(i), p);
      tr = tr + outer(p, c.S() * H.gens.col(i));
      e = e + S2b[i] * p;
    }
    H.tau_L.set_col(j, tl);
    H.tau_R.set_col(j, tr);
    H.E.set_col(j, e);
  }

  Report& rep = H.checks;
  rep.title = "Hopf module on A^*";
  rep.add("dual_basis", scan1(n, [&](size_t a) {
            Vec<K> s = zeros<K>(f, n);
            for (size_t i = 0; i < k; ++i)
              s = s + c.mul(c.tL() * (sc.a_star.functional(H.beta[i]) * c.e(a)), H.gens.col(i));
            return s == c.e(a);
          }));
  rep.append(comodule_report(left_coring(c.data().left), Comodule<K>{d, Side::Left, H.L_action, H.tau_L}), "tau_L.");
  rep.append(comodule_report(right_coring(c.data().right), Comodule<K>{d, Side::Right, H.R_action, H.tau_R}),
             "tau_R.");

  // tau_L(a.phi) = a_(1) b_i (x) a_(2).(chi^-1(beta^i) phi), with a.phi = phi(S(a) -)
  std::vector<Mat<K>> act;
  for (size_t a = 0; a < n; ++a) act.push_back(left_shift(D, A, c.S() * c.e(a)));
  rep.add("tau_L_A_linear", scan2(n, d, [&](size_t a, size_t j) {
            Vec<K> lhs = H.tau_L * act[a].col(j);
            Vec<K> rhs = c.contract(c.gL().col(a), n * d, [&](size_t p, size_t q) {
              Vec<K> s = zeros<K>(f, n * d);
              for (size_t i = 0; i < k; ++i) s = s + outer(c.mul(c.e(p), H.gens.col(i)), act[q] * H.psi[i].col(j));
              return s;
            });
            return H.left_target.equal(lhs, rhs);
          }));
  // tau_R(phi.a) = phi_0.a^(1) (x) phi_1 a^(2), with phi.a = phi(a -)
  std::vector<Mat<K>> ract;
  for (size_t a = 0; a < n; ++a) ract.push_back(left_shift(D, A, c.e(a)));
  rep.add("tau_R_A_linear", scan2(n, d, [&](size_t a, size_t j) {
            Vec<K> lhs = H.tau_R * ract[a].col(j);
            Vec<K> rhs = c.contract(c.gR().col(a), d * n, [&](size_t p, size_t q) {
              return apply_kron(ract[p], A.right_mult(c.e(q)), H.tau_R.col(j));
            });
            return H.right_target.equal(lhs, rhs);
          }));

  H.coinv_L = kernel(operator_matrix<K>(f, d, H.left_target.dim(), [&](const Vec<K>& x) {
    return H.left_target.proj(H.tau_L * x - outer(A.one(), x));
  }));
  H.coinv_R = kernel(operator_matrix<K>(f, d, H.right_target.dim(), [&](const Vec<K>& x) {
    return H.right_target.proj(H.tau_R * x - outer(x, A.one()));
  }));
  rep.add("coinvariants_L", H.coinv_L == L_dual);
  rep.add("coinvariants_R", H.coinv_R == L_dual);
  rep.add("E_idempotent", H.E * H.E == H.E);
  rep.add("E_image", image(H.E) == L_dual);
  rep.add("E_identity_on_L", scan1(L_dual.dim(), [&](size_t i) { return H.E * L_dual.vec(i) == L_dual.vec(i); }));
  return H;
}

// ---------------------------------------------------------------------------
// Fundamental isomorphisms

template <class K>
struct BalancedIso {
  BalancedTensor<K> source;
  Mat<K> map, inverse;  // source coordinates <-> A^* coordinates
};

template <class K>
BalancedIso<K> balanced_iso(BalancedTensor<K> src, const Mat<K>& map, const char* name) {
  Field f = src.field();
  if (map.rows != map.cols) throw NotIso(std::string(name) + ": dimensions differ");
  auto inv = hopfalg::inverse(map);
  if (!inv) throw NotIso(std::string(name) + ": singular");
  if (!(map * *inv == Mat<K>::identity(f, map.rows)) || !(*inv * map == Mat<K>::identity(f, map.cols)))
    throw NotIso(std::string(name) + ": inverse does not compose to identities");
  return {std::move(src), map, std::move(*inv)};
}

// alpha_L: ^L A (x) L(A^*)^L -> A^*, a (x) lambda |-> lambda(S(a) -), with
// a t_L(l) (x) lambda = a (x) lambda(s_L(l) -).
template <class K>
BalancedIso<K> alpha_L(const HopfContext<K>& c, const DualAlgebra<K>& D, const Subspace<K>& L_dual) {
  const auto& A = c.A();
  size_t n = c.n(), dl = L_dual.dim();
  Field f = c.field();
  Balancing<K> bal;
  for (size_t l = 0; l < c.mL(); ++l)
    bal.emplace_back(A.right_mult(c.tL().col(l)), restrict_to(L_dual, left_shift(D, A, c.sL().col(l)), "L(A^*).l"));
  BalancedTensor<K> src(f, n, dl, bal);
  std::vector<Mat<K>> shifts;
  for (size_t a = 0; a < n; ++a) shifts.push_back(left_shift(D, A, c.S() * c.e(a)));
  auto fn = [&](const Vec<K>& v) {
    Vec<K> r = zeros<K>(f, D.dim());
    for (size_t a = 0; a < n; ++a)
      for (size_t j = 0; j < dl; ++j)
        if (!is_zero(v[a * dl + j])) axpy(r, v[a * dl + j], shifts[a] * L_dual.vec(j));
    return r;
  };
  Mat<K> m = descend_map<K>(fn, src, [](const Vec<K>& v) { return v; }, D.dim());
  return balanced_iso(std::move(src), m, "alpha_L");
}

// alpha_R: ^R L(A^*) (x) A_R -> A^*, lambda (x) a |-> lambda(a -), with
// lambda(t_R(r) -) (x) a = lambda (x) t_R(r) a.
template <class K>
BalancedIso<K> alpha_R(const HopfContext<K>& c, const DualAlgebra<K>& D, const Subspace<K>& L_dual) {
  const auto& A = c.A();
  size_t n = c.n(), dl = L_dual.dim();
  Field f = c.field();
  Balancing<K> bal;
  for (size_t r = 0; r < c.mR(); ++r)
    bal.emplace_back(restrict_to(L_dual, left_shift(D, A, c.tR().col(r)), "r.L(A^*)"), A.left_mult(c.tR().col(r)));
  BalancedTensor<K> src(f, dl, n, bal);
  std::vector<Mat<K>> shifts;
  for (size_t a = 0; a < n; ++a) shifts.push_back(left_shift(D, A, c.e(a)));
  auto fn = [&](const Vec<K>& v) {
    Vec<K> r = zeros<K>(f, D.dim());
    for (size_t j = 0; j < dl; ++j)
      for (size_t a = 0; a < n; ++a)
        if (!is_zero(v[j * n + a])) axpy(r, v[j * n + a], shifts[a] * L_dual.vec(j));
    return r;
  };
  Mat<K> m = descend_map<K>(fn, src, [](const Vec<K>& v) { return v; }, D.dim());
  return balanced_iso(std::move(src), m, "alpha_R");
}

template <class K>
struct FundamentalIso {
  BalancedIso<K> left, right;
  Report checks;
};

// Builds alpha_L, alpha_R and compares alpha_L^-1 with m |-> m_{-1}^(1) (x) S(m_{-1}^(2)).m_0
// inside ^L A (x) A^*^L.
template <class K>
FundamentalIso<K> fundamental_iso(const HopfContext<K>& c, const SigmaChi<K>& sc, const HopfModuleOnDual<K>& H) {
  const auto& A = c.A();
  const auto& D = sc.a_upper;
  size_t n = c.n(), d = D.dim();
  Field f = c.field();
  FundamentalIso<K> F{alpha_L(c, D, H.L_dual), alpha_R(c, D, H.L_dual), {}};
  Report& rep = F.checks;
  rep.title = "fundamental isomorphisms";
  rep.add("alpha_L_dimension", F.left.source.dim() == d);
  rep.add("alpha_R_dimension", F.right.source.dim() == d);

  Balancing<K> bal;
  for (size_t l = 0; l < c.mL(); ++l) bal.emplace_back(A.right_mult(c.tL().col(l)), left_shift(D, A, c.sL().col(l)));
  BalancedTensor<K> big(f, n, d, bal);
  Mat<K> incl = H.L_dual.inclusion();
  Mat<K> idA = c.id();
  std::vector<Mat<K>> act;  // x.phi = phi(S(x) -), applied to x = S(e_q)
  for (size_t q = 0; q < n; ++q) act.push_back(left_shift(D, A, c.S() * (c.S() * c.e(q))));
  rep.add("alpha_L_inverse_formula", scan1(d, [&](size_t j) {
            Vec<K> formula = zeros<K>(f, n * d);
            for (size_t i = 0; i < H.gens.cols; ++i) {
              Vec<K> m0 = H.psi[i].col(j);
              formula = formula + c.contract(c.gR() * H.gens.col(i), n * d,
                                             [&](size_t p, size_t q) { return outer(c.e(p), act[q] * m0); });
            }
            Vec<K> via_inverse = apply_kron(idA, incl, F.left.source.sect(F.left.inverse.col(j)));
            return big.equal(formula, via_inverse);
          }));
  return F;
}

// ---------------------------------------------------------------------------
// Antipode bijectivity

template <class K>
struct AntipodeBijectivity {
  bool direct = false;            // S invertible as a matrix
  std::optional<Mat<K>> S_inv;
  bool criterion = false;         // an invariant with sum lambda_k(x_k) = 1_R exists
  Vec<K> invariant;               // lift in A (x) L(A^*) coordinates, when criterion holds
  Vec<K> cop_invariant;           // built from (alpha_L^cop)^-1(pi_R), when S is invertible
  Report checks;

  bool agree() const { return direct == criterion; }
};

// S^-1(a) = sum_k (lambda_k <- a) -> x_k for a lift sum_k x_k (x) lambda_k.
template <class K>
Mat<K> inverse_from_invariant(const HopfContext<K>& c, const DualAlgebra<K>& D, const Subspace<K>& L_dual,
                              const Vec<K>& u) {
  size_t n = c.n(), dl = L_dual.dim();
  Field f = c.field();
  return operator_matrix<K>(f, n, n, [&](const Vec<K>& a) {
    Vec<K> r = zeros<K>(f, n);
    for (size_t x = 0; x < n; ++x)
      for (size_t k = 0; k < dl; ++k) {
        if (is_zero(u[x * dl + k])) continue;
        Mat<K> lam = D.functional(L_dual.vec(k)) * c.A().left_mult(a);
        axpy(r, u[x * dl + k], harpoon_upper_star(c.data().right, lam, c.e(x)));
      }
    return r;
  });
}

template <class K>
AntipodeBijectivity<K> antipode_bijective(const HopfContext<K>& c, const SigmaChi<K>& sc, const Subspace<K>& L_dual) {
  const auto& A = c.A();
  const auto& D = sc.a_upper;
  size_t n = c.n(), dl = L_dual.dim(), mR = c.mR();
  Field f = c.field();
  AntipodeBijectivity<K> B;
  Report& rep = B.checks;
  rep.title = "antipode bijectivity";
  B.S_inv = hopfalg::inverse(c.S());
  B.direct = B.S_inv.has_value();

  // ^R A (x) L(A^*)^R: a t_R(r) (x) lambda = a (x) lambda(- t_R(r))
  Balancing<K> bal;
  for (size_t r = 0; r < mR; ++r)
    bal.emplace_back(A.right_mult(c.tR().col(r)), restrict_to(L_dual, right_shift(D, A, c.tR().col(r)), "L(A^*).r"));
  BalancedTensor<K> U(f, n, dl, bal);
  std::vector<Mat<K>> lm;
  for (size_t a = 0; a < n; ++a) lm.push_back(descend_leading(U, A.left_mult(c.e(a))));
  auto invariance = [&](const Vec<K>& q) {
    Vec<K> out;
    for (size_t a = 0; a < n; ++a) {
      Vec<K> v = lm[a] * q - descend_leading(U, A.left_mult(c.sL() * (c.piL() * c.e(a)))) * q;
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  };
  // sum lambda_k(x_k), well defined on U
  Mat<K> pairing = descend_map<K>(
      [&](const Vec<K>& v) {
        Vec<K> r = zeros<K>(f, mR);
        for (size_t x = 0; x < n; ++x)
          for (size_t k = 0; k < dl; ++k)
            if (!is_zero(v[x * dl + k])) axpy(r, v[x * dl + k], D.functional(L_dual.vec(k)) * c.e(x));
        return r;
      },
      U, [](const Vec<K>& v) { return v; }, mR);

  auto q = solve_on_kernel<K>(f, U.dim(), invariance, c.R().one(), [&](const Vec<K>& x) { return pairing * x; });
  B.criterion = q.has_value();
  if (q) {
    B.invariant = U.sect(*q);
    Mat<K> Sinv = inverse_from_invariant(c, D, L_dual, B.invariant);
    rep.add("criterion_inverse", Sinv * c.S() == c.id() && c.S() * Sinv == c.id());
  }
  rep.add("methods_agree", B.agree());
  if (!B.direct) return B;

  // (alpha_L^cop)^-1(pi_R) = sum x_k (x) *lambda_k, invariant sum x_k (x) *lambda_k o S^-1
  HopfContext<K> cc(cop(c.data(), *B.S_inv));
  SigmaChi<K> csc = sigma_chi(cc);
  Subspace<K> cL = left_dual_integrals(cc, csc.a_upper);
  BalancedIso<K> acop = alpha_L(cc, csc.a_upper, cL);
  Vec<K> w = acop.source.sect(acop.inverse * csc.a_upper.coords(cc.piR()));
  B.cop_invariant = zeros<K>(f, n * dl);
  bool in_L = true;
  for (size_t k = 0; k < cL.dim(); ++k) {
    Mat<K> lam = csc.a_upper.functional(cL.vec(k)) * *B.S_inv;
    if (!D.contains(lam) || !L_dual.contains(D.coords(lam))) {
      in_L = false;
      break;
    }
    Vec<K> lc = L_dual.coords(D.coords(lam));
    for (size_t x = 0; x < n; ++x)
      if (!is_zero(w[x * cL.dim() + k])) B.cop_invariant = B.cop_invariant + w[x * cL.dim() + k] * outer(c.e(x), lc);
  }
  rep.add("cop_certificate_in_L", in_L);
  if (!in_L) return B;
  Vec<K> cq = U.proj(B.cop_invariant);
  rep.add("cop_certificate_invariant", all_zero(invariance(cq)));
  rep.add("cop_certificate_normalized", pairing * cq == c.R().one());
  Mat<K> Sinv = inverse_from_invariant(c, D, L_dual, B.cop_invariant);
  rep.add("cop_certificate_inverse", Sinv == *B.S_inv);

  // dual bases for ^R A: k_i = S(b_i), *kappa^i = pi_R s_L beta^i S^-1
  auto beta = dual_basis_AL(c, sc.a_star, c.id());
  Mat<K> pRsL = c.piR() * c.sL();
  bool members = true;
  std::vector<Mat<K>> kappa;
  for (auto& b : beta) {
    kappa.push_back(pRsL * sc.a_star.functional(b) * *B.S_inv);
    members = members && sc.upper_a.contains(kappa.back());
  }
  rep.add("dual_basis_transfer_members", members);
  rep.add("dual_basis_transfer", scan1(n, [&](size_t a) {
            Vec<K> s = zeros<K>(f, n);
            for (size_t i = 0; i < n; ++i) s = s + c.mul(c.S() * c.e(i), c.tR() * (kappa[i] * c.e(a)));
            return s == c.e(a);
          }));
  return B;
}

}  // namespace hopfalg
