#pragma once

#include "coring.hpp"
#include "integrals.hpp"

namespace hopfalg {

template <class K>
json vec_to_json(const Vec<K>& v) {
  json j = json::array();
  for (auto& x : v) j.push_back(Scalar<K>::to_json(x));
  return j;
}

template <class K>
json mat_to_json(const Mat<K>& m) {
  json j = json::array();
  for (size_t i = 0; i < m.rows; ++i) j.push_back(vec_to_json(m.row(i)));
  return j;
}

struct EquivalenceViolated : std::logic_error {
  using std::logic_error::logic_error;
};

// One condition of an equivalence theorem, decided independently of the others.
struct Condition {
  std::string id;
  std::string statement;
  bool verdict = false;
  json certificate;  // null when there is nothing to exhibit
};

struct TheoremReport {
  std::string theorem;
  std::vector<Condition> conditions;
  Report checks;  // verification of certificates and auxiliary structures

  bool agree() const {
    for (auto& c : conditions)
      if (c.verdict != conditions.front().verdict) return false;
    return true;
  }
  bool verdict() const { return !conditions.empty() && conditions.front().verdict; }
  const Condition* find(const std::string& id) const {
    for (auto& c : conditions)
      if (c.id == id) return &c;
    return nullptr;
  }
  Condition& add(std::string id, std::string statement, bool verdict, json cert = nullptr) {
    conditions.push_back({std::move(id), std::move(statement), verdict, std::move(cert)});
    return conditions.back();
  }
  json to_json() const {
    json j;
    j["theorem"] = theorem;
    j["agree"] = agree();
    j["verdict"] = verdict();
    json cs = json::array();
    for (auto& c : conditions) {
      json e;
      e["condition_id"] = c.id;
      e["statement"] = c.statement;
      e["verdict"] = c.verdict;
      if (!c.certificate.is_null()) e["certificate"] = c.certificate;
      cs.push_back(std::move(e));
    }
    j["conditions"] = std::move(cs);
    j["checks"] = checks.to_json();
    return j;
  }
};

inline void require_agreement(const TheoremReport& r) {
  if (!r.agree()) throw EquivalenceViolated(r.theorem + ": conditions disagree");
  if (!r.checks.ok()) throw EquivalenceViolated(r.theorem + ": certificate check " + r.checks.first_failure()->name);
}

// Solves lin(x) = rhs for x in k^dim, lin given on basis vectors.
template <class K, class F>
std::optional<AffineSolution<K>> solve_linear(const Field& f, size_t dim, const Vec<K>& rhs, F lin) {
  return solve_affine(operator_matrix<K>(f, dim, rhs.size(), lin), rhs);
}

// Solves lin(x) = rhs for x in the kernel of hom; the kernel is computed first
// so the affine stage runs on its (usually much smaller) coordinates.
template <class K, class H, class F>
std::optional<Vec<K>> solve_on_kernel(const Field& f, size_t dim, H hom, const Vec<K>& rhs, F lin) {
  Subspace<K> ker = solution_space<K>(f, dim, hom);
  if (ker.dim() == 0) {
    if (all_zero(rhs)) return zeros<K>(f, dim);
    return std::nullopt;
  }
  auto sol = solve_linear<K>(f, ker.dim(), rhs, [&](const Vec<K>& c) { return lin(ker.combine(c)); });
  if (!sol) return std::nullopt;
  return ker.combine(sol->particular);
}

// ---------------------------------------------------------------------------
// Modules over the total algebra

// action[a] is the matrix of m |-> e_a.m (Left) or m |-> m.e_a (Right).
template <class K>
struct Module {
  size_t dim = 0;
  Side side = Side::Left;
  std::vector<Mat<K>> action;

  Mat<K> act(const Vec<K>& a) const { return sum_action(action, a, action[0].field); }
};

template <class K>
Witness module_failure(const FinAlgebra<K>& A, const Module<K>& M) {
  Field f = A.field();
  if (!(M.act(A.one()) == Mat<K>::identity(f, M.dim))) return Witness{std::vector<size_t>{}};
  return scan2(A.dim(), A.dim(), [&](size_t i, size_t j) {
    Mat<K> prod = M.side == Side::Left ? M.action[i] * M.action[j] : M.action[j] * M.action[i];
    return M.act(A.basis_product(i, j)) == prod;
  });
}

template <class K>
Module<K> regular_module(const FinAlgebra<K>& A, Side side) {
  Module<K> M{A.dim(), side, {}};
  for (size_t a = 0; a < A.dim(); ++a)
    M.action.push_back(side == Side::Left ? A.left_mult(A.e(a)) : A.right_mult(A.e(a)));
  return M;
}

// R as a right A-module, r.a = pi_R(s_R(r) a).
template <class K>
Module<K> base_module_right(const HopfContext<K>& c) {
  Module<K> M{c.mR(), Side::Right, {}};
  for (size_t a = 0; a < c.n(); ++a) {
    Mat<K> m(c.field(), c.mR(), c.mR());
    for (size_t r = 0; r < c.mR(); ++r) m.set_col(r, c.piR() * c.mul(c.sR().col(r), c.e(a)));
    M.action.push_back(std::move(m));
  }
  return M;
}

// L as a left A-module, a.l = pi_L(a s_L(l)).
template <class K>
Module<K> base_module_left(const HopfContext<K>& c) {
  Module<K> M{c.mL(), Side::Left, {}};
  for (size_t a = 0; a < c.n(); ++a) {
    Mat<K> m(c.field(), c.mL(), c.mL());
    for (size_t l = 0; l < c.mL(); ++l) m.set_col(l, c.piL() * c.mul(c.e(a), c.sL().col(l)));
    M.action.push_back(std::move(m));
  }
  return M;
}

// M (x)_B A for a right module, A (x)_B M for a left one, over the extension phi: B -> A.
template <class K>
struct InducedModule {
  BalancedTensor<K> tensor;
  Module<K> module;
  Mat<K> mult;  // onto M
};

template <class K>
InducedModule<K> induced_module(const FinAlgebra<K>& A, const Mat<K>& phi, const Module<K>& M) {
  Field f = A.field();
  size_t n = A.dim(), d = M.dim;
  bool right = M.side == Side::Right;
  Balancing<K> bal;
  for (size_t b = 0; b < phi.cols; ++b) {
    if (right)
      bal.emplace_back(M.act(phi.col(b)), A.left_mult(phi.col(b)));
    else
      bal.emplace_back(A.right_mult(phi.col(b)), M.act(phi.col(b)));
  }
  InducedModule<K> I{BalancedTensor<K>(f, right ? d : n, right ? n : d, bal), {}, {}};
  I.module = {I.tensor.dim(), M.side, {}};
  for (size_t a = 0; a < n; ++a)
    I.module.action.push_back(right ? descend_trailing(I.tensor, A.right_mult(A.e(a)))
                                    : descend_leading(I.tensor, A.left_mult(A.e(a))));
  auto mu = [&](const Vec<K>& v) {
    Vec<K> r = zeros<K>(f, d);
    for (size_t i = 0; i < (right ? d : n); ++i)
      for (size_t j = 0; j < (right ? n : d); ++j) {
        const K& x = v[i * (right ? n : d) + j];
        if (is_zero(x)) continue;
        axpy(r, x, right ? M.action[j].col(i) : M.action[i].col(j));
      }
    return r;
  };
  I.mult = descend_map<K>(mu, I.tensor, [](const Vec<K>& v) { return v; }, d);
  return I;
}

// An A-linear nu: M -> N with p nu = id_M, if one exists.
template <class K>
std::optional<Mat<K>> split_module_epi(const Module<K>& M, const Module<K>& N, const Mat<K>& p) {
  Field f = p.field;
  size_t dm = M.dim, dn = N.dim;
  auto sol = solve_on_kernel<K>(
      f, dn * dm,
      [&](const Vec<K>& x) {
        Mat<K> nu = unflat(f, x, dn, dm);
        Vec<K> out;
        for (size_t a = 0; a < M.action.size(); ++a) append(out, (N.action[a] * nu - nu * M.action[a]).a);
        return out;
      },
      Mat<K>::identity(f, dm).a, [&](const Vec<K>& x) { return (p * unflat(f, x, dn, dm)).a; });
  if (!sol) return std::nullopt;
  return unflat(f, *sol, dn, dm);
}

template <class K>
bool is_module_splitting(const Module<K>& M, const Module<K>& N, const Mat<K>& p, const Mat<K>& nu) {
  for (size_t a = 0; a < M.action.size(); ++a)
    if (!(N.action[a] * nu == nu * M.action[a])) return false;
  return p * nu == Mat<K>::identity(p.field, M.dim);
}

// Separability of phi: B -> A: a Casimir element e in A (x)_phi A with mult(e) = 1.
template <class K>
struct Extension {
  std::string name;
  Mat<K> phi;
  BalancedTensor<K> tensor;  // x phi(b) (x) y = x (x) phi(b) y
  Mat<K> mult;
  std::vector<Mat<K>> left, right;  // a.- and -.a on the tensor
};

template <class K>
Extension<K> extension(const FinAlgebra<K>& A, std::string name, const Mat<K>& phi) {
  Field f = A.field();
  size_t n = A.dim();
  Extension<K> E{std::move(name), phi,
                 BalancedTensor<K>(f, n, n, balancing(A, phi, phi, ModKind::UpperRight, ModKind::LowerLeft)), {}, {}, {}};
  E.mult = descend_map<K>(
      [&](const Vec<K>& v) {
        Vec<K> r = zeros<K>(f, n);
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j)
            if (!is_zero(v[i * n + j])) axpy(r, v[i * n + j], A.basis_product(i, j));
        return r;
      },
      E.tensor, [](const Vec<K>& v) { return v; }, n);
  for (size_t a = 0; a < n; ++a) {
    E.left.push_back(descend_leading(E.tensor, A.left_mult(A.e(a))));
    E.right.push_back(descend_trailing(E.tensor, A.right_mult(A.e(a))));
  }
  return E;
}

template <class K>
bool is_casimir(const FinAlgebra<K>& A, const Extension<K>& E, const Vec<K>& e) {
  for (size_t a = 0; a < A.dim(); ++a)
    if (E.left[a] * e != E.right[a] * e) return false;
  return E.mult * e == A.one();
}

template <class K>
std::optional<Vec<K>> separability_element(const FinAlgebra<K>& A, const Extension<K>& E) {
  Field f = A.field();
  size_t q = E.tensor.dim(), n = A.dim();
  return solve_on_kernel<K>(
      f, q,
      [&](const Vec<K>& e) {
        Vec<K> out;
        for (size_t a = 0; a < n; ++a) append(out, E.left[a] * e - E.right[a] * e);
        return out;
      },
      A.one(), [&](const Vec<K>& e) { return E.mult * e; });
}

// An element of the integral space with base-valued normalization map equal to one.
template <class K>
std::optional<Vec<K>> normalized(const Subspace<K>& space, const Mat<K>& norm, const Vec<K>& one) {
  Mat<K> M = norm * space.inclusion();
  auto sol = solve_affine(M, one);
  if (!sol) return std::nullopt;
  return space.combine(sol->particular);
}

template <class K>
TheoremReport maschke_report(const HopfContext<K>& c, const IntegralSpaces<K>& I) {
  const auto& A = c.A();
  Field f = c.field();
  size_t n = c.n();
  TheoremReport rep;
  rep.theorem = "Maschke";
  rep.checks.title = "Maschke certificates";

  Extension<K> ext[4] = {extension(A, "s_R", c.sR()), extension(A, "t_R", c.tR()), extension(A, "s_L", c.sL()),
                         extension(A, "t_L", c.tL())};
  const char* ids1[4] = {"1.a", "1.b", "1.c", "1.d"};
  std::optional<Vec<K>> casimir[4];
  for (int i = 0; i < 4; ++i) {
    casimir[i] = separability_element(A, ext[i]);
    rep.add(ids1[i], "extension " + ext[i].name + " is separable", casimir[i].has_value(),
            casimir[i] ? json{{"casimir_lift", vec_to_json(ext[i].tensor.sect(*casimir[i]))}} : json());
  }

  Module<K> Rmod = base_module_right(c), Lmod = base_module_left(c);
  rep.checks.add("R_right_module", module_failure(A, Rmod));
  rep.checks.add("L_left_module", module_failure(A, Lmod));
  const char* ids2[4] = {"2.a", "2.b", "2.c", "2.d"};
  for (int i = 0; i < 4; ++i) {
    const Module<K>& M = i < 2 ? Rmod : Lmod;
    InducedModule<K> Ind = induced_module(A, ext[i].phi, M);
    auto nu = split_module_epi(M, Ind.module, Ind.mult);
    rep.add(ids2[i],
            std::string(i < 2 ? "right" : "left") + " module " + (i < 2 ? "R" : "L") + " is projective relative to " +
                ext[i].name,
            nu.has_value(), nu ? json{{"splitting", mat_to_json(*nu)}} : json());
  }

  auto ell = normalized(I.L_in.basis, c.piL(), c.L().one());
  auto wp = normalized(I.R_in.basis, c.piR(), c.R().one());
  rep.add("3.a", "normalized left integral in A", ell.has_value(), ell ? json{{"ell", vec_to_json(*ell)}} : json());
  rep.add("3.b", "normalized right integral in A", wp.has_value(), wp ? json{{"wp", vec_to_json(*wp)}} : json());

  Module<K> Aright = regular_module(A, Side::Right), Aleft = regular_module(A, Side::Left);
  auto nuR = split_module_epi(Rmod, Aright, c.piR());
  auto nuL = split_module_epi(Lmod, Aleft, c.piL());
  rep.add("4.a", "pi_R splits as a right A-module map", nuR.has_value(),
          nuR ? json{{"splitting", mat_to_json(*nuR)}} : json());
  rep.add("4.b", "pi_L splits as a left A-module map", nuL.has_value(),
          nuL ? json{{"splitting", mat_to_json(*nuL)}} : json());

  for (int i = 0; i < 4; ++i)
    if (casimir[i]) rep.checks.add(std::string("casimir_") + ext[i].name, is_casimir(A, ext[i], *casimir[i]));

  // Elements built from normalized integrals: a |-> a l^(1) (x) S(l^(2)) splits the
  // multiplication over s_R (equivalently over t_L), a |-> a S(p_(1)) (x) p_(2) over t_R (and s_L).
  Mat<K> id = c.id();
  if (ell) {
    Vec<K> e = apply_kron(id, c.S(), c.gR() * *ell);
    rep.checks.add("proof_casimir_s_R", is_casimir(A, ext[0], ext[0].tensor.proj(e)));
    rep.checks.add("proof_casimir_t_L", is_casimir(A, ext[3], ext[3].tensor.proj(e)));
    Mat<K> nu(f, n, c.mL());
    for (size_t l = 0; l < c.mL(); ++l) nu.set_col(l, c.mul(c.sL().col(l), *ell));
    rep.checks.add("proof_splitting_pi_L", is_module_splitting(Lmod, Aleft, c.piL(), nu));
    rep.checks.add("S_ell_normalized_right", I.R_in.basis.contains(c.S() * *ell) && c.piR() * (c.S() * *ell) == c.R().one());
  }
  if (wp) {
    Vec<K> e = apply_kron(c.S(), id, c.gL() * *wp);
    rep.checks.add("proof_casimir_t_R", is_casimir(A, ext[1], ext[1].tensor.proj(e)));
    rep.checks.add("proof_casimir_s_L", is_casimir(A, ext[2], ext[2].tensor.proj(e)));
    Mat<K> nu(f, n, c.mR());
    for (size_t r = 0; r < c.mR(); ++r) nu.set_col(r, c.mul(*wp, c.sR().col(r)));
    rep.checks.add("proof_splitting_pi_R", is_module_splitting(Rmod, Aright, c.piR(), nu));
    rep.checks.add("S_wp_normalized_left", I.L_in.basis.contains(c.S() * *wp) && c.piL() * (c.S() * *wp) == c.L().one());
  }
  if (nuR) rep.checks.add("splitting_4.a", is_module_splitting(Rmod, Aright, c.piR(), *nuR));
  if (nuL) rep.checks.add("splitting_4.b", is_module_splitting(Lmod, Aleft, c.piL(), *nuL));
  return rep;
}

// ---------------------------------------------------------------------------
// Comodules over the two corings

// The R-coring of the right bialgebroid: r.a = a t_R(r), a.r = a s_R(r).
template <class K>
CoringData<K> right_coring(const BialgebroidData<K>& d) {
  return {d.A, d.B, d.s, d.t, ModKind::UpperLeft, ModKind::UpperRight, d.gamma, d.pi};
}

// C (x)_B M for a left comodule, M (x)_B C for a right one.
template <class K>
BalancedTensor<K> comodule_tensor(const CoringData<K>& C, const Comodule<K>& M) {
  Balancing<K> cross;
  auto la = C.left_actions(), ra = C.right_actions();
  for (size_t b = 0; b < C.m(); ++b) {
    if (M.side == Side::Left)
      cross.emplace_back(ra[b], M.base_action[b]);
    else
      cross.emplace_back(M.base_action[b], la[b]);
  }
  bool left = M.side == Side::Left;
  return BalancedTensor<K>(C.A.field(), left ? C.n() : M.dim, left ? M.dim : C.n(), cross);
}

// M (x)_B C (or C (x)_B M) with the coaction of its free coring factor.
template <class K>
struct CofreeComodule {
  BalancedTensor<K> tensor;
  Comodule<K> comodule;
  Mat<K> coaction_of_M;  // M -> tensor, the corestricted coaction
};

template <class K>
CofreeComodule<K> cofree_comodule(const CoringData<K>& C, const Comodule<K>& M) {
  Field f = C.A.field();
  size_t n = C.n(), d = M.dim;
  bool left = M.side == Side::Left;
  CofreeComodule<K> F{comodule_tensor(C, M), {}, {}};
  size_t q = F.tensor.dim();
  F.comodule.dim = q;
  F.comodule.side = M.side;
  auto la = C.left_actions(), ra = C.right_actions();
  for (size_t b = 0; b < C.m(); ++b)
    F.comodule.base_action.push_back(left ? descend_leading(F.tensor, la[b]) : descend_trailing(F.tensor, ra[b]));
  F.comodule.coaction = Mat<K>(f, q * n, q);
  for (size_t k = 0; k < q; ++k) {
    Vec<K> lift = F.tensor.sect(unit_vec<K>(f, q, k)), out = zeros<K>(f, q * n);
    for (size_t i = 0; i < (left ? n : d); ++i)
      for (size_t j = 0; j < (left ? d : n); ++j) {
        const K& x = lift[i * (left ? d : n) + j];
        if (is_zero(x)) continue;
        if (left) {  // c (x) m |-> c_(1) (x) [c_(2) (x) m]
          Vec<K> g = C.gamma.col(i);
          for (size_t p = 0; p < n; ++p)
            for (size_t r = 0; r < n; ++r)
              if (!is_zero(g[p * n + r]))
                axpy(out, x * g[p * n + r], outer(C.A.e(p), F.tensor.proj(outer(C.A.e(r), unit_vec<K>(f, d, j)))));
        } else {  // m (x) c |-> [m (x) c_(1)] (x) c_(2)
          Vec<K> g = C.gamma.col(j);
          for (size_t p = 0; p < n; ++p)
            for (size_t r = 0; r < n; ++r)
              if (!is_zero(g[p * n + r]))
                axpy(out, x * g[p * n + r], outer(F.tensor.proj(outer(unit_vec<K>(f, d, i), C.A.e(p))), C.A.e(r)));
        }
      }
    F.comodule.coaction.set_col(k, out);
  }
  Mat<K> proj = F.tensor.proj_matrix();
  F.coaction_of_M = proj * M.coaction;
  return F;
}

// (theta (x) C) applied to a lift in N (x) A, or (C (x) theta) to one in A (x) N.
template <class K>
Vec<K> apply_on_comodule_factor(const Mat<K>& theta, const Vec<K>& lift, Side side, size_t n) {
  Mat<K> id = Mat<K>::identity(theta.field, n);
  return side == Side::Left ? apply_kron(id, theta, lift) : apply_kron(theta, id, lift);
}

// A comodule map theta: N -> M with theta f = id_M, if one exists.
template <class K>
std::optional<Mat<K>> split_comodule_mono(const CoringData<K>& C, const Comodule<K>& M, const Comodule<K>& N,
                                          const Mat<K>& fmap) {
  Field f = fmap.field;
  size_t dm = M.dim, dn = N.dim, mB = C.m(), n = C.n();
  BalancedTensor<K> TM = comodule_tensor(C, M);
  auto sol = solve_on_kernel<K>(
      f, dm * dn,
      [&](const Vec<K>& x) {
        Mat<K> th = unflat(f, x, dm, dn);
        Vec<K> out;
        for (size_t b = 0; b < mB; ++b) append(out, (th * N.base_action[b] - M.base_action[b] * th).a);
        for (size_t k = 0; k < dn; ++k)
          append(out, TM.proj(apply_on_comodule_factor(th, N.coaction.col(k), N.side, n) - M.coaction * th.col(k)));
        return out;
      },
      Mat<K>::identity(f, dm).a, [&](const Vec<K>& x) { return (unflat(f, x, dm, dn) * fmap).a; });
  if (!sol) return std::nullopt;
  return unflat(f, *sol, dm, dn);
}

template <class K>
bool is_comodule_splitting(const CoringData<K>& C, const Comodule<K>& M, const Comodule<K>& N, const Mat<K>& fmap,
                           const Mat<K>& th) {
  BalancedTensor<K> TM = comodule_tensor(C, M);
  for (size_t b = 0; b < C.m(); ++b)
    if (!(th * N.base_action[b] == M.base_action[b] * th)) return false;
  for (size_t k = 0; k < N.dim; ++k)
    if (!TM.equal(apply_on_comodule_factor(th, N.coaction.col(k), N.side, C.n()), M.coaction * th.col(k)))
      return false;
  return th * fmap == Mat<K>::identity(fmap.field, M.dim);
}

// The base algebra as a comodule: over the R-coring, R right via r |-> 1 (x) s_R(r) and left via
// r |-> t_R(r) (x) 1; over the L-coring, L left via l |-> s_L(l) (x) 1 and right via l |-> 1 (x) t_L(l).
template <class K>
Comodule<K> base_comodule(const BialgebroidData<K>& d, Side side, const Mat<K>& embed) {
  Field f = d.A.field();
  size_t m = d.m();
  Comodule<K> M{m, side, {}, Mat<K>(f, m * d.n(), m)};
  for (size_t b = 0; b < m; ++b) {
    M.base_action.push_back(side == Side::Left ? d.B.left_mult(d.B.e(b)) : d.B.right_mult(d.B.e(b)));
    M.coaction.set_col(b, side == Side::Left ? outer(embed.col(b), d.B.one()) : outer(d.B.one(), embed.col(b)));
  }
  return M;
}

// Coseparability via a cointegral delta: C (x)_B C -> B, B-bilinear, delta gamma = pi and
// x_(1).delta(x_(2) (x) y) = delta(x (x) y_(1)).y_(2). The retraction of gamma is x (x) y |-> x_(1).delta(x_(2) (x) y).
template <class K>
struct Cointegral {
  Mat<K> delta;  // on quotient coordinates of C (x)_B C
};

template <class K>
std::optional<Cointegral<K>> coseparability(const CoringData<K>& C) {
  Field f = C.A.field();
  size_t n = C.n(), m = C.m();
  BalancedTensor<K> T = C.tensor();
  size_t q = T.dim();
  auto la = C.left_actions(), ra = C.right_actions();
  const Mat<K>& P = T.proj_cached();
  std::vector<Mat<K>> Dl, Dr, RA, LA;
  for (size_t b = 0; b < m; ++b) {
    Dl.push_back(descend_leading(T, la[b]));
    Dr.push_back(descend_trailing(T, ra[b]));
  }
  // RA[p] column b = e_p . b, LA[p] column b = b . e_p
  for (size_t p = 0; p < n; ++p) {
    Mat<K> r(f, n, m), l(f, n, m);
    for (size_t b = 0; b < m; ++b) {
      r.set_col(b, ra[b].col(p));
      l.set_col(b, la[b].col(p));
    }
    RA.push_back(std::move(r));
    LA.push_back(std::move(l));
  }
  std::vector<std::vector<std::tuple<size_t, size_t, K>>> g(n);
  for (size_t a = 0; a < n; ++a)
    for (size_t k = 0; k < n * n; ++k)
      if (!is_zero(C.gamma(k, a))) g[a].emplace_back(k / n, k % n, C.gamma(k, a));

  // B-bilinear maps first, then the cointegral identity and the counit condition on them
  Subspace<K> bil = solution_space<K>(f, m * q, [&](const Vec<K>& x) {
    Mat<K> dl = unflat(f, x, m, q);
    Vec<K> out;
    for (size_t b = 0; b < m; ++b) {
      append(out, (dl * Dl[b] - C.B.left_mult(C.B.e(b)) * dl).a);
      append(out, (dl * Dr[b] - C.B.right_mult(C.B.e(b)) * dl).a);
    }
    return out;
  });
  auto sol = solve_on_kernel<K>(
      f, bil.dim(),
      [&](const Vec<K>& c) {
        Mat<K> D = unflat(f, bil.combine(c), m, q) * P;  // delta on e_i (x) e_j at column i*n + j
        Vec<K> out;
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) {
            Vec<K> v = zeros<K>(f, n);
            for (auto& [p, r, cc] : g[i]) axpy(v, cc, RA[p] * D.col(r * n + j));
            for (auto& [p, r, cc] : g[j]) axpy(v, -cc, LA[r] * D.col(i * n + p));
            append(out, v);
          }
        return out;
      },
      C.pi.a, [&](const Vec<K>& c) { return (unflat(f, bil.combine(c), m, q) * P * C.gamma).a; });
  if (!sol) return std::nullopt;
  return Cointegral<K>{unflat(f, bil.combine(*sol), m, q)};
}

// Checks that nu (given on pairs e_i (x) e_j as an n x n^2 matrix) is a B-bilinear,
// bicolinear map C (x)_B C -> C with nu gamma = id.
template <class K>
Report bicomodule_retraction_report(const CoringData<K>& C, const Mat<K>& nu) {
  Report rep;
  rep.title = "bicomodule retraction";
  Field f = C.A.field();
  size_t n = C.n(), m = C.m();
  BalancedTensor<K> T = C.tensor();
  auto la = C.left_actions(), ra = C.right_actions();
  Mat<K> id = Mat<K>::identity(f, n);
  rep.add("descends", scan1(T.relations().dim(), [&](size_t r) { return all_zero(nu * T.relations().vec(r)); }));
  rep.add("retraction", nu * C.gamma == id);
  rep.add("bilinear", scan3(m, n, n, [&](size_t b, size_t i, size_t j) {
            Vec<K> x = outer(C.A.e(i), C.A.e(j));
            return nu * apply_kron(la[b], id, x) == la[b] * (nu * x) && nu * apply_kron(id, ra[b], x) == ra[b] * (nu * x);
          }));
  rep.add("colinear", scan2(n, n, [&](size_t i, size_t j) {
            Vec<K> gn = C.gamma * (nu * outer(C.A.e(i), C.A.e(j)));
            Vec<K> right = apply_kron(nu, id, outer(C.A.e(i), C.gamma.col(j)));
            Vec<K> left = apply_kron(id, nu, outer(C.gamma.col(i), C.A.e(j)));
            return T.equal(gn, right) && T.equal(gn, left);
          }));
  return rep;
}

template <class K>
Mat<K> retraction_from_cointegral(const CoringData<K>& C, const Cointegral<K>& co) {
  Field f = C.A.field();
  size_t n = C.n();
  auto ra = C.right_actions();
  BalancedTensor<K> T = C.tensor();
  Mat<K> D = co.delta * T.proj_matrix(), nu(f, n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec<K> v = zeros<K>(f, n), g = C.gamma.col(i);
      for (size_t p = 0; p < n; ++p)
        for (size_t r = 0; r < n; ++r)
          if (!is_zero(g[p * n + r])) axpy(v, g[p * n + r], act_by(ra, D.col(r * n + j), C.A.e(p)));
      nu.set_col(i * n + j, v);
    }
  return nu;
}

template <class K>
TheoremReport dual_maschke_report(const HopfContext<K>& c, const IntegralSpaces<K>& I) {
  Field f = c.field();
  size_t n = c.n();
  const auto& Ld = c.data().left;
  const auto& Rd = c.data().right;
  TheoremReport rep;
  rep.theorem = "Dual Maschke";
  rep.checks.title = "dual Maschke certificates";
  CoringData<K> CR = right_coring(Rd), CL = left_coring(Ld);

  auto coR = coseparability(CR), coL = coseparability(CL);
  rep.add("1.a", "the R-coring is coseparable", coR.has_value(),
          coR ? json{{"cointegral", mat_to_json(coR->delta)}} : json());
  rep.add("1.b", "the L-coring is coseparable", coL.has_value(),
          coL ? json{{"cointegral", mat_to_json(coL->delta)}} : json());

  // The base algebras as comodules, each with its embedding into the regular comodule.
  struct Inst {
    const char* id2;
    const char* id4;
    const char* text;
    const CoringData<K>* C;
    Comodule<K> M;
    Mat<K> embed;
  };
  std::vector<Inst> insts = {
      {"2.a", "4.a", "right comodule R, s_R", &CR, base_comodule(Rd, Side::Right, Rd.s), Rd.s},
      {"2.b", "4.b", "left comodule R, t_R", &CR, base_comodule(Rd, Side::Left, Rd.t), Rd.t},
      {"2.c", "4.c", "left comodule L, s_L", &CL, base_comodule(Ld, Side::Left, Ld.s), Ld.s},
      {"2.d", "4.d", "right comodule L, t_L", &CL, base_comodule(Ld, Side::Right, Ld.t), Ld.t},
  };
  std::vector<std::optional<Mat<K>>> split4;
  for (auto& in : insts) {
    rep.checks.append(comodule_report(*in.C, in.M), std::string(in.id2) + ".base_comodule.");
    CofreeComodule<K> F = cofree_comodule(*in.C, in.M);
    rep.checks.append(comodule_report(*in.C, F.comodule), std::string(in.id2) + ".cofree.");
    auto th = split_comodule_mono(*in.C, in.M, F.comodule, F.coaction_of_M);
    rep.add(in.id2, std::string(in.text).substr(0, std::string(in.text).find(',')) + " is relatively injective",
            th.has_value(), th ? json{{"retraction", mat_to_json(*th)}} : json());
    if (th) rep.checks.add(std::string(in.id2) + ".splitting", is_comodule_splitting(*in.C, in.M, F.comodule, F.coaction_of_M, *th));
    Comodule<K> reg = regular_comodule(*in.C, in.M.side);
    split4.push_back(split_comodule_mono(*in.C, in.M, reg, in.embed));
  }

  auto ev1 = [&](size_t m) {
    return operator_matrix<K>(f, m * n, m, [&](const Vec<K>& x) { return unflat(f, x, m, n) * c.A().one(); });
  };
  Mat<K> evR = ev1(c.mR()), evL = ev1(c.mL());
  auto lam_s = normalized(I.L_on_sstar.basis, evR, c.R().one());
  auto lam_t = normalized(I.L_on_starA.basis, evR, c.R().one());
  auto rho_s = normalized(I.R_on_star.basis, evL, c.L().one());
  auto rho_t = normalized(I.R_on_lower.basis, evL, c.L().one());
  auto fcert = [&](const std::optional<Vec<K>>& v, size_t m) {
    return v ? json{{"functional", mat_to_json(unflat(f, *v, m, n))}} : json();
  };
  rep.add("3.a", "normalized left s-integral on A", lam_s.has_value(), fcert(lam_s, c.mR()));
  rep.add("3.b", "normalized left t-integral on A", lam_t.has_value(), fcert(lam_t, c.mR()));
  rep.add("3.c", "normalized right s-integral on A", rho_s.has_value(), fcert(rho_s, c.mL()));
  rep.add("3.d", "normalized right t-integral on A", rho_t.has_value(), fcert(rho_t, c.mL()));

  for (size_t i = 0; i < insts.size(); ++i) {
    auto& in = insts[i];
    auto& th = split4[i];
    std::string text(in.text);
    rep.add(in.id4, text.substr(text.find(", ") + 2) + " splits as a comodule map", th.has_value(),
            th ? json{{"retraction", mat_to_json(*th)}} : json());
    if (th)
      rep.checks.add(std::string(in.id4) + ".splitting",
                     is_comodule_splitting(*in.C, in.M, regular_comodule(*in.C, in.M.side), in.embed, *th));
  }

  if (coR) rep.checks.append(bicomodule_retraction_report(CR, retraction_from_cointegral(CR, *coR)), "1.a.");
  if (coL) rep.checks.append(bicomodule_retraction_report(CL, retraction_from_cointegral(CL, *coL)), "1.b.");
  if (lam_s) {
    Mat<K> ls = unflat(f, *lam_s, c.mR(), n) * c.S();
    rep.checks.add("lambda_S_normalized_t_integral",
                   I.L_on_starA.basis.contains(ls.a) && ls * c.A().one() == c.R().one());
  }
  if (lam_t) {
    // a (x) b |-> t_R(lambda(a S(b_(1)))) b_(2)
    Mat<K> lam = unflat(f, *lam_t, c.mR(), n), nu(f, n, n * n);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        nu.set_col(a * n + b, c.contract(c.gL().col(b), n, [&](size_t i, size_t j) {
          return c.mul(c.tR() * (lam * c.mul(c.e(a), c.S() * c.e(i))), c.e(j));
        }));
    rep.checks.append(bicomodule_retraction_report(CR, nu), "proof_retraction.");
  }
  return rep;
}

}  // namespace hopfalg
