#pragma once

#include "hopfmodule.hpp"

#include <cmath>

namespace hopfalg {

// ---------------------------------------------------------------------------
// Non-degeneracy search: find x in k^d with every sum_k x_k M[f][k] invertible.

enum class Decision { Yes, No, UndecidedProbablyNot };

inline const char* decision_name(Decision d) {
  switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    case Decision::UndecidedProbablyNot: return "undecided_probably_not";
  }
  return "";
}

struct SearchPolicy {
  size_t grid_budget = 4096;  // largest deterministic grid or exhaustive enumeration
  size_t trials = 200;
  uint64_t seed = 1;
};

template <class K>
struct SearchResult {
  Decision decision = Decision::No;
  Vec<K> point;
  std::string method;  // "grid", "exhaustive", "random", "shape"
  size_t evaluations = 0;
};

template <class K>
using Family = std::vector<Mat<K>>;  // one matrix per coordinate of x

template <class K>
Mat<K> evaluate_family(const Family<K>& F, const Vec<K>& x, size_t rows, size_t cols, const Field& f) {
  Mat<K> m(f, rows, cols);
  for (size_t k = 0; k < F.size(); ++k)
    if (!is_zero(x[k])) axpy(m.a, x[k], F[k].a);
  return m;
}

// Families are square matrices of size sizes[f]. The determinant of family f is a polynomial
// of degree sizes[f] in d variables; the product has degree D = sum sizes[f]. A grid with
// D + 1 points per coordinate decides vanishing of the product exactly.
template <class K>
SearchResult<K> nondegenerate_search(const Field& f, size_t d, const std::vector<Family<K>>& families,
                                     const std::vector<std::pair<size_t, size_t>>& shapes, const SearchPolicy& pol) {
  SearchResult<K> res;
  size_t D = 0;
  for (auto& [r, c] : shapes) {
    if (r != c) {
      res.method = "shape";
      return res;
    }
    D += r;
  }
  auto good = [&](const Vec<K>& x) {
    ++res.evaluations;
    for (size_t i = 0; i < families.size(); ++i)
      if (rank(evaluate_family(families[i], x, shapes[i].first, shapes[i].second, f)) != shapes[i].first)
        return false;
    return true;
  };
  auto fits = [&](size_t base) {
    double pts = std::pow(double(base), double(d));
    return pts <= double(pol.grid_budget);
  };
  auto enumerate = [&](size_t base, const char* method) {
    res.method = method;
    std::vector<size_t> idx(d, 0);
    while (true) {
      Vec<K> x(d);
      for (size_t k = 0; k < d; ++k) x[k] = from_int<K>(f, long(idx[k]));
      if (good(x)) {
        res.decision = Decision::Yes;
        res.point = x;
        return;
      }
      size_t k = 0;
      while (k < d && ++idx[k] == base) idx[k++] = 0;
      if (k == d) return;
    }
  };
  bool finite = f.kind == Field::PrimeField;
  if (finite && fits(f.p)) {
    enumerate(f.p, "exhaustive");
    return res;
  }
  if ((!finite || D + 1 <= f.p) && fits(D + 1)) {
    enumerate(D + 1, "grid");
    return res;
  }
  res.method = "random";
  std::mt19937_64 rng(pol.seed);
  std::uniform_int_distribution<long> pick(-long(10 * D + 10), long(10 * D + 10));
  for (size_t t = 0; t < pol.trials; ++t) {
    Vec<K> x(d);
    for (size_t k = 0; k < d; ++k) x[k] = finite ? Scalar<K>::random(f, rng) : from_int<K>(f, pick(rng));
    if (good(x)) {
      res.decision = Decision::Yes;
      res.point = x;
      return res;
    }
  }
  res.decision = Decision::UndecidedProbablyNot;
  return res;
}

template <class K>
json search_json(const SearchResult<K>& r) {
  json j;
  j["outcome"] = decision_name(r.decision);
  j["method"] = r.method;
  j["evaluations"] = r.evaluations;
  return j;
}

// Family over a subspace V: x |-> (matrix of the linear map built from V.combine(x)).
template <class K, class F>
Family<K> family_over(const Subspace<K>& V, F map_of) {
  Family<K> fam;
  for (size_t k = 0; k < V.dim(); ++k) fam.push_back(map_of(V.vec(k)));
  return fam;
}

// ---------------------------------------------------------------------------
// Frobenius extensions

// e: B -> A (anti = false) or B^op -> A (anti = true); functionals are A -> B.
template <class K>
struct BaseExtension {
  std::string name;
  FinAlgebra<K> B;
  Mat<K> e;
  bool anti = false;
};

template <class K>
std::array<BaseExtension<K>, 4> base_extensions(const HopfContext<K>& c) {
  return {BaseExtension<K>{"s_R", c.R(), c.sR(), false}, BaseExtension<K>{"t_R", c.R(), c.tR(), true},
          BaseExtension<K>{"s_L", c.L(), c.sL(), false}, BaseExtension<K>{"t_L", c.L(), c.tL(), true}};
}

// B'-B' bimodule maps A -> B.
template <class K>
Subspace<K> bimodule_functionals(const FinAlgebra<K>& A, const BaseExtension<K>& x) {
  size_t n = A.dim(), m = x.B.dim();
  Field f = A.field();
  return solution_space<K>(f, m * n, [&](const Vec<K>& v) {
    Mat<K> psi = unflat(f, v, m, n);
    Vec<K> out;
    for (size_t b = 0; b < m; ++b) {
      Mat<K> lb = x.B.left_mult(x.B.e(b)), rb = x.B.right_mult(x.B.e(b));
      append(out, (psi * A.left_mult(x.e.col(b)) - (x.anti ? rb : lb) * psi).a);
      append(out, (psi * A.right_mult(x.e.col(b)) - (x.anti ? lb : rb) * psi).a);
    }
    return out;
  });
}

// Hom_{B'}(A_{B'}, B'), with a.b = a e(b).
template <class K>
Subspace<K> right_linear_functionals(const FinAlgebra<K>& A, const BaseExtension<K>& x) {
  size_t n = A.dim(), m = x.B.dim();
  Field f = A.field();
  return solution_space<K>(f, m * n, [&](const Vec<K>& v) {
    Mat<K> phi = unflat(f, v, m, n);
    Vec<K> out;
    for (size_t b = 0; b < m; ++b) {
      Mat<K> act = x.anti ? x.B.left_mult(x.B.e(b)) : x.B.right_mult(x.B.e(b));
      append(out, (phi * A.right_mult(x.e.col(b)) - act * phi).a);
    }
    return out;
  });
}

// First basis vector a where sum e(psi(a u_i)) v_i = a or sum u_i e(psi(v_i a)) = a fails.
template <class K>
Witness frobenius_system_failure(const FinAlgebra<K>& A, const Mat<K>& e, const Mat<K>& psi, const Vec<K>& u) {
  size_t n = A.dim();
  Field f = A.field();
  return scan1(n, [&](size_t a) {
    Vec<K> l = zeros<K>(f, n), r = zeros<K>(f, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const K& c = u[i * n + j];
        if (is_zero(c)) continue;
        axpy(l, c, A.mul(e * (psi * A.basis_product(a, i)), A.e(j)));
        axpy(r, c, A.mul(A.e(i), e * (psi * A.basis_product(j, a))));
      }
    return l == A.e(a) && r == A.e(a);
  });
}

// Casimir part of a Frobenius system for a given psi, solved in A (x)_{B'} A.
template <class K>
std::optional<Vec<K>> frobenius_dual_tensor(const FinAlgebra<K>& A, const BaseExtension<K>& x, const Mat<K>& psi) {
  size_t n = A.dim();
  Field f = A.field();
  BalancedTensor<K> T(f, n, n, balancing(A, x.e, x.e, ModKind::UpperRight, ModKind::LowerLeft));
  Vec<K> rhs;
  for (size_t a = 0; a < n; ++a) append(rhs, A.e(a));
  for (size_t a = 0; a < n; ++a) append(rhs, A.e(a));
  auto sol = solve_linear<K>(f, T.dim(), rhs, [&](const Vec<K>& q) {
    Vec<K> u = T.sect(q), l, r;
    for (size_t a = 0; a < n; ++a) {
      Vec<K> la = zeros<K>(f, n), ra = zeros<K>(f, n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          const K& c = u[i * n + j];
          if (is_zero(c)) continue;
          axpy(la, c, A.mul(x.e * (psi * A.basis_product(a, i)), A.e(j)));
          axpy(ra, c, A.mul(A.e(i), x.e * (psi * A.basis_product(j, a))));
        }
      append(l, la);
      append(r, ra);
    }
    append(l, r);
    return l;
  });
  if (!sol) return std::nullopt;
  return T.sect(sol->particular);
}

template <class K>
json frobenius_system_json(const Mat<K>& psi, const Vec<K>& u) {
  return json{{"psi", mat_to_json(psi)}, {"tensor", vec_to_json(u)}};
}

// ---------------------------------------------------------------------------
// Frobenius theorem

template <class K>
struct FrobeniusReport {
  Decision decision = Decision::No;  // non-degenerate left integral
  TheoremReport theorem;             // conditions 1.a-4.d decided independently
  std::vector<std::string> undecided;
  std::optional<Vec<K>> ell;         // non-degenerate left integral
  std::optional<Mat<K>> lambda_star; // F*^-1(1_A)
  json certificate;
  Report checks;

  json to_json() const {
    json j = theorem.to_json();
    j["decision"] = decision_name(decision);
    j["undecided_conditions"] = undecided;
    if (!certificate.is_null()) j["certificate"] = certificate;
    j["frobenius_checks"] = checks.to_json();
    return j;
  }
};

template <class K>
FrobeniusReport<K> frobenius_decide(const HopfContext<K>& c, const IntegralSpaces<K>& I, const SigmaChi<K>& sc,
                                    const SearchPolicy& pol = {}) {
  const auto& A = c.A();
  const auto& Ld = c.data().left;
  const auto& Rd = c.data().right;
  size_t n = c.n(), mL = c.mL(), mR = c.mR();
  Field f = c.field();
  FrobeniusReport<K> F;
  TheoremReport& T = F.theorem;
  T.theorem = "Frobenius";
  Report& rep = F.checks;
  rep.title = "Frobenius certificates";
  auto S_inv = hopfalg::inverse(c.S());

  auto decide = [&](const std::string& id, const std::string& statement, const Subspace<K>& V,
                    const std::vector<Family<K>>& fams, const std::vector<std::pair<size_t, size_t>>& shapes,
                    bool needs_bijective_S, auto on_yes) {
    json cert;
    SearchResult<K> r;
    if (needs_bijective_S && !S_inv) {
      cert["outcome"] = "no";
      cert["method"] = "antipode_not_bijective";
      T.add(id, statement, false, cert);
      return r;
    }
    r = nondegenerate_search<K>(f, V.dim(), fams, shapes, pol);
    cert = search_json(r);
    if (r.decision == Decision::Yes) on_yes(V.combine(r.point), cert);
    if (r.decision == Decision::UndecidedProbablyNot) F.undecided.push_back(id);
    T.add(id, statement, r.decision == Decision::Yes, cert);
    return r;
  };

  // 1.x: Frobenius extensions, psi ranging over bimodule maps, a |-> psi(a -) bijective
  const char* ids1[4] = {"1.a", "1.b", "1.c", "1.d"};
  auto exts = base_extensions(c);
  for (size_t k = 0; k < 4; ++k) {
    const auto& x = exts[k];
    Subspace<K> Psi = bimodule_functionals(A, x), W = right_linear_functionals(A, x);
    size_t m = x.B.dim();
    Family<K> fam = family_over(Psi, [&](const Vec<K>& v) {
      Mat<K> psi = unflat(f, v, m, n);
      return operator_matrix<K>(f, n, W.dim(), [&](const Vec<K>& a) { return W.coords((psi * A.left_mult(a)).a); });
    });
    decide(ids1[k], x.name + " is a Frobenius extension", Psi, {fam}, {{W.dim(), n}}, false,
           [&](const Vec<K>& v, json& cert) {
             Mat<K> psi = unflat(f, v, m, n);
             auto u = frobenius_dual_tensor(A, x, psi);
             rep.add("system_" + x.name + "_solved", u.has_value());
             if (!u) return;
             rep.add("system_" + x.name, frobenius_system_failure(A, x.e, psi, *u));
             cert["system"] = frobenius_system_json(psi, *u);
           });
  }

  // 2.x: rank one freeness of the integral spaces over the base
  auto module_family = [&](const Subspace<K>& V, size_t m_base, size_t rows, size_t cols, auto act) {
    return family_over(V, [&](const Vec<K>& v) {
      Mat<K> phi = unflat(f, v, rows, cols);
      return operator_matrix<K>(f, m_base, V.dim(), [&](const Vec<K>& b) {
        Vec<K> w = act(phi, b).a;
        if (!V.contains(w)) throw std::logic_error("integral space is not a base submodule");
        return V.coords(w);
      });
    });
  };
  const auto& LsA = I.L_on_sstar.basis;
  const auto& LAs = I.L_on_starA.basis;
  const auto& Rs = I.R_on_star.basis;
  const auto& Rl = I.R_on_lower.basis;
  auto lm = [&](const Vec<K>& x) { return A.left_mult(x); };
  auto rm = [&](const Vec<K>& x) { return A.right_mult(x); };
  decide("2.a", "L(A^*) is free of rank one as a right L-module", LsA,
         {module_family(LsA, mL, mR, n, [&](const Mat<K>& p, const Vec<K>& l) { return p * lm(c.sL() * l); })},
         {{LsA.dim(), mL}}, false, [&](const Vec<K>& v, json& cert) { cert["generator"] = vec_to_json(v); });
  decide("2.b", "S is bijective and L(^*A) is free of rank one as a left L-module", LAs,
         {module_family(LAs, mL, mR, n, [&](const Mat<K>& p, const Vec<K>& l) { return p * lm(c.tL() * l); })},
         {{LAs.dim(), mL}}, true, [&](const Vec<K>& v, json& cert) { cert["generator"] = vec_to_json(v); });
  decide("2.c", "R(_*A) is free of rank one as a left R-module", Rs,
         {module_family(Rs, mR, mL, n, [&](const Mat<K>& p, const Vec<K>& r) { return p * rm(c.sR() * r); })},
         {{Rs.dim(), mR}}, false, [&](const Vec<K>& v, json& cert) { cert["generator"] = vec_to_json(v); });
  decide("2.d", "S is bijective and R(A_*) is free of rank one as a right R-module", Rl,
         {module_family(Rl, mR, mL, n, [&](const Mat<K>& p, const Vec<K>& r) { return p * rm(c.tR() * r); })},
         {{Rl.dim(), mR}}, true, [&](const Vec<K>& v, json& cert) { cert["generator"] = vec_to_json(v); });

  // 3.x: a |-> lambda(a -) or rho(- a) bijective onto the dual
  auto hit_family = [&](const Subspace<K>& V, const DualAlgebra<K>& D, bool left_hit) {
    return family_over(V, [&](const Vec<K>& v) {
      Mat<K> phi = unflat(f, v, D.m, n);
      return operator_matrix<K>(f, n, D.dim(), [&](const Vec<K>& a) { return D.coords(phi * (left_hit ? lm(a) : rm(a))); });
    });
  };
  auto gen_cert = [&](const Vec<K>& v, json& cert) { cert["integral"] = vec_to_json(v); };
  decide("3.a", "some lambda in L(A^*) makes a |-> lambda(a -) bijective onto A^*", LsA,
         {hit_family(LsA, sc.a_upper, true)}, {{sc.a_upper.dim(), n}}, false, gen_cert);
  decide("3.b", "S is bijective and some lambda in L(^*A) makes a |-> lambda(a -) bijective onto ^*A", LAs,
         {hit_family(LAs, sc.upper_a, true)}, {{sc.upper_a.dim(), n}}, true, gen_cert);
  decide("3.c", "some rho in R(_*A) makes a |-> rho(- a) bijective onto _*A", Rs, {hit_family(Rs, sc.star_a, false)},
         {{sc.star_a.dim(), n}}, false, gen_cert);
  decide("3.d", "S is bijective and some rho in R(A_*) makes a |-> rho(- a) bijective onto A_*", Rl,
         {hit_family(Rl, sc.a_star, false)}, {{sc.a_star.dim(), n}}, true, gen_cert);

  // 4.x: phi |-> phi -> l (and variants) bijective onto A
  auto harpoon_family = [&](const Subspace<K>& V, const DualAlgebra<K>& D, auto harpoon) {
    return family_over(V, [&](const Vec<K>& x) {
      return operator_matrix<K>(f, D.dim(), n, [&](const Vec<K>& p) { return harpoon(D.functional(p), x); });
    });
  };
  const auto& Lin = I.L_in.basis;
  const auto& Rin = I.R_in.basis;
  auto F_star = [&](const Mat<K>& p, const Vec<K>& x) { return harpoon_upper_star(Rd, p, x); };
  auto star_F = [&](const Mat<K>& p, const Vec<K>& x) { return harpoon_star_upper(Rd, p, x); };
  auto F_lower = [&](const Mat<K>& p, const Vec<K>& x) { return harpoon_star_a(Ld, p, x); };
  auto lower_F = [&](const Mat<K>& p, const Vec<K>& x) { return harpoon_a_star(Ld, p, x); };
  Family<K> f4a = harpoon_family(Lin, sc.a_upper, F_star), f4b = harpoon_family(Lin, sc.upper_a, star_F);
  decide("4.a", "some l in L(A) makes phi |-> phi -> l bijective from A^*", Lin, {f4a}, {{n, sc.a_upper.dim()}}, false,
         gen_cert);
  decide("4.b", "S is bijective and some l in L(A) makes phi |-> phi -> l bijective from ^*A", Lin, {f4b},
         {{n, sc.upper_a.dim()}}, true, gen_cert);
  decide("4.c", "some p in R(A) makes phi |-> p <- phi bijective from _*A", Rin,
         {harpoon_family(Rin, sc.star_a, F_lower)}, {{n, sc.star_a.dim()}}, false, gen_cert);
  decide("4.d", "S is bijective and some p in R(A) makes phi |-> p <- phi bijective from A_*", Rin,
         {harpoon_family(Rin, sc.a_star, lower_F)}, {{n, sc.a_star.dim()}}, true, gen_cert);

  // Non-degenerate left integral: F* and *F bijective for the same l.
  SearchResult<K> nd = nondegenerate_search<K>(f, Lin.dim(), {f4a, f4b}, {{n, sc.a_upper.dim()}, {n, sc.upper_a.dim()}}, pol);
  F.decision = nd.decision;
  json cert;
  cert["search"] = search_json(nd);
  if (nd.decision == Decision::Yes) {
    Vec<K> ell = Lin.combine(nd.point);
    F.ell = ell;
    cert["ell"] = vec_to_json(ell);
    Mat<K> Fs = operator_matrix<K>(f, sc.a_upper.dim(), n, [&](const Vec<K>& p) { return F_star(sc.a_upper.functional(p), ell); });
    auto lam_c = solve_affine(Fs, A.one());
    rep.add("lambda_star_exists", lam_c.has_value());
    if (lam_c) {
      Mat<K> lam = sc.a_upper.functional(lam_c->particular);
      F.lambda_star = lam;
      cert["lambda_star"] = mat_to_json(lam);
      rep.add("lambda_star_integral", LsA.contains(lam.a));

      // (lambda*, l^(1) (x) S(l^(2))) for s_R
      Vec<K> u = apply_kron(c.id(), c.S(), c.gR() * ell);
      rep.add("system_s_R_from_integral", frobenius_system_failure(A, c.sR(), lam, u));
      // (pi_L s_R lambda*, same tensor) for t_L
      Mat<K> psi_tL = c.piL() * c.sR() * lam;
      rep.add("system_t_L_from_integral", frobenius_system_failure(A, c.tL(), psi_tL, u));
      json systems;
      systems["s_R"] = frobenius_system_json(lam, u);
      systems["t_L"] = frobenius_system_json(psi_tL, u);
      if (S_inv) {
        // (pi_L s_R lambda* S^-1, S(v) (x) S(u)) for s_L, then (pi_R t_L psi, same tensor) for t_R
        Mat<K> psi_sL = psi_tL * *S_inv;
        Vec<K> u2 = apply_kron(c.S(), c.S(), flip_matrix<K>(f, n) * u);
        Mat<K> psi_tR = c.piR() * c.tL() * psi_sL;
        rep.add("system_s_L_from_integral", frobenius_system_failure(A, c.sL(), psi_sL, u2));
        rep.add("system_t_R_from_integral", frobenius_system_failure(A, c.tR(), psi_tR, u2));
        systems["s_L"] = frobenius_system_json(psi_sL, u2);
        systems["t_R"] = frobenius_system_json(psi_tR, u2);
        // S^-1(a) = (lambda* <- a) -> l
        Mat<K> Sinv = operator_matrix<K>(f, n, n, [&](const Vec<K>& a) { return F_star(lam * lm(a), ell); });
        rep.add("antipode_inverse_from_integral", Sinv == *S_inv);
      } else {
        rep.add("antipode_bijective", false);
      }
      cert["systems"] = systems;

      // l |-> lambda*(s_L(l) -) is an isomorphism L -> L(A^*)
      Mat<K> kappa_inv = operator_matrix<K>(f, mL, LsA.dim(), [&](const Vec<K>& l) {
        Vec<K> w = (lam * lm(c.sL() * l)).a;
        return LsA.contains(w) ? LsA.coords(w) : zeros<K>(f, LsA.dim());
      });
      bool rank_one = kappa_inv.rows == kappa_inv.cols && hopfalg::inverse(kappa_inv).has_value();
      rep.add("rank_one_generator", rank_one);
      cert["rank_one_generator"] = rank_one;
    }
  } else if (nd.decision == Decision::No) {
    cert["vanishing"] = nd.method == "shape" ? "F* is not square" : "determinant vanishes on the whole grid";
  }
  F.certificate = cert;
  return F;
}

}  // namespace hopfalg
