#pragma once

#include "duals.hpp"

#include <functional>
#include <random>
#include <tuple>

namespace hopfalg {

// L_in: L(A)   R_in: R(A)   L_on_sstar: L(A^*)   L_on_starA: L(^*A)
// R_on_star: R(_*A)   R_on_lower: R(A_*)
enum class IntegralKind { L_in, R_in, L_on_sstar, L_on_starA, R_on_star, R_on_lower };

inline const char* integral_name(IntegralKind k) {
  switch (k) {
    case IntegralKind::L_in: return "L(A)";
    case IntegralKind::R_in: return "R(A)";
    case IntegralKind::L_on_sstar: return "L(A^*)";
    case IntegralKind::L_on_starA: return "L(^*A)";
    case IntegralKind::R_on_star: return "R(_*A)";
    case IntegralKind::R_on_lower: return "R(A_*)";
  }
  return "";
}

inline constexpr IntegralKind all_integral_kinds[] = {IntegralKind::L_in,       IntegralKind::R_in,
                                                      IntegralKind::L_on_sstar, IntegralKind::L_on_starA,
                                                      IntegralKind::R_on_star,  IntegralKind::R_on_lower};

template <class K>
struct IntegralSpace {
  IntegralKind which;
  Subspace<K> basis;
};

// Functionals on the left side live in Hom(A, L), on the right side in Hom(A, R).
template <class K>
size_t integral_ambient(const HopfContext<K>& c, IntegralKind k) {
  switch (k) {
    case IntegralKind::L_in:
    case IntegralKind::R_in: return c.n();
    case IntegralKind::L_on_sstar:
    case IntegralKind::L_on_starA: return c.mR() * c.n();
    default: return c.mL() * c.n();
  }
}

inline DualKind integral_dual(IntegralKind k) {
  switch (k) {
    case IntegralKind::L_on_sstar: return DualKind::AUpperStar;
    case IntegralKind::L_on_starA: return DualKind::UpperStarA;
    case IntegralKind::R_on_star: return DualKind::StarA;
    default: return DualKind::AStar;
  }
}

template <class K>
void append(Vec<K>& out, const Vec<K>& v) {
  out.insert(out.end(), v.begin(), v.end());
}

// Defining linear condition; x is in the kernel iff it is an integral of the given kind.
template <class K>
Vec<K> integral_residual(const HopfContext<K>& c, IntegralKind k, const Vec<K>& x) {
  size_t n = c.n();
  Field f = c.field();
  Vec<K> out;
  if (k == IntegralKind::L_in || k == IntegralKind::R_in) {
    for (size_t a = 0; a < n; ++a) {
      if (k == IntegralKind::L_in)
        append(out, c.mul(c.e(a), x) - c.mul(c.sL() * (c.piL() * c.e(a)), x));
      else
        append(out, c.mul(x, c.e(a)) - c.mul(x, c.sR() * (c.piR() * c.e(a))));
    }
    return out;
  }
  bool right_side = k == IntegralKind::L_on_sstar || k == IntegralKind::L_on_starA;
  const BialgebroidData<K>& d = right_side ? c.data().right : c.data().left;
  out = dual_membership_residual(d, integral_dual(k), x);
  Mat<K> phi = unflat(f, x, d.m(), n);
  for (size_t a = 0; a < n; ++a) {
    Vec<K> ea = c.e(a), pa = phi * ea;
    switch (k) {
      case IntegralKind::L_on_sstar: append(out, harpoon_upper_star(d, phi, ea) - d.s * pa); break;
      case IntegralKind::L_on_starA: append(out, harpoon_star_upper(d, phi, ea) - d.t * pa); break;
      case IntegralKind::R_on_star: append(out, harpoon_star_a(d, phi, ea) - d.s * pa); break;
      default: append(out, harpoon_a_star(d, phi, ea) - d.t * pa); break;
    }
  }
  return out;
}

template <class K, class F>
Subspace<K> solution_space(const Field& f, size_t dim, F residual) {
  if (dim == 0) return Subspace<K>::zero(f, 0);
  size_t out = residual(zeros<K>(f, dim)).size();
  return kernel(operator_matrix<K>(f, dim, out, residual));
}

template <class K>
IntegralSpace<K> integral_space(const HopfContext<K>& c, IntegralKind k) {
  return {k, solution_space<K>(c.field(), integral_ambient(c, k),
                               [&](const Vec<K>& x) { return integral_residual(c, k, x); })};
}

template <class K>
struct IntegralSpaces {
  IntegralSpace<K> L_in, R_in, L_on_sstar, L_on_starA, R_on_star, R_on_lower;

  const IntegralSpace<K>& get(IntegralKind k) const {
    switch (k) {
      case IntegralKind::L_in: return L_in;
      case IntegralKind::R_in: return R_in;
      case IntegralKind::L_on_sstar: return L_on_sstar;
      case IntegralKind::L_on_starA: return L_on_starA;
      case IntegralKind::R_on_star: return R_on_star;
      default: return R_on_lower;
    }
  }
};

template <class K>
IntegralSpaces<K> all_integral_spaces(const HopfContext<K>& c) {
  return {integral_space(c, IntegralKind::L_in),       integral_space(c, IntegralKind::R_in),
          integral_space(c, IntegralKind::L_on_sstar), integral_space(c, IntegralKind::L_on_starA),
          integral_space(c, IntegralKind::R_on_star),  integral_space(c, IntegralKind::R_on_lower)};
}

// An equivalent characterization of one integral kind, as a linear residual
// on the same ambient space.
template <class K>
struct Characterization {
  std::string id;
  IntegralKind kind;
  std::function<Vec<K>(const Vec<K>&)> residual;
};

template <class K>
std::vector<Characterization<K>> scholium_characterizations(const HopfContext<K>& c) {
  size_t n = c.n();
  Field f = c.field();
  const auto& A = c.A();
  const auto& Ld = c.data().left;
  const auto& Rd = c.data().right;
  auto S = [&c](const Vec<K>& x) { return c.S() * x; };
  std::vector<Characterization<K>> cs;

  // Integrals in A. The tensor products are A^R (x)^R A, A^R (x)_R A, A_L (x)_L A, A^L (x)_L A.
  auto T1c = std::make_shared<BalancedTensor<K>>(f, n, n, balancing(A, Rd.s, Rd.t, ModKind::UpperRight, ModKind::LowerLeft));
  auto T2c = std::make_shared<BalancedTensor<K>>(f, n, n, balancing(A, Ld.s, Ld.t, ModKind::UpperRight, ModKind::LowerLeft));
  Mat<K> id = c.id();
  cs.push_back({"1.b", IntegralKind::L_in, [&c, S, id, n](const Vec<K>& l) {
                  Vec<K> out, g = c.gR() * l;
                  for (size_t a = 0; a < n; ++a)
                    append(out, c.RR().proj(apply_kron(c.A().left_mult(S(c.e(a))), id, g) -
                                            apply_kron(id, c.A().left_mult(c.e(a)), g)));
                  return out;
                }});
  cs.push_back({"1.c", IntegralKind::L_in, [&c, T1c, id, n](const Vec<K>& l) {
                  Vec<K> out, g = apply_kron(id, c.S(), c.gR() * l);
                  for (size_t a = 0; a < n; ++a)
                    append(out, T1c->proj(apply_kron(c.A().left_mult(c.e(a)), id, g) -
                                          apply_kron(id, c.A().right_mult(c.e(a)), g)));
                  return out;
                }});
  cs.push_back({"2.b", IntegralKind::R_in, [&c, S, id, n](const Vec<K>& p) {
                  Vec<K> out, g = c.gL() * p;
                  for (size_t a = 0; a < n; ++a)
                    append(out, c.LL().proj(apply_kron(id, c.A().right_mult(S(c.e(a))), g) -
                                            apply_kron(c.A().right_mult(c.e(a)), id, g)));
                  return out;
                }});
  cs.push_back({"2.c", IntegralKind::R_in, [&c, T2c, id, n](const Vec<K>& p) {
                  Vec<K> out, g = apply_kron(c.S(), id, c.gL() * p);
                  for (size_t a = 0; a < n; ++a)
                    append(out, T2c->proj(apply_kron(id, c.A().right_mult(c.e(a)), g) -
                                          apply_kron(c.A().left_mult(c.e(a)), id, g)));
                  return out;
                }});

  // Integrals on A. b-type: a transform lands in another integral space.
  auto b_type = [&](std::string id_, IntegralKind src, DualKind src_dual, const BialgebroidData<K>& sd,
                    IntegralKind tgt, Mat<K> post) {
    size_t ms = sd.m();
    cs.push_back({id_, src, [&c, &sd, src_dual, tgt, post, ms, n](const Vec<K>& x) {
                    Vec<K> out = dual_membership_residual(sd, src_dual, x);
                    Mat<K> phi = unflat(c.field(), x, ms, n);
                    append(out, integral_residual(c, tgt, (post * phi).a));
                    return out;
                  }});
  };
  b_type("dual.1.b", IntegralKind::R_on_star, DualKind::StarA, Ld, IntegralKind::L_on_starA, c.piR() * c.sL());
  b_type("dual.2.b", IntegralKind::R_on_lower, DualKind::AStar, Ld, IntegralKind::L_on_sstar, c.piR() * c.tL());
  b_type("dual.3.b", IntegralKind::L_on_sstar, DualKind::AUpperStar, Rd, IntegralKind::R_on_lower, c.piL() * c.sR());
  b_type("dual.4.b", IntegralKind::L_on_starA, DualKind::UpperStarA, Rd, IntegralKind::R_on_star, c.piL() * c.tR());

  // c-type: two-variable identities, one residual block per pair (a, b).
  // The functional is applied once to every product it needs; each side is then
  // a sum over a coproduct of a fixed map applied to one of those values.
  struct Tables {
    Mat<K> P, XS, SX;  // columns e_p e_q, e_p S(e_q), S(e_p) e_q at p*n + q
    std::vector<Mat<K>> RsL, RtL, RStL, LsR, LtR, LStR;
    std::vector<std::vector<std::tuple<size_t, size_t, K>>> gL, gR;  // nonzero terms of each coproduct
  };
  auto T = std::make_shared<Tables>();
  T->P = Mat<K>(f, n, n * n);
  T->XS = T->P;
  T->SX = T->P;
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q) {
      T->P.set_col(p * n + q, A.basis_product(p, q));
      T->XS.set_col(p * n + q, c.mul(c.e(p), S(c.e(q))));
      T->SX.set_col(p * n + q, c.mul(S(c.e(p)), c.e(q)));
    }
  for (size_t j = 0; j < n; ++j) {
    T->RsL.push_back(A.right_mult(c.e(j)) * c.sL());
    T->RtL.push_back(A.right_mult(c.e(j)) * c.tL());
    T->RStL.push_back(A.right_mult(S(c.e(j))) * c.tL());
    T->LsR.push_back(A.left_mult(c.e(j)) * c.sR());
    T->LtR.push_back(A.left_mult(c.e(j)) * c.tR());
    T->LStR.push_back(A.left_mult(S(c.e(j))) * c.tR());
  }
  for (size_t a = 0; a < n; ++a) {
    T->gL.emplace_back();
    T->gR.emplace_back();
    for (size_t k = 0; k < n * n; ++k) {
      if (!is_zero(c.gL()(k, a))) T->gL.back().emplace_back(k / n, k % n, c.gL()(k, a));
      if (!is_zero(c.gR()(k, a))) T->gR.back().emplace_back(k / n, k % n, c.gR()(k, a));
    }
  }
  // sum over the terms c_ij e_i (x) e_j of c_ij out(i, j) vals[in(i, j)]
  auto side = [](Vec<K>& r, const std::vector<std::tuple<size_t, size_t, K>>& terms, const Mat<K>& vals, auto in,
                 auto out) {
    for (const auto& [i, j, cij] : terms) axpy(r, cij, out(i, j) * vals.col(in(i, j)));
  };
  auto c_type = [&](std::string id_, IntegralKind kind, DualKind dk, const BialgebroidData<K>& sd,
                    const Mat<K> Tables::*vals_src, auto body) {
    size_t ms = sd.m();
    cs.push_back({id_, kind, [&c, &sd, T, dk, ms, n, vals_src, body](const Vec<K>& x) {
                    Vec<K> out = dual_membership_residual(sd, dk, x);
                    Mat<K> vals = unflat(c.field(), x, ms, n) * ((*T).*vals_src);
                    for (size_t a = 0; a < n; ++a)
                      for (size_t b = 0; b < n; ++b) append(out, body(*T, vals, a, b));
                    return out;
                  }});
  };
  // s_L rho(a S(b_(1))) b_(2) = t_L rho(a_(2) S(b)) a_(1)
  c_type("dual.1.c", IntegralKind::R_on_star, DualKind::StarA, Ld, &Tables::XS,
         [side, n, f](const Tables& t, const Mat<K>& v, size_t a, size_t b) {
           Vec<K> r = zeros<K>(f, n);
           side(r, t.gL[b], v, [&](size_t i, size_t) { return a * n + i; },
                [&](size_t, size_t j) -> const Mat<K>& { return t.RsL[j]; });
           Vec<K> l = zeros<K>(f, n);
           side(l, t.gL[a], v, [&](size_t, size_t j) { return j * n + b; },
                [&](size_t i, size_t) -> const Mat<K>& { return t.RtL[i]; });
           return r - l;
         });
  // t_L rho(a b^(1)) S(b^(2)) = s_L rho(a_(1) b) a_(2)
  c_type("dual.2.c", IntegralKind::R_on_lower, DualKind::AStar, Ld, &Tables::P,
         [side, n, f](const Tables& t, const Mat<K>& v, size_t a, size_t b) {
           Vec<K> r = zeros<K>(f, n);
           side(r, t.gR[b], v, [&](size_t i, size_t) { return a * n + i; },
                [&](size_t, size_t j) -> const Mat<K>& { return t.RStL[j]; });
           Vec<K> l = zeros<K>(f, n);
           side(l, t.gL[a], v, [&](size_t i, size_t) { return i * n + b; },
                [&](size_t, size_t j) -> const Mat<K>& { return t.RsL[j]; });
           return r - l;
         });
  // a^(1) s_R lambda(S(a^(2)) b) = b^(2) t_R lambda(S(a) b^(1))
  c_type("dual.3.c", IntegralKind::L_on_sstar, DualKind::AUpperStar, Rd, &Tables::SX,
         [side, n, f](const Tables& t, const Mat<K>& v, size_t a, size_t b) {
           Vec<K> r = zeros<K>(f, n);
           side(r, t.gR[a], v, [&](size_t, size_t j) { return j * n + b; },
                [&](size_t i, size_t) -> const Mat<K>& { return t.LsR[i]; });
           Vec<K> l = zeros<K>(f, n);
           side(l, t.gR[b], v, [&](size_t i, size_t) { return a * n + i; },
                [&](size_t, size_t j) -> const Mat<K>& { return t.LtR[j]; });
           return r - l;
         });
  // S(a_(1)) t_R lambda(a_(2) b) = b^(1) s_R lambda(a b^(2))
  c_type("dual.4.c", IntegralKind::L_on_starA, DualKind::UpperStarA, Rd, &Tables::P,
         [side, n, f](const Tables& t, const Mat<K>& v, size_t a, size_t b) {
           Vec<K> r = zeros<K>(f, n);
           side(r, t.gL[a], v, [&](size_t, size_t j) { return j * n + b; },
                [&](size_t i, size_t) -> const Mat<K>& { return t.LStR[i]; });
           Vec<K> l = zeros<K>(f, n);
           side(l, t.gR[b], v, [&](size_t, size_t j) { return a * n + j; },
                [&](size_t i, size_t) -> const Mat<K>& { return t.LsR[i]; });
           return r - l;
         });
  return cs;
}

// One-directional consequences: S(L(A)) in R(A), S(R(A)) in L(A),
// rho o S in R(A_*) for rho in R(_*A), lambda o S in L(^*A) for lambda in L(A^*).
template <class K>
struct Transfer {
  std::string id;
  IntegralKind from, to;
  std::function<Vec<K>(const Vec<K>&)> map;
};

template <class K>
std::vector<Transfer<K>> scholium_transfers(const HopfContext<K>& c) {
  size_t n = c.n();
  std::vector<Transfer<K>> ts;
  ts.push_back({"S(L(A)) in R(A)", IntegralKind::L_in, IntegralKind::R_in, [&c](const Vec<K>& x) { return c.S() * x; }});
  ts.push_back({"S(R(A)) in L(A)", IntegralKind::R_in, IntegralKind::L_in, [&c](const Vec<K>& x) { return c.S() * x; }});
  ts.push_back({"rho o S in R(A_*)", IntegralKind::R_on_star, IntegralKind::R_on_lower, [&c, n](const Vec<K>& x) {
                  return (unflat(c.field(), x, c.mL(), n) * c.S()).a;
                }});
  ts.push_back({"lambda o S in L(^*A)", IntegralKind::L_on_sstar, IntegralKind::L_on_starA, [&c, n](const Vec<K>& x) {
                  return (unflat(c.field(), x, c.mR(), n) * c.S()).a;
                }});
  return ts;
}

template <class K>
Report scholium_report(const HopfContext<K>& c, const IntegralSpaces<K>& I) {
  Report rep;
  rep.title = "Scholia";
  for (auto& ch : scholium_characterizations(c)) {
    const Subspace<K>& sp = I.get(ch.kind).basis;
    rep.add("forward " + ch.id, scan1(sp.dim(), [&](size_t i) { return all_zero(ch.residual(sp.vec(i))); }));
    Subspace<K> alt = solution_space<K>(c.field(), sp.ambient, ch.residual);
    rep.add("converse " + ch.id, alt == sp, {}, std::string(integral_name(ch.kind)));
  }
  for (auto& t : scholium_transfers(c)) {
    const Subspace<K>& from = I.get(t.from).basis;
    const Subspace<K>& to = I.get(t.to).basis;
    rep.add(t.id, scan1(from.dim(), [&](size_t i) { return to.contains(t.map(from.vec(i))); }));
  }
  return rep;
}

template <class K, class Rng>
Vec<K> random_element(const Subspace<K>& s, Rng& rng) {
  Vec<K> coeffs;
  for (size_t i = 0; i < s.dim(); ++i) coeffs.push_back(Scalar<K>::random(s.field, rng));
  return s.combine(coeffs);
}

// Evaluates every characterization and transfer on `samples` random elements of
// each integral space, directly through the residual functions.
template <class K>
Report scholium_property_report(const HopfContext<K>& c, const IntegralSpaces<K>& I, size_t samples, uint64_t seed) {
  Report rep;
  rep.title = "Scholia on random integrals";
  std::mt19937_64 rng(seed);
  for (auto& ch : scholium_characterizations(c)) {
    const Subspace<K>& sp = I.get(ch.kind).basis;
    rep.add(ch.id, scan1(samples, [&](size_t) { return all_zero(ch.residual(random_element(sp, rng))); }),
            std::to_string(samples) + " samples of " + integral_name(ch.kind));
  }
  for (auto& t : scholium_transfers(c)) {
    const Subspace<K>& from = I.get(t.from).basis;
    const Subspace<K>& to = I.get(t.to).basis;
    rep.add(t.id, scan1(samples, [&](size_t) { return to.contains(t.map(random_element(from, rng))); }),
            std::to_string(samples) + " samples");
  }
  return rep;
}

}  // namespace hopfalg
