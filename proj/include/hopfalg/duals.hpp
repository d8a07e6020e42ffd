#pragma once

#include "hopfalgebroid.hpp"

namespace hopfalg {

// Functionals A -> B are m x n matrices, flattened row-major (index r*n + x).
template <class K>
Mat<K> unflat(const Field& f, const Vec<K>& v, size_t m, size_t n) {
  Mat<K> M(f, m, n);
  M.a = v;
  return M;
}

// Matrix of a linear map given by its action on basis vectors.
template <class K, class F>
Mat<K> operator_matrix(const Field& f, size_t in_dim, size_t out_dim, F fn) {
  Mat<K> M(f, out_dim, in_dim);
  for (size_t j = 0; j < in_dim; ++j) M.set_col(j, fn(unit_vec<K>(f, in_dim, j)));
  return M;
}

template <class K>
Mat<K> stack_rows(const Field& f, size_t cols, const std::vector<Mat<K>>& blocks) {
  Mat<K> r(f, 0, cols);
  for (auto& b : blocks) r = vstack(r, b);
  return r;
}

// _*A (StarA) and A_* (AStar) are built from the left bialgebroid,
// A^* (AUpperStar) and ^*A (UpperStarA) from the right one.
enum class DualKind { StarA, AStar, AUpperStar, UpperStarA };

inline const char* dual_name(DualKind k) {
  switch (k) {
    case DualKind::StarA: return "_*A";
    case DualKind::AStar: return "A_*";
    case DualKind::AUpperStar: return "A^*";
    case DualKind::UpperStarA: return "^*A";
  }
  return "";
}

// Base linearity conditions cutting the dual out of Hom_k(A, B).
template <class K>
Vec<K> dual_membership_residual(const BialgebroidData<K>& d, DualKind which, const Vec<K>& phi_flat) {
  size_t n = d.n(), m = d.m();
  Field f = d.A.field();
  Mat<K> phi = unflat(f, phi_flat, m, n);
  Vec<K> out;
  out.reserve(m * n * m);
  for (size_t b = 0; b < m; ++b) {
    Mat<K> lhs, rhs;
    switch (which) {
      case DualKind::StarA:  // phi(s(b)a) = b phi(a)
        lhs = phi * d.A.left_mult(d.s.col(b));
        rhs = d.B.left_mult(d.B.e(b)) * phi;
        break;
      case DualKind::AStar:  // phi(t(b)a) = phi(a) b
        lhs = phi * d.A.left_mult(d.t.col(b));
        rhs = d.B.right_mult(d.B.e(b)) * phi;
        break;
      case DualKind::AUpperStar:  // phi(a s(b)) = phi(a) b
        lhs = phi * d.A.right_mult(d.s.col(b));
        rhs = d.B.right_mult(d.B.e(b)) * phi;
        break;
      case DualKind::UpperStarA:  // phi(a t(b)) = b phi(a)
        lhs = phi * d.A.right_mult(d.t.col(b));
        rhs = d.B.left_mult(d.B.e(b)) * phi;
        break;
    }
    Mat<K> diff = lhs - rhs;
    out.insert(out.end(), diff.a.begin(), diff.a.end());
  }
  return out;
}

template <class K>
Mat<K> dual_membership_matrix(const BialgebroidData<K>& d, DualKind which) {
  size_t n = d.n(), m = d.m();
  return operator_matrix<K>(d.A.field(), m * n, m * n * m,
                            [&](const Vec<K>& v) { return dual_membership_residual(d, which, v); });
}

// a <- phi for _*A: t(phi(a_(2))) a_(1)
template <class K>
Vec<K> harpoon_star_a(const BialgebroidData<K>& d, const Mat<K>& phi, const Vec<K>& a) {
  size_t n = d.n();
  Vec<K> g = d.gamma * a, r = zeros<K>(d.A.field(), n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!is_zero(g[i * n + j])) axpy(r, g[i * n + j], d.A.mul(d.t * phi.col(j), d.A.e(i)));
  return r;
}
// a <- phi for A_*: s(phi(a_(1))) a_(2)
template <class K>
Vec<K> harpoon_a_star(const BialgebroidData<K>& d, const Mat<K>& phi, const Vec<K>& a) {
  size_t n = d.n();
  Vec<K> g = d.gamma * a, r = zeros<K>(d.A.field(), n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!is_zero(g[i * n + j])) axpy(r, g[i * n + j], d.A.mul(d.s * phi.col(i), d.A.e(j)));
  return r;
}
// phi -> a for A^* (right bialgebroid d): a^(2) t(phi(a^(1)))
template <class K>
Vec<K> harpoon_upper_star(const BialgebroidData<K>& d, const Mat<K>& phi, const Vec<K>& a) {
  size_t n = d.n();
  Vec<K> g = d.gamma * a, r = zeros<K>(d.A.field(), n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!is_zero(g[i * n + j])) axpy(r, g[i * n + j], d.A.mul(d.A.e(j), d.t * phi.col(i)));
  return r;
}
// phi -> a for ^*A (right bialgebroid d): a^(1) s(phi(a^(2)))
template <class K>
Vec<K> harpoon_star_upper(const BialgebroidData<K>& d, const Mat<K>& phi, const Vec<K>& a) {
  size_t n = d.n();
  Vec<K> g = d.gamma * a, r = zeros<K>(d.A.field(), n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!is_zero(g[i * n + j])) axpy(r, g[i * n + j], d.A.mul(d.A.e(i), d.s * phi.col(j)));
  return r;
}

// The harpoon action used in the product of the given dual.
template <class K>
Vec<K> dual_harpoon(const BialgebroidData<K>& d, DualKind which, const Mat<K>& phi, const Vec<K>& a) {
  switch (which) {
    case DualKind::StarA: return harpoon_star_a(d, phi, a);
    case DualKind::AStar: return harpoon_a_star(d, phi, a);
    case DualKind::AUpperStar: return harpoon_upper_star(d, phi, a);
    case DualKind::UpperStarA: return harpoon_star_upper(d, phi, a);
  }
  return {};
}

// (phi psi)(a) = psi(a <- phi) on _*A and A_*; phi(psi -> a) on A^* and ^*A.
template <class K>
Mat<K> dual_product(const BialgebroidData<K>& d, DualKind which, const Mat<K>& phi, const Mat<K>& psi) {
  size_t n = d.n();
  Mat<K> r(d.A.field(), d.m(), n);
  bool left = which == DualKind::StarA || which == DualKind::AStar;
  for (size_t a = 0; a < n; ++a)
    r.set_col(a, left ? psi * dual_harpoon(d, which, phi, d.A.e(a)) : phi * dual_harpoon(d, which, psi, d.A.e(a)));
  return r;
}

template <class K>
struct DualAlgebra {
  DualKind which;
  size_t n = 0, m = 0;
  Subspace<K> space;  // inside Hom_k(A, B), flattened
  FinAlgebra<K> alg;  // in the RREF basis of space
  Mat<K> source, target;  // B -> alg
  Variance source_variance, target_variance;

  size_t dim() const { return space.dim(); }
  Mat<K> functional(const Vec<K>& coords) const { return unflat(space.field, space.combine(coords), m, n); }
  bool contains(const Mat<K>& phi) const { return space.contains(phi.a); }
  Vec<K> coords(const Mat<K>& phi) const {
    if (!contains(phi)) throw std::logic_error(std::string("functional not in ") + dual_name(which));
    return space.coords(phi.a);
  }
};

// Source: phi |-> pi(-)b or b pi(-); target: pi(- s(b)), pi(- t(b)), pi(s(b) -), pi(t(b) -).
// The variance of each is determined and recorded, not assumed.
template <class K>
DualAlgebra<K> dual_algebra(const BialgebroidData<K>& d, DualKind which) {
  size_t n = d.n(), m = d.m();
  Field f = d.A.field();
  DualAlgebra<K> D;
  D.which = which;
  D.n = n;
  D.m = m;
  D.space = kernel(dual_membership_matrix(d, which));
  size_t k = D.dim();
  std::vector<std::vector<Vec<K>>> mult(k, std::vector<Vec<K>>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      Mat<K> p = dual_product(d, which, D.functional(unit_vec<K>(f, k, i)), D.functional(unit_vec<K>(f, k, j)));
      mult[i][j] = D.coords(p);
    }
  D.alg = mk_algebra(f, k, mult, D.coords(d.pi));

  D.source = Mat<K>(f, k, m);
  D.target = Mat<K>(f, k, m);
  for (size_t b = 0; b < m; ++b) {
    Mat<K> src, tgt;
    switch (which) {
      case DualKind::StarA:
        src = d.B.right_mult(d.B.e(b)) * d.pi;
        tgt = d.pi * d.A.right_mult(d.s.col(b));
        break;
      case DualKind::AStar:
        src = d.B.left_mult(d.B.e(b)) * d.pi;
        tgt = d.pi * d.A.right_mult(d.t.col(b));
        break;
      case DualKind::AUpperStar:
        src = d.B.left_mult(d.B.e(b)) * d.pi;
        tgt = d.pi * d.A.left_mult(d.s.col(b));
        break;
      case DualKind::UpperStarA:
        src = d.B.right_mult(d.B.e(b)) * d.pi;
        tgt = d.pi * d.A.left_mult(d.t.col(b));
        break;
    }
    D.source.set_col(b, D.coords(src));
    D.target.set_col(b, D.coords(tgt));
  }
  auto variance = [&](const Mat<K>& map) {
    if (is_alg_map(map, d.B, D.alg, Variance::Homomorphism)) return Variance::Homomorphism;
    if (is_alg_map(map, d.B, D.alg, Variance::AntiHomomorphism)) return Variance::AntiHomomorphism;
    throw std::logic_error(std::string("inclusion into ") + dual_name(which) + " is not an algebra map");
  };
  D.source_variance = variance(D.source);
  D.target_variance = variance(D.target);
  return D;
}

// phi |-> phi(1_A) on dual coordinates.
template <class K>
Mat<K> evaluate_at_one(const DualAlgebra<K>& D, const FinAlgebra<K>& A) {
  Field f = A.field();
  return operator_matrix<K>(f, D.dim(), D.m, [&](const Vec<K>& c) { return D.functional(c) * A.one(); });
}

template <class K>
Report dual_algebra_report(const DualAlgebra<K>& D, const FinAlgebra<K>& A, const Vec<K>& pi_coords) {
  Report rep;
  rep.title = std::string("dual algebra ") + dual_name(D.which);
  rep.add("unit_is_pi", D.alg.one() == pi_coords);
  Mat<K> ev = evaluate_at_one(D, A);
  Mat<K> id = Mat<K>::identity(A.field(), D.m);
  rep.add("source_retraction", ev * D.source == id);
  rep.add("target_retraction", ev * D.target == id);
  return rep;
}

// sigma: _*A -> ^*A, phi |-> pi_R(- <- phi); chi: A^* -> A_*, phi |-> pi_L(phi -> -).
template <class K>
struct SigmaChi {
  DualAlgebra<K> star_a, a_star, a_upper, upper_a;
  Mat<K> sigma, sigma_inv, chi, chi_inv;  // in dual coordinates
};

template <class K>
SigmaChi<K> sigma_chi(const HopfContext<K>& c) {
  const auto& L = c.data().left;
  const auto& R = c.data().right;
  size_t n = c.n();
  Field f = c.field();
  SigmaChi<K> sc{dual_algebra(L, DualKind::StarA), dual_algebra(L, DualKind::AStar),
                 dual_algebra(R, DualKind::AUpperStar), dual_algebra(R, DualKind::UpperStarA), {}, {}, {}, {}};
  auto build = [&](const DualAlgebra<K>& from, const DualAlgebra<K>& to, const Mat<K>& base_map, auto harpoon,
                   const BialgebroidData<K>& side) {
    return operator_matrix<K>(f, from.dim(), to.dim(), [&](const Vec<K>& x) {
      Mat<K> phi = from.functional(x), out(f, to.m, n);
      for (size_t a = 0; a < n; ++a) out.set_col(a, base_map * harpoon(side, phi, c.e(a)));
      return to.coords(out);
    });
  };
  auto hs = [](const BialgebroidData<K>& d, const Mat<K>& p, const Vec<K>& a) { return harpoon_star_a(d, p, a); };
  auto hl = [](const BialgebroidData<K>& d, const Mat<K>& p, const Vec<K>& a) { return harpoon_a_star(d, p, a); };
  auto hu = [](const BialgebroidData<K>& d, const Mat<K>& p, const Vec<K>& a) { return harpoon_upper_star(d, p, a); };
  auto hsu = [](const BialgebroidData<K>& d, const Mat<K>& p, const Vec<K>& a) { return harpoon_star_upper(d, p, a); };
  sc.sigma = build(sc.star_a, sc.upper_a, c.piR(), hs, L);
  sc.sigma_inv = build(sc.upper_a, sc.star_a, c.piL(), hsu, R);
  sc.chi = build(sc.a_upper, sc.a_star, c.piL(), hu, R);
  sc.chi_inv = build(sc.a_star, sc.a_upper, c.piR(), hl, L);
  return sc;
}

template <class K>
Report sigma_chi_report(const HopfContext<K>& c, const SigmaChi<K>& sc) {
  Report rep;
  rep.title = "sigma and chi";
  const auto& L = c.data().left;
  const auto& R = c.data().right;
  size_t n = c.n();
  Field f = c.field();
  auto anti = [&](const Mat<K>& m, const DualAlgebra<K>& a, const DualAlgebra<K>& b) {
    try {
      check_alg_map(m, a.alg, b.alg, Variance::AntiHomomorphism);
      return Witness{};
    } catch (const AxiomFailure& e) {
      return Witness{e.witness};
    }
  };
  rep.add("sigma_anti_homomorphism", anti(sc.sigma, sc.star_a, sc.upper_a));
  rep.add("chi_anti_homomorphism", anti(sc.chi, sc.a_upper, sc.a_star));
  rep.add("sigma_inverse", sc.sigma * sc.sigma_inv == Mat<K>::identity(f, sc.upper_a.dim()) &&
                               sc.sigma_inv * sc.sigma == Mat<K>::identity(f, sc.star_a.dim()));
  rep.add("chi_inverse", sc.chi * sc.chi_inv == Mat<K>::identity(f, sc.a_star.dim()) &&
                             sc.chi_inv * sc.chi == Mat<K>::identity(f, sc.a_upper.dim()));
  // a <- phi = sigma(phi) -> a  and  phi -> a = a <- chi(phi)
  rep.add("sigma_intertwines", scan2(sc.star_a.dim(), n, [&](size_t i, size_t a) {
            Mat<K> phi = sc.star_a.functional(unit_vec<K>(f, sc.star_a.dim(), i));
            Mat<K> sphi = sc.upper_a.functional(sc.sigma.col(i));
            return harpoon_star_a(L, phi, c.e(a)) == harpoon_star_upper(R, sphi, c.e(a));
          }));
  rep.add("chi_intertwines", scan2(sc.a_upper.dim(), n, [&](size_t i, size_t a) {
            Mat<K> phi = sc.a_upper.functional(unit_vec<K>(f, sc.a_upper.dim(), i));
            Mat<K> cphi = sc.a_star.functional(sc.chi.col(i));
            return harpoon_upper_star(R, phi, c.e(a)) == harpoon_a_star(L, cphi, c.e(a));
          }));
  return rep;
}

}  // namespace hopfalg
