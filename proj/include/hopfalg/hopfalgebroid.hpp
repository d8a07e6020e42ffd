#pragma once

#include "bialgebroid.hpp"

namespace hopfalg {

// left = (A, L, s_L, t_L, gamma_L, pi_L), right = (A, R, s_R, t_R, gamma_R, pi_R), antipode S.
template <class K>
struct HopfAlgebroidData {
  BialgebroidData<K> left, right;
  Mat<K> S;

  const FinAlgebra<K>& A() const { return left.A; }
  size_t n() const { return left.n(); }
  const Field& field() const { return left.A.field(); }
  bool operator==(const HopfAlgebroidData&) const = default;
};

// A^R (x)^R A: x s_R(r) (x) y - x (x) y t_R(r)
template <class K>
Balancing<K> right_balancing(const BialgebroidData<K>& r) {
  return balancing(r.A, r.s, r.t, ModKind::UpperRight, ModKind::UpperLeft);
}

template <class K>
HopfAlgebroidData<K> op_cop(const HopfAlgebroidData<K>& h) {
  return {cop(op(h.right)), cop(op(h.left)), h.S};
}
// Needs the inverse antipode.
template <class K>
HopfAlgebroidData<K> cop(const HopfAlgebroidData<K>& h, const Mat<K>& S_inv) {
  return {cop(h.left), cop(h.right), S_inv};
}
template <class K>
HopfAlgebroidData<K> op(const HopfAlgebroidData<K>& h, const Mat<K>& S_inv) {
  return {op(h.right), op(h.left), S_inv};
}

// Shared derived data for a Hopf algebroid: the two coproduct targets and
// frequently used maps on basis elements.
template <class K>
class HopfContext {
 public:
  explicit HopfContext(HopfAlgebroidData<K> h)
      : h_(std::move(h)),
        LL_(field(), n(), n(), left_balancing(h_.left)),
        RR_(field(), n(), n(), right_balancing(h_.right)) {}

  const HopfAlgebroidData<K>& data() const { return h_; }
  const FinAlgebra<K>& A() const { return h_.left.A; }
  const FinAlgebra<K>& L() const { return h_.left.B; }
  const FinAlgebra<K>& R() const { return h_.right.B; }
  const Field& field() const { return h_.left.A.field(); }
  size_t n() const { return h_.left.n(); }
  size_t mL() const { return h_.left.m(); }
  size_t mR() const { return h_.right.m(); }

  const Mat<K>& sL() const { return h_.left.s; }
  const Mat<K>& tL() const { return h_.left.t; }
  const Mat<K>& sR() const { return h_.right.s; }
  const Mat<K>& tR() const { return h_.right.t; }
  const Mat<K>& gL() const { return h_.left.gamma; }
  const Mat<K>& gR() const { return h_.right.gamma; }
  const Mat<K>& piL() const { return h_.left.pi; }
  const Mat<K>& piR() const { return h_.right.pi; }
  const Mat<K>& S() const { return h_.S; }

  // A_L (x)_L A and A^R (x)^R A
  const BalancedTensor<K>& LL() const { return LL_; }
  const BalancedTensor<K>& RR() const { return RR_; }

  Vec<K> e(size_t i) const { return A().e(i); }
  Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const { return A().mul(x, y); }
  Vec<K> mul(const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) const { return A().mul(x, y, z); }
  Mat<K> id() const { return Mat<K>::identity(field(), n()); }

  // sum over the lift u = sum c_ij e_i (x) e_j of c_ij f(i, j), f returning a vector
  template <class F>
  Vec<K> contract(const Vec<K>& u, size_t out_dim, F f) const {
    Vec<K> r = zeros<K>(field(), out_dim);
    size_t N = n();
    for (size_t i = 0; i < N; ++i)
      for (size_t j = 0; j < N; ++j)
        if (!is_zero(u[i * N + j])) axpy(r, u[i * N + j], f(i, j));
    return r;
  }

 private:
  HopfAlgebroidData<K> h_;
  BalancedTensor<K> LL_, RR_;
};

template <class K>
Report hopf_axioms_report(const HopfContext<K>& c) {
  const auto& h = c.data();
  Report rep;
  rep.title = "Hopf algebroid axioms";
  if (!(h.left.A == h.right.A)) throw InvalidInput("left and right total algebras differ");
  if (h.S.rows != c.n() || h.S.cols != c.n()) throw InvalidInput("antipode: shape mismatch");
  rep.append(left_bialgebroid_report(h.left), "left.");
  rep.append(right_bialgebroid_report(h.right), "right.");
  if (!rep.ok()) {
    rep.skip("hopf", "underlying bialgebroids invalid");
    return rep;
  }
  size_t n = c.n(), mL = c.mL(), mR = c.mR();
  const auto& A = c.A();
  Field f = c.field();
  Mat<K> id = c.id();

  rep.add("i.sL_piL_tR", c.sL() * c.piL() * c.tR() == c.tR());
  rep.add("i.tL_piL_sR", c.tL() * c.piL() * c.sR() == c.sR());
  rep.add("i.sR_piR_tL", c.sR() * c.piR() * c.tL() == c.tL());
  rep.add("i.tR_piR_sL", c.tR() * c.piR() * c.sL() == c.sL());

  // (gamma_L (x) A) gamma_R = (A (x) gamma_R) gamma_L in A_L (x)_L A^R (x)^R A
  try {
    TripleTensor<K> T(f, {n, n, n}, left_balancing(h.left), right_balancing(h.right));
    rep.add("ii.gammaL_gammaR", scan1(n, [&](size_t a) {
              return T.equal(apply_kron(c.gL(), id, c.gR().col(a)), apply_kron(id, c.gR(), c.gL().col(a)));
            }));
  } catch (const DoesNotDescend& e) {
    rep.add("ii.gammaL_gammaR", false, {}, e.what());
  }
  // (gamma_R (x) A) gamma_L = (A (x) gamma_L) gamma_R in A^R (x)^R A_L (x)_L A
  try {
    TripleTensor<K> T(f, {n, n, n}, right_balancing(h.right), left_balancing(h.left));
    rep.add("ii.gammaR_gammaL", scan1(n, [&](size_t a) {
              return T.equal(apply_kron(c.gR(), id, c.gL().col(a)), apply_kron(id, c.gL(), c.gR().col(a)));
            }));
  } catch (const DoesNotDescend& e) {
    rep.add("ii.gammaR_gammaL", false, {}, e.what());
  }

  auto S = [&](const Vec<K>& x) { return c.S() * x; };
  rep.add("iii.S_a_tL", scan2(n, mL, [&](size_t a, size_t l) {
            return S(A.mul(c.e(a), c.tL().col(l))) == A.mul(c.sL().col(l), S(c.e(a)));
          }));
  rep.add("iii.S_tL_a", scan2(n, mL, [&](size_t a, size_t l) {
            return S(A.mul(c.tL().col(l), c.e(a))) == A.mul(S(c.e(a)), c.sL().col(l));
          }));
  rep.add("iii.S_a_tR", scan2(n, mR, [&](size_t a, size_t r) {
            return S(A.mul(c.e(a), c.tR().col(r))) == A.mul(c.sR().col(r), S(c.e(a)));
          }));
  rep.add("iii.S_tR_a", scan2(n, mR, [&](size_t a, size_t r) {
            return S(A.mul(c.tR().col(r), c.e(a))) == A.mul(S(c.e(a)), c.sR().col(r));
          }));

  rep.add("iv.S_a1_a2", scan1(n, [&](size_t a) {
            Vec<K> v = c.contract(c.gL().col(a), n, [&](size_t i, size_t j) { return A.mul(S(c.e(i)), c.e(j)); });
            return v == c.sR() * (c.piR() * c.e(a));
          }));
  rep.add("iv.a1_S_a2", scan1(n, [&](size_t a) {
            Vec<K> v = c.contract(c.gR().col(a), n, [&](size_t i, size_t j) { return A.mul(c.e(i), S(c.e(j))); });
            return v == c.sL() * (c.piL() * c.e(a));
          }));
  return rep;
}

template <class K>
HopfAlgebroidData<K> mk_hopf_algebroid(HopfAlgebroidData<K> h) {
  throw_first_failure<K>(hopf_axioms_report(HopfContext<K>(h)));
  return h;
}

template <class K>
Report derived_identities_report(const HopfContext<K>& c) {
  Report rep;
  rep.title = "derived antipode identities";
  size_t n = c.n();
  const auto& A = c.A();
  Field f = c.field();
  auto S = [&](const Vec<K>& x) { return c.S() * x; };

  rep.add("S_anti_multiplicative",
          scan2(n, n, [&](size_t a, size_t b) { return S(A.basis_product(a, b)) == A.mul(S(c.e(b)), S(c.e(a))); }));
  rep.add("S_unit", S(A.one()) == A.one());
  Mat<K> flip = flip_matrix<K>(f, n);
  rep.add("gammaL_S", scan1(n, [&](size_t a) {
            return c.LL().equal(c.gL() * S(c.e(a)), apply_kron(c.S(), c.S(), flip * c.gR().col(a)));
          }));
  rep.add("piL_S", c.piL() * c.S() == c.piL() * c.sR() * c.piR());
  rep.add("sL_piL_sR", c.sL() * c.piL() * c.sR() == c.S() * c.sR());
  rep.add("sR_S_tR", c.sR() == c.S() * c.tR());

  auto anti_iso = [&](const char* name, const Mat<K>& phi, const Mat<K>& inv) {
    bool ok = is_alg_map(phi, c.L(), c.R(), Variance::AntiHomomorphism) &&
              phi * inv == Mat<K>::identity(f, c.mR()) && inv * phi == Mat<K>::identity(f, c.mL());
    rep.add(name, ok);
  };
  anti_iso("piR_sL_anti_iso", c.piR() * c.sL(), c.piL() * c.tR());
  anti_iso("piR_tL_anti_iso", c.piR() * c.tL(), c.piL() * c.sR());
  return rep;
}

template <class K>
struct TranslationMap {
  BalancedTensor<K> source;  // ^L A (x) A_L
  Mat<K> alpha, alpha_inv;   // on quotient coordinates
};

struct NotInverse : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// alpha(a (x) b) = a_(1) (x) a_(2) b, inverse a (x) b |-> a^(1) (x) S(a^(2)) b
template <class K>
TranslationMap<K> translation_map(const HopfContext<K>& c) {
  size_t n = c.n();
  const auto& A = c.A();
  Field f = c.field();
  BalancedTensor<K> src(f, n, n, balancing(A, c.sL(), c.tL(), ModKind::UpperLeft, ModKind::LowerRight));
  auto fwd = [&](const Vec<K>& v) {
    Vec<K> r = zeros<K>(f, n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (!is_zero(v[i * n + j])) axpy(r, v[i * n + j], apply_kron(c.id(), A.right_mult(c.e(j)), c.gL().col(i)));
    return r;
  };
  auto bwd = [&](const Vec<K>& v) {
    Vec<K> r = zeros<K>(f, n * n);
    Mat<K> id = c.id();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (!is_zero(v[i * n + j]))
          axpy(r, v[i * n + j], apply_kron(id, A.right_mult(c.e(j)) * c.S(), c.gR().col(i)));
    return r;
  };
  Mat<K> alpha = descend_map<K>(fwd, src, c.LL());
  Mat<K> alpha_inv = descend_map<K>(bwd, c.LL(), src);
  if (!(alpha * alpha_inv == Mat<K>::identity(f, c.LL().dim())) ||
      !(alpha_inv * alpha == Mat<K>::identity(f, src.dim())))
    throw NotInverse("translation map and its inverse do not compose to identities");
  return {std::move(src), std::move(alpha), std::move(alpha_inv)};
}

}  // namespace hopfalg
