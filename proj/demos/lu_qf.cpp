// Lu's Hopf algebroid over upper triangular and full 2x2 matrices: integrals and QF verdicts.
#include <hopfalg.hpp>

#include <iostream>

using namespace hopfalg;

template <class K>
void show(const std::string& name, const FinAlgebra<K>& B) {
  HopfContext<K> c(lu_algebroid(B));
  IntegralSpaces<K> I = all_integral_spaces(c);
  SigmaChi<K> sc = sigma_chi(c);
  std::cout << name << ": dim A = " << c.n() << ", dim L(A) = " << I.L_in.basis.dim()
            << ", dim R(A) = " << I.R_in.basis.dim() << ", center of B = " << center(B).dim() << "\n";
  for (QFSide side : {QFSide::Left, QFSide::Right}) {
    QFReport<K> q = qf_decide(c, I, sc, side);
    std::cout << "  " << qf_side_name(side) << " QF: " << (q.theorem.verdict() ? "yes" : "no")
              << (q.theorem.agree() ? "" : " (conditions disagree)") << "\n";
  }
}

int main() {
  Field Q = Field::rationals();
  show("Lu(UT(2,Q))", upper_triangular2<mpq_class>(Q));
  show("Lu(M2(Q))", matrix_algebra<mpq_class>(Q, 2));
}
