#include "wmod/inner_product.hpp"

#include <cmath>

namespace wmod {

std::complex<double> inner_product(const TruncatedModule& m, const SparseVector& u,
                                   const SparseVector& v) {
  std::complex<double> s = 0.0;
  auto iu = u.coeffs().begin();
  auto iv = v.coeffs().begin();
  while (iu != u.coeffs().end() && iv != v.coeffs().end()) {
    if (iu->first < iv->first) {
      ++iu;
    } else if (iv->first < iu->first) {
      ++iv;
    } else {
      s += iu->second.to_complex() * std::conj(iv->second.to_complex()) * m.norm_sq(iu->first);
      ++iu;
      ++iv;
    }
  }
  return s;
}

AdjointDefectReport adjoint_defect(const TruncatedModule& m, double tol) {
  AdjointDefectReport rep;
  rep.tol = tol;
  const BasisWindow& win = m.window();
  int n = m.n();

  // coefficient of basis vector `target` in g . basis(pos), as a float
  auto coeff_at = [&](GeneratorId g, int pos, int target) -> std::complex<double> {
    for (const ActionTerm& t : m.action(g, pos))
      if (t.target == target) return t.coeff.to_complex();
    return 0.0;
  };

  for (int pos = 0; pos < win.size(); ++pos) {
    const MultiIndex& k = win.label(pos);

    // diagonal: H eigenvalues must be real
    for (int j = 0; j < n; ++j)
      rep.diagonal_max =
          std::max(rep.diagonal_max, std::abs(m.h_eigenvalue(j, pos).to_complex().imag()));

    // ladder pair (k, k+e_1): <F_0 e(k), e(l)> + <e(k), E_0 e(l)>
    {
      MultiIndex l = k;
      ++l[0];
      int lpos = win.position(l);
      if (lpos >= 0) {
        std::complex<double> fwd = coeff_at(GeneratorId{GenKind::F, 0}, pos, lpos) * m.norm_sq(lpos);
        std::complex<double> bwd =
            std::conj(coeff_at(GeneratorId{GenKind::E, 0}, lpos, pos)) * m.norm_sq(pos);
        rep.noncompact_max = std::max(rep.noncompact_max, std::abs(fwd + bwd));
      }
    }

    // compact pairs (k, k+e_{j+1}-e_j): <F_j e(k), e(l)> - <e(k), E_j e(l)>
    for (int j = 1; j < n; ++j) {
      if (k[j - 1] == 0) continue;
      MultiIndex l = k;
      --l[j - 1];
      ++l[j];
      int lpos = win.position(l);
      std::complex<double> fwd = coeff_at(GeneratorId{GenKind::F, j}, pos, lpos) * m.norm_sq(lpos);
      std::complex<double> bwd =
          std::conj(coeff_at(GeneratorId{GenKind::E, j}, lpos, pos)) * m.norm_sq(pos);
      rep.compact_max = std::max(rep.compact_max, std::abs(fwd - bwd));
    }
  }

  rep.max_defect = std::max({rep.noncompact_max, rep.compact_max, rep.diagonal_max});
  rep.formally_unitary = rep.max_defect <= tol;
  return rep;
}

}  // namespace wmod
