#pragma once

#include <map>
#include <utility>
#include <vector>

#include "vermalab/enright/projective.hpp"

namespace vermalab::enright {

/// Class in the split Grothendieck group: (i, k) -> multiplicity of M_i ⊠ N_k.
using GrothendieckVector = std::map<std::pair<int, int>, Integer>;

/// [F] on the class of M_i ⊠ N_k: Q_+ acts on both factors.
inline GrothendieckVector formal_F(int n, int i, int k) {
  GrothendieckVector out;
  if (i < n) out[{i + 1, k}] += i + 1;
  out[{i, k + 1}] += 1;
  return out;
}

/// [-E] on the class of M_i ⊠ N_k, as a formal Z-combination.
inline GrothendieckVector formal_minus_E(int n, int i, int k) {
  GrothendieckVector out;
  if (i > 0) out[{i - 1, k}] -= n - i + 1;
  if (k > 1) out[{i, k - 1}] += static_cast<long>(k) * (k - 1);
  return out;
}

inline bool is_object_class(const GrothendieckVector& g) {
  for (const auto& [ik, x] : g)
    if (x < 0) return false;
  return true;
}

inline GrothendieckVector from_coeffs(const TensorCoeffs& c) {
  GrothendieckVector g;
  for (const auto& [ik, x] : c) {
    if (!is_integer(x)) throw VerificationError("from_coeffs: non-integral multiplicity");
    g[ik] = x.get_num();
  }
  return g;
}

struct DecategorifyReport {
  int n = 0;
  int depth = 0;
  bool bijective = false;
  bool intertwinesF = false;
  bool intertwinesMinusE = false;
  bool uClassesMatch = false;   // [U_s] ↦ u_s for s ∈ I' ∪ {n}
  bool aClassesMatch = false;   // [A_{-r-2}] ↦ a_{-r-2} for r ∈ I'
  bool classesNonnegative = false;
  bool passed() const {
    return bijective && intertwinesF && intertwinesMinusE && uClassesMatch && aClassesMatch && classesNonnegative;
  }
};

/// Images under (i, k) ↦ v_i⊗w_k, as a slice vector (extended rows allowed).
inline QVec grothendieck_image(const sl2::TruncatedModule& m, const GrothendieckVector& g) {
  QVec v(m.extended_dim());
  for (const auto& [ik, x] : g) v.add(m.at(sl2::Tensor{ik.first, ik.second}), Rational(x));
  return v;
}

inline DecategorifyReport decategorify(int n, int depth) {
  const auto m = tensor_module(n, depth);
  DecategorifyReport rep;
  rep.n = n;
  rep.depth = depth;

  // (i, k) ↦ v_i⊗w_k sends the slice classes onto distinct basis vectors
  std::vector<bool> hit(m.dim(), false);
  std::size_t count = 0;
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= depth; ++k) {
      const auto j = m.find(sl2::Tensor{i, k});
      if (j && *j < m.dim() && !hit[*j]) {
        hit[*j] = true;
        ++count;
      }
    }
  rep.bijective = count == m.dim();

  rep.intertwinesF = rep.intertwinesMinusE = true;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    const auto& t = std::get<sl2::Tensor>(m.basis[j]);
    if (!(grothendieck_image(m, formal_F(n, t.i, t.k)) == m.F.column(j))) rep.intertwinesF = false;
    if (!(grothendieck_image(m, formal_minus_E(n, t.i, t.k)) == Rational(-1) * m.E.column(j)))
      rep.intertwinesMinusE = false;
  }

  const auto sets = index_sets(n, 0);
  std::vector<int> hws = sets.Iprime;
  hws.push_back(n);
  rep.uClassesMatch = rep.aClassesMatch = rep.classesNonnegative = true;
  auto in_slice = [&](const TensorCoeffs& c) {
    for (const auto& [ik, x] : c)
      if (ik.second > depth) return false;
    return true;
  };
  for (int s : hws) {
    const auto hw = highest_weight_vector(n, s);
    // [U_s] has multiplicities p_j at (j, (n-s)/2 - j)
    GrothendieckVector U;
    for (std::size_t j = 0; j < hw.pList.size(); ++j)
      U[{static_cast<int>(j), (n - s) / 2 - static_cast<int>(j)}] = hw.pList[j].get_num();
    if (!is_object_class(U)) rep.classesNonnegative = false;
    if (!in_slice(hw.pNormalized())) continue;
    const QVec u = grothendieck_image(m, U);
    if (!(u == grothendieck_image(m, from_coeffs(hw.pNormalized())))) rep.uClassesMatch = false;
    QVec u_slice(m.dim());
    for (const auto& [i, x] : u.entries()) u_slice.set(i, x);
    if (!m.E.apply(u_slice).is_zero()) rep.uClassesMatch = false;
  }
  for (int r : sets.Iprime) {
    const auto pg = projective_generator(n, r);
    GrothendieckVector A;
    const int top = (n + r) / 2;
    for (int j = 0; j <= top; ++j) A[{j, top + 1 - j}] = pg.finalCoefficients[j].get_num();
    if (!is_object_class(A)) rep.classesNonnegative = false;
    if (!in_slice(pg.final_vector())) continue;
    // the image must be a generalized Casimir vector of rank 2
    const int mu = -r - 2;
    if (mu < n - 2 * depth) continue;
    const auto idx = m.weight_space(mu);
    const QVec a = restrict_to(grothendieck_image(m, A), idx);
    const QMat sh = shifted(casimir_on_weight(m, mu), pg.c);
    if (sh.apply(a).is_zero() || !sh.apply(sh.apply(a)).is_zero()) rep.aClassesMatch = false;
  }
  return rep;
}

}  // namespace vermalab::enright
