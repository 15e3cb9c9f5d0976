#pragma once

#include <stdexcept>
#include <vector>

#include "vermalab/enright/hwv.hpp"

namespace vermalab::enright {

/// Ω on the weight-mu space of a slice. Throws if computing fe on that space
/// would touch an overflow label, since the block would then be truncated.
inline QMat casimir_on_weight(const sl2::TruncatedModule& m, int mu) {
  const auto idx = m.weight_space(mu);
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t c = 0; c < idx.size(); ++c) pos.emplace(idx[c], c);
  QMat om(idx.size(), idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const QVec ex = m.E.column(idx[c]);
    QVec fe(m.extended_dim());
    for (const auto& [i, v] : ex.entries()) {
      if (i >= m.dim()) throw std::invalid_argument("casimir_on_weight: weight space not interior");
      fe.axpy(v, m.F.column(i));
    }
    for (const auto& [i, v] : fe.entries()) {
      auto it = pos.find(i);
      if (it == pos.end()) throw std::invalid_argument("casimir_on_weight: weight space not interior");
      om.add(it->second, c, Rational(4) * v);
    }
    om.add(c, c, Rational(mu * mu + 2 * mu));
  }
  return om;
}

inline QMat shifted(const QMat& m, const Rational& c) { return m - c * QMat::identity(m.rows()); }

/// Residuals of the β-recursion for a weight -s-2 vector on the pairs
/// (i, k) with n - 2i - 2k = -s - 2.
inline std::vector<Rational> beta_residuals(int n, int s, const TensorCoeffs& beta) {
  auto B = [&](int i, int k) {
    auto it = beta.find({i, k});
    return it == beta.end() ? Rational(0) : it->second;
  };
  std::vector<Rational> out;
  for (int i = 0; i <= n; ++i) {
    const int k = (n - 2 * i + s + 2) / 2;
    if (k < 0) continue;
    const Integer I = i, K = k, N = n;
    Rational r = B(i - 2, k + 2) * Rational((I - 1) * I * K * (K + 1) * (K + 1) * (K + 2));
    r -= B(i - 1, k + 1) * Rational(I * K * (K + 1) * (2 * I * (N + 2 - I) - (N + 2) - 2 * K * K));
    const Integer t = I * (N - I + 1) - K * (K - 1);
    r += B(i, k) * Rational(t * t - I * K * (K + 1) * (N - I + 1) - (I + 1) * (K - 1) * K * (N - I));
    r += B(i + 1, k - 1) * Rational((N - I) * (N + 2 * I * (N - I) - 2 * (K - 1) * (K - 1)));
    r += B(i + 2, k - 2) * Rational((N - I - 1) * (N - I));
    out.push_back(r);
  }
  return out;
}

inline bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

struct ProjGenRecord {
  int n = 0;
  int s = 0;
  Rational c;
  std::vector<Rational> qList;  // coefficients of a, indexed by j
  std::vector<Rational> pList;  // coefficients of u_{-s-2}, indexed by j
  Integer m;                    // minimal shift with q_j + m p_j > 0
  std::vector<Rational> finalCoefficients;
  std::size_t kernelDim = 0;
  std::size_t excessDim = 0;
  bool nilpotentSquare = false;   // (Ω-c)²a = 0
  bool notInKernel = false;       // (Ω-c)a ≠ 0
  bool betaI0Zero = false;        // no v_i⊗w_0 term
  bool boundaryMatches = false;   // β_{(n+s)/2,1} = α_{(n+s)/2,1}
  bool positive = false;          // final coefficients positive integers
  std::vector<Rational> betaResiduals;
  std::vector<Rational> omegaColumnsA;  // (Ω-c)a, in weight-space coordinates

  TensorCoeffs final_vector() const {
    TensorCoeffs out;
    const int top = (n + s) / 2;
    for (int j = 0; j <= top; ++j)
      if (sgn(finalCoefficients[j]) != 0) out.emplace(std::make_pair(j, top + 1 - j), finalCoefficients[j]);
    return out;
  }
  bool passed() const {
    return kernelDim == 1 && excessDim == 1 && nilpotentSquare && notInKernel && betaI0Zero && boundaryMatches &&
           positive && all_zero(betaResiduals);
  }
};

inline int projgen_depth(int n, int s) { return (n + s + 2) / 2 + 2; }

/// Smallest m ≥ 0 with q_j + m p_j > 0 for every j (all p_j > 0).
inline Integer minimal_shift(const std::vector<Rational>& q, const std::vector<Rational>& p) {
  Integer m = 0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (sgn(p[j]) <= 0) throw VerificationError("minimal_shift: p has a nonpositive entry");
    const Integer need = floor_div(-q[j] / p[j]) + 1;
    if (need > m) m = need;
  }
  return m;
}

/// Generator a_{-s-2} of the projective summand T_s of L_n⊗V_0.
inline ProjGenRecord projective_generator(int n, int s) {
  const auto sets = index_sets(n, 0);
  if (!sets.in_Iprime(s)) throw std::invalid_argument("projective_generator: s must lie in I'");
  const int mu = -s - 2, top = (n + s) / 2;
  const auto mod = tensor_module(n, projgen_depth(n, s));
  const auto idx = mod.weight_space(mu);

  ProjGenRecord rec;
  rec.n = n;
  rec.s = s;
  rec.c = Rational(s * (s + 2));
  const QMat A = shifted(casimir_on_weight(mod, mu), rec.c);
  const auto gk = generalized_kernel(A, 2);
  rec.kernelDim = gk.kernel.size();
  rec.excessDim = gk.excess.size();
  if (gk.excess.empty()) throw VerificationError("projective_generator: no generalized eigenvector beyond the kernel");
  if (gk.kernel.size() != 1 || gk.excess.size() != 1)
    throw VerificationError("projective_generator: unexpected Jordan structure");

  const auto low = lower_highest_weight_vector(n, s);
  const QVec u = restrict_to(to_vector(mod, low.coefficients), idx);
  if (!proportionality(gk.kernel[0], u)) throw VerificationError("projective_generator: u_{-s-2} not in ker(Ω-c)");

  // boundary position v_{top}⊗w_1
  std::size_t b = idx.size();
  for (std::size_t c = 0; c < idx.size(); ++c)
    if (mod.label(idx[c]) == sl2::BasisLabel(sl2::Tensor{top, 1})) b = c;
  if (b == idx.size()) throw VerificationError("projective_generator: boundary coefficient missing");

  QVec e = gk.excess[0];
  e.axpy(-(e.get(b) / u.get(b)), u);
  e = normalize_direction(e);
  const QVec a = e + u;

  rec.boundaryMatches = a.get(b) == u.get(b);
  const QVec Aa = A.apply(a);
  rec.notInKernel = !Aa.is_zero();
  rec.nilpotentSquare = A.apply(Aa).is_zero();
  rec.omegaColumnsA = Aa.dense();

  const TensorCoeffs a_coeffs = to_coeffs(mod, extend_from(a, idx, mod.dim()));
  rec.betaI0Zero = true;
  for (const auto& [ik, x] : a_coeffs)
    if (ik.second == 0) rec.betaI0Zero = false;
  for (int j = 0; j <= top; ++j) {
    auto it = a_coeffs.find({j, top + 1 - j});
    rec.qList.push_back(it == a_coeffs.end() ? Rational(0) : it->second);
  }
  rec.pList = low.q;
  rec.m = minimal_shift(rec.qList, rec.pList);
  rec.positive = true;
  for (int j = 0; j <= top; ++j) {
    rec.finalCoefficients.push_back(rec.qList[j] + Rational(rec.m) * rec.pList[j]);
    const auto& f = rec.finalCoefficients.back();
    if (!is_integer(f) || sgn(f) <= 0) rec.positive = false;
  }
  rec.betaResiduals = beta_residuals(n, s, rec.final_vector());
  return rec;
}

}  // namespace vermalab::enright
