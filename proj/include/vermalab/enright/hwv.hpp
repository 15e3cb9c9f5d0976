#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vermalab/enright/index_sets.hpp"
#include "vermalab/exactla/linalg.hpp"
#include "vermalab/sl2/module.hpp"

namespace vermalab::enright {

using TensorCoeffs = std::map<std::pair<int, int>, Rational>;  // (i, k) -> coefficient of v_i⊗w_k

inline sl2::TruncatedModule tensor_module(int n, int depth) { return sl2::build_tensor(n, depth, 0); }

inline QVec to_vector(const sl2::TruncatedModule& m, const TensorCoeffs& c) {
  QVec v(m.dim());
  for (const auto& [ik, x] : c) v.set(m.at(sl2::Tensor{ik.first, ik.second}), x);
  return v;
}

inline TensorCoeffs to_coeffs(const sl2::TruncatedModule& m, const QVec& v) {
  TensorCoeffs c;
  for (const auto& [i, x] : v.entries()) {
    const auto& t = std::get<sl2::Tensor>(m.label(i));
    c.emplace(std::make_pair(t.i, t.k), x);
  }
  return c;
}

/// Coordinates of v at the listed indices.
inline QVec restrict_to(const QVec& v, const std::vector<std::size_t>& idx) {
  QVec out(idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) out.set(c, v.get(idx[c]));
  return out;
}

/// Inverse of restrict_to: place v at the listed indices of a dim-vector.
inline QVec extend_from(const QVec& v, const std::vector<std::size_t>& idx, std::size_t dim) {
  QVec out(dim);
  for (const auto& [c, x] : v.entries()) out.set(idx.at(c), x);
  return out;
}

inline bool nonnegative_integral(const QVec& v) {
  for (const auto& [i, x] : v.entries())
    if (!is_integer(x) || sgn(x) < 0) return false;
  return true;
}

/// Closed-form p_0..p_{(n+r)/2}.
inline std::vector<Rational> p_coefficients(int n, int r) {
  if ((n + r) % 2 != 0) throw std::invalid_argument("p_coefficients: n + r must be even");
  if (n + r < 0) throw std::invalid_argument("p_coefficients: need (n + r)/2 >= 0");
  const int top = (n + r) / 2;
  std::vector<Rational> out;
  for (int i = 0; i <= top; ++i) {
    Integer pow4;
    mpz_ui_pow_ui(pow4.get_mpz_t(), 4, static_cast<unsigned long>(top - i));
    Rational v = Rational(pow4) * make_rational(n + r + 2, n + r - 2 * i + 2);
    for (int j = 0; j < i; ++j) v *= Rational((n + r - 2 * j) * (n + r - 2 * j));
    for (int nu = i; nu <= top - 1; ++nu) v *= Rational(n - nu);
    if (!is_integer(v) || sgn(v) <= 0) throw VerificationError("p_coefficients: value is not a positive integer");
    out.push_back(v);
  }
  return out;
}

/// Seed of the alpha recursion, 4^{(n+r)/2} · ∏_{ν=(n-r+2)/2}^{n} ν.
inline Rational alpha_seed(int n, int r) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 4, static_cast<unsigned long>((n + r) / 2));
  for (int nu = (n - r + 2) / 2; nu <= n; ++nu) v *= nu;
  return Rational(v);
}

struct HwvRecord {
  int n = 0;
  int s = 0;
  std::size_t kernelDim = 0;
  TensorCoeffs coefficients;  // primitive integer solution of e·x = 0
  std::vector<Rational> pList;
  Rational scale;  // p-normalized vector = scale · coefficients
  TensorCoeffs pNormalized() const {
    TensorCoeffs out;
    for (const auto& [ik, x] : coefficients) out.emplace(ik, scale * x);
    return out;
  }
};

/// Depth of L_n⊗V_0 needed for the weight-s space and the one above it.
inline int hwv_depth(int n, int s) { return (n - s) / 2 + 1; }

/// e restricted to the weight-mu space, as a map into the weight-(mu+2) space.
inline QMat e_on_weight(const sl2::TruncatedModule& m, int mu) {
  return m.E.select(m.weight_space(mu + 2), m.weight_space(mu));
}

inline HwvRecord highest_weight_vector(int n, int s) {
  const auto sets = index_sets(n, 0);
  if (!sets.in_Iprime(s) && !sets.in_Itripleprime(s))
    throw std::invalid_argument("highest_weight_vector: s must lie in I' or I'''");
  const auto m = tensor_module(n, hwv_depth(n, s));
  const auto cols = m.weight_space(s);
  const auto ker = nullspace(e_on_weight(m, s));

  HwvRecord rec;
  rec.n = n;
  rec.s = s;
  rec.kernelDim = ker.size();
  if (ker.size() != 1) throw VerificationError("highest_weight_vector: e-kernel at weight s is not one-dimensional");
  for (const auto& [j, x] : ker[0].entries()) {
    if (sgn(x) <= 0) throw VerificationError("highest_weight_vector: kernel vector has a nonpositive coefficient");
    const auto& t = std::get<sl2::Tensor>(m.label(cols[j]));
    rec.coefficients.emplace(std::make_pair(t.i, t.k), x);
  }

  if (s == n) {
    rec.pList = {Rational(1)};
    rec.scale = Rational(1) / rec.coefficients.begin()->second;
    if (rec.coefficients.size() != 1 || rec.coefficients.begin()->first != std::make_pair(0, 0))
      throw VerificationError("highest_weight_vector: top weight vector is not v0⊗w0");
    return rec;
  }
  rec.pList = p_coefficients(n, -s - 2);
  // p_j multiplies v_j⊗w_{(n-s)/2 - j}
  TensorCoeffs closed_c;
  for (std::size_t j = 0; j < rec.pList.size(); ++j)
    closed_c.emplace(std::make_pair(static_cast<int>(j), (n - s) / 2 - static_cast<int>(j)), rec.pList[j]);
  const QVec closed = restrict_to(to_vector(m, closed_c), cols);
  const auto ratio = proportionality(ker[0], closed);
  if (!ratio) throw VerificationError("highest_weight_vector: oracle kernel is not proportional to the closed form");
  rec.scale = *ratio;
  return rec;
}

struct AlphaCheck {
  std::vector<Rational> residuals;  // α_{i+1,k}(n-i) - α_{i,k+1}(k+1)k for k ≥ 1
  bool boundaryZero = true;         // coefficient with k = 0 vanishes
  bool seedMatches = true;          // α_{0,top} rescaled to the closed form equals the seed
  bool all_zero() const {
    for (const auto& r : residuals)
      if (sgn(r) != 0) return false;
    return boundaryZero && seedMatches;
  }
};

inline AlphaCheck alpha_recursion_check(const HwvRecord& rec) {
  AlphaCheck out;
  if (rec.s == rec.n) return out;
  const int n = rec.n, s = rec.s, r = -s - 2;
  auto alpha = [&](int i, int k) {
    auto it = rec.coefficients.find({i, k});
    return it == rec.coefficients.end() ? Rational(0) : it->second;
  };
  const int line = (n - s) / 2;  // i + k on the weight-s line
  for (int i = 0; i + 1 <= n; ++i) {
    const int k = line - i - 1;
    if (k < 1) break;
    out.residuals.push_back(alpha(i + 1, k) * (n - i) - alpha(i, k + 1) * (k + 1) * k);
  }
  if (line <= n) out.boundaryZero = sgn(alpha(line, 0)) == 0;
  out.seedMatches = rec.scale * alpha(0, line) == alpha_seed(n, r);
  return out;
}

/// f^l x on a tensor slice. Nonnegative integral input must stay nonnegative
/// integral; a violation is reported as a VerificationError.
inline QVec apply_f_power(const sl2::TruncatedModule& m, const QVec& x, int l) {
  if (l < 0) throw std::invalid_argument("apply_f_power: negative power");
  QVec y = sl2::apply_power(m, m.F, x, l);
  if (nonnegative_integral(x) && !nonnegative_integral(y))
    throw VerificationError("apply_f_power: lost nonnegative integrality");
  return y;
}

/// u_{-s-2} = f^{s+1} u_s with u_s normalized to the closed-form p list.
/// Returned as coefficients of v_j⊗w_{(n+s+2)/2-j}, j = 0..(n+s)/2.
struct LowerHwv {
  TensorCoeffs coefficients;
  std::vector<Rational> q;  // by j
  std::vector<Rational> recursionResiduals;  // q_{i+1}(n-i) - q_i(k+1)k, k = (n+s)/2 - i
  bool proportionalToClosedForm = false;     // q ∝ p_coefficients(n, s)
  bool killedByE = false;
};

inline LowerHwv lower_highest_weight_vector(int n, int s) {
  const auto rec = highest_weight_vector(n, s);
  const int top = (n + s) / 2;
  const auto m = tensor_module(n, top + 2);
  const QVec u = apply_f_power(m, to_vector(m, rec.pNormalized()), s + 1);
  LowerHwv out;
  out.coefficients = to_coeffs(m, u);
  for (int j = 0; j <= top; ++j) {
    auto it = out.coefficients.find({j, top + 1 - j});
    out.q.push_back(it == out.coefficients.end() ? Rational(0) : it->second);
  }
  for (int i = 0; i < top; ++i) {
    const int k = top - i;
    out.recursionResiduals.push_back(out.q[i + 1] * (n - i) - out.q[i] * (k + 1) * k);
  }
  const auto closed = p_coefficients(n, s);
  QVec qa(out.q.size(), out.q), pa(closed.size(), closed);
  out.proportionalToClosedForm = proportionality(pa, qa).has_value();
  out.killedByE = e_on_weight(m, -s - 2).apply(restrict_to(u, m.weight_space(-s - 2))).is_zero();
  return out;
}

}  // namespace vermalab::enright
