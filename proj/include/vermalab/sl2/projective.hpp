#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vermalab/enright/projective.hpp"
#include "vermalab/sl2/module.hpp"

namespace vermalab::sl2 {

struct TrChecks {
  bool hWeightOfA = false;         // h a = (-r-2) a
  bool eKillsAAfterRPlus2 = false; // e^{r+2} a = 0
  bool uSpanStable = false;        // span{f^k u_r} closed under e, f
  bool uSpanIsVerma = false;       // ... and carries the V_r action
  bool quotientIsVerma = false;    // modulo that span, A_k carry the V_{-r-2} action
  bool gammaConstant = false;      // e(f^k a) has the same U-coefficient for every k
  Rational gamma;                  // that coefficient (reported, not asserted)
  bool abstractFormulaWithR = false;        // displayed action with n replaced by r
  bool abstractFormulaWithAmbientN = false; // displayed action read literally
  bool all() const {
    return hWeightOfA && eKillsAAfterRPlus2 && uSpanStable && uSpanIsVerma && quotientIsVerma && gammaConstant &&
           abstractFormulaWithR;
  }
};

struct TrModule {
  TruncatedModule module;
  TrChecks checks;
};

namespace detail {

inline int tr_weight(int r, const BasisLabel& b) {
  const auto& g = std::get<ProjGen>(b);
  return g.kind == GenKind::U ? r - 2 * g.k : -r - 2 - 2 * g.k;
}

inline std::vector<BasisLabel> tr_labels(int r, std::vector<BasisLabel> v) {
  std::stable_sort(v.begin(), v.end(), [r](const BasisLabel& a, const BasisLabel& b) {
    const int wa = tr_weight(r, a), wb = tr_weight(r, b);
    if (wa != wb) return wa > wb;
    return std::get<ProjGen>(a).kind == GenKind::U && std::get<ProjGen>(b).kind == GenKind::A;
  });
  return v;
}

}  // namespace detail

/// T_r realized inside L_n⊗V_0 on f^k a_{-r-2} (A_k) and f^k u_r (U_k),
/// k ≤ depth. Actions are obtained by solving for the images of e and f in
/// the spanning vectors.
inline TrModule build_Tr(int r, int n, int depth) {
  if (depth < 0) throw std::invalid_argument("build_Tr: depth must be nonnegative");
  const auto sets = enright::index_sets(n, 0);
  if (!sets.in_Iprime(r)) throw std::invalid_argument("build_Tr: r must lie in I'(n, 0)");

  const auto pg = enright::projective_generator(n, r);
  const auto hw = enright::highest_weight_vector(n, r);
  const int tensor_depth = (n + r + 2) / 2 + depth + 3;
  const auto T = enright::tensor_module(n, tensor_depth);

  std::map<BasisLabel, QVec> vec;
  QVec a = enright::to_vector(T, pg.final_vector());
  QVec u = enright::to_vector(T, hw.pNormalized());
  for (int k = 0; k <= depth + 1; ++k) {
    vec.emplace(ProjGen{GenKind::A, k}, a);
    a = apply_power(T, T.F, a, 1);
  }
  const int u_last = depth + std::max(r, 1);
  for (int k = 0; k <= u_last; ++k) {
    vec.emplace(ProjGen{GenKind::U, k}, u);
    u = apply_power(T, T.F, u, 1);
  }

  std::vector<BasisLabel> basis, overflow;
  for (int k = 0; k <= depth; ++k) {
    basis.emplace_back(ProjGen{GenKind::A, k});
    basis.emplace_back(ProjGen{GenKind::U, k});
  }
  overflow.emplace_back(ProjGen{GenKind::A, depth + 1});
  for (int k = depth + 1; k <= u_last; ++k) overflow.emplace_back(ProjGen{GenKind::U, k});
  basis = detail::tr_labels(r, basis);
  overflow = detail::tr_labels(r, overflow);

  // express a tensor vector of weight mu in the spanning vectors of that weight
  auto express = [&](const QVec& image, int mu) {
    Action out;
    if (image.is_zero()) return out;
    std::vector<BasisLabel> cands;
    for (const auto& [lab, v] : vec)
      if (detail::tr_weight(r, lab) == mu) cands.push_back(lab);
    std::vector<QVec> cols;
    for (const auto& lab : cands) cols.push_back(vec.at(lab));
    const auto x = solve(QMat::from_columns(T.dim(), cols), image);
    if (!x) throw VerificationError("build_Tr: image is not in the span of the T_r basis");
    for (const auto& [c, v] : x->entries()) out.push_back({cands[c], v});
    return out;
  };

  auto m = assemble(
      ModuleKind::Tr, basis, overflow, [r](const BasisLabel& b) { return detail::tr_weight(r, b); },
      [&](const BasisLabel& b) {
        return express(apply_power(T, T.E, vec.at(b), 1), detail::tr_weight(r, b) + 2);
      },
      [&](const BasisLabel& b) {
        return express(apply_power(T, T.F, vec.at(b), 1), detail::tr_weight(r, b) - 2);
      });
  m.n = n;
  m.r = r;
  m.depth = depth;

  TrChecks ch;
  const QVec a0 = vec.at(ProjGen{GenKind::A, 0});
  ch.hWeightOfA = T.H.apply(a0) == Rational(-r - 2) * a0;
  ch.eKillsAAfterRPlus2 = apply_power(T, T.E, a0, r + 2).is_zero();

  auto coeff = [&](const QMat& op, const BasisLabel& from, const BasisLabel& to) {
    auto i = m.find(to);
    return i ? op.get(*i, m.at(from)) : Rational(0);
  };
  ch.uSpanStable = ch.uSpanIsVerma = true;
  ch.quotientIsVerma = ch.gammaConstant = true;
  ch.abstractFormulaWithR = ch.abstractFormulaWithAmbientN = true;
  std::optional<Rational> gamma;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    const auto& g = std::get<ProjGen>(m.basis[j]);
    const int k = g.k;
    for (const QMat* op : {&m.E, &m.F}) {
      for (const auto& [i, v] : op->column(j).entries()) {
        const auto& t = std::get<ProjGen>(m.label(i));
        if (g.kind == GenKind::U && t.kind == GenKind::A) ch.uSpanStable = false;
      }
    }
    if (g.kind == GenKind::U) {
      const Rational expect_e(k * (r - k + 1));
      const Rational got_e = k > 0 ? coeff(m.E, m.basis[j], ProjGen{GenKind::U, k - 1}) : Rational(0);
      if (got_e != expect_e || m.E.column(j).nnz() != (k > 0 && expect_e != 0 ? 1u : 0u)) ch.uSpanIsVerma = false;
      if (m.F.column(j).nnz() != 1 || coeff(m.F, m.basis[j], ProjGen{GenKind::U, k + 1}) != 1) ch.uSpanIsVerma = false;
      // displayed action on f^k e^{r+1}: e-coefficient 2k(r+1) - k² - k(x+1)
      if (Rational(2 * k * (r + 1) - k * k - k * (r + 1)) != got_e) ch.abstractFormulaWithR = false;
      if (Rational(2 * k * (r + 1) - k * k - k * (n + 1)) != got_e) ch.abstractFormulaWithAmbientN = false;
      if (m.weights[j] != 2 * (r + 1) - 2 * k - r - 2) ch.abstractFormulaWithR = false;
      if (m.weights[j] != 2 * (r + 1) - 2 * k - n - 2) ch.abstractFormulaWithAmbientN = false;
    } else {
      const Rational a_e = k > 0 ? coeff(m.E, m.basis[j], ProjGen{GenKind::A, k - 1}) : Rational(0);
      if (a_e != Rational(-k * (k + r + 1))) ch.quotientIsVerma = false;
      if (coeff(m.F, m.basis[j], ProjGen{GenKind::A, k + 1}) != 1) ch.quotientIsVerma = false;
      const Rational g_k = coeff(m.E, m.basis[j], ProjGen{GenKind::U, k + r});
      if (!gamma) gamma = g_k;
      if (*gamma != g_k) ch.gammaConstant = false;
      if (Rational(-k * k - k * (r + 1)) != a_e) ch.abstractFormulaWithR = false;
      if (Rational(-k * k - k * (n + 1)) != a_e) ch.abstractFormulaWithAmbientN = false;
      if (m.weights[j] != -2 * k - r - 2) ch.abstractFormulaWithR = false;
      if (m.weights[j] != -2 * k - n - 2) ch.abstractFormulaWithAmbientN = false;
    }
  }
  ch.gamma = gamma.value_or(Rational(0));
  return {std::move(m), ch};
}

}  // namespace vermalab::sl2
