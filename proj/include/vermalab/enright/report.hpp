#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "vermalab/enright/audit.hpp"
#include "vermalab/enright/projective.hpp"

namespace vermalab::enright {

struct CaseChecks {
  std::size_t hwvDim = 0;
  std::vector<Rational> alphaResiduals;
  bool alphaBoundary = false;  // boundary coefficient and seed agree with the closed form
  std::vector<Rational> betaResiduals;
  bool betaBoundary = true;  // no v_i⊗w_0 term and the top β matches α; projective cases only
  bool casimirNilpotent = false;  // (Ω-c)² a = 0 ≠ (Ω-c) a for T_s, (Ω-c) u_s = 0 for V_s
  bool positivity = false;        // f^l u_s nonnegative integral; shifted generator positive
};

struct CaseRecord {
  int s = 0;
  bool projective = false;  // s ∈ I' (summand T_s) versus s ∈ I''' (summand V_s)
  std::vector<Rational> p, q;
  std::optional<Integer> m;
  CaseChecks checks;
  std::string error;  // set when a construction step raised a verification error

  bool passed() const {
    return error.empty() && checks.hwvDim == 1 && all_zero(checks.alphaResiduals) && checks.alphaBoundary &&
           all_zero(checks.betaResiduals) && checks.betaBoundary && checks.casimirNilpotent && checks.positivity;
  }
};

/// f^l u for l = 0.. while the result stays inside the slice.
inline bool f_powers_nonnegative(const sl2::TruncatedModule& slice, int n, int s, const TensorCoeffs& u) {
  const int room = slice.depth - (n - s) / 2;
  const QVec v = to_vector(slice, u);
  for (int l = 0; l <= room; ++l)
    if (!nonnegative_integral(apply_f_power(slice, v, l))) return false;
  return true;
}

inline CaseRecord enright_case(const sl2::TruncatedModule& slice, int n, int s) {
  const auto sets = index_sets(n, 0);
  CaseRecord rec;
  rec.s = s;
  rec.projective = sets.in_Iprime(s);
  try {
    const auto hw = highest_weight_vector(n, s);
    rec.p = hw.pList;
    rec.checks.hwvDim = hw.kernelDim;
    const auto alpha = alpha_recursion_check(hw);
    rec.checks.alphaResiduals = alpha.residuals;
    rec.checks.alphaBoundary = alpha.boundaryZero && alpha.seedMatches;
    const bool fpos = f_powers_nonnegative(slice, n, s, hw.pNormalized());
    if (rec.projective) {
      const auto pg = projective_generator(n, s);
      rec.q = pg.qList;
      rec.m = pg.m;
      rec.checks.betaResiduals = pg.betaResiduals;
      rec.checks.betaBoundary = pg.betaI0Zero && pg.boundaryMatches;
      rec.checks.casimirNilpotent = pg.kernelDim == 1 && pg.excessDim == 1 && pg.nilpotentSquare && pg.notInKernel;
      rec.checks.positivity = fpos && pg.positive;
    } else {
      const auto idx = slice.weight_space(s);
      const QVec u = restrict_to(to_vector(slice, hw.pNormalized()), idx);
      rec.checks.casimirNilpotent = shifted(casimir_on_weight(slice, s), Rational(s * (s + 2))).apply(u).is_zero();
      rec.checks.positivity = fpos;
    }
  } catch (const VerificationError& e) {
    rec.error = e.what();
  }
  return rec;
}

struct EnrightReport {
  int n = 0;
  int lambda = 0;
  int depth = 0;
  IndexSets sets;
  std::vector<CaseRecord> cases;
  AuditReport audit;

  std::size_t failures() const {
    std::size_t f = audit.passed() ? 0 : 1;
    for (const auto& c : cases) f += c.passed() ? 0 : 1;
    return f;
  }
  bool passed() const { return failures() == 0; }
};

inline int default_depth(int n) { return 2 * n + 10; }

/// All cases s ∈ I' ∪ I''' (ascending) and the weight audit for L_n⊗V_0.
inline EnrightReport enright_report(int n, int depth) {
  EnrightReport rep;
  rep.n = n;
  rep.depth = depth;
  rep.sets = index_sets(n, 0);
  rep.audit = decomposition_audit(n, depth);
  const auto slice = tensor_module(n, depth);
  std::vector<int> ss = rep.sets.Iprime;
  ss.insert(ss.end(), rep.sets.Itripleprime.begin(), rep.sets.Itripleprime.end());
  std::sort(ss.begin(), ss.end());
  for (int s : ss) rep.cases.push_back(enright_case(slice, n, s));
  return rep;
}

}  // namespace vermalab::enright
