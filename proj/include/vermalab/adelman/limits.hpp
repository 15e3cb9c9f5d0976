#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vermalab/adelman/category.hpp"
#include "vermalab/util/parallel.hpp"

namespace vermalab::adelman {

/// A limit or colimit candidate: the object and its structure morphism
/// (inclusion K -> X for kernels, projection Y -> C for cokernels).
struct LimitCandidate {
  DoubleArrow object;
  TripleMorphism map;
};

namespace detail {

using Blocks = std::vector<std::vector<const QMat*>>;

inline QMat blocks(const std::vector<std::size_t>& r, const std::vector<std::size_t>& c, const Blocks& b) {
  return block_matrix<Rational>(r, c, b);
}

}  // namespace detail

/// Block placements for the kernel of t : (A' -> A -> A'') -> (B' -> B -> B'').
/// The printed display has a 2x2 φ landing in A; the candidates differ in the
/// middle object and in the upper-right block of ψ.
enum class KernelReading { MiddleA, MiddleASumBpMinus, MiddleASumBpPlus, MiddleASumBpZero };

inline const std::vector<KernelReading>& kernel_readings() {
  // printed sign first, so it is preferred among isomorphic survivors
  static const std::vector<KernelReading> all{KernelReading::MiddleASumBpMinus, KernelReading::MiddleA,
                                              KernelReading::MiddleASumBpPlus, KernelReading::MiddleASumBpZero};
  return all;
}

inline std::string reading_name(KernelReading r) {
  switch (r) {
    case KernelReading::MiddleA: return "A'+B' -> A -> B+A''; phi=(a' 0), psi=(alpha; a)";
    case KernelReading::MiddleASumBpMinus: return "A'+B' -> A+B' -> B+A''; phi=(a' 0; alpha' 1), psi=(alpha -b'; a 0)";
    case KernelReading::MiddleASumBpPlus: return "A'+B' -> A+B' -> B+A''; phi=(a' 0; alpha' 1), psi=(alpha b'; a 0)";
    case KernelReading::MiddleASumBpZero: return "A'+B' -> A+B' -> B+A''; phi=(a' 0; alpha' 1), psi=(alpha 0; a 0)";
  }
  return "";
}

inline std::optional<KernelReading> reading_from_name(const std::string& s) {
  for (auto r : kernel_readings())
    if (reading_name(r) == s) return r;
  return std::nullopt;
}

inline LimitCandidate kernel(const TripleMorphism& t, KernelReading reading = KernelReading::MiddleASumBpMinus) {
  const auto& X = t.source;
  const auto& Y = t.target;
  const std::size_t a1 = X.d1(), a2 = X.d2(), a3 = X.d3(), b1 = Y.d1(), b2 = Y.d2();
  const QMat Ib1 = QMat::identity(b1), Ia1 = QMat::identity(a1), Ia2 = QMat::identity(a2),
             Ia3 = QMat::identity(a3);
  const QMat p1 = detail::blocks({a1}, {a1, b1}, {{&Ia1, nullptr}});
  const QMat p3 = detail::blocks({a3}, {b2, a3}, {{nullptr, &Ia3}});
  if (reading == KernelReading::MiddleA) {
    const QMat phi = detail::blocks({a2}, {a1, b1}, {{&X.m1, nullptr}});
    const QMat psi = detail::blocks({b2, a3}, {a2}, {{&t.x}, {&X.m2}});
    DoubleArrow K(phi, psi);
    return {K, TripleMorphism(K, X, p1, Ia2, p3)};
  }
  const QMat nb = Rational(-1) * Y.m1;
  const QMat* upper = reading == KernelReading::MiddleASumBpMinus  ? &nb
                      : reading == KernelReading::MiddleASumBpPlus ? &Y.m1
                                                                   : nullptr;
  const QMat phi = detail::blocks({a2, b1}, {a1, b1}, {{&X.m1, nullptr}, {&t.xp, &Ib1}});
  const QMat psi = detail::blocks({b2, a3}, {a2, b1}, {{&t.x, upper}, {&X.m2, nullptr}});
  DoubleArrow K(phi, psi);
  const QMat p2 = detail::blocks({a2}, {a2, b1}, {{&Ia2, nullptr}});
  return {K, TripleMorphism(K, X, p1, p2, p3)};
}

/// Cokernel B'+A -> B+A'' -> B''+A'' with γ = (b' α; 0 -a), ρ = (b α''; 0 -1).
inline LimitCandidate cokernel(const TripleMorphism& t) {
  const auto& X = t.source;
  const auto& Y = t.target;
  const std::size_t a2 = X.d2(), a3 = X.d3(), b1 = Y.d1(), b2 = Y.d2(), b3 = Y.d3();
  const QMat Ib1 = QMat::identity(b1), Ib2 = QMat::identity(b2), Ib3 = QMat::identity(b3);
  const QMat na = Rational(-1) * X.m2, nI = Rational(-1) * QMat::identity(a3);
  const QMat gamma = detail::blocks({b2, a3}, {b1, a2}, {{&Y.m1, &t.x}, {nullptr, &na}});
  const QMat rho = detail::blocks({b3, a3}, {b2, a3}, {{&Y.m2, &t.xpp}, {nullptr, &nI}});
  DoubleArrow C(gamma, rho);
  const QMat q1 = detail::blocks({b1, a2}, {b1}, {{&Ib1}, {nullptr}});
  const QMat q2 = detail::blocks({b2, a3}, {b2}, {{&Ib2}, {nullptr}});
  const QMat q3 = detail::blocks({b3, a3}, {b3}, {{&Ib3}, {nullptr}});
  return {C, TripleMorphism(Y, C, q1, q2, q3)};
}

/// Morphism systems of the form post ∘ v ∘ pre ≃ u with v : P -> Q unknown.
class FactorProblem {
 public:
  FactorProblem(const TripleMorphism& pre, const TripleMorphism& post) : pre_(pre), post_(post) {
    const auto& P = pre.target;
    const auto& Q = post.source;
    const auto& S = pre.source;
    const auto& T = post.target;
    v1_ = sys_.unknown(Q.d1(), P.d1());
    v2_ = sys_.unknown(Q.d2(), P.d2());
    v3_ = sys_.unknown(Q.d3(), P.d3());
    const auto s1 = sys_.unknown(T.d1(), S.d2());
    const auto s2 = sys_.unknown(T.d2(), S.d3());
    const auto e1 = sys_.equation(Q.d2(), P.d1());
    sys_.term(e1, QMat::identity(Q.d2()), v2_, P.m1);
    sys_.term(e1, Q.m1, v1_, QMat::identity(P.d1()), Rational(-1));
    const auto e2 = sys_.equation(Q.d3(), P.d2());
    sys_.term(e2, QMat::identity(Q.d3()), v3_, P.m2);
    sys_.term(e2, Q.m2, v2_, QMat::identity(P.d2()), Rational(-1));
    homotopy_eq_ = sys_.equation(T.d2(), S.d2());
    sys_.term(homotopy_eq_, post.x, v2_, pre.x);
    sys_.term(homotopy_eq_, T.m1, s1, QMat::identity(S.d2()), Rational(-1));
    sys_.term(homotopy_eq_, QMat::identity(T.d2()), s2, S.m2, Rational(-1));
  }

  /// Some v with post∘v∘pre ≃ u, re-verified by the homotopy solver.
  std::optional<TripleMorphism> solve(const TripleMorphism& u) const {
    LinearSystem sys = sys_;
    sys.set_rhs(homotopy_eq_, u.x);
    const auto sol = sys.solve();
    if (!sol) return std::nullopt;
    const TripleMorphism v = extract(*sol);
    if (!is_morphism(v) || !homotopic(compose(post_, compose(v, pre_)), u))
      throw VerificationError("FactorProblem: solution failed re-verification");
    return v;
  }

  /// Basis of {v : post∘v∘pre ≃ 0}.
  std::vector<TripleMorphism> null_solutions() const {
    std::vector<TripleMorphism> out;
    for (const auto& x : sys_.homogeneous_basis()) out.push_back(extract(x));
    return out;
  }

 private:
  TripleMorphism extract(const QVec& x) const {
    return {pre_.target, post_.source, LinearSystem::extract(x, v1_), LinearSystem::extract(x, v2_),
            LinearSystem::extract(x, v3_)};
  }

  TripleMorphism pre_, post_;
  LinearSystem sys_;
  LinearSystem::Unknown v1_{}, v2_{}, v3_{};
  std::size_t homotopy_eq_ = 0;
};

struct UniversalCheck {
  bool isMorphism = false;
  bool nullComposite = false;
  bool factorization = false;
  bool uniqueness = false;  // mono for kernels, epi for cokernels, on the probes
  bool passed() const { return isMorphism && nullComposite && factorization && uniqueness; }
};

inline std::vector<DoubleArrow> probe_objects(std::mt19937_64& rng, int count) {
  std::vector<DoubleArrow> out{embed(1), embed(2)};
  for (int i = 0; i < count; ++i) out.push_back(random_object(rng, 3));
  return out;
}

/// Kernel universal property of (K, ι) for t, tested against probe objects W:
/// t∘ι ≃ 0; random u : W -> X with t∘u ≃ 0 factor as ι∘v; ι∘v ≃ 0 forces v ≃ 0.
inline UniversalCheck check_kernel(const TripleMorphism& t, const LimitCandidate& k, std::mt19937_64& rng,
                                   int probes = 4) {
  UniversalCheck out;
  out.isMorphism = is_morphism(k.map) && is_morphism(t);
  out.nullComposite = null_homotopic(compose(t, k.map));
  out.factorization = out.uniqueness = true;
  const auto& X = t.source;
  for (const auto& W : probe_objects(rng, probes)) {
    const FactorProblem killed(TripleMorphism::identity(W), t);
    const auto u = random_combination(killed.null_solutions(), W, X, rng);
    const FactorProblem through(TripleMorphism::identity(W), k.map);
    if (!through.solve(u)) out.factorization = false;
    for (const auto& v : through.null_solutions())
      if (!null_homotopic(v)) out.uniqueness = false;
  }
  return out;
}

/// Dual checks for (C, π): π∘t ≃ 0; u : Y -> W with u∘t ≃ 0 factor as v∘π; v∘π ≃ 0 forces v ≃ 0.
inline UniversalCheck check_cokernel(const TripleMorphism& t, const LimitCandidate& c, std::mt19937_64& rng,
                                     int probes = 4) {
  UniversalCheck out;
  out.isMorphism = is_morphism(c.map) && is_morphism(t);
  out.nullComposite = null_homotopic(compose(c.map, t));
  out.factorization = out.uniqueness = true;
  const auto& Y = t.target;
  for (const auto& W : probe_objects(rng, probes)) {
    const FactorProblem killed(t, TripleMorphism::identity(W));
    const auto u = random_combination(killed.null_solutions(), Y, W, rng);
    const FactorProblem through(c.map, TripleMorphism::identity(W));
    if (!through.solve(u)) out.factorization = false;
    for (const auto& v : through.null_solutions())
      if (!null_homotopic(v)) out.uniqueness = false;
  }
  return out;
}

inline TripleMorphism random_instance(std::mt19937_64& rng, int maxDim = 4) {
  const auto X = random_object(rng, maxDim);
  const auto Y = random_object(rng, maxDim);
  return random_morphism(X, Y, rng);
}

struct TrialCount {
  int passed = 0;
  int failed = 0;
};

/// f : X -> Y is an isomorphism in the quotient: some g has f∘g ≃ 1 and g∘f ≃ 1.
inline bool is_homotopy_equivalence(const TripleMorphism& f) {
  const FactorProblem right(TripleMorphism::identity(f.target), f);  // f∘g ≃ 1_Y
  const auto g = right.solve(TripleMorphism::identity(f.target));
  if (!g) return false;
  return homotopic(compose(*g, f), TripleMorphism::identity(f.source)).has_value();
}

/// Two subobjects of the same X agree: ι_b factors through ι_a by an isomorphism.
inline bool same_subobject(const LimitCandidate& a, const LimitCandidate& b) {
  const FactorProblem through(TripleMorphism::identity(b.object), a.map);
  const auto v = through.solve(b.map);
  return v && is_homotopy_equivalence(*v);
}

struct ReadingTrials {
  KernelReading reading;
  TrialCount trials;
  int equivalentToChosen = 0;  // trials on which the candidate is isomorphic to the chosen one
};

struct InterpretationResult {
  std::vector<ReadingTrials> kernelTrials;
  TrialCount cokernelTrials;
  std::optional<KernelReading> chosen;
  int trials = 0;
};

/// Runs every kernel reading and the cokernel through the oracle on the same
/// random instances (trial i uses a seed derived from the master seed). The
/// readings that never fail must all be isomorphic to one another on every
/// instance; the choice is then the first of them in kernel_readings() order.
inline InterpretationResult resolve_interpretation(int trials, std::uint64_t seed, int maxDim = 4) {
  const auto& readings = kernel_readings();
  const std::size_t R = readings.size(), N = static_cast<std::size_t>(trials);
  std::vector<std::vector<char>> pass(R, std::vector<char>(N)), equiv(R, std::vector<char>(N));
  std::vector<char> cpass(N);
  parallel_for(N, [&](std::size_t i) {
    std::mt19937_64 inst(derive_seed(seed, i));
    const auto t = random_instance(inst, maxDim);
    std::vector<LimitCandidate> cands;
    for (std::size_t r = 0; r < R; ++r) {
      cands.push_back(kernel(t, readings[r]));
      std::mt19937_64 rng(derive_seed(seed ^ 0x5bd1e995ULL, i));
      pass[r][i] = check_kernel(t, cands.back(), rng).passed();
    }
    // bit o of equiv[r][i]: reading r and reading o give the same subobject
    for (std::size_t r = 0; r < R; ++r) {
      int mask = 0;
      for (std::size_t o = 0; o < R; ++o)
        if (o == r || same_subobject(cands[o], cands[r])) mask |= 1 << o;
      equiv[r][i] = static_cast<char>(mask);
    }
    std::mt19937_64 rng(derive_seed(seed ^ 0x5bd1e995ULL, i));
    cpass[i] = check_cokernel(t, cokernel(t), rng).passed();
  });

  InterpretationResult out;
  out.trials = trials;
  std::vector<std::size_t> winners;
  for (std::size_t r = 0; r < R; ++r) {
    ReadingTrials rt{readings[r], {}, 0};
    for (char p : pass[r]) (p ? rt.trials.passed : rt.trials.failed)++;
    if (rt.trials.failed == 0) winners.push_back(r);
    out.kernelTrials.push_back(rt);
  }
  if (!winners.empty()) {
    const std::size_t c = winners.front();
    bool consistent = true;
    for (std::size_t r = 0; r < R; ++r) {
      for (std::size_t i = 0; i < N; ++i)
        if (equiv[r][i] & (1 << c)) out.kernelTrials[r].equivalentToChosen++;
      if (std::find(winners.begin(), winners.end(), r) != winners.end() &&
          out.kernelTrials[r].equivalentToChosen != trials)
        consistent = false;
    }
    if (consistent) out.chosen = readings[c];
  }
  for (char p : cpass) (p ? out.cokernelTrials.passed : out.cokernelTrials.failed)++;
  return out;
}

struct CongruenceReport {
  TrialCount reflexive, symmetric, transitive, preComposition, postComposition;
  bool all_pass() const {
    for (const auto* c : {&reflexive, &symmetric, &transitive, &preComposition, &postComposition})
      if (c->failed != 0) return false;
    return true;
  }
};

/// g = f + h1 and k = g + h2 with h1, h2 null-homotopic; p, q random composable morphisms.
inline CongruenceReport congruence_checks(int trials, std::uint64_t seed, int maxDim = 4) {
  struct Row {
    bool r, s, t, pre, post;
  };
  std::vector<Row> rows(static_cast<std::size_t>(trials));
  parallel_for(rows.size(), [&](std::size_t i) {
    std::mt19937_64 rng(derive_seed(seed, i));
    const auto X = random_object(rng, maxDim), Y = random_object(rng, maxDim);
    const auto W = random_object(rng, maxDim), Z = random_object(rng, maxDim);
    const auto f = random_morphism(X, Y, rng);
    const auto nh = null_homotopic_basis(X, Y);
    const auto g = f + random_combination(nh, X, Y, rng);
    const auto k = g + random_combination(nh, X, Y, rng);
    const auto p = random_morphism(W, X, rng);
    const auto q = random_morphism(Y, Z, rng);
    const bool fg = homotopic(f, g).has_value();
    rows[i] = {homotopic(f, f).has_value(), fg && homotopic(g, f).has_value(),
               fg && homotopic(g, k).has_value() && homotopic(f, k).has_value(),
               homotopic(compose(f, p), compose(g, p)).has_value(), homotopic(compose(q, f), compose(q, g)).has_value()};
  });
  CongruenceReport out;
  for (const auto& r : rows) {
    (r.r ? out.reflexive.passed : out.reflexive.failed)++;
    (r.s ? out.symmetric.passed : out.symmetric.failed)++;
    (r.t ? out.transitive.passed : out.transitive.failed)++;
    (r.pre ? out.preComposition.passed : out.preComposition.failed)++;
    (r.post ? out.postComposition.passed : out.postComposition.failed)++;
  }
  return out;
}

/// Universal-property trials for the chosen kernel reading and the cokernel.
inline TrialCount universal_property_trials(int trials, std::uint64_t seed, KernelReading reading, int maxDim = 4) {
  std::vector<char> ok(static_cast<std::size_t>(trials));
  parallel_for(ok.size(), [&](std::size_t i) {
    std::mt19937_64 rng(derive_seed(seed, i));
    const auto t = random_instance(rng, maxDim);
    ok[i] = check_kernel(t, kernel(t, reading), rng).passed() && check_cokernel(t, cokernel(t), rng).passed();
  });
  TrialCount out;
  for (char c : ok) (c ? out.passed : out.failed)++;
  return out;
}

}  // namespace vermalab::adelman
