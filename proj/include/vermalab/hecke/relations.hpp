#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "vermalab/hecke/algebra.hpp"

namespace vermalab::hecke {

struct RelationResult {
  std::string relation;
  int n = 0;
  std::string indices;
  bool pass = false;
  std::string witness;  // the nonzero difference when the relation fails
};

struct RelationReport {
  std::vector<RelationResult> results;
  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& r : results) f += r.pass ? 0 : 1;
    return f;
  }
  void append(const RelationReport& o) { results.insert(results.end(), o.results.begin(), o.results.end()); }
};

namespace detail {

template <class E>
void record(RelationReport& rep, std::string rel, int n, std::string idx, const E& lhs, const E& rhs) {
  const E diff = lhs - rhs;
  rep.results.push_back({std::move(rel), n, std::move(idx), diff.is_zero(), diff.is_zero() ? "" : diff.to_string()});
}

inline std::string ij(int i, int j) { return "i=" + std::to_string(i) + ",j=" + std::to_string(j); }
inline std::string ii(int i) { return "i=" + std::to_string(i); }

}  // namespace detail

/// Jucys–Murphy element X_k = sum of transpositions (j k), j < k, so X_1 = 0.
inline GroupAlgebraElement jucys_murphy(int n, int k) {
  if (k < 1 || k > n) throw std::out_of_range("jucys_murphy: k must satisfy 1 <= k <= n");
  GroupAlgebraElement x(n);
  for (int j = 1; j < k; ++j) x.add(Permutation::transposition(n, j, k), Rational(1));
  return x;
}

/// Degenerate affine Hecke relations with T_i = s_i and X_k Jucys–Murphy.
inline RelationReport verify_degenerate(int n) {
  if (n < 2) throw std::invalid_argument("verify_degenerate: n must be at least 2");
  using G = GroupAlgebraElement;
  std::vector<G> T(static_cast<std::size_t>(n)), X(static_cast<std::size_t>(n + 1));
  for (int i = 1; i < n; ++i) T[i] = G::generator(n, i);
  for (int k = 1; k <= n; ++k) X[k] = jucys_murphy(n, k);
  const G one = G::one(n);

  RelationReport rep;
  for (int i = 1; i < n; ++i) detail::record(rep, "T_i^2=1", n, detail::ii(i), T[i] * T[i], one);
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      detail::record(rep, "T_iT_j=T_jT_i", n, detail::ij(i, j), T[i] * T[j], T[j] * T[i]);
  for (int i = 1; i + 1 < n; ++i)
    detail::record(rep, "T_iT_{i+1}T_i=T_{i+1}T_iT_{i+1}", n, detail::ii(i), T[i] * T[i + 1] * T[i],
                   T[i + 1] * T[i] * T[i + 1]);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      detail::record(rep, "X_iX_j=X_jX_i", n, detail::ij(i, j), X[i] * X[j], X[j] * X[i]);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < n; ++j)
      if (i - j != 0 && i - j != 1)
        detail::record(rep, "X_iT_j=T_jX_i", n, detail::ij(i, j), X[i] * T[j], T[j] * X[i]);
  for (int i = 1; i < n; ++i)
    detail::record(rep, "X_{i+1}T_i=T_iX_i+1", n, detail::ii(i), X[i + 1] * T[i], T[i] * X[i] + one);
  return rep;
}

/// X_1 = 1, X_{i+1} = q^{-1} T_i X_i T_i in the finite Hecke algebra over Q(q).
inline std::vector<HeckeElement> evaluation_X(int n) {
  if (n < 2) throw std::invalid_argument("evaluation_X: n must be at least 2");
  const RatFunc qinv = RatFunc::q().inverse();
  std::vector<HeckeElement> X{HeckeElement::one(n)};
  for (int i = 1; i < n; ++i) {
    const auto Ti = HeckeElement::generator(n, i);
    X.push_back(qinv * (Ti * X.back() * Ti));
  }
  return X;  // X[k-1] is X_k
}

/// T_i^{-1} = q^{-1} (T_i - (q-1)), from the quadratic relation.
inline HeckeElement hecke_generator_inverse(int n, int i) {
  const RatFunc q = RatFunc::q();
  return q.inverse() * (HeckeElement::generator(n, i) - (q - RatFunc(1)) * HeckeElement::one(n));
}

/// X_k^{-1} built independently: X_{i+1}^{-1} = q T_i^{-1} X_i^{-1} T_i^{-1}.
inline std::vector<HeckeElement> evaluation_X_inverse(int n) {
  std::vector<HeckeElement> Y{HeckeElement::one(n)};
  for (int i = 1; i < n; ++i) {
    const auto Ti = hecke_generator_inverse(n, i);
    Y.push_back(RatFunc::q() * (Ti * Y.back() * Ti));
  }
  return Y;
}

/// Nondegenerate affine Hecke relations in the evaluation model.
inline RelationReport verify_nondegenerate(int n) {
  if (n < 2) throw std::invalid_argument("verify_nondegenerate: n must be at least 2");
  using H = HeckeElement;
  const RatFunc q = RatFunc::q();
  const H one = H::one(n);
  const H zero(n);
  std::vector<H> T(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) T[i] = H::generator(n, i);
  const auto Xv = evaluation_X(n), Yv = evaluation_X_inverse(n);
  auto X = [&](int k) -> const H& { return Xv[static_cast<std::size_t>(k - 1)]; };
  auto Y = [&](int k) -> const H& { return Yv[static_cast<std::size_t>(k - 1)]; };

  RelationReport rep;
  for (int i = 1; i < n; ++i)
    detail::record(rep, "(T_i+1)(T_i-q)=0", n, detail::ii(i), (T[i] + one) * (T[i] - q * one), zero);
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      detail::record(rep, "T_iT_j=T_jT_i", n, detail::ij(i, j), T[i] * T[j], T[j] * T[i]);
  for (int i = 1; i + 1 < n; ++i)
    detail::record(rep, "T_iT_{i+1}T_i=T_{i+1}T_iT_{i+1}", n, detail::ii(i), T[i] * T[i + 1] * T[i],
                   T[i + 1] * T[i] * T[i + 1]);
  for (int i = 1; i <= n; ++i) {
    detail::record(rep, "X_iX_i^{-1}=1", n, detail::ii(i), X(i) * Y(i), one);
    detail::record(rep, "X_i^{-1}X_i=1", n, detail::ii(i), Y(i) * X(i), one);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      detail::record(rep, "X_iX_j=X_jX_i", n, detail::ij(i, j), X(i) * X(j), X(j) * X(i));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < n; ++j)
      if (i - j != 0 && i - j != 1)
        detail::record(rep, "X_iT_j=T_jX_i", n, detail::ij(i, j), X(i) * T[j], T[j] * X(i));
  for (int i = 1; i < n; ++i)
    detail::record(rep, "T_iX_iT_i=qX_{i+1}", n, detail::ii(i), T[i] * X(i) * T[i], q * X(i + 1));
  return rep;
}

/// Xbar_k = (1 - X_k)/(1 - q), coefficientwise over Q(q).
inline std::vector<HeckeElement> evaluation_Xbar(int n) {
  const RatFunc inv = (RatFunc(1) - RatFunc::q()).inverse();
  std::vector<HeckeElement> out;
  for (const auto& x : evaluation_X(n)) out.push_back(inv * (HeckeElement::one(n) - x));
  return out;
}

/// Sends T_w ↦ w after setting q = 1; throws if a coefficient has a pole there.
inline GroupAlgebraElement specialize_at_one(const HeckeElement& h) {
  return h.map_coeffs<Rational, GroupRule>([](const RatFunc& c) {
    const auto v = c.evaluate(Rational(1));
    if (!v) throw std::domain_error("specialize_at_one: coefficient has a pole at q = 1");
    return *v;
  });
}

/// T_i + T_i Xbar_i T_i = q Xbar_{i+1} over Q(q), followed by its q = 1 shadows:
/// the specialized Xbar_k are the Jucys–Murphy elements, the specialized identity
/// holds in the group algebra, and 1 + T_i Xbar_i = Xbar_{i+1} T_i.
inline RelationReport degeneration_check(int n) {
  if (n < 2) throw std::invalid_argument("degeneration_check: n must be at least 2");
  using H = HeckeElement;
  using G = GroupAlgebraElement;
  const RatFunc q = RatFunc::q();
  const auto Xb = evaluation_Xbar(n);
  auto Xbar = [&](int k) -> const H& { return Xb[static_cast<std::size_t>(k - 1)]; };

  RelationReport rep;
  for (int i = 1; i < n; ++i) {
    const H Ti = H::generator(n, i);
    detail::record(rep, "T_i+T_iXbar_iT_i=qXbar_{i+1}", n, detail::ii(i), Ti + Ti * Xbar(i) * Ti, q * Xbar(i + 1));
  }
  std::vector<G> J;
  for (int k = 1; k <= n; ++k) {
    G s(n);
    std::string witness;
    bool defined = true;
    try {
      s = specialize_at_one(Xbar(k));
    } catch (const std::domain_error& e) {
      defined = false;
      witness = e.what();
    }
    const G jm = jucys_murphy(n, k);
    if (defined) {
      detail::record(rep, "Xbar_k|q=1=JM_k", n, "k=" + std::to_string(k), s, jm);
    } else {
      rep.results.push_back({"Xbar_k|q=1=JM_k", n, "k=" + std::to_string(k), false, witness});
    }
    J.push_back(defined ? s : jm);
  }
  const G one = G::one(n);
  for (int i = 1; i < n; ++i) {
    const G s = G::generator(n, i);
    const G& a = J[static_cast<std::size_t>(i - 1)];
    const G& b = J[static_cast<std::size_t>(i)];
    detail::record(rep, "(T_i+T_iXbar_iT_i=Xbar_{i+1})|q=1", n, detail::ii(i), s + s * a * s, b);
    detail::record(rep, "1+T_iXbar_i=Xbar_{i+1}T_i", n, detail::ii(i), one + s * a, b * s);
  }
  return rep;
}

/// Random element: a few basis terms with integer polynomial coefficients of degree ≤ maxDegree.
inline HeckeElement random_hecke_element(int n, int maxDegree, std::mt19937_64& rng) {
  const auto perms = Permutation::all(n);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  std::uniform_int_distribution<int> terms(1, 4), coef(-3, 3), deg(0, maxDegree);
  HeckeElement h(n);
  const int t = terms(rng);
  for (int a = 0; a < t; ++a) {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    h.add(perms[pick(rng)], RatFunc(Poly(std::move(c))));
  }
  return h;
}

struct FuzzSummary {
  int trials = 0;
  int failures = 0;
};

/// (ab)c = a(bc) on random triples with 2 ≤ n ≤ 4.
inline FuzzSummary hecke_associativity_fuzz(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(2, 4);
  FuzzSummary out;
  for (int t = 0; t < trials; ++t) {
    const int n = size(rng);
    const auto a = random_hecke_element(n, 2, rng);
    const auto b = random_hecke_element(n, 2, rng);
    const auto c = random_hecke_element(n, 2, rng);
    ++out.trials;
    if (!((a * b) * c == a * (b * c))) ++out.failures;
  }
  return out;
}

}  // namespace vermalab::hecke
