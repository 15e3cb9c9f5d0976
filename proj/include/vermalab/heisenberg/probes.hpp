#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "vermalab/heisenberg/fock.hpp"
#include "vermalab/util/parallel.hpp"

namespace vermalab::heisenberg {

struct IdentityResidual {
  std::string relation;
  int i = 0;
  int j = 0;
  HElem residual;
};

/// a_i b_j against the t^i u^j coefficient of B(u)A(t)(1+tu), which is
/// b_j a_i + b_{j-1} a_{i-1} with a_0 = b_0 = 1.
inline std::vector<IdentityResidual> verify_generating_identity(int order) {
  if (order < 1) throw std::invalid_argument("verify_generating_identity: order must be positive");
  std::vector<IdentityResidual> out;
  for (int i = 1; i <= order; ++i)
    for (int j = 1; j <= order; ++j) {
      HElem rhs;
      for (int e = 0; e <= 1; ++e) {
        NormalMonomial m;
        if (j - e > 0) m.b.push_back(j - e);
        if (i - e > 0) m.a.push_back(i - e);
        rhs.add(m, Rational(1));
      }
      out.push_back({"A(t)B(u)=B(u)A(t)(1+tu)", i, j, normal_form({a(i), b(j)}) - rhs});
    }
  return out;
}

/// [a_n, a_m] and [b_n, b_m] for n < m <= order.
inline std::vector<IdentityResidual> verify_commuting_families(int order) {
  std::vector<IdentityResidual> out;
  for (int n = 1; n <= order; ++n)
    for (int m = n + 1; m <= order; ++m) {
      out.push_back({"[a_n,a_m]=0", n, m, normal_form({a(n), a(m)}) - normal_form({a(m), a(n)})});
      out.push_back({"[b_n,b_m]=0", n, m, normal_form({b(n), b(m)}) - normal_form({b(m), b(n)})});
    }
  return out;
}

/// Polynomials in the commuting a's, keyed by sorted index lists.
using APoly = std::map<std::vector<int>, Rational>;

namespace detail {

inline APoly apoly_mul(const APoly& x, const APoly& y) {
  APoly out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      std::vector<int> k = kx;
      k.insert(k.end(), ky.begin(), ky.end());
      std::sort(k.begin(), k.end());
      out[k] += cx * cy;
    }
  std::erase_if(out, [](const auto& t) { return sgn(t.second) == 0; });
  return out;
}

}  // namespace detail

/// Candidate ã_1..ã_D: the t^{n-1} coefficient of A'(-t) A(-t)^{-1}, A(t) = Σ a_k t^k, a_0 = 1.
inline std::vector<APoly> tilde_candidates(int D) {
  if (D < 1) throw std::invalid_argument("tilde_candidates: D must be positive");
  // S(t) = A(-t) has coefficients (-1)^k a_k; its inverse R is computed degree by degree.
  std::vector<APoly> S(static_cast<std::size_t>(D) + 1), R(static_cast<std::size_t>(D) + 1);
  S[0][{}] = 1;
  for (int k = 1; k <= D; ++k) S[k][{k}] = (k % 2 ? -1 : 1);
  R[0][{}] = 1;
  for (int k = 1; k <= D; ++k) {
    APoly acc;
    for (int j = 1; j <= k; ++j)
      for (const auto& [key, c] : detail::apoly_mul(S[j], R[k - j])) acc[key] -= c;
    std::erase_if(acc, [](const auto& t) { return sgn(t.second) == 0; });
    R[k] = acc;
  }
  // A'(-t) = Σ k a_k (-t)^{k-1}
  std::vector<APoly> Ad(static_cast<std::size_t>(D));
  for (int k = 1; k <= D; ++k) Ad[k - 1][{k}] = Rational(((k - 1) % 2 ? -1 : 1) * k);
  std::vector<APoly> out;
  for (int n = 1; n <= D; ++n) {
    APoly c;
    for (int j = 0; j < n; ++j)
      for (const auto& [key, v] : detail::apoly_mul(Ad[j], R[n - 1 - j])) c[key] += v;
    std::erase_if(c, [](const auto& t) { return sgn(t.second) == 0; });
    out.push_back(c);
  }
  return out;
}

inline HElem to_helem(const APoly& p) {
  HElem h;
  for (const auto& [key, c] : p) h.add(NormalMonomial{{}, key}, c);
  return h;
}

struct TildeResidual {
  int n = 0;
  int m = 0;
  HElem residual;  // [ã_n, b_m] - δ_{n,m}
};

struct TildeProbe {
  std::vector<HElem> candidates;  // ã_1..ã_n
  std::vector<TildeResidual> residuals;
};

/// Residual table for all n' <= n and m <= D.
inline TildeProbe tilde_probe(int n, int D) {
  if (n < 1 || D < n) throw std::invalid_argument("tilde_probe: need 1 <= n <= D");
  TildeProbe out;
  const auto cand = tilde_candidates(n);
  for (const auto& c : cand) out.candidates.push_back(to_helem(c));
  for (int k = 1; k <= n; ++k)
    for (int m = 1; m <= D; ++m) {
      HElem r = commutator(out.candidates[k - 1], HElem::gen_b(m));
      if (k == m) r -= HElem::one();
      out.residuals.push_back({k, m, r});
    }
  return out;
}

inline Word random_word(std::mt19937_64& rng, int maxLength = 8, int maxIndex = 6) {
  std::uniform_int_distribution<int> len(0, maxLength), idx(1, maxIndex), coin(0, 1);
  Word w(static_cast<std::size_t>(len(rng)));
  for (auto& g : w) g = {coin(rng) ? Letter::A : Letter::B, idx(rng)};
  return w;
}

struct ConfluenceResult {
  int trials = 0;
  int failures = 0;          // strategy mismatches
  int negativeOrNonIntegral = 0;
  int measureViolations = 0;
};

/// Leftmost vs rightmost reduction on random words.
inline ConfluenceResult confluence_fuzz(int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("confluence_fuzz: trials must be positive");
  std::vector<char> mismatch(static_cast<std::size_t>(trials)), sign(mismatch.size()), measure(mismatch.size());
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
    std::mt19937_64 rng(derive_seed(seed, t));
    const Word w = random_word(rng);
    RewriteStats sl, sr;
    const HElem l = normal_form(w, Strategy::Leftmost, &sl);
    const HElem r = normal_form(w, Strategy::Rightmost, &sr);
    mismatch[t] = !(l == r);
    sign[t] = !l.integral_nonnegative();
    measure[t] = !(sl.measureDecreasing && sr.measureDecreasing);
  });
  ConfluenceResult out;
  out.trials = trials;
  for (std::size_t t = 0; t < mismatch.size(); ++t) {
    out.failures += mismatch[t];
    out.negativeOrNonIntegral += sign[t];
    out.measureViolations += measure[t];
  }
  return out;
}

inline HElem random_helem(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 3), cnt(0, 2), idx(1, 3), coef(-3, 3);
  HElem h;
  const int t = terms(rng);
  for (int k = 0; k < t; ++k) {
    NormalMonomial m;
    for (int c = cnt(rng); c > 0; --c) m.b.push_back(idx(rng));
    for (int c = cnt(rng); c > 0; --c) m.a.push_back(idx(rng));
    std::sort(m.b.begin(), m.b.end());
    std::sort(m.a.begin(), m.a.end());
    h.add(m, Rational(coef(rng)));
  }
  return h;
}

inline FockPoly random_fock(std::mt19937_64& rng, int bound, int maxDegree) {
  std::uniform_int_distribution<int> terms(1, 3), idx(1, 3), coef(-3, 3);
  FockPoly p(bound);
  const int t = terms(rng);
  for (int k = 0; k < t; ++k) {
    std::vector<int> bs;
    int d = 0;
    for (;;) {
      const int m = idx(rng);
      if (d + m > maxDegree || (rng() & 3u) == 0) break;
      bs.push_back(m);
      d += m;
    }
    p.add(bs, Integer(coef(rng)));
  }
  return p;
}

struct FuzzCount {
  int trials = 0;
  int failures = 0;
};

/// (x·y)·p = x·(y·p) on random triples; degrees stay below the bound by construction.
inline FuzzCount fock_representation_fuzz(int trials, std::uint64_t seed) {
  std::vector<char> bad(static_cast<std::size_t>(trials));
  parallel_for(bad.size(), [&](std::size_t t) {
    std::mt19937_64 rng(derive_seed(seed, t));
    const HElem x = random_helem(rng), y = random_helem(rng);
    const FockPoly p = random_fock(rng, 24, 6);
    bad[t] = !(fock_action(x * y, p) == fock_action(x, fock_action(y, p)));
  });
  FuzzCount out{trials, 0};
  for (char c : bad) out.failures += c;
  return out;
}

}  // namespace vermalab::heisenberg
