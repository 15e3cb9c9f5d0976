#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "vermalab/enright/projective.hpp"

namespace vermalab::enright {

inline bool same_parity(int a, int b) { return ((a - b) % 2 + 2) % 2 == 0; }

/// dim (T_r)_mu: one copy of V_r and one of V_{-r-2}.
inline int tr_weight_dim(int r, int mu) {
  if (!same_parity(mu, r)) return 0;
  return (mu <= r ? 1 : 0) + (mu <= -r - 2 ? 1 : 0);
}

inline int verma_weight_dim(int s, int mu) { return same_parity(mu, s) && mu <= s ? 1 : 0; }

/// Number of (i, k), 0 ≤ i ≤ n, k ≥ 0, with n - 2i - 2k = mu.
inline int tensor_weight_dim(int n, int mu) {
  int c = 0;
  for (int i = 0; i <= n; ++i) {
    const int twice_k = n - 2 * i - mu;
    if (twice_k >= 0 && twice_k % 2 == 0) ++c;
  }
  return c;
}

struct AuditRow {
  int mu = 0;
  int lhs = 0;
  int rhs = 0;
};

struct AuditReport {
  int n = 0;
  int depth = 0;
  std::vector<AuditRow> rows;
  bool passed() const {
    for (const auto& r : rows)
      if (r.lhs != r.rhs) return false;
    return true;
  }
};

/// Weights mu ≥ n - 2·depth have complete weight spaces in a depth slice.
inline std::vector<int> interior_weights(int n, int depth) {
  std::vector<int> out;
  for (int mu = n; mu >= n - 2 * depth; mu -= 2) out.push_back(mu);
  return out;
}

/// Weight-by-weight dimension count of L_n⊗V_0 against ⊕T_r ⊕ ⊕V_s. The
/// left side is read off the built slice, the right side is combinatorial.
inline AuditReport decomposition_audit(int n, int depth) {
  if (depth < n + 2) throw std::invalid_argument("decomposition_audit: depth must be at least n + 2");
  const auto sets = index_sets(n, 0);
  const auto mod = tensor_module(n, depth);
  AuditReport rep;
  rep.n = n;
  rep.depth = depth;
  for (int mu : interior_weights(n, depth)) {
    AuditRow row;
    row.mu = mu;
    row.lhs = static_cast<int>(mod.weight_space(mu).size());
    if (row.lhs != tensor_weight_dim(n, mu)) throw VerificationError("decomposition_audit: slice weight space incomplete");
    for (int r : sets.Iprime) row.rhs += tr_weight_dim(r, mu);
    for (int s : sets.Itripleprime) row.rhs += verma_weight_dim(s, mu);
    rep.rows.push_back(row);
  }
  return rep;
}

struct EigenBlock {
  int t = 0;  // eigenvalue is t(t+2)
  Rational c;
  int predicted = 0;  // multiplicity predicted by the decomposition
  std::size_t kernelDim = 0;
  std::size_t excessDim = 0;
  bool squareKills = false;  // ker (Ω-c)² is the whole generalized eigenspace
  bool projective = false;   // t ∈ I' and mu ≤ -t-2
};

struct BlockReport {
  int n = 0;
  int mu = 0;
  std::size_t dim = 0;
  std::vector<EigenBlock> blocks;
  bool passed() const {
    std::size_t total = 0;
    for (const auto& b : blocks) {
      const std::size_t g = b.kernelDim + b.excessDim;
      if (static_cast<int>(g) != b.predicted || !b.squareKills) return false;
      if ((b.excessDim > 0) != b.projective) return false;
      total += g;
    }
    return total == dim;
  }
};

/// Generalized eigenspaces of Ω on the weight-mu space of L_n⊗V_0.
/// Candidates are c = t(t+2), t ∈ I' ∪ I'''. These values are pairwise
/// distinct, so the generalized dimensions summing to the block dimension
/// rules out any other eigenvalue.
inline BlockReport casimir_blocks(int n, int mu, int depth) {
  if (mu < n - 2 * depth || !same_parity(mu, n)) throw std::invalid_argument("casimir_blocks: weight not interior");
  const auto sets = index_sets(n, 0);
  const auto mod = tensor_module(n, depth);
  const QMat om = casimir_on_weight(mod, mu);
  BlockReport rep;
  rep.n = n;
  rep.mu = mu;
  rep.dim = om.rows();

  std::map<int, int> predicted;
  for (int r : sets.Iprime) predicted[r] += tr_weight_dim(r, mu);
  for (int s : sets.Itripleprime) predicted[s] += verma_weight_dim(s, mu);

  for (const auto& [t, mult] : predicted) {
    EigenBlock b;
    b.t = t;
    b.c = Rational(t * (t + 2));
    b.predicted = mult;
    b.projective = sets.in_Iprime(t) && mu <= -t - 2;
    const QMat A = shifted(om, b.c);
    const auto gk = generalized_kernel(A, 2);
    b.kernelDim = gk.kernel.size();
    b.excessDim = gk.excess.size();
    const std::size_t full = nullspace(A.power(static_cast<unsigned>(std::max<std::size_t>(rep.dim, 2)))).size();
    b.squareKills = full == b.kernelDim + b.excessDim;
    rep.blocks.push_back(b);
  }
  return rep;
}

}  // namespace vermalab::enright
