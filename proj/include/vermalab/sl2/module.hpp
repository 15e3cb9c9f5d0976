#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vermalab/exactla/linalg.hpp"

namespace vermalab::sl2 {

struct Fin {
  int i;
  auto operator<=>(const Fin&) const = default;
};
// w_k = x^k in the polynomial realization of a Verma module
struct PolyBasis {
  int k;
  auto operator<=>(const PolyBasis&) const = default;
};
struct Tensor {
  int i;
  int k;
  auto operator<=>(const Tensor&) const = default;
};
enum class GenKind { A, U };
// f^k a_{-r-2} (kind A) or f^k u_r (kind U)
struct ProjGen {
  GenKind kind;
  int k;
  auto operator<=>(const ProjGen&) const = default;
};

using BasisLabel = std::variant<Fin, PolyBasis, Tensor, ProjGen>;

inline std::string label_string(const BasisLabel& b) {
  struct V {
    std::string operator()(const Fin& x) const { return "v" + std::to_string(x.i); }
    std::string operator()(const PolyBasis& x) const { return "w" + std::to_string(x.k); }
    std::string operator()(const Tensor& x) const {
      return "v" + std::to_string(x.i) + "⊗w" + std::to_string(x.k);
    }
    std::string operator()(const ProjGen& x) const {
      return std::string(x.kind == GenKind::A ? "A" : "U") + std::to_string(x.k);
    }
  };
  return std::visit(V{}, b);
}

enum class ModuleKind { Ln, Verma, Tr, TensorLnV };

inline const char* kind_name(ModuleKind k) {
  switch (k) {
    case ModuleKind::Ln: return "Ln";
    case ModuleKind::Verma: return "Verma";
    case ModuleKind::Tr: return "Tr";
    case ModuleKind::TensorLnV: return "TensorLnV";
  }
  return "?";
}

/// Finite slice of an sl2-module. E and F are (dim + overflow) x dim: their
/// columns are exact images of slice vectors, with rows past dim() indexing
/// overflow labels that lie outside the slice. H is the diagonal weight matrix
/// of the slice.
struct TruncatedModule {
  ModuleKind kind = ModuleKind::Ln;
  int n = 0;
  int lambda = 0;
  int r = 0;
  int depth = 0;
  std::vector<BasisLabel> basis;
  std::vector<BasisLabel> overflow;
  std::vector<int> weights;  // basis then overflow
  QMat E, F, H;

  std::size_t dim() const { return basis.size(); }
  std::size_t extended_dim() const { return basis.size() + overflow.size(); }

  std::optional<std::size_t> find(const BasisLabel& b) const {
    auto it = index_.find(b);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t at(const BasisLabel& b) const {
    auto i = find(b);
    if (!i) throw std::out_of_range("label " + label_string(b) + " not in module");
    return *i;
  }
  const BasisLabel& label(std::size_t i) const { return i < dim() ? basis[i] : overflow.at(i - dim()); }

  /// Slice indices of weight mu, in basis order.
  std::vector<std::size_t> weight_space(int mu) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
      if (weights[i] == mu) out.push_back(i);
    return out;
  }
  /// Distinct weights of the slice, highest first.
  std::vector<int> slice_weights() const {
    std::set<int, std::greater<>> s(weights.begin(), weights.begin() + static_cast<long>(dim()));
    return {s.begin(), s.end()};
  }

  QMat E_trunc() const { return E.truncate_rows(dim()); }
  QMat F_trunc() const { return F.truncate_rows(dim()); }

  void rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < extended_dim(); ++i) index_.emplace(label(i), i);
  }

 private:
  std::map<BasisLabel, std::size_t> index_;
};

using Action = std::vector<std::pair<BasisLabel, Rational>>;

/// Assemble a module from labels and per-label e/f images. Images may only
/// mention labels of the slice or the overflow list.
inline TruncatedModule assemble(ModuleKind kind, std::vector<BasisLabel> basis, std::vector<BasisLabel> overflow,
                                const std::function<int(const BasisLabel&)>& weight,
                                const std::function<Action(const BasisLabel&)>& e_image,
                                const std::function<Action(const BasisLabel&)>& f_image) {
  TruncatedModule m;
  m.kind = kind;
  m.basis = std::move(basis);
  m.overflow = std::move(overflow);
  for (std::size_t i = 0; i < m.extended_dim(); ++i) m.weights.push_back(weight(m.label(i)));
  m.rebuild_index();
  const std::size_t d = m.dim(), x = m.extended_dim();
  m.E = QMat(x, d);
  m.F = QMat(x, d);
  m.H = QMat(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& [b, c] : e_image(m.basis[j])) m.E.add(m.at(b), j, c);
    for (const auto& [b, c] : f_image(m.basis[j])) m.F.add(m.at(b), j, c);
    m.H.set(j, j, Rational(m.weights[j]));
  }
  return m;
}

/// Finite-dimensional irreducible L_n on v_0..v_n.
inline TruncatedModule build_Ln(int n) {
  if (n < 0) throw std::invalid_argument("build_Ln: n must be nonnegative");
  std::vector<BasisLabel> basis;
  for (int i = 0; i <= n; ++i) basis.emplace_back(Fin{i});
  auto m = assemble(
      ModuleKind::Ln, basis, {}, [n](const BasisLabel& b) { return n - 2 * std::get<Fin>(b).i; },
      [n](const BasisLabel& b) {
        const int i = std::get<Fin>(b).i;
        if (i == 0) return Action{};
        return Action{{Fin{i - 1}, Rational(n - i + 1)}};
      },
      [n](const BasisLabel& b) {
        const int i = std::get<Fin>(b).i;
        if (i == n) return Action{};
        return Action{{Fin{i + 1}, Rational(i + 1)}};
      });
  m.n = n;
  m.depth = n;
  return m;
}

/// Verma module V_lambda realized on polynomials, basis w_0..w_depth.
inline TruncatedModule build_verma(int lambda, int depth) {
  if (depth < 0) throw std::invalid_argument("build_verma: depth must be nonnegative");
  std::vector<BasisLabel> basis;
  for (int k = 0; k <= depth; ++k) basis.emplace_back(PolyBasis{k});
  auto m = assemble(
      ModuleKind::Verma, basis, {PolyBasis{depth + 1}},
      [lambda](const BasisLabel& b) { return lambda - 2 * std::get<PolyBasis>(b).k; },
      [lambda](const BasisLabel& b) {
        const int k = std::get<PolyBasis>(b).k;
        const long c = -static_cast<long>(k) * (k - 1) + static_cast<long>(lambda) * k;
        if (k == 0 || c == 0) return Action{};
        return Action{{PolyBasis{k - 1}, Rational(c)}};
      },
      [](const BasisLabel& b) { return Action{{PolyBasis{std::get<PolyBasis>(b).k + 1}, Rational(1)}}; });
  m.lambda = lambda;
  m.depth = depth;
  return m;
}

/// L_n ⊗ V_lambda on v_i⊗w_k with k ≤ depth, ordered by weight (highest
/// first) and then by i. The coproduct is x ↦ x⊗1 + 1⊗x.
inline TruncatedModule build_tensor(int n, int depth, int lambda = 0) {
  if (n < 0 || depth < 0) throw std::invalid_argument("build_tensor: n and depth must be nonnegative");
  auto weight = [n, lambda](const BasisLabel& b) {
    const auto& t = std::get<Tensor>(b);
    return n - 2 * t.i + lambda - 2 * t.k;
  };
  auto ordered = [&](int k_lo, int k_hi) {
    std::vector<BasisLabel> out;
    for (int k = k_lo; k <= k_hi; ++k)
      for (int i = 0; i <= n; ++i) out.emplace_back(Tensor{i, k});
    std::stable_sort(out.begin(), out.end(), [&](const BasisLabel& a, const BasisLabel& b) {
      const int wa = weight(a), wb = weight(b);
      if (wa != wb) return wa > wb;
      return std::get<Tensor>(a).i < std::get<Tensor>(b).i;
    });
    return out;
  };
  auto m = assemble(
      ModuleKind::TensorLnV, ordered(0, depth), ordered(depth + 1, depth + 1), weight,
      [n, lambda](const BasisLabel& b) {
        const auto [i, k] = std::get<Tensor>(b);
        Action out;
        if (i > 0) out.push_back({Tensor{i - 1, k}, Rational(n - i + 1)});
        const long c = -static_cast<long>(k) * (k - 1) + static_cast<long>(lambda) * k;
        if (k > 0 && c != 0) out.push_back({Tensor{i, k - 1}, Rational(c)});
        return out;
      },
      [n](const BasisLabel& b) {
        const auto [i, k] = std::get<Tensor>(b);
        Action out;
        if (i < n) out.push_back({Tensor{i + 1, k}, Rational(i + 1)});
        out.push_back({Tensor{i, k + 1}, Rational(1)});
        return out;
      });
  m.n = n;
  m.lambda = lambda;
  m.depth = depth;
  return m;
}

/// Labels whose images under every word of length ≤ margin in {E, F} stay
/// inside the slice. Computed from the supports of E and F.
struct InteriorRegion {
  int margin = 0;
  std::vector<bool> member;
  std::vector<std::size_t> indices;
  bool contains(std::size_t i) const { return i < member.size() && member[i]; }
};

inline InteriorRegion interior(const TruncatedModule& m, int margin) {
  if (margin < 0) throw std::invalid_argument("interior: margin must be nonnegative");
  const std::size_t d = m.dim();
  // reach[j]: label j reaches overflow within the current number of steps
  std::vector<bool> reach(d, false);
  for (int step = 0; step < margin; ++step) {
    std::vector<bool> next(d, false);
    for (std::size_t j = 0; j < d; ++j) {
      bool bad = false;
      for (const QMat* op : {&m.E, &m.F}) {
        for (const auto& [i, v] : op->column(j).entries())
          if (i >= d || reach[i]) {
            bad = true;
            break;
          }
        if (bad) break;
      }
      next[j] = bad;
    }
    reach = std::move(next);
  }
  InteriorRegion out;
  out.margin = margin;
  out.member.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    out.member[j] = !reach[j];
    if (!reach[j]) out.indices.push_back(j);
  }
  return out;
}

/// h² + 2h + 4fe on the slice; exact on interior(m, 2).
inline QMat casimir(const TruncatedModule& m) {
  const QMat fe = m.F_trunc() * m.E_trunc();
  return m.H * m.H + Rational(2) * m.H + Rational(4) * fe;
}

/// Columns listed in `cols` of a and b agree.
inline bool columns_agree(const QMat& a, const QMat& b, const std::vector<std::size_t>& cols) {
  for (auto j : cols)
    if (!(a.column(j) == b.column(j))) return false;
  return true;
}

/// [E, F] = H checked with the rectangular action matrices, so the overflow
/// rows are compared too. Exact for columns in interior(m, 1).
inline bool commutator_holds(const TruncatedModule& m, int margin = 1) {
  const auto reg = interior(m, margin);
  for (auto j : reg.indices) {
    const QVec fx = m.F_trunc().column(j);
    const QVec ex = m.E_trunc().column(j);
    const QVec efx = m.E.apply(fx);
    const QVec fex = m.F.apply(ex);
    QVec hx(m.extended_dim());
    hx.set(j, Rational(m.weights[j]));
    if (!(efx - fex == hx)) return false;
  }
  return true;
}

/// E raises and F lowers weight by exactly 2; H is diagonal with the weights.
inline bool grading_holds(const TruncatedModule& m) {
  for (std::size_t j = 0; j < m.dim(); ++j) {
    for (const auto& [i, v] : m.E.column(j).entries())
      if (m.weights[i] != m.weights[j] + 2) return false;
    for (const auto& [i, v] : m.F.column(j).entries())
      if (m.weights[i] != m.weights[j] - 2) return false;
    const auto& hc = m.H.column(j);
    if (hc.nnz() > 1 || hc.get(j) != m.weights[j]) return false;
  }
  return true;
}

struct CategoryIReport {
  bool hDiagonalizable = false;
  bool fInjective = false;
  bool eLocallyNilpotent = false;
  bool all() const { return hDiagonalizable && fInjective && eLocallyNilpotent; }
};

/// Enright's category conditions on a slice: h acts diagonally by the declared
/// weights, f is injective on interior(1), e is locally nilpotent.
inline CategoryIReport verify_category_I(const TruncatedModule& m) {
  CategoryIReport rep;
  rep.hDiagonalizable = grading_holds(m);

  const auto reg = interior(m, 1);
  rep.fInjective = true;
  std::map<int, std::vector<std::size_t>> by_weight;
  for (auto j : reg.indices) by_weight[m.weights[j]].push_back(j);
  std::vector<std::size_t> all_rows(m.extended_dim());
  for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
  for (const auto& [mu, cols] : by_weight)
    if (rank(m.F.select(all_rows, cols)) != cols.size()) rep.fInjective = false;

  // e strictly raises weight, so e^N kills a vector once N exceeds half the
  // gap to the top weight of the module.
  int top = m.weights.empty() ? 0 : *std::max_element(m.weights.begin(), m.weights.end());
  rep.eLocallyNilpotent = rep.hDiagonalizable;
  const QMat et = m.E_trunc();
  for (std::size_t j = 0; j < m.dim() && rep.eLocallyNilpotent; ++j) {
    QVec x = QVec::unit(m.dim(), j);
    const int steps = (top - m.weights[j]) / 2 + 1;
    for (int s = 0; s < steps && !x.is_zero(); ++s) x = et.apply(x);
    if (!x.is_zero()) rep.eLocallyNilpotent = false;
  }
  return rep;
}

/// f^l x computed with the rectangular F; throws if an intermediate vector
/// leaves the slice.
inline QVec apply_power(const TruncatedModule& m, const QMat& op, QVec x, int l) {
  if (x.dim() != m.dim()) throw std::invalid_argument("apply_power: vector not in slice");
  for (int s = 0; s < l; ++s) {
    QVec y = op.apply(x);
    for (const auto& [i, v] : y.entries())
      if (i >= m.dim()) throw std::out_of_range("apply_power: depth exceeded");
    QVec z(m.dim());
    for (const auto& [i, v] : y.entries()) z.set(i, v);
    x = std::move(z);
  }
  return x;
}

}  // namespace vermalab::sl2
