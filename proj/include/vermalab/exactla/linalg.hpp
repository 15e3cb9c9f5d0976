#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "vermalab/exactla/ratfunc.hpp"
#include "vermalab/exactla/scalar.hpp"
#include "vermalab/exactla/sparse.hpp"

namespace vermalab {

/// Reduced row echelon form of a row system. Only the first `pivot_cols`
/// columns are eligible as pivots; trailing columns ride along (augmented
/// right-hand sides).
template <class F>
struct Echelon {
  using Row = std::map<std::size_t, F>;
  std::vector<Row> pivot_rows;      // pivot entry is 1, pivot column eliminated elsewhere
  std::vector<std::size_t> pivots;  // pivot column of pivot_rows[i], strictly increasing
  std::vector<Row> zero_rows;       // rows with nothing left in the pivot columns
};

namespace detail {

inline Integer row_content(const std::map<std::size_t, Integer>& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) {
    g = gcd(g, v);
    if (g == 1) break;
  }
  return g;
}

inline void divide_row(std::map<std::size_t, Integer>& row, const Integer& g) {
  if (g == 0 || g == 1) return;
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a := pa * a - pb * b, dropping cancelled entries.
inline void combine_rows(std::map<std::size_t, Integer>& a, const Integer& pa, const std::map<std::size_t, Integer>& b,
                         const Integer& pb) {
  if (pa != 1)
    for (auto& [c, v] : a) v *= pa;
  for (const auto& [c, v] : b) {
    auto it = a.find(c);
    if (it == a.end()) {
      a.emplace(c, -pb * v);
    } else {
      it->second -= pb * v;
      if (it->second == 0) a.erase(it);
    }
  }
}

// Fraction-free Gauss-Jordan on integer rows. Rows are rescaled by their
// content after every combination so entries stay small.
inline Echelon<Rational> eliminate_rational(const std::vector<std::map<std::size_t, Rational>>& input,
                                            std::size_t pivot_cols) {
  std::vector<std::map<std::size_t, Integer>> rows;
  rows.reserve(input.size());
  for (const auto& r : input) {
    Integer den = 1;
    for (const auto& [c, v] : r) den = lcm(den, v.get_den());
    std::map<std::size_t, Integer> ir;
    for (const auto& [c, v] : r) {
      Integer x = v.get_num() * (den / v.get_den());
      if (x != 0) ir.emplace(c, std::move(x));
    }
    divide_row(ir, row_content(ir));
    rows.push_back(std::move(ir));
  }

  std::vector<std::size_t> pivots;
  std::size_t placed = 0;
  for (std::size_t col = 0; col < pivot_cols && placed < rows.size(); ++col) {
    std::size_t found = rows.size();
    for (std::size_t i = placed; i < rows.size(); ++i)
      if (rows[i].count(col) != 0) {
        found = i;
        break;
      }
    if (found == rows.size()) continue;
    std::swap(rows[placed], rows[found]);
    const Integer piv = rows[placed].at(col);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == placed) continue;
      auto it = rows[i].find(col);
      if (it == rows[i].end()) continue;
      const Integer x = it->second;
      const Integer g = gcd(piv, x);
      combine_rows(rows[i], piv / g, rows[placed], x / g);
      divide_row(rows[i], row_content(rows[i]));
    }
    pivots.push_back(col);
    ++placed;
  }

  Echelon<Rational> out;
  out.pivots = pivots;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::map<std::size_t, Rational> r;
    if (i < placed) {
      const Integer piv = rows[i].at(pivots[i]);
      for (const auto& [c, v] : rows[i]) r.emplace(c, make_rational(v, piv));
      out.pivot_rows.push_back(std::move(r));
    } else {
      for (const auto& [c, v] : rows[i]) r.emplace(c, Rational(v));
      out.zero_rows.push_back(std::move(r));
    }
  }
  return out;
}

template <class F>
Echelon<F> eliminate_field(std::vector<std::map<std::size_t, F>> rows, std::size_t pivot_cols) {
  using Traits = FieldTraits<F>;
  std::vector<std::size_t> pivots;
  std::size_t placed = 0;
  for (std::size_t col = 0; col < pivot_cols && placed < rows.size(); ++col) {
    std::size_t found = rows.size();
    for (std::size_t i = placed; i < rows.size(); ++i)
      if (rows[i].count(col) != 0) {
        found = i;
        break;
      }
    if (found == rows.size()) continue;
    std::swap(rows[placed], rows[found]);
    const F inv = Traits::one() / rows[placed].at(col);
    for (auto& [c, v] : rows[placed]) v = v * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == placed) continue;
      auto it = rows[i].find(col);
      if (it == rows[i].end()) continue;
      const F x = it->second;
      for (const auto& [c, v] : rows[placed]) {
        auto jt = rows[i].find(c);
        const F delta = Traits::zero() - x * v;
        if (jt == rows[i].end()) {
          rows[i].emplace(c, delta);
        } else {
          jt->second = jt->second + delta;
          if (Traits::is_zero(jt->second)) rows[i].erase(jt);
        }
      }
    }
    pivots.push_back(col);
    ++placed;
  }
  Echelon<F> out;
  out.pivots = pivots;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i < placed)
      out.pivot_rows.push_back(std::move(rows[i]));
    else if (!rows[i].empty())
      out.zero_rows.push_back(std::move(rows[i]));
  }
  return out;
}

}  // namespace detail

/// Row reduction with pivots restricted to columns [0, pivot_cols).
/// Pivot columns are chosen lowest index first, pivot rows first-available.
template <class F>
Echelon<F> eliminate(const std::vector<std::map<std::size_t, F>>& rows, std::size_t pivot_cols) {
  if constexpr (std::is_same_v<F, Rational>)
    return detail::eliminate_rational(rows, pivot_cols);
  else
    return detail::eliminate_field<F>(rows, pivot_cols);
}

/// Scale a vector into canonical form. Over Q: integer entries with gcd 1 and
/// first nonzero entry positive. Over Q(q): first nonzero entry equal to 1.
template <class F>
SparseVec<F> normalize_direction(const SparseVec<F>& v) {
  if (v.is_zero()) return v;
  if constexpr (std::is_same_v<F, Rational>) {
    Integer den = 1;
    for (const auto& [i, x] : v.entries()) den = lcm(den, x.get_den());
    Integer g = 0;
    for (const auto& [i, x] : v.entries()) g = gcd(g, x.get_num() * (den / x.get_den()));
    Rational scale = make_rational(den, g);
    if (sgn(v.entries().begin()->second) < 0) scale = -scale;
    return scale * v;
  } else {
    const F lead = v.entries().begin()->second;
    return (FieldTraits<F>::one() / lead) * v;
  }
}

template <class F>
std::size_t rank(const SparseMat<F>& m) {
  return eliminate(m.row_maps(), m.cols()).pivots.size();
}

/// Basis of ker(m), one vector per non-pivot column in increasing order,
/// each in canonical direction (see normalize_direction).
template <class F>
std::vector<SparseVec<F>> nullspace(const SparseMat<F>& m) {
  using Traits = FieldTraits<F>;
  const Echelon<F> ech = eliminate(m.row_maps(), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<SparseVec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    SparseVec<F> x(m.cols());
    x.set(free, Traits::one());
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      auto it = ech.pivot_rows[i].find(free);
      if (it != ech.pivot_rows[i].end()) x.set(ech.pivots[i], Traits::zero() - it->second);
    }
    basis.push_back(normalize_direction(x));
  }
  return basis;
}

/// Some x with m x = b, or nullopt when b is outside the image.
/// Free variables are set to zero.
template <class F>
std::optional<SparseVec<F>> solve(const SparseMat<F>& m, const SparseVec<F>& b) {
  if (b.dim() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong dimension");
  auto rows = m.row_maps();
  const std::size_t rhs = m.cols();
  for (const auto& [i, v] : b.entries()) rows[i].emplace(rhs, v);
  const Echelon<F> ech = eliminate(rows, m.cols());
  for (const auto& r : ech.zero_rows)
    if (r.count(rhs) != 0) return std::nullopt;
  SparseVec<F> x(m.cols());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    auto it = ech.pivot_rows[i].find(rhs);
    if (it != ech.pivot_rows[i].end()) x.set(ech.pivots[i], it->second);
  }
  return x;
}

template <class F>
struct GeneralizedKernel {
  std::vector<SparseVec<F>> kernel;  // basis of ker(m)
  std::vector<SparseVec<F>> excess;  // completes kernel to a basis of ker(m^power)
};

template <class F>
SparseMat<F> columns_matrix(std::size_t dim, const std::vector<SparseVec<F>>& vs) {
  return SparseMat<F>::from_columns(dim, vs);
}

/// ker(m) together with an extension to a basis of ker(m^power).
/// Excess vectors are drawn from the canonical basis of ker(m^power) in order,
/// keeping each one that is independent of everything chosen so far.
template <class F>
GeneralizedKernel<F> generalized_kernel(const SparseMat<F>& m, unsigned power) {
  if (!m.is_square()) throw std::invalid_argument("generalized_kernel: matrix not square");
  if (power == 0) throw std::invalid_argument("generalized_kernel: power must be positive");
  GeneralizedKernel<F> out;
  out.kernel = nullspace(m);
  const auto big = nullspace(m.power(power));
  std::vector<SparseVec<F>> span = out.kernel;
  std::size_t current = span.size();
  for (const auto& v : big) {
    span.push_back(v);
    const std::size_t r = rank(columns_matrix(m.rows(), span));
    if (r > current) {
      current = r;
      out.excess.push_back(v);
    } else {
      span.pop_back();
    }
  }
  return out;
}

/// The scalar c with b = c a, if one exists (a must be nonzero).
template <class F>
std::optional<F> proportionality(const SparseVec<F>& a, const SparseVec<F>& b) {
  if (a.is_zero()) throw std::invalid_argument("proportionality: reference vector is zero");
  if (a.dim() != b.dim()) return std::nullopt;
  const auto& [i0, a0] = *a.entries().begin();
  const F c = b.get(i0) / a0;
  if (!(c * a == b)) return std::nullopt;
  return c;
}

}  // namespace vermalab
