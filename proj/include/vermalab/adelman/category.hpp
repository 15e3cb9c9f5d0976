#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "vermalab/exactla/linalg.hpp"

namespace vermalab::adelman {

/// A' --m1--> A --m2--> A'' over finite-dimensional Q-vector spaces (no exactness assumed).
struct DoubleArrow {
  QMat m1;  // dA x dA'
  QMat m2;  // dA'' x dA

  DoubleArrow() = default;
  DoubleArrow(QMat a1, QMat a2) : m1(std::move(a1)), m2(std::move(a2)) {
    if (m1.rows() != m2.cols()) throw std::invalid_argument("DoubleArrow: arrows are not composable");
  }
  static DoubleArrow zero_arrows(std::size_t d1, std::size_t d2, std::size_t d3) {
    return {QMat(d2, d1), QMat(d3, d2)};
  }

  std::size_t d1() const { return m1.cols(); }
  std::size_t d2() const { return m1.rows(); }
  std::size_t d3() const { return m2.rows(); }
  std::string dims() const {
    return "(" + std::to_string(d1()) + "," + std::to_string(d2()) + "," + std::to_string(d3()) + ")";
  }
};

/// The double arrow 0 -> A -> 0.
inline DoubleArrow embed(std::size_t dimA) { return DoubleArrow::zero_arrows(0, dimA, 0); }

/// Components x' : A' -> B', x : A -> B, x'' : A'' -> B''.
struct TripleMorphism {
  DoubleArrow source;
  DoubleArrow target;
  QMat xp, x, xpp;

  TripleMorphism() = default;
  TripleMorphism(DoubleArrow s, DoubleArrow t, QMat a, QMat b, QMat c)
      : source(std::move(s)), target(std::move(t)), xp(std::move(a)), x(std::move(b)), xpp(std::move(c)) {
    if (xp.rows() != target.d1() || xp.cols() != source.d1() || x.rows() != target.d2() || x.cols() != source.d2() ||
        xpp.rows() != target.d3() || xpp.cols() != source.d3())
      throw std::invalid_argument("TripleMorphism: component shapes do not match the objects");
  }

  static TripleMorphism identity(const DoubleArrow& X) {
    return {X, X, QMat::identity(X.d1()), QMat::identity(X.d2()), QMat::identity(X.d3())};
  }
  static TripleMorphism zero(const DoubleArrow& X, const DoubleArrow& Y) {
    return {X, Y, QMat(Y.d1(), X.d1()), QMat(Y.d2(), X.d2()), QMat(Y.d3(), X.d3())};
  }
};

/// embed on morphisms: the triple (0, f, 0) between embedded objects.
inline TripleMorphism embed(const QMat& f) {
  return {embed(f.cols()), embed(f.rows()), QMat(0, 0), f, QMat(0, 0)};
}

inline bool same_shape(const DoubleArrow& a, const DoubleArrow& b) {
  return a.d1() == b.d1() && a.d2() == b.d2() && a.d3() == b.d3();
}

inline bool is_morphism(const TripleMorphism& t) {
  return t.x * t.source.m1 == t.target.m1 * t.xp && t.xpp * t.source.m2 == t.target.m2 * t.x;
}

/// g ∘ f
inline TripleMorphism compose(const TripleMorphism& g, const TripleMorphism& f) {
  if (!same_shape(f.target, g.source)) throw std::invalid_argument("compose: objects do not match");
  return {f.source, g.target, g.xp * f.xp, g.x * f.x, g.xpp * f.xpp};
}

inline TripleMorphism operator+(const TripleMorphism& f, const TripleMorphism& g) {
  return {f.source, f.target, f.xp + g.xp, f.x + g.x, f.xpp + g.xpp};
}
inline TripleMorphism operator-(const TripleMorphism& f, const TripleMorphism& g) {
  return {f.source, f.target, f.xp - g.xp, f.x - g.x, f.xpp - g.xpp};
}
inline bool operator==(const TripleMorphism& f, const TripleMorphism& g) {
  return same_shape(f.source, g.source) && same_shape(f.target, g.target) && f.xp == g.xp && f.x == g.x &&
         f.xpp == g.xpp;
}

/// s1 : A -> B', s2 : A'' -> B with b' s1 + s2 a = α - β.
struct Homotopy {
  QMat s1, s2;
};

/// Linear equations in matrix unknowns, each equation a sum of terms L·U·R = rhs.
class LinearSystem {
 public:
  struct Unknown {
    std::size_t offset, rows, cols;
  };

  Unknown unknown(std::size_t rows, std::size_t cols) {
    Unknown u{vars_, rows, cols};
    vars_ += rows * cols;
    return u;
  }
  std::size_t equation(const QMat& rhs) {
    eqs_.push_back({rowsTotal_, rhs});
    rowsTotal_ += rhs.rows() * rhs.cols();
    return eqs_.size() - 1;
  }
  std::size_t equation(std::size_t rows, std::size_t cols) { return equation(QMat(rows, cols)); }
  void set_rhs(std::size_t eq, const QMat& rhs) {
    auto& e = eqs_.at(eq);
    if (rhs.rows() != e.rhs.rows() || rhs.cols() != e.rhs.cols())
      throw std::invalid_argument("LinearSystem: right-hand side shape mismatch");
    e.rhs = rhs;
  }

  void term(std::size_t eq, const QMat& L, const Unknown& u, const QMat& R, const Rational& c = Rational(1)) {
    const QMat& rhs = eqs_.at(eq).rhs;
    if (L.rows() != rhs.rows() || L.cols() != u.rows || R.rows() != u.cols || R.cols() != rhs.cols())
      throw std::invalid_argument("LinearSystem: term shape mismatch");
    terms_.push_back({eq, u, c * kron(R.transpose(), L)});
  }

  QMat matrix() const {
    QMat m(rowsTotal_, vars_);
    for (const auto& t : terms_)
      for (const auto& [r, c, v] : t.block.triplets()) m.add(eqs_[t.eq].row + r, t.u.offset + c, v);
    return m;
  }
  QVec rhs() const {
    QVec b(rowsTotal_);
    for (const auto& e : eqs_)
      for (const auto& [r, c, v] : e.rhs.triplets()) b.set(e.row + c * e.rhs.rows() + r, v);
    return b;
  }

  std::optional<QVec> solve() const { return vermalab::solve(matrix(), rhs()); }
  std::vector<QVec> homogeneous_basis() const { return nullspace(matrix()); }

  static QMat extract(const QVec& x, const Unknown& u) {
    QMat m(u.rows, u.cols);
    for (std::size_t c = 0; c < u.cols; ++c)
      for (std::size_t r = 0; r < u.rows; ++r) m.set(r, c, x.get(u.offset + c * u.rows + r));
    return m;
  }

 private:
  struct Eq {
    std::size_t row;
    QMat rhs;
  };
  struct Term {
    std::size_t eq;
    Unknown u;
    QMat block;
  };
  std::size_t vars_ = 0, rowsTotal_ = 0;
  std::vector<Eq> eqs_;
  std::vector<Term> terms_;
};

inline bool verify_homotopy(const TripleMorphism& f, const TripleMorphism& g, const Homotopy& h) {
  return f.target.m1 * h.s1 + h.s2 * f.source.m2 == f.x - g.x;
}

/// A witness for f ≃ g, re-verified before it is returned.
inline std::optional<Homotopy> homotopic(const TripleMorphism& f, const TripleMorphism& g) {
  if (!same_shape(f.source, g.source) || !same_shape(f.target, g.target))
    throw std::invalid_argument("homotopic: morphisms have different source or target");
  const auto& A = f.source;
  const auto& B = f.target;
  LinearSystem sys;
  const auto s1 = sys.unknown(B.d1(), A.d2());
  const auto s2 = sys.unknown(B.d2(), A.d3());
  const auto eq = sys.equation(f.x - g.x);
  sys.term(eq, B.m1, s1, QMat::identity(A.d2()));
  sys.term(eq, QMat::identity(B.d2()), s2, A.m2);
  const auto sol = sys.solve();
  if (!sol) return std::nullopt;
  Homotopy h{LinearSystem::extract(*sol, s1), LinearSystem::extract(*sol, s2)};
  if (!verify_homotopy(f, g, h)) throw VerificationError("homotopic: witness failed substitution");
  return h;
}

inline bool null_homotopic(const TripleMorphism& f) {
  return homotopic(f, TripleMorphism::zero(f.source, f.target)).has_value();
}

/// X ≅ 0 in the quotient category: the identity is null-homotopic.
inline bool zero_equivalent(const DoubleArrow& X) { return null_homotopic(TripleMorphism::identity(X)); }

// --- random instances -------------------------------------------------------

inline QMat random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> val(-2, 2), zero(0, 2);
  QMat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (zero(rng) != 0) m.set(r, c, Rational(val(rng)));
  return m;
}

/// Rank-deficient random matrix: generic arrows make most objects zero in the
/// quotient, so ranks are drawn below full.
inline QMat random_low_rank(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  const std::size_t full = std::min(rows, cols);
  if (full == 0) return QMat(rows, cols);
  std::uniform_int_distribution<std::size_t> rk(0, full - 1);
  const std::size_t r = rk(rng);
  return random_matrix(rows, r, rng) * random_matrix(r, cols, rng);
}

inline DoubleArrow random_object(std::mt19937_64& rng, int maxDim = 4) {
  std::uniform_int_distribution<int> dim(0, maxDim);
  const std::size_t d1 = dim(rng), d2 = dim(rng), d3 = dim(rng);
  return {random_low_rank(d2, d1, rng), random_low_rank(d3, d2, rng)};
}

/// Basis of the space of morphisms X -> Y (commuting triples), as triples.
inline std::vector<TripleMorphism> morphism_basis(const DoubleArrow& X, const DoubleArrow& Y) {
  LinearSystem sys;
  const auto u1 = sys.unknown(Y.d1(), X.d1());
  const auto u2 = sys.unknown(Y.d2(), X.d2());
  const auto u3 = sys.unknown(Y.d3(), X.d3());
  const auto e1 = sys.equation(Y.d2(), X.d1());
  sys.term(e1, QMat::identity(Y.d2()), u2, X.m1);
  sys.term(e1, Y.m1, u1, QMat::identity(X.d1()), Rational(-1));
  const auto e2 = sys.equation(Y.d3(), X.d2());
  sys.term(e2, QMat::identity(Y.d3()), u3, X.m2);
  sys.term(e2, Y.m2, u2, QMat::identity(X.d2()), Rational(-1));
  std::vector<TripleMorphism> out;
  for (const auto& v : sys.homogeneous_basis())
    out.emplace_back(X, Y, LinearSystem::extract(v, u1), LinearSystem::extract(v, u2), LinearSystem::extract(v, u3));
  return out;
}

inline TripleMorphism random_combination(const std::vector<TripleMorphism>& basis, const DoubleArrow& X,
                                         const DoubleArrow& Y, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  TripleMorphism out = TripleMorphism::zero(X, Y);
  for (const auto& b : basis) {
    const Rational c(coef(rng));
    out = out + TripleMorphism{X, Y, c * b.xp, c * b.x, c * b.xpp};
  }
  return out;
}

inline TripleMorphism random_morphism(const DoubleArrow& X, const DoubleArrow& Y, std::mt19937_64& rng) {
  return random_combination(morphism_basis(X, Y), X, Y, rng);
}

/// Basis of the null-homotopic morphisms X -> Y: commuting triples whose middle
/// component is b' s1 + s2 a for some s1, s2.
inline std::vector<TripleMorphism> null_homotopic_basis(const DoubleArrow& X, const DoubleArrow& Y) {
  LinearSystem sys;
  const auto u1 = sys.unknown(Y.d1(), X.d1());
  const auto u2 = sys.unknown(Y.d2(), X.d2());
  const auto u3 = sys.unknown(Y.d3(), X.d3());
  const auto s1 = sys.unknown(Y.d1(), X.d2());
  const auto s2 = sys.unknown(Y.d2(), X.d3());
  const auto e1 = sys.equation(Y.d2(), X.d1());
  sys.term(e1, QMat::identity(Y.d2()), u2, X.m1);
  sys.term(e1, Y.m1, u1, QMat::identity(X.d1()), Rational(-1));
  const auto e2 = sys.equation(Y.d3(), X.d2());
  sys.term(e2, QMat::identity(Y.d3()), u3, X.m2);
  sys.term(e2, Y.m2, u2, QMat::identity(X.d2()), Rational(-1));
  const auto e3 = sys.equation(Y.d2(), X.d2());
  sys.term(e3, QMat::identity(Y.d2()), u2, QMat::identity(X.d2()));
  sys.term(e3, Y.m1, s1, QMat::identity(X.d2()), Rational(-1));
  sys.term(e3, QMat::identity(Y.d2()), s2, X.m2, Rational(-1));
  std::vector<TripleMorphism> out;
  for (const auto& v : sys.homogeneous_basis())
    out.emplace_back(X, Y, LinearSystem::extract(v, u1), LinearSystem::extract(v, u2), LinearSystem::extract(v, u3));
  return out;
}

}  // namespace vermalab::adelman
