#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "vermalab/exactla/ratfunc.hpp"
#include "vermalab/hecke/permutation.hpp"

namespace vermalab::hecke {

/// Finite linear combination of permutations of {1..n} with coefficients in F.
/// Rule supplies the product of basis elements.
template <class F, class Rule>
class PermAlgebraElement {
 public:
  using Terms = std::map<Permutation, F>;

  explicit PermAlgebraElement(int n = 0) : n_(n) {}
  PermAlgebraElement(int n, const Permutation& w, F c = FieldTraits<F>::one()) : n_(n) {
    if (w.size() != n) throw std::invalid_argument("algebra element: permutation of wrong size");
    add(w, c);
  }

  static PermAlgebraElement one(int n) { return {n, Permutation::identity(n)}; }
  static PermAlgebraElement basis(const Permutation& w) { return {w.size(), w}; }
  static PermAlgebraElement generator(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("T_i: index out of range");
    return {n, Permutation::simple(n, i)};
  }

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  F coeff(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? FieldTraits<F>::zero() : it->second;
  }

  void add(const Permutation& w, const F& c) {
    if (FieldTraits<F>::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (FieldTraits<F>::is_zero(it->second)) terms_.erase(it);
    }
  }

  PermAlgebraElement& operator+=(const PermAlgebraElement& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  PermAlgebraElement& operator-=(const PermAlgebraElement& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend PermAlgebraElement operator+(PermAlgebraElement a, const PermAlgebraElement& b) { return a += b; }
  friend PermAlgebraElement operator-(PermAlgebraElement a, const PermAlgebraElement& b) { return a -= b; }
  friend PermAlgebraElement operator*(const F& s, const PermAlgebraElement& a) {
    PermAlgebraElement out(a.n_);
    for (const auto& [w, c] : a.terms_) out.add(w, s * c);
    return out;
  }
  friend PermAlgebraElement operator*(const PermAlgebraElement& a, const PermAlgebraElement& b) {
    a.check(b);
    PermAlgebraElement out(a.n_);
    for (const auto& [w, c] : a.terms_) out += c * Rule::left_basis(w, b);
    return out;
  }
  friend bool operator==(const PermAlgebraElement& a, const PermAlgebraElement& b) {
    return a.n_ == b.n_ && (a - b).is_zero();
  }

  /// Coefficientwise map into another coefficient ring.
  template <class G, class R2, class Fn>
  PermAlgebraElement<G, R2> map_coeffs(Fn&& fn) const {
    PermAlgebraElement<G, R2> out(n_);
    for (const auto& [w, c] : terms_) out.add(w, fn(c));
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + vermalab::to_string(c) + ")" + Rule::symbol() + w.to_string();
    }
    return s;
  }

 private:
  void check(const PermAlgebraElement& o) const {
    if (o.n_ != n_) throw std::invalid_argument("algebra elements of different rank");
  }

  int n_;
  Terms terms_;
};

/// Group algebra rule: w · v = wv.
struct GroupRule {
  static std::string symbol() { return ""; }
  template <class E>
  static E left_basis(const Permutation& w, const E& b) {
    E out(b.n());
    for (const auto& [v, c] : b.terms()) out.add(w * v, c);
    return out;
  }
};

/// Iwahori-Hecke rule: T_i T_v = T_{s_i v} if l(s_i v) > l(v), else q T_{s_i v} + (q-1) T_v.
/// T_w acts by its reduced word, rightmost letter first.
struct HeckeRule {
  static std::string symbol() { return "T"; }
  template <class E>
  static E left_simple(int i, const E& b) {
    const RatFunc q = RatFunc::q();
    E out(b.n());
    for (const auto& [v, c] : b.terms()) {
      const Permutation sv = v.left_simple(i);
      if (v.left_ascent(i)) {
        out.add(sv, c);
      } else {
        out.add(sv, q * c);
        out.add(v, (q - RatFunc(1)) * c);
      }
    }
    return out;
  }
  template <class E>
  static E left_basis(const Permutation& w, const E& b) {
    const auto word = w.reduced_word();
    E out = b;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = left_simple(*it, out);
    return out;
  }
};

using GroupAlgebraElement = PermAlgebraElement<Rational, GroupRule>;
using HeckeElement = PermAlgebraElement<RatFunc, HeckeRule>;

inline HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b) { return a * b; }

}  // namespace vermalab::hecke
