#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "vermalab/exactla/scalar.hpp"

namespace vermalab::heisenberg {

enum class Letter { B, A };

/// A single generator a_n or b_m, n, m >= 1.
struct Generator {
  Letter letter;
  int index;
  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator a(int n) { return {Letter::A, n}; }
inline Generator b(int m) { return {Letter::B, m}; }

using Word = std::vector<Generator>;

/// b_{m_1} ... b_{m_k} a_{n_1} ... a_{n_r} with both index lists weakly increasing.
struct NormalMonomial {
  std::vector<int> b;
  std::vector<int> a;

  bool valid() const {
    auto ok = [](const std::vector<int>& v) {
      return std::is_sorted(v.begin(), v.end()) && std::all_of(v.begin(), v.end(), [](int x) { return x >= 1; });
    };
    return ok(b) && ok(a);
  }
  bool is_one() const { return a.empty() && b.empty(); }
  /// Weighted degree: b_m contributes m, a_n contributes -n.
  int degree() const {
    int d = 0;
    for (int m : b) d += m;
    for (int n : a) d -= n;
    return d;
  }
  Word word() const {
    Word w;
    for (int m : b) w.push_back(heisenberg::b(m));
    for (int n : a) w.push_back(heisenberg::a(n));
    return w;
  }
  std::string to_string() const {
    if (is_one()) return "1";
    std::string s;
    for (int m : b) s += "b_" + std::to_string(m);
    for (int n : a) s += "a_" + std::to_string(n);
    return s;
  }
  friend bool operator==(const NormalMonomial&, const NormalMonomial&) = default;
  friend auto operator<=>(const NormalMonomial&, const NormalMonomial&) = default;
};

/// Number of pairs (a before b) in a word; the exchange rule lowers it strictly.
inline long ab_inversions(const Word& w) {
  long inv = 0, as = 0;
  for (const auto& g : w) {
    if (g.letter == Letter::A) ++as;
    else inv += as;
  }
  return inv;
}

/// Element of the integral Heisenberg algebra in the normal-monomial basis.
class HElem {
 public:
  using Terms = std::map<NormalMonomial, Rational>;

  HElem() = default;
  HElem(const NormalMonomial& m, const Rational& c = Rational(1)) { add(m, c); }  // NOLINT

  static HElem one() { return HElem(NormalMonomial{}); }
  /// a_0 = b_0 = 1 and negative indices give 0.
  static HElem gen_a(int n) {
    if (n < 0) return {};
    return n == 0 ? one() : HElem(NormalMonomial{{}, {n}});
  }
  static HElem gen_b(int m) {
    if (m < 0) return {};
    return m == 0 ? one() : HElem(NormalMonomial{{m}, {}});
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const NormalMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const NormalMonomial& m, const Rational& c) {
    if (!m.valid()) throw std::invalid_argument("HElem: monomial is not in normal order");
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  HElem& operator+=(const HElem& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  HElem& operator-=(const HElem& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend HElem operator+(HElem x, const HElem& y) { return x += y; }
  friend HElem operator-(HElem x, const HElem& y) { return x -= y; }
  friend HElem operator*(const Rational& s, const HElem& x) {
    HElem out;
    for (const auto& [m, c] : x.terms_) out.add(m, s * c);
    return out;
  }
  friend bool operator==(const HElem&, const HElem&) = default;

  bool integral_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return is_integer(t.second) && sgn(t.second) >= 0; });
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      const bool neg = sgn(c) < 0;
      const Rational mag = abs(c);
      if (s.empty()) s += neg ? "-" : "";
      else s += neg ? " - " : " + ";
      if (m.is_one()) s += mag.get_str();
      else s += (mag == 1 ? "" : mag.get_str()) + m.to_string();
    }
    return s;
  }

 private:
  Terms terms_;
};

enum class Strategy { Leftmost, Rightmost };

struct RewriteStats {
  long steps = 0;
  bool measureDecreasing = true;
};

namespace detail {

inline NormalMonomial sort_blocks(const Word& w) {
  NormalMonomial m;
  for (const auto& g : w) (g.letter == Letter::B ? m.b : m.a).push_back(g.index);
  std::sort(m.b.begin(), m.b.end());
  std::sort(m.a.begin(), m.a.end());
  return m;
}

/// Position p with w[p] = a, w[p+1] = b, or -1.
inline long find_redex(const Word& w, Strategy s) {
  const long len = static_cast<long>(w.size());
  if (s == Strategy::Leftmost) {
    for (long p = 0; p + 1 < len; ++p)
      if (w[p].letter == Letter::A && w[p + 1].letter == Letter::B) return p;
  } else {
    for (long p = len - 2; p >= 0; --p)
      if (w[p].letter == Letter::A && w[p + 1].letter == Letter::B) return p;
  }
  return -1;
}

}  // namespace detail

/// Rewrites a word with a_n b_m -> b_m a_n + b_{m-1} a_{n-1}; once no a precedes a b,
/// the commuting b- and a-blocks are sorted.
inline HElem normal_form(const Word& word, Strategy strategy = Strategy::Leftmost, RewriteStats* stats = nullptr) {
  for (const auto& g : word)
    if (g.index < 1) throw std::invalid_argument("normal_form: generator indices must be positive");
  HElem out;
  std::map<Word, Integer> pending{{word, Integer(1)}};
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Integer& c = node.mapped();
    const long p = detail::find_redex(w, strategy);
    if (p < 0) {
      out.add(detail::sort_blocks(w), Rational(c));
      continue;
    }
    const int n = w[p].index, m = w[p + 1].index;
    Word swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    Word lowered(w.begin(), w.begin() + p);
    if (m > 1) lowered.push_back(b(m - 1));
    if (n > 1) lowered.push_back(a(n - 1));
    lowered.insert(lowered.end(), w.begin() + p + 2, w.end());
    if (stats) {
      ++stats->steps;
      const long before = ab_inversions(w);
      if (ab_inversions(swapped) >= before || ab_inversions(lowered) >= before) stats->measureDecreasing = false;
    }
    pending[std::move(swapped)] += c;
    pending[std::move(lowered)] += c;
  }
  return out;
}

inline HElem normal_form(const NormalMonomial& left, const NormalMonomial& right) {
  Word w = left.word();
  const Word r = right.word();
  w.insert(w.end(), r.begin(), r.end());
  return normal_form(w);
}

inline HElem operator*(const HElem& x, const HElem& y) {
  HElem out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) out += Rational(cx * cy) * normal_form(mx, my);
  return out;
}

inline HElem commutator(const HElem& x, const HElem& y) { return x * y - y * x; }

}  // namespace vermalab::heisenberg
