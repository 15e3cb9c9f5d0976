#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace vermalab::hecke {

/// Permutation of {1..n} in one-line notation: w(x) = image[x-1].
/// Products compose right to left, (u*v)(x) = u(v(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size() + 1, false);
    for (int x : w_) {
      if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)])
        throw std::invalid_argument("Permutation: not a bijection on {1..n}");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  static Permutation identity(int n) {
    if (n < 0) throw std::invalid_argument("Permutation: negative size");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }
  static Permutation transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n) throw std::out_of_range("transposition: index out of range");
    auto p = identity(n);
    std::swap(p.w_[static_cast<std::size_t>(a - 1)], p.w_[static_cast<std::size_t>(b - 1)]);
    return p;
  }
  /// s_i = (i i+1)
  static Permutation simple(int n, int i) { return transposition(n, i, i + 1); }

  static std::vector<Permutation> all(int n) {
    std::vector<Permutation> out;
    auto p = identity(n);
    do out.push_back(p);
    while (std::next_permutation(p.w_.begin(), p.w_.end()));
    return out;
  }

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int x) const { return w_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& one_line() const { return w_; }

  Permutation inverse() const {
    std::vector<int> v(w_.size());
    for (int x = 1; x <= size(); ++x) v[static_cast<std::size_t>((*this)(x) - 1)] = x;
    return Permutation(std::move(v));
  }

  /// Coxeter length = number of inversions.
  int length() const {
    int l = 0;
    for (std::size_t a = 0; a < w_.size(); ++a)
      for (std::size_t b = a + 1; b < w_.size(); ++b)
        if (w_[a] > w_[b]) ++l;
    return l;
  }

  /// s_i * w, i.e. swap the values i and i+1.
  Permutation left_simple(int i) const {
    Permutation p = *this;
    for (int& x : p.w_) {
      if (x == i) x = i + 1;
      else if (x == i + 1) x = i;
    }
    return p;
  }
  /// l(s_i w) > l(w) iff i sits to the left of i+1 in the one-line word.
  bool left_ascent(int i) const {
    const auto pi = std::find(w_.begin(), w_.end(), i);
    const auto pj = std::find(w_.begin(), w_.end(), i + 1);
    return pi < pj;
  }

  /// Reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}.
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    Permutation p = *this;
    for (;;) {
      int i = 1;
      while (i < size() && p.left_ascent(i)) ++i;
      if (i >= size()) break;
      word.push_back(i);
      p = p.left_simple(i);
    }
    return word;
  }

  friend Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("Permutation: size mismatch");
    std::vector<int> w(u.w_.size());
    for (int x = 1; x <= v.size(); ++x) w[static_cast<std::size_t>(x - 1)] = u(v(x));
    return Permutation(std::move(w));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t a = 0; a < w_.size(); ++a) {
      if (a) s += ' ';
      s += std::to_string(w_[a]);
    }
    return s + "]";
  }

 private:
  std::vector<int> w_;
};

}  // namespace vermalab::hecke
