#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "vermalab/heisenberg/algebra.hpp"

namespace vermalab::heisenberg {

/// Integer polynomial in the commuting b_1, b_2, ..., of weighted degree at most bound.
/// Keys are weakly increasing index lists.
class FockPoly {
 public:
  explicit FockPoly(int bound = 0) : bound_(bound) {
    if (bound < 0) throw std::invalid_argument("FockPoly: negative degree bound");
  }
  static FockPoly vacuum(int bound) {
    FockPoly p(bound);
    p.add({}, Integer(1));
    return p;
  }
  static FockPoly monomial(int bound, std::vector<int> bs, const Integer& c = Integer(1)) {
    FockPoly p(bound);
    p.add(std::move(bs), c);
    return p;
  }

  int bound() const { return bound_; }
  const std::map<std::vector<int>, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(std::vector<int> bs, const Integer& c) {
    std::sort(bs.begin(), bs.end());
    int d = 0;
    for (int m : bs) {
      if (m < 1) throw std::invalid_argument("FockPoly: indices must be positive");
      d += m;
    }
    if (d > bound_) throw std::overflow_error("FockPoly: degree " + std::to_string(d) + " exceeds bound");
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.try_emplace(std::move(bs), c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const FockPoly&, const FockPoly&) = default;

  std::string to_string() const {
    HElem h;
    for (const auto& [bs, c] : terms_) h.add(NormalMonomial{bs, {}}, Rational(c));
    return h.to_string();
  }

 private:
  int bound_;
  std::map<std::vector<int>, Integer> terms_;
};

/// Lowering model: b_m multiplies, a_n kills 1 (n >= 1). The action of h on p is the
/// a-free part of the normal form of h·p, since every surviving a-term acts on 1 by 0.
inline FockPoly fock_action(const HElem& h, const FockPoly& p) {
  FockPoly out(p.bound());
  for (const auto& [mh, ch] : h.terms()) {
    if (!is_integer(ch)) throw std::domain_error("fock_action: coefficients must be integers");
    for (const auto& [bs, cp] : p.terms()) {
      const HElem nf = normal_form(mh, NormalMonomial{bs, {}});
      for (const auto& [m, c] : nf.terms())
        if (m.a.empty()) out.add(m.b, ch.get_num() * cp * c.get_num());
    }
  }
  return out;
}

}  // namespace vermalab::heisenberg
