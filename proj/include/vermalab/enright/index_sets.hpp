#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "vermalab/exactla/scalar.hpp"

namespace vermalab::enright {

struct IndexSets {
  int n = 0;
  int lambda = 0;
  std::vector<int> I, Iprime, Idoubleprime, Itripleprime;  // all ascending

  bool in_I(int r) const { return std::binary_search(I.begin(), I.end(), r); }
  bool in_Iprime(int r) const { return std::binary_search(Iprime.begin(), Iprime.end(), r); }
  bool in_Itripleprime(int r) const { return std::binary_search(Itripleprime.begin(), Itripleprime.end(), r); }
};

inline IndexSets index_sets(int n, int lambda = 0) {
  if (n < 0) throw std::invalid_argument("index_sets: n must be nonnegative");
  IndexSets s;
  s.n = n;
  s.lambda = lambda;
  for (int r = -n; r <= n; r += 2) s.I.push_back(r);
  for (int r : s.I)
    if (lambda + r >= 0 && s.in_I(-(lambda + r) - 2 - lambda)) s.Iprime.push_back(r);
  for (int r : s.Iprime) s.Idoubleprime.push_back(-r - 2 * lambda - 2);
  std::sort(s.Idoubleprime.begin(), s.Idoubleprime.end());
  for (int r : s.I)
    if (!s.in_Iprime(r) && !std::binary_search(s.Idoubleprime.begin(), s.Idoubleprime.end(), r))
      s.Itripleprime.push_back(r);

  std::vector<int> all;
  all.insert(all.end(), s.Iprime.begin(), s.Iprime.end());
  all.insert(all.end(), s.Idoubleprime.begin(), s.Idoubleprime.end());
  all.insert(all.end(), s.Itripleprime.begin(), s.Itripleprime.end());
  std::sort(all.begin(), all.end());
  if (all != s.I) throw VerificationError("index_sets: I', I'', I''' do not partition I");
  return s;
}

}  // namespace vermalab::enright
