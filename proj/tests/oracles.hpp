#pragma once
// Independent brute-force references used to freeze expected values.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "wreath/partition.hpp"

namespace oracle {

using Monomial = std::vector<int>;
using Poly = std::map<Monomial, long>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Poly poly_power_sum(int nvars, int k) {
  Poly p;
  for (int i = 0; i < nvars; ++i) {
    Monomial m(nvars, 0);
    m[i] = k;
    p[m] += 1;
  }
  return p;
}

// Frobenius: chi^lam_mu is the coefficient of x^{lam + delta} in a_delta * p_mu.
inline long frobenius_character(const wreath::Partition& lam, const wreath::Partition& mu) {
  const int n = std::max(1, lam.size());
  Poly vandermonde{{Monomial(n, 0), 1}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Monomial mi(n, 0), mj(n, 0);
      mi[i] = 1;
      mj[j] = 1;
      vandermonde = poly_mul(vandermonde, Poly{{mi, 1}, {mj, -1}});
    }
  Poly prod = vandermonde;
  for (int part : mu.parts()) prod = poly_mul(prod, poly_power_sum(n, part));
  Monomial target(n, 0);
  for (int i = 0; i < n; ++i) target[i] = (i < lam.length() ? lam[i] : 0) + (n - 1 - i);
  auto it = prod.find(target);
  return it == prod.end() ? 0 : it->second;
}

// Cycle type of every permutation of {0..n-1}.
inline std::map<wreath::Partition, long> cycle_type_counts(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<wreath::Partition, long> counts;
  do {
    std::vector<bool> seen(n, false);
    std::vector<int> cycles;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = perm[j]) {
        seen[j] = true;
        ++len;
      }
      cycles.push_back(len);
    }
    counts[wreath::Partition::from_multiset(cycles)] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

}  // namespace oracle
