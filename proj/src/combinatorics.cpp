#include "qfi/combinatorics.hpp"

#include <cassert>
#include <limits>

namespace qfi {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  // Exact stepwise product; each prefix is itself a binomial coefficient.
  unsigned long long result = 1;
  for (long long t = 1; t <= k; ++t) {
    result = result * static_cast<unsigned long long>(n - k + t) /
             static_cast<unsigned long long>(t);
  }
  assert(result <= static_cast<unsigned long long>(
                       std::numeric_limits<long long>::max()));
  return static_cast<long long>(result);
}

unsigned long long binomial_capped(unsigned long long n, unsigned long long k,
                                   unsigned long long cap) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (unsigned long long t = 1; t <= k; ++t) {
    result = result * (n - k + t) / t;  // each prefix is C(n-k+t, t), exact
    if (result > cap) return cap + 1;
  }
  return static_cast<unsigned long long>(result);
}

std::vector<Monomial> all_monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (d < 0 || d > n) return out;
  if (d == 0) {
    out.push_back(Monomial{});
    return out;
  }
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    out.push_back(Monomial::from_indices(idx));
    // next combination in lex order on ascending index vectors
    int i = d - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (d - 1 - i)) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

}  // namespace qfi
