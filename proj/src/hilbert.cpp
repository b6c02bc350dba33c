#include "qfi/hilbert.hpp"

#include "qfi/combinatorics.hpp"
#include "qfi/complexes.hpp"
#include "qfi/quasi.hpp"

namespace qfi {

BigInt big_binomial(long long m, long long j) {
  if (j < 0 || m < j) return 0;
  if (j > m - j) j = m - j;
  BigInt result = 1;
  for (long long t = 1; t <= j; ++t) {
    result = result * (m - j + t) / t;
  }
  return result;
}

namespace {

// f(delta_N) through the quasi-type premise: dimensions must agree.
FVector nonface_f_vector_checked(const MonomialIdeal& ideal) {
  quasi_type(ideal);  // throws NotFullSupport / DimensionMismatch
  return f_vector(stanley_reisner_complex(ideal));
}

}  // namespace

BigInt hilbert_function(const MonomialIdeal& ideal, long long k) {
  FVector fn = nonface_f_vector_checked(ideal);
  if (k == 0) return 1;
  BigInt total = 0;
  for (int i = 0; i <= fn.dim(); ++i) {
    total += big_binomial(k - 1, i) * fn.at(i);
  }
  return total;
}

HilbertSeries hilbert_series(const MonomialIdeal& ideal) {
  FVector fn = nonface_f_vector_checked(ideal);
  int s = fn.dim();

  HilbertSeries series;
  for (int i = -1; i <= s; ++i) {
    series.terms.emplace_back(fn.at(i), i + 1);
  }

  // Single-denominator form: sum_i c_i k^{i+1} (1-k)^{s-i} over (1-k)^{s+1}.
  series.denominator_pole = s + 1;
  std::vector<BigInt> numerator(static_cast<std::size_t>(s) + 2, 0);
  for (int i = -1; i <= s; ++i) {
    BigInt c = fn.at(i);
    int shift = i + 1;
    for (int j = 0; j <= s - i; ++j) {
      int sign = (j % 2 == 0) ? 1 : -1;
      numerator[static_cast<std::size_t>(shift + j)] +=
          c * sign * binomial(s - i, j);
    }
  }
  while (numerator.size() > 1 && numerator.back() == 0) numerator.pop_back();
  series.numerator = std::move(numerator);
  return series;
}

std::vector<BigInt> expand_series(const HilbertSeries& series, int K) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(K) + 1, 0);
  for (const auto& [c, p] : series.terms) {
    if (p == 0) {
      coeffs[0] += c;
      continue;
    }
    // c * k^p / (1-k)^p contributes c * C(j-1, p-1) at k^j for j >= p
    for (int j = p; j <= K; ++j) {
      coeffs[static_cast<std::size_t>(j)] += c * big_binomial(j - 1, p - 1);
    }
  }
  return coeffs;
}

namespace {

constexpr long long kOracleBudget = 10'000'000;

// Walks every way to distribute the remaining degree over variables
// var..n, tracking which variables got a positive exponent.
long long count_survivors(const std::vector<Monomial>& gens, int n, int var,
                          long long remaining, Monomial positive) {
  if (remaining == 0 || var == n) {
    Monomial mask = remaining > 0 ? positive.with(n) : positive;
    for (const Monomial& g : gens) {
      if (g.divides(mask)) return 0;
    }
    return 1;
  }
  long long total = count_survivors(gens, n, var + 1, remaining, positive);
  for (long long e = 1; e <= remaining; ++e) {
    total += count_survivors(gens, n, var + 1, remaining - e,
                             positive.with(var));
  }
  return total;
}

}  // namespace

BigInt hilbert_oracle(const MonomialIdeal& ideal, long long k) {
  unsigned long long space =
      binomial_capped(static_cast<unsigned long long>(ideal.n() + k - 1),
                      static_cast<unsigned long long>(k), kOracleBudget);
  if (space > kOracleBudget) {
    throw DomainError(ErrorKind::TooLarge,
                      "C(n+k-1, k) exceeds the enumeration guard of 10^7",
                      {{"n", ideal.n()}, {"k", k}});
  }
  if (k == 0) return 1;
  return count_survivors(ideal.gens(), ideal.n(), 1, k, Monomial{});
}

}  // namespace qfi
