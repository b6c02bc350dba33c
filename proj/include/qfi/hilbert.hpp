#pragma once

// Hilbert function and series of R/I via the f-vector route, an exact
// power-series expander, and a brute-force enumeration oracle.

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "qfi/monomial.hpp"

namespace qfi {

using BigInt = boost::multiprecision::cpp_int;

// F(R/I, k) as a sum of terms c * k^p / (1-k)^p. The coefficients are
// c_i = f_i(delta_F) + a_i = f_i(delta_N) with pole order p_i = i + 1;
// the pole-order-0 term is the constant 1 for the empty face.
struct HilbertSeries {
  std::vector<std::pair<long long, int>> terms;  // (coefficient, pole order)

  // Numerator over the single denominator (1-k)^denominator_pole,
  // coefficients by ascending power of k.
  std::vector<BigInt> numerator;
  int denominator_pole = 0;
};

// Dimension of the degree-k part of R/I by the closed formula
// H(k) = sum_i C(k-1, i) * f_i(delta_N) for k >= 1, H(0) = 1.
// Throws what quasi_type throws.
BigInt hilbert_function(const MonomialIdeal& ideal, long long k);

// Throws what quasi_type throws.
HilbertSeries hilbert_series(const MonomialIdeal& ideal);

// Coefficients of k^0..k^K in the power-series expansion of the terms,
// using 1/(1-k)^p = sum_j C(j+p-1, p-1) k^j.
std::vector<BigInt> expand_series(const HilbertSeries& series, int K);

// Independent count: degree-k exponent vectors over n variables whose
// monomial no generator divides. Guarded by C(n+k-1, k) <= 10^7.
BigInt hilbert_oracle(const MonomialIdeal& ideal, long long k);

// C(m, j) with C(m, 0) = 1 and C(m, j) = 0 for m < j, exact at any size.
BigInt big_binomial(long long m, long long j);

}  // namespace qfi
