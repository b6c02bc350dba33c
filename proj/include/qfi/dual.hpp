#pragma once

// Newton complementary dual, the dual f-vector formulas, and the duality
// theorem report.

#include <optional>
#include <vector>

#include "qfi/complexes.hpp"
#include "qfi/monomial.hpp"
#include "qfi/quasi.hpp"

namespace qfi {

// Generators are the complements {1..n} \ u for u in G(I).
// Throws FullGeneratorDegree when some generator is x1*...*xn.
MonomialIdeal newton_dual(const MonomialIdeal& ideal);

// f-vectors of the dual's complexes predicted from the original's:
// f_j(pred) = C(n, j+1) - f_{n-j-2}(source), trailing zeros trimmed.
struct DualFVectors {
  FVector nonface_of_dual;  // from f(delta_F(I))
  FVector facet_of_dual;    // from f(delta_N(I))
};

DualFVectors dual_f_vectors(const MonomialIdeal& ideal);

struct DualityReport {
  PerfectionReport g_perfect;       // for G(I)
  PerfectionReport dual_g_perfect;  // for G(I^)
  TypeOrMismatch original_type;
  TypeOrMismatch dual_type;
  bool dual_full_support = false;

  // Reversal rule: zero-pad the original type to indices -1..n-1,
  // reverse, truncate to indices -1..(n-d)-1. Empty when the original
  // type is undefined.
  std::optional<std::vector<long long>> expected_dual_type;

  bool applicable = false;  // G(I) is perfect, the theorem's hypothesis
  bool match = false;       // dual type defined and equal to expected
};

// The reversal rule applied to a defined type: zero-pad to indices
// -1..n-1, reverse, truncate to the dual's indices -1..(n-d)-1.
std::vector<long long> reversed_dual_type(const QuasiType& original, int n,
                                          int d);

// Requires an equigenerated full-support ideal of degree 1 <= d < n.
// Never fails on an imperfect G(I); the report records inapplicability
// with the missing monomials as evidence.
DualityReport check_duality_theorem(const MonomialIdeal& ideal);

}  // namespace qfi
