#pragma once

// Quasi f-ideal types, the degree-d characterization with per-condition
// reporting, and perfect-set predicates.

#include <optional>
#include <vector>

#include "qfi/complexes.hpp"
#include "qfi/monomial.hpp"

namespace qfi {

// The difference f(delta_N) - f(delta_F), indexed -1..s where s is the
// common dimension; entries[0] holds a_{-1} = 0.
struct QuasiType {
  std::vector<long long> entries;

  int top_index() const { return static_cast<int>(entries.size()) - 2; }
  long long at(int i) const {
    int pos = i + 1;
    if (pos < 0 || pos >= static_cast<int>(entries.size())) return 0;
    return entries[static_cast<std::size_t>(pos)];
  }
  bool is_zero() const {
    for (long long a : entries)
      if (a != 0) return false;
    return true;
  }

  friend bool operator==(const QuasiType&, const QuasiType&) = default;
};

// Both complexes' dimensions plus the type when they agree. The relaxed
// form used by report builders; quasi_type() below is the throwing API.
struct TypeOrMismatch {
  int dim_facet = -1;
  int dim_nonface = -1;
  std::optional<QuasiType> type;

  bool defined() const { return type.has_value(); }
};

TypeOrMismatch quasi_type_or_mismatch(const MonomialIdeal& ideal);

// f(delta_N) - f(delta_F) when the dimensions agree.
// Throws NotFullSupport, or DimensionMismatch carrying both dimensions.
QuasiType quasi_type(const MonomialIdeal& ideal);

// Per-condition evaluation of the degree-d characterization, with the
// observed numbers as witnesses.
struct CharacterizationReport {
  int degree = 0;
  int observed_height = 0;
  int expected_height = 0;
  bool height_ok = false;

  long long binom_n_d = 0;  // C(n,d)
  long long a_top = 0;      // C(n,d) - 2r
  bool parity_ok = false;

  long long r = 0;
  long long expected_r = 0;  // (C(n,d) - a_top) / 2
  bool count_ok = false;

  std::vector<long long> nonfaces;  // i-dimensional non-face counts, i = 0..d-2
  bool nonface_ok = false;

  QuasiType claimed_type;
  bool verdict = false;
};

// Requires an equigenerated ideal of degree d >= 2 with full support.
// The claimed type is derived from the observed counts: a_{d-1} from the
// generator count, lower entries from the non-face counts of delta_F.
// delta_N is never consulted, so the verdict is an independent route to
// quasi_type.
CharacterizationReport characterize(const MonomialIdeal& ideal);

// Number of i-dimensional non-faces of delta_F(I), i = 0..d-2:
// C(n, i+1) - f_i(delta_F).
std::vector<long long> nonface_counts(const MonomialIdeal& ideal);

// The sets sqcup(A) = {g*x_i : x_i does not divide g} and
// sqcap(A) = {g/x_i : x_i divides g}, canonically sorted.
std::vector<Monomial> box_up(const std::vector<Monomial>& monomials, int n);
std::vector<Monomial> box_down(const std::vector<Monomial>& monomials);

struct PerfectionReport {
  int degree = 0;
  bool lower = false;
  bool upper = false;
  bool perfect = false;
  std::vector<Monomial> missing_lower;  // sm(R)_{d-1} \ sqcap(A)
  std::vector<Monomial> missing_upper;  // sm(R)_{d+1} \ sqcup(A)
};

// Lower/upper perfectness of an equigenerated monomial set.
// Throws EmptyGenerators, MixedDegrees, or DegreeTooSmall (degree 0).
PerfectionReport perfection(const std::vector<Monomial>& monomials, int n);

// True iff the quasi type is defined and the zero vector; cross-checked
// against the specialized test (height, even C(n,d), r = C(n,d)/2,
// f_{d-2}(delta_F) = C(n,d-1)).
bool is_f_ideal(const MonomialIdeal& ideal);

}  // namespace qfi
