#pragma once

// Discovery of quasi f-ideals of a given type at small (n, d): exhaustive
// enumeration with characterization-based pruning, seeded random ideals,
// and orbit representatives under variable relabeling.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qfi/monomial.hpp"

namespace qfi {

struct SearchSpec {
  int n = 0;
  int d = 0;
  // Short form (a_0..a_{d-1}) or long form (a_{-1}..a_{d-1}),
  // disambiguated by length.
  std::vector<long long> target_type;
  bool modulo_symmetry = false;
  std::optional<long long> limit;
  int threads = 1;

  int max_n = 7;                          // exhaustive-enumeration cap
  unsigned long long budget = 10'000'000;  // candidate-subset budget
};

struct SearchSummary {
  long long count = 0;             // ideals emitted
  long long candidates = 0;        // r-subsets examined
  long long r = 0;                 // generator count fixed by the type
  bool pruned_by_parity = false;   // C(n,d) and a_{d-1} disagree mod 2
  bool pruned_by_count = false;    // forced r outside 1..C(n,d)
  bool limit_reached = false;
};

// Emits, in colexicographic candidate order, exactly the full-support
// equigenerated degree-d ideals over n variables whose quasi type equals
// the target; with modulo_symmetry only orbit representatives. The sink
// returns false to stop early. Throws SpecTooLarge when the candidate
// space C(C(n,d), r) exceeds the budget and no symmetry reduction is
// requested.
SearchSummary enumerate_quasi(const SearchSpec& spec,
                              const std::function<bool(const MonomialIdeal&)>& sink);

// Uniform sample of r distinct degree-d squarefree monomials; the same
// seed always yields the same ideal. Throws RTooLarge when r > C(n,d).
MonomialIdeal random_ideal(int n, int d, long long r, std::uint64_t seed);

// The lexicographically least relabeling over all n! variable
// permutations. Throws SymmetryCapExceeded for n > cap.
MonomialIdeal canonical_form(const MonomialIdeal& ideal, int cap = 8);

}  // namespace qfi
