#pragma once

// Facet and Stanley-Reisner complexes of a squarefree monomial ideal,
// f-vectors, minimal vertex covers and height.

#include <vector>

#include "qfi/monomial.hpp"

namespace qfi {

using Face = Monomial;

// A simplicial complex over vertices {1..n}, held by its facets
// (pairwise incomparable, canonically sorted). A complex with no facets
// is the one whose only face is the empty face; it has dimension -1.
class SimplicialComplex {
 public:
  // The complex generated by the given faces: drops non-maximal ones and
  // sorts. Throws IndexOutOfRange for vertices beyond n.
  static SimplicialComplex make(int n, std::vector<Face> faces);

  int n() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }
  int dimension() const;  // max facet cardinality - 1; -1 when facetless
  bool is_pure() const;   // all facets share one cardinality

 private:
  SimplicialComplex(int n, std::vector<Face> facets)
      : n_(n), facets_(std::move(facets)) {}
  int n_ = 0;
  std::vector<Face> facets_;
};

// (f_{-1}, f_0, ..., f_d); entries[0] holds f_{-1} = 1.
struct FVector {
  std::vector<long long> entries;

  int dim() const { return static_cast<int>(entries.size()) - 2; }
  // f_i with the usual padding convention f_i = 0 for i outside -1..d.
  long long at(int i) const {
    int pos = i + 1;
    if (pos < 0 || pos >= static_cast<int>(entries.size())) return 0;
    return entries[static_cast<std::size_t>(pos)];
  }

  friend bool operator==(const FVector&, const FVector&) = default;
};

// Minimal vertex covers of the generator hypergraph; equivalently the
// minimal primes of the ideal.
struct CoverSet {
  std::vector<Monomial> covers;
};

// Facets are the supports of the minimal generators.
SimplicialComplex facet_complex(const MonomialIdeal& ideal);

// All inclusion-minimal transversals of the generator sets, found by
// branching on the vertices of an uncovered generator.
CoverSet minimal_vertex_covers(const MonomialIdeal& ideal);

// Facets are the complements of the minimal vertex covers; the faces are
// exactly the subsets whose product lies outside the ideal.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

// Exact face counts by dimension, deduplicated across facets.
FVector f_vector(const SimplicialComplex& complex);

// Minimum cover cardinality.
int height(const MonomialIdeal& ideal);

bool is_pure(const SimplicialComplex& complex);

}  // namespace qfi
