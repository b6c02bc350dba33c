#pragma once

// Squarefree monomials as index sets over x_1..x_n, and monomial ideals
// given by their minimal generating sets.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qfi/error.hpp"

namespace qfi {

// A squarefree monomial, stored as a bit set of 1-based variable indices.
// The unit monomial is the empty set. Doubles as a face of a simplicial
// complex, which is the identification the whole toolkit runs on.
class Monomial {
 public:
  static constexpr int kMaxVars = 64;

  constexpr Monomial() = default;

  static Monomial from_bits(std::uint64_t bits) { return Monomial(bits); }
  // Throws on indices outside 1..kMaxVars or repeats.
  static Monomial from_indices(std::span<const int> indices);
  static Monomial from_indices(std::initializer_list<int> indices);
  // The full monomial x_1*...*x_n.
  static Monomial full(int n);

  std::uint64_t bits() const { return bits_; }
  int degree() const { return std::popcount(bits_); }
  bool is_unit() const { return bits_ == 0; }

  bool contains(int index) const { return (bits_ >> (index - 1)) & 1u; }
  bool divides(const Monomial& other) const {
    return (bits_ & other.bits_) == bits_;
  }
  bool intersects(const Monomial& other) const {
    return (bits_ & other.bits_) != 0;
  }

  Monomial with(int index) const {
    return Monomial(bits_ | (std::uint64_t{1} << (index - 1)));
  }
  Monomial without(int index) const {
    return Monomial(bits_ & ~(std::uint64_t{1} << (index - 1)));
  }
  Monomial united(const Monomial& other) const {
    return Monomial(bits_ | other.bits_);
  }
  Monomial intersected(const Monomial& other) const {
    return Monomial(bits_ & other.bits_);
  }
  Monomial minus(const Monomial& other) const {
    return Monomial(bits_ & ~other.bits_);
  }
  // Complement inside {1..n}.
  Monomial complement(int n) const { return Monomial(~bits_ & full(n).bits_); }

  int min_index() const;  // smallest variable index; 0 for the unit
  std::vector<int> indices() const;  // ascending, 1-based
  std::string text() const;          // "x1*x2*x4"; "1" for the unit

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

// Canonical order: degree first, then lexicographic on the ascending
// index sequences. All generator/facet/cover lists use this order.
bool canonical_less(const Monomial& a, const Monomial& b);

struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return canonical_less(a, b);
  }
};

// Inclusion-minimal antichain under divisibility: dedupe, drop every
// monomial that some other one divides, sort canonically.
std::vector<Monomial> minimalize(std::vector<Monomial> monomials);

// A squarefree monomial ideal, held as its unique minimal generating set
// in canonical order.
class MonomialIdeal {
 public:
  // Minimalizes and sorts. Throws EmptyGenerators, IndexOutOfRange (some
  // generator uses an index > n), or UnsupportedVarCount.
  static MonomialIdeal make(int n, std::vector<Monomial> generators);

  int n() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }

  // Union of the generator index sets.
  Monomial support() const;
  bool full_support() const { return support() == Monomial::full(n_); }

  // Common generator degree, or a NotEquigenerated error.
  bool equigenerated() const;
  int degree() const;

  std::string text() const;  // canonical text form

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(int n, std::vector<Monomial> gens)
      : n_(n), gens_(std::move(gens)) {}
  int n_ = 0;
  std::vector<Monomial> gens_;
};

// Strict total order on ideals with equal n (generator lists compared
// entrywise in canonical order); used for orbit representatives.
bool canonical_less(const MonomialIdeal& a, const MonomialIdeal& b);

// Parses the canonical text form: comma-separated monomials, each a
// '*'-separated product of tokens x<index>. Whitespace is ignored.
// Errors carry the 1-based character position of the offending token.
MonomialIdeal parse_ideal(const std::string& text, int n);

}  // namespace qfi
