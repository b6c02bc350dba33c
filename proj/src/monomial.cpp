#include "qfi/monomial.hpp"

#include <algorithm>
#include <cctype>

namespace qfi {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonSquarefree: return "NonSquarefree";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::UnsupportedVarCount: return "UnsupportedVarCount";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotEquigenerated: return "NotEquigenerated";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::NotFullSupport: return "NotFullSupport";
    case ErrorKind::MixedDegrees: return "MixedDegrees";
    case ErrorKind::FullGeneratorDegree: return "FullGeneratorDegree";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::RTooLarge: return "RTooLarge";
    case ErrorKind::SpecTooLarge: return "SpecTooLarge";
    case ErrorKind::SymmetryCapExceeded: return "SymmetryCapExceeded";
  }
  return "Unknown";
}

Monomial Monomial::from_indices(std::span<const int> indices) {
  std::uint64_t bits = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxVars) {
      throw DomainError(ErrorKind::IndexOutOfRange,
                        "variable index " + std::to_string(i) +
                            " outside 1.." + std::to_string(kMaxVars),
                        {{"index", i}});
    }
    std::uint64_t bit = std::uint64_t{1} << (i - 1);
    if (bits & bit) {
      throw DomainError(ErrorKind::NonSquarefree,
                        "variable x" + std::to_string(i) +
                            " repeated; monomial is not squarefree",
                        {{"index", i}});
    }
    bits |= bit;
  }
  return Monomial(bits);
}

Monomial Monomial::from_indices(std::initializer_list<int> indices) {
  return from_indices(std::span<const int>(indices.begin(), indices.size()));
}

Monomial Monomial::full(int n) {
  if (n < 1 || n > kMaxVars) {
    throw DomainError(ErrorKind::UnsupportedVarCount,
                      "variable count " + std::to_string(n) +
                          " outside 1.." + std::to_string(kMaxVars),
                      {{"n", n}});
  }
  if (n == kMaxVars) return Monomial(~std::uint64_t{0});
  return Monomial((std::uint64_t{1} << n) - 1);
}

int Monomial::min_index() const {
  if (bits_ == 0) return 0;
  return std::countr_zero(bits_) + 1;
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (std::uint64_t b = bits_; b; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string Monomial::text() const {
  if (bits_ == 0) return "1";
  std::string out;
  for (int i : indices()) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i);
  }
  return out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Equal cardinality: lexicographic on ascending index sequences. The
  // first differing index is the lowest set bit of the symmetric
  // difference; the set owning it sorts first.
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  std::uint64_t low = diff & (~diff + 1);
  return (a.bits() & low) != 0;
}

std::vector<Monomial> minimalize(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(), CanonicalLess{});
  monomials.erase(std::unique(monomials.begin(), monomials.end()),
                  monomials.end());
  std::vector<Monomial> minimal;
  for (const Monomial& m : monomials) {
    bool divisible = false;
    for (const Monomial& g : minimal) {
      // minimal is degree-sorted, so only earlier entries can divide m
      if (g.divides(m)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) minimal.push_back(m);
  }
  return minimal;
}

MonomialIdeal MonomialIdeal::make(int n, std::vector<Monomial> generators) {
  Monomial ambient = Monomial::full(n);  // validates n
  std::vector<Monomial> gens = minimalize(std::move(generators));
  if (gens.empty()) {
    throw DomainError(ErrorKind::EmptyGenerators,
                      "an ideal needs at least one generator");
  }
  for (const Monomial& g : gens) {
    if (g.is_unit()) {
      throw DomainError(ErrorKind::EmptyGenerators,
                        "the unit monomial generates the whole ring");
    }
    if (!g.divides(ambient)) {
      throw DomainError(ErrorKind::IndexOutOfRange,
                        "generator " + g.text() + " uses a variable beyond x" +
                            std::to_string(n),
                        {{"generator", g.text()}, {"n", n}});
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

Monomial MonomialIdeal::support() const {
  Monomial s;
  for (const Monomial& g : gens_) s = s.united(g);
  return s;
}

bool MonomialIdeal::equigenerated() const {
  for (const Monomial& g : gens_) {
    if (g.degree() != gens_.front().degree()) return false;
  }
  return true;
}

int MonomialIdeal::degree() const {
  if (!equigenerated()) {
    nlohmann::ordered_json degs = nlohmann::ordered_json::array();
    for (const Monomial& g : gens_) degs.push_back(g.degree());
    throw DomainError(ErrorKind::NotEquigenerated,
                      "generators have mixed degrees", {{"degrees", degs}});
  }
  return gens_.front().degree();
}

std::string MonomialIdeal::text() const {
  std::string out;
  for (const Monomial& g : gens_) {
    if (!out.empty()) out += ',';
    out += g.text();
  }
  return out;
}

bool canonical_less(const MonomialIdeal& a, const MonomialIdeal& b) {
  return std::lexicographical_compare(a.gens().begin(), a.gens().end(),
                                      b.gens().begin(), b.gens().end(),
                                      CanonicalLess{});
}

namespace {

struct Parser {
  const std::string& text;
  int n;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what, std::size_t at) {
    throw DomainError(ErrorKind::SyntaxError,
                      what + " at position " + std::to_string(at + 1),
                      {{"position", at + 1}});
  }

  int parse_variable() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() || (text[pos] != 'x' && text[pos] != 'X')) {
      fail("expected a variable token like x3", pos);
    }
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("expected a variable index after 'x'", pos);
    }
    long index = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = index * 10 + (text[pos] - '0');
      if (index > Monomial::kMaxVars) break;
      ++pos;
    }
    if (index < 1 || index > n) {
      throw DomainError(ErrorKind::IndexOutOfRange,
                        "variable x" + std::to_string(index) +
                            " outside 1.." + std::to_string(n) +
                            " at position " + std::to_string(start + 1),
                        {{"index", index}, {"n", n}, {"position", start + 1}});
    }
    return static_cast<int>(index);
  }

  Monomial parse_monomial() {
    std::uint64_t bits = 0;
    for (;;) {
      std::size_t at = pos;
      skip_ws();
      at = pos;
      int i = parse_variable();
      std::uint64_t bit = std::uint64_t{1} << (i - 1);
      if (bits & bit) {
        throw DomainError(ErrorKind::NonSquarefree,
                          "variable x" + std::to_string(i) +
                              " repeated within one monomial at position " +
                              std::to_string(at + 1),
                          {{"index", i}, {"position", at + 1}});
      }
      bits |= bit;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    return Monomial::from_bits(bits);
  }

  std::vector<Monomial> parse_list() {
    std::vector<Monomial> out;
    skip_ws();
    if (pos >= text.size()) {
      throw DomainError(ErrorKind::EmptyGenerators, "no generators given");
    }
    for (;;) {
      out.push_back(parse_monomial());
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    skip_ws();
    if (pos != text.size()) fail("unexpected trailing input", pos);
    return out;
  }
};

}  // namespace

MonomialIdeal parse_ideal(const std::string& text, int n) {
  Monomial::full(n);  // validates n before any token is read
  Parser parser{text, n};
  return MonomialIdeal::make(n, parser.parse_list());
}

}  // namespace qfi
