#include "qfi/dual.hpp"

#include "qfi/combinatorics.hpp"

namespace qfi {

MonomialIdeal newton_dual(const MonomialIdeal& ideal) {
  std::vector<Monomial> duals;
  duals.reserve(ideal.gens().size());
  for (const Monomial& g : ideal.gens()) {
    if (g.degree() == ideal.n()) {
      throw DomainError(ErrorKind::FullGeneratorDegree,
                        "generator " + g.text() +
                            " is the full monomial; its dual would be the unit",
                        {{"generator", g.text()}});
    }
    duals.push_back(g.complement(ideal.n()));
  }
  return MonomialIdeal::make(ideal.n(), std::move(duals));
}

namespace {

FVector predict(const FVector& source, int n) {
  FVector out;
  out.entries.resize(static_cast<std::size_t>(n) + 1, 0);
  for (int j = -1; j <= n - 1; ++j) {
    out.entries[static_cast<std::size_t>(j + 1)] =
        binomial(n, j + 1) - source.at(n - j - 2);
  }
  while (out.entries.size() > 1 && out.entries.back() == 0) {
    out.entries.pop_back();
  }
  return out;
}

}  // namespace

DualFVectors dual_f_vectors(const MonomialIdeal& ideal) {
  for (const Monomial& g : ideal.gens()) {
    if (g.degree() == ideal.n()) {
      throw DomainError(ErrorKind::FullGeneratorDegree,
                        "generator " + g.text() +
                            " is the full monomial; the dual is undefined",
                        {{"generator", g.text()}});
    }
  }
  DualFVectors out;
  out.nonface_of_dual = predict(f_vector(facet_complex(ideal)), ideal.n());
  out.facet_of_dual =
      predict(f_vector(stanley_reisner_complex(ideal)), ideal.n());
  return out;
}

std::vector<long long> reversed_dual_type(const QuasiType& original, int n,
                                          int d) {
  // Pad with zeros up to index n-1, reverse so entry j reads a_{n-j-2},
  // cut past the dual's top index (n-d)-1.
  std::vector<long long> expected;
  expected.reserve(static_cast<std::size_t>(n - d) + 1);
  for (int j = -1; j <= (n - d) - 1; ++j) {
    expected.push_back(original.at(n - j - 2));
  }
  return expected;
}

DualityReport check_duality_theorem(const MonomialIdeal& ideal) {
  int d = ideal.degree();  // throws NotEquigenerated
  if (!ideal.full_support()) {
    throw DomainError(ErrorKind::NotFullSupport,
                      "the duality check assumes every variable appears");
  }

  DualityReport report;
  MonomialIdeal dual = newton_dual(ideal);  // throws FullGeneratorDegree

  report.g_perfect = perfection(ideal.gens(), ideal.n());
  report.dual_g_perfect = perfection(dual.gens(), dual.n());
  report.original_type = quasi_type_or_mismatch(ideal);
  report.dual_type = quasi_type_or_mismatch(dual);
  report.dual_full_support = dual.full_support();
  report.applicable = report.g_perfect.perfect;

  if (report.original_type.defined()) {
    report.expected_dual_type =
        reversed_dual_type(*report.original_type.type, ideal.n(), d);
  }
  report.match = report.original_type.defined() &&
                 report.dual_type.defined() &&
                 report.expected_dual_type.has_value() &&
                 report.dual_type.type->entries == *report.expected_dual_type;
  return report;
}

}  // namespace qfi
