#include "qfi/quasi.hpp"

#include <algorithm>
#include <set>

#include "qfi/combinatorics.hpp"

namespace qfi {

namespace {

void require_full_support(const MonomialIdeal& ideal) {
  if (!ideal.full_support()) {
    nlohmann::ordered_json missing = nlohmann::ordered_json::array();
    for (int v : ideal.support().complement(ideal.n()).indices()) {
      missing.push_back(v);
    }
    throw DomainError(ErrorKind::NotFullSupport,
                      "the ideal must involve every variable x1..x" +
                          std::to_string(ideal.n()),
                      {{"missing_variables", missing}});
  }
}

int equigenerated_degree(const MonomialIdeal& ideal) {
  return ideal.degree();  // throws NotEquigenerated
}

}  // namespace

TypeOrMismatch quasi_type_or_mismatch(const MonomialIdeal& ideal) {
  FVector facet = f_vector(facet_complex(ideal));
  FVector nonface = f_vector(stanley_reisner_complex(ideal));
  TypeOrMismatch result;
  result.dim_facet = facet.dim();
  result.dim_nonface = nonface.dim();
  if (facet.dim() == nonface.dim()) {
    QuasiType type;
    type.entries.resize(facet.entries.size());
    for (int i = -1; i <= facet.dim(); ++i) {
      type.entries[static_cast<std::size_t>(i + 1)] =
          nonface.at(i) - facet.at(i);
    }
    result.type = std::move(type);
  }
  return result;
}

QuasiType quasi_type(const MonomialIdeal& ideal) {
  require_full_support(ideal);
  TypeOrMismatch result = quasi_type_or_mismatch(ideal);
  if (!result.defined()) {
    throw DomainError(ErrorKind::DimensionMismatch,
                      "dim delta_F = " + std::to_string(result.dim_facet) +
                          " but dim delta_N = " +
                          std::to_string(result.dim_nonface),
                      {{"dim_facet", result.dim_facet},
                       {"dim_nonface", result.dim_nonface}});
  }
  return *result.type;
}

std::vector<long long> nonface_counts(const MonomialIdeal& ideal) {
  int d = equigenerated_degree(ideal);
  std::vector<long long> counts;
  if (d < 2) return counts;
  FVector facet = f_vector(facet_complex(ideal));
  counts.reserve(static_cast<std::size_t>(d - 1));
  for (int i = 0; i <= d - 2; ++i) {
    counts.push_back(binomial(ideal.n(), i + 1) - facet.at(i));
  }
  return counts;
}

CharacterizationReport characterize(const MonomialIdeal& ideal) {
  int d = equigenerated_degree(ideal);
  if (d < 2) {
    throw DomainError(ErrorKind::DegreeTooSmall,
                      "the characterization covers degree >= 2; got " +
                          std::to_string(d),
                      {{"degree", d}});
  }
  require_full_support(ideal);

  CharacterizationReport report;
  report.degree = d;
  int n = ideal.n();

  report.observed_height = height(ideal);
  report.expected_height = n - d;
  report.height_ok = report.observed_height == report.expected_height;

  report.r = ideal.num_gens();
  report.binom_n_d = binomial(n, d);
  report.a_top = report.binom_n_d - 2 * report.r;
  report.parity_ok =
      ((report.binom_n_d - report.a_top) % 2 + 2) % 2 == 0;
  report.expected_r = (report.binom_n_d - report.a_top) / 2;
  report.count_ok = report.r == report.expected_r;

  report.nonfaces = nonface_counts(ideal);

  report.claimed_type.entries.assign(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i <= d - 2; ++i) {
    report.claimed_type.entries[static_cast<std::size_t>(i) + 1] =
        report.nonfaces[static_cast<std::size_t>(i)];
  }
  report.claimed_type.entries.back() = report.a_top;

  report.nonface_ok = true;
  for (int i = 0; i <= d - 2; ++i) {
    report.nonface_ok = report.nonface_ok &&
                        report.claimed_type.at(i) ==
                            report.nonfaces[static_cast<std::size_t>(i)];
  }

  report.verdict = report.height_ok && report.parity_ok && report.count_ok &&
                   report.nonface_ok;
  return report;
}

std::vector<Monomial> box_up(const std::vector<Monomial>& monomials, int n) {
  std::set<Monomial, CanonicalLess> out;
  for (const Monomial& g : monomials) {
    for (int i = 1; i <= n; ++i) {
      if (!g.contains(i)) out.insert(g.with(i));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Monomial> box_down(const std::vector<Monomial>& monomials) {
  std::set<Monomial, CanonicalLess> out;
  for (const Monomial& g : monomials) {
    for (int i : g.indices()) out.insert(g.without(i));
  }
  return {out.begin(), out.end()};
}

namespace {

std::vector<Monomial> set_difference_sorted(const std::vector<Monomial>& a,
                                            const std::vector<Monomial>& b) {
  std::vector<Monomial> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out), CanonicalLess{});
  return out;
}

}  // namespace

PerfectionReport perfection(const std::vector<Monomial>& monomials, int n) {
  if (monomials.empty()) {
    throw DomainError(ErrorKind::EmptyGenerators,
                      "perfection needs a nonempty monomial set");
  }
  Monomial::full(n);
  int d = monomials.front().degree();
  for (const Monomial& g : monomials) {
    if (g.degree() != d) {
      throw DomainError(ErrorKind::MixedDegrees,
                        "perfection is defined for equigenerated sets",
                        {{"degrees",
                          nlohmann::ordered_json{monomials.front().degree(),
                                                 g.degree()}}});
    }
  }
  if (d < 1) {
    throw DomainError(ErrorKind::DegreeTooSmall,
                      "perfection needs degree >= 1");
  }

  PerfectionReport report;
  report.degree = d;
  report.missing_lower =
      set_difference_sorted(all_monomials_of_degree(n, d - 1),
                            box_down(monomials));
  report.missing_upper =
      set_difference_sorted(all_monomials_of_degree(n, d + 1),
                            box_up(monomials, n));
  report.lower = report.missing_lower.empty();
  report.upper = report.missing_upper.empty();
  report.perfect = report.lower && report.upper;
  return report;
}

bool is_f_ideal(const MonomialIdeal& ideal) {
  int d = equigenerated_degree(ideal);
  if (d < 2) {
    throw DomainError(ErrorKind::DegreeTooSmall,
                      "the f-ideal test covers degree >= 2; got " +
                          std::to_string(d),
                      {{"degree", d}});
  }
  require_full_support(ideal);

  TypeOrMismatch direct = quasi_type_or_mismatch(ideal);
  bool by_type = direct.defined() && direct.type->is_zero();

  // Specialized form: zero type forces r = C(n,d)/2 and a complete
  // (d-2)-skeleton of the facet complex.
  int n = ideal.n();
  long long cnd = binomial(n, d);
  bool by_conditions = height(ideal) == n - d && cnd % 2 == 0 &&
                       2 * static_cast<long long>(ideal.num_gens()) == cnd &&
                       f_vector(facet_complex(ideal)).at(d - 2) ==
                           binomial(n, d - 1);

  if (by_type != by_conditions) {
    throw std::logic_error("f-ideal routes disagree on " + ideal.text());
  }
  return by_type;
}

}  // namespace qfi
