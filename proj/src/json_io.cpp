#include "qfi/json_io.hpp"

#include <limits>

namespace qfi {

Json to_json(const Monomial& monomial) {
  Json j = Json::array();
  for (int i : monomial.indices()) j.push_back(i);
  return j;
}

Json to_json(const std::vector<Monomial>& monomials) {
  Json j = Json::array();
  for (const Monomial& m : monomials) j.push_back(to_json(m));
  return j;
}

Json to_json(const MonomialIdeal& ideal) {
  Json j;
  j["n"] = ideal.n();
  j["generators"] = to_json(ideal.gens());
  return j;
}

Json to_json(const SimplicialComplex& complex) {
  Json j;
  j["n"] = complex.n();
  j["facets"] = to_json(complex.facets());
  return j;
}

Json to_json(const FVector& fv) {
  Json j;
  j["f"] = fv.entries;
  j["min_index"] = -1;
  return j;
}

Json to_json(const QuasiType& type) {
  Json j;
  j["a"] = type.entries;
  j["min_index"] = -1;
  return j;
}

Json to_json(const TypeOrMismatch& type) {
  if (type.defined()) return to_json(*type.type);
  Json j;
  j["error"] = {{"kind", to_string(ErrorKind::DimensionMismatch)},
                {"dim_facet", type.dim_facet},
                {"dim_nonface", type.dim_nonface}};
  return j;
}

Json to_json(const CharacterizationReport& report) {
  Json j;
  j["degree"] = report.degree;
  j["height"] = {{"observed", report.observed_height},
                 {"expected", report.expected_height},
                 {"ok", report.height_ok}};
  j["parity"] = {{"binomial", report.binom_n_d},
                 {"a_top", report.a_top},
                 {"ok", report.parity_ok}};
  j["count"] = {{"r", report.r},
                {"expected_r", report.expected_r},
                {"ok", report.count_ok}};
  j["nonfaces"] = {{"counts", report.nonfaces}, {"ok", report.nonface_ok}};
  j["claimed_type"] = to_json(report.claimed_type);
  j["verdict"] = report.verdict;
  return j;
}

Json to_json(const PerfectionReport& report) {
  Json j;
  j["degree"] = report.degree;
  j["lower"] = report.lower;
  j["upper"] = report.upper;
  j["perfect"] = report.perfect;
  j["missing_lower"] = to_json(report.missing_lower);
  j["missing_upper"] = to_json(report.missing_upper);
  return j;
}

Json to_json(const BigInt& value) {
  if (value >= std::numeric_limits<long long>::min() &&
      value <= std::numeric_limits<long long>::max()) {
    return value.convert_to<long long>();
  }
  return value.str();
}

Json to_json(const HilbertSeries& series) {
  Json terms = Json::array();
  for (const auto& [c, p] : series.terms) terms.push_back(Json{c, p});
  Json numerator = Json::array();
  for (const BigInt& c : series.numerator) numerator.push_back(to_json(c));
  Json j;
  j["terms"] = terms;
  j["numerator_over_common_denominator"] = numerator;
  j["denominator_pole"] = series.denominator_pole;
  return j;
}

Json to_json(const DualityReport& report) {
  Json j;
  j["g_perfect"] = to_json(report.g_perfect);
  j["dual_g_perfect"] = to_json(report.dual_g_perfect);
  j["original_type"] = to_json(report.original_type);
  j["dual_type"] = to_json(report.dual_type);
  j["dual_full_support"] = report.dual_full_support;
  if (report.expected_dual_type) {
    j["expected_dual_type"] = *report.expected_dual_type;
  } else {
    j["expected_dual_type"] = nullptr;
  }
  j["theorem_applicable"] = report.applicable;
  j["match"] = report.match;
  return j;
}

MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("generators")) {
    throw DomainError(ErrorKind::SyntaxError,
                      "expected an object with \"n\" and \"generators\"");
  }
  if (!j["n"].is_number_integer()) {
    throw DomainError(ErrorKind::SyntaxError, "\"n\" must be an integer");
  }
  int n = j["n"].get<int>();
  if (!j["generators"].is_array()) {
    throw DomainError(ErrorKind::SyntaxError,
                      "\"generators\" must be an array of index arrays");
  }
  std::vector<Monomial> gens;
  for (const auto& entry : j["generators"]) {
    if (!entry.is_array()) {
      throw DomainError(ErrorKind::SyntaxError,
                        "each generator must be an array of indices");
    }
    std::vector<int> indices;
    for (const auto& v : entry) {
      if (!v.is_number_integer()) {
        throw DomainError(ErrorKind::SyntaxError,
                          "generator indices must be integers");
      }
      indices.push_back(v.get<int>());
    }
    Monomial m = Monomial::from_indices(indices);  // repeats, 1..64
    if (m.is_unit()) {
      throw DomainError(ErrorKind::EmptyGenerators,
                        "a generator must list at least one variable");
    }
    gens.push_back(m);
  }
  return MonomialIdeal::make(n, std::move(gens));  // range vs n, minimality
}

}  // namespace qfi
