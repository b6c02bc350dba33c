#pragma once

// Canonical JSON forms for every toolkit type. Emission uses ordered
// documents so identical inputs produce identical bytes.

#include <json.hpp>

#include "qfi/complexes.hpp"
#include "qfi/dual.hpp"
#include "qfi/hilbert.hpp"
#include "qfi/monomial.hpp"
#include "qfi/quasi.hpp"

namespace qfi {

using Json = nlohmann::ordered_json;

Json to_json(const Monomial& monomial);                  // [1,2,4]
Json to_json(const std::vector<Monomial>& monomials);    // [[1,2],[3]]
Json to_json(const MonomialIdeal& ideal);                // {"n":., "generators":.}
Json to_json(const SimplicialComplex& complex);          // {"n":., "facets":.}
Json to_json(const FVector& fv);                         // {"f":., "min_index":-1}
Json to_json(const QuasiType& type);                     // {"a":., "min_index":-1}
Json to_json(const TypeOrMismatch& type);  // type json or an error object
Json to_json(const CharacterizationReport& report);
Json to_json(const PerfectionReport& report);
Json to_json(const HilbertSeries& series);
Json to_json(const DualityReport& report);

// BigInt as a JSON number when it fits in 64 bits, else a decimal string.
Json to_json(const BigInt& value);

// Reads the canonical ideal form {"n":., "generators":[[..],..]},
// validating exactly like the text parser.
MonomialIdeal ideal_from_json(const Json& j);

}  // namespace qfi
