#include <doctest.h>

#include <map>
#include <set>

#include "qfi/combinatorics.hpp"
#include "qfi/quasi.hpp"
#include "qfi/search.hpp"

using namespace qfi;

namespace {

std::vector<MonomialIdeal> collect(const SearchSpec& spec,
                                   SearchSummary* summary = nullptr) {
  std::vector<MonomialIdeal> out;
  SearchSummary s = enumerate_quasi(spec, [&](const MonomialIdeal& ideal) {
    out.push_back(ideal);
    return true;
  });
  if (summary != nullptr) *summary = s;
  return out;
}

}  // namespace

TEST_CASE("enumeration finds the first running example") {
  SearchSpec spec;
  spec.n = 5;
  spec.d = 3;
  spec.target_type = {0, 0, 1, 0};
  std::vector<MonomialIdeal> found = collect(spec);
  MonomialIdeal ex35 =
      parse_ideal("x1*x2*x4,x1*x2*x5,x3*x4*x5,x1*x4*x5,x2*x3*x5", 5);
  bool present = false;
  for (const MonomialIdeal& ideal : found) present = present || ideal == ex35;
  CHECK(present);
  for (const MonomialIdeal& ideal : found) {
    CHECK(quasi_type(ideal).entries == std::vector<long long>{0, 0, 1, 0});
  }
}

TEST_CASE("short and long type forms agree") {
  SearchSpec spec;
  spec.n = 5;
  spec.d = 3;
  spec.target_type = {0, 1, 0};  // short form
  SearchSummary s_short;
  std::vector<MonomialIdeal> found_short = collect(spec, &s_short);
  spec.target_type = {0, 0, 1, 0};  // long form
  SearchSummary s_long;
  std::vector<MonomialIdeal> found_long = collect(spec, &s_long);
  CHECK(found_short == found_long);
  CHECK(s_short.count == s_long.count);
}

TEST_CASE("parity obstruction empties the stream") {
  SearchSpec spec;
  spec.n = 5;
  spec.d = 2;
  spec.target_type = {0, 0, 1};
  SearchSummary summary;
  CHECK(collect(spec, &summary).empty());
  CHECK(summary.pruned_by_parity);
  CHECK(summary.candidates == 0);
}

TEST_CASE("nonzero leading entry of the long form matches nothing") {
  SearchSpec spec;
  spec.n = 4;
  spec.d = 2;
  spec.target_type = {1, 0, 0};
  CHECK(collect(spec).empty());
}

TEST_CASE("enumeration finds a known f-ideal") {
  SearchSpec spec;
  spec.n = 4;
  spec.d = 2;
  spec.target_type = {0, 0, 0};
  std::vector<MonomialIdeal> found = collect(spec);
  MonomialIdeal want = parse_ideal("x1*x2,x1*x3,x3*x4", 4);
  bool present = false;
  for (const MonomialIdeal& ideal : found) present = present || ideal == want;
  CHECK(present);
}

TEST_CASE("enumeration partitions all dimension-matched ideals by type") {
  // direct scan of every full-support subset at n=5, d=2
  std::vector<Monomial> pool = all_monomials_of_degree(5, 2);
  std::map<std::vector<long long>, std::set<std::string>> by_type;
  long long matched = 0;
  std::uint64_t limit = std::uint64_t{1} << pool.size();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    std::vector<Monomial> gens;
    Monomial support;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((mask >> i) & 1u) {
        gens.push_back(pool[i]);
        support = support.united(pool[i]);
      }
    }
    if (support != Monomial::full(5)) continue;
    MonomialIdeal ideal = MonomialIdeal::make(5, std::move(gens));
    TypeOrMismatch type = quasi_type_or_mismatch(ideal);
    if (!type.defined()) continue;
    ++matched;
    by_type[type.type->entries].insert(ideal.text());
  }
  REQUIRE(matched > 0);

  long long recovered = 0;
  for (const auto& [type, ideals] : by_type) {
    SearchSpec spec;
    spec.n = 5;
    spec.d = 2;
    spec.target_type = type;
    std::set<std::string> found;
    for (const MonomialIdeal& ideal : collect(spec)) {
      found.insert(ideal.text());
    }
    CHECK(found == ideals);
    recovered += static_cast<long long>(found.size());
  }
  CHECK(recovered == matched);
}

TEST_CASE("limit stops the stream early") {
  SearchSpec spec;
  spec.n = 5;
  spec.d = 3;
  spec.target_type = {0, 0, 1, 0};
  spec.limit = 2;
  SearchSummary summary;
  CHECK(collect(spec, &summary).size() == 2);
  CHECK(summary.limit_reached);
}

TEST_CASE("thread count does not change the stream") {
  SearchSpec spec;
  spec.n = 5;
  spec.d = 3;
  spec.target_type = {0, 0, 1, 0};
  std::vector<MonomialIdeal> sequential = collect(spec);
  spec.threads = 4;
  CHECK(collect(spec) == sequential);
}

TEST_CASE("budget guard") {
  SearchSpec spec;
  spec.n = 6;
  spec.d = 2;
  spec.target_type = {0, 0, 1};
  spec.budget = 10;
  try {
    collect(spec);
    FAIL("expected SpecTooLarge");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::SpecTooLarge);
  }
}

TEST_CASE("enumeration cap on n") {
  SearchSpec spec;
  spec.n = 9;
  spec.d = 2;
  spec.target_type = {0, 0, 0};
  CHECK_THROWS_AS(collect(spec), DomainError);
}

TEST_CASE("random ideals are deterministic and valid") {
  MonomialIdeal a = random_ideal(5, 3, 5, 1);
  MonomialIdeal b = random_ideal(5, 3, 5, 1);
  CHECK(a == b);
  CHECK(a.num_gens() == 5);
  CHECK(a.degree() == 3);

  MonomialIdeal c = random_ideal(5, 3, 5, 2);
  CHECK_FALSE(a == c);  // overwhelmingly likely for C(10,5) draws

  MonomialIdeal forced = random_ideal(5, 2, 10, 99);
  CHECK(forced.gens() == all_monomials_of_degree(5, 2));
}

TEST_CASE("random ideal bounds") {
  try {
    random_ideal(4, 2, 7, 1);
    FAIL("expected RTooLarge");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::RTooLarge);
  }
  CHECK_THROWS_AS(random_ideal(4, 5, 1, 1), DomainError);
  CHECK_THROWS_AS(random_ideal(4, 0, 1, 1), DomainError);
}

TEST_CASE("canonical form is idempotent and orbit-constant") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    int n = 3 + static_cast<int>(seed % 4);
    int d = 1 + static_cast<int>(seed % static_cast<unsigned>(n));
    long long r = std::min<long long>(1 + seed % 5, binomial(n, d));
    MonomialIdeal ideal = random_ideal(n, d, r, seed * 7);
    MonomialIdeal canon = canonical_form(ideal);
    CHECK(canonical_form(canon) == canon);

    // relabel by a rotation and check the orbit representative is stable
    std::vector<Monomial> rotated;
    for (const Monomial& g : ideal.gens()) {
      Monomial image;
      for (int v : g.indices()) image = image.with(v % n + 1);
      rotated.push_back(image);
    }
    MonomialIdeal sibling = MonomialIdeal::make(n, std::move(rotated));
    CHECK(canonical_form(sibling) == canon);
  }
}

TEST_CASE("canonical form cap") {
  MonomialIdeal wide = random_ideal(9, 2, 3, 4);
  CHECK_THROWS_AS(canonical_form(wide), DomainError);
}

TEST_CASE("symmetry reduction emits one representative per orbit") {
  SearchSpec spec;
  spec.n = 5;
  spec.d = 3;
  spec.target_type = {0, 0, 1, 0};
  std::vector<MonomialIdeal> full = collect(spec);
  spec.modulo_symmetry = true;
  std::vector<MonomialIdeal> reduced = collect(spec);

  CHECK(!reduced.empty());
  CHECK(reduced.size() < full.size());

  // the representatives are exactly the distinct canonical forms
  std::set<std::string> canon_of_full;
  for (const MonomialIdeal& ideal : full) {
    canon_of_full.insert(canonical_form(ideal).text());
  }
  std::set<std::string> reduced_texts;
  for (const MonomialIdeal& ideal : reduced) {
    CHECK(canonical_form(ideal) == ideal);
    reduced_texts.insert(ideal.text());
  }
  CHECK(reduced_texts == canon_of_full);
}
