// Acceptance suite: reproduces the toolkit's advertised results end to
// end and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qfi/cli.hpp"
#include "qfi/combinatorics.hpp"
#include "qfi/complexes.hpp"
#include "qfi/dual.hpp"
#include "qfi/hilbert.hpp"
#include "qfi/json_io.hpp"
#include "qfi/quasi.hpp"
#include "qfi/search.hpp"

using namespace qfi;

namespace {

const char* kEx35 = "x1*x2*x4,x1*x2*x5,x3*x4*x5,x1*x4*x5,x2*x3*x5";
const char* kEx36 = "x1*x2*x4,x1*x2*x5,x3*x4*x5,x1*x4*x5";
const char* kEx47 = "x1*x2,x1*x3,x2*x3,x4*x5,x4*x6,x5*x6,x2*x4,x3*x5";

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string run_tool(const std::vector<std::string>& args, int expect_code = 0) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  require(code == expect_code,
          "CLI exited " + std::to_string(code) + ": " + err.str());
  return out.str();
}

template <typename T>
std::string show(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------

void criterion_1() {
  Json doc = Json::parse(run_tool({"analyze", "--vars", "5", kEx35}));
  require(doc["facet_complex"]["facets"] ==
              Json::parse("[[1,2,4],[1,2,5],[1,4,5],[2,3,5],[3,4,5]]"),
          "facet complex facets differ");
  require(doc["stanley_reisner_complex"]["facets"] ==
              Json::parse("[[1,2,3],[1,3,4],[1,3,5],[2,3,4],[2,4,5]]"),
          "Stanley-Reisner facets differ");
  require(doc["minimal_vertex_covers"] ==
              Json::parse("[[1,3],[1,5],[2,4],[2,5],[4,5]]"),
          "primary decomposition differs");
  require(doc["height"] == 2, "height differs");
  require(doc["characterization"]["count"]["r"] == 5, "|G(I)| differs");
  require(doc["characterization"]["parity"]["binomial"] == 10,
          "C(5,3) differs");
  require(doc["characterization"]["parity"]["a_top"] == 0, "a_top differs");
  require(doc["characterization"]["count"]["expected_r"] == 5,
          "half-binomial count differs");
  require(doc["characterization"]["verdict"] == true, "verdict differs");
  require(doc["quasi_type"]["a"] == Json::array({0, 0, 1, 0}),
          "quasi type differs");
}

void criterion_2() {
  MonomialIdeal ideal = parse_ideal(kEx36, 5);
  FVector ff = f_vector(facet_complex(ideal));
  FVector fn = f_vector(stanley_reisner_complex(ideal));
  require(ff.entries == std::vector<long long>{1, 5, 8, 4},
          "f(delta_F) = " + show(ff.entries));
  require(fn.entries == std::vector<long long>{1, 5, 10, 6},
          "f(delta_N) = " + show(fn.entries));
  require(quasi_type(ideal).entries == std::vector<long long>{0, 0, 2, 2},
          "type differs");
}

void criterion_3() {
  MonomialIdeal ideal = parse_ideal(kEx36, 5);
  HilbertSeries series = hilbert_series(ideal);
  std::vector<std::pair<long long, int>> want_terms = {
      {1, 0}, {5, 1}, {10, 2}, {6, 3}};
  require(series.terms == want_terms, "series terms differ");

  std::vector<BigInt> expansion = expand_series(series, 6);
  std::vector<BigInt> first_four = {1, 5, 15, 31};
  for (long long k = 0; k <= 6; ++k) {
    BigInt direct = hilbert_function(ideal, k);
    require(direct == expansion[static_cast<std::size_t>(k)],
            "function vs expansion at k=" + std::to_string(k));
    require(direct == hilbert_oracle(ideal, k),
            "function vs oracle at k=" + std::to_string(k));
    if (k <= 3) {
      require(direct == first_four[static_cast<std::size_t>(k)],
              "frozen value differs at k=" + std::to_string(k));
    }
  }
}

void criterion_4() {
  MonomialIdeal ideal = parse_ideal(kEx35, 5);
  MonomialIdeal dual = newton_dual(ideal);
  require(dual.text() == "x1*x2,x1*x4,x2*x3,x3*x4,x3*x5",
          "dual generators differ: " + dual.text());

  DualityReport report = check_duality_theorem(ideal);
  require(!report.dual_g_perfect.upper, "dual upper perfection differs");
  bool witness = false;
  for (const Monomial& mm : report.dual_g_perfect.missing_upper) {
    witness = witness || mm == Monomial::from_indices({2, 4, 5});
  }
  require(witness, "x2*x4*x5 not among the missing upper monomials");
  require(!report.applicable, "theorem should be inapplicable");
  require(!report.match, "no match expected");
}

void criterion_5() {
  MonomialIdeal ideal = parse_ideal(kEx47, 6);
  MonomialIdeal dual = newton_dual(ideal);
  MonomialIdeal want = parse_ideal(
      "x3*x4*x5*x6,x2*x4*x5*x6,x1*x4*x5*x6,x1*x2*x3*x6,x1*x2*x3*x5,"
      "x1*x2*x3*x4,x1*x3*x5*x6,x1*x2*x4*x6",
      6);
  require(dual == want, "dual generators differ: " + dual.text());

  FVector dual_facet = f_vector(facet_complex(dual));
  FVector dual_nonface = f_vector(stanley_reisner_complex(dual));
  require(dual_facet.entries == std::vector<long long>{1, 6, 15, 20, 8},
          "f(delta_F(dual)) = " + show(dual_facet.entries));
  require(dual_nonface.entries == std::vector<long long>{1, 6, 15, 20, 7},
          "f(delta_N(dual)) = " + show(dual_nonface.entries));

  DualityReport report = check_duality_theorem(ideal);
  require(report.original_type.defined() &&
              report.original_type.type->entries ==
                  std::vector<long long>{0, 0, -1},
          "original type differs");
  require(report.dual_type.defined() &&
              report.dual_type.type->entries ==
                  std::vector<long long>{0, 0, 0, 0, -1},
          "dual type differs");
  require(report.applicable, "G(I) should be perfect");
  require(report.match, "duality match expected");
}

void sweep_pair(int n, int d, long long& scanned) {
  std::vector<Monomial> pool = all_monomials_of_degree(n, d);
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
    if (support != Monomial::full(n)) continue;
    MonomialIdeal ideal = MonomialIdeal::make(n, std::move(gens));
    ++scanned;
    CharacterizationReport report = characterize(ideal);
    TypeOrMismatch direct = quasi_type_or_mismatch(ideal);
    if (direct.defined()) {
      require(report.verdict,
              "verdict false on dimension-matched " + ideal.text());
      require(report.claimed_type == *direct.type,
              "claimed type differs on " + ideal.text());
    } else {
      require(!report.verdict,
              "verdict true on mismatched " + ideal.text());
    }
  }
}

void criterion_6() {
  long long scanned = 0;
  sweep_pair(5, 2, scanned);
  sweep_pair(5, 3, scanned);
  sweep_pair(6, 2, scanned);
  // 768 + 958 + 27449 full-support subsets across the three spaces
  require(scanned == 768 + 958 + 27449,
          "sweep size differs: " + std::to_string(scanned));
}

void criterion_7() {
  std::uint64_t seed = 424242;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + trial % 7;  // 2..8
    int d = 1 + trial % n;
    if (d == n) d = n - 1;
    long long room = binomial(n, d);
    long long r = 1 + static_cast<long long>((trial * 37 + 11) % room);
    MonomialIdeal ideal = random_ideal(n, d, r, seed + trial);

    MonomialIdeal dual = newton_dual(ideal);
    require(newton_dual(dual) == ideal, "involution fails: " + ideal.text());

    DualFVectors pred = dual_f_vectors(ideal);
    require(pred.nonface_of_dual == f_vector(stanley_reisner_complex(dual)),
            "nonface prediction differs: " + ideal.text());
    require(pred.facet_of_dual == f_vector(facet_complex(dual)),
            "facet prediction differs: " + ideal.text());

    PerfectionReport original = perfection(ideal.gens(), n);
    PerfectionReport dualized = perfection(dual.gens(), n);
    require(original.lower == dualized.upper &&
                original.upper == dualized.lower,
            "perfectness transfer fails: " + ideal.text());
  }
}

void criterion_8() {
  std::uint64_t seed = 777;
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + trial % 9;  // 2..10
    int d = 1 + (trial / 3) % n;
    long long room = binomial(n, d);
    long long r = 1 + static_cast<long long>((trial * 13 + 5) % room);
    MonomialIdeal ideal = random_ideal(n, d, r, seed + trial);

    require(stanley_reisner_complex(ideal).facets() ==
                oracle::brute_sr_facets(ideal),
            "cover complements differ from brute force: " + ideal.text());
    require(stanley_reisner_complex(ideal).dimension() ==
                n - height(ideal) - 1,
            "dimension relation fails: " + ideal.text());
  }
}

void criterion_9() {
  std::uint64_t seed = 31337;
  int collected = 0;
  while (collected < 500) {
    ++seed;
    int n = 3 + static_cast<int>(seed % 6);  // 3..8
    int d = 2 + static_cast<int>(seed % static_cast<unsigned>(n - 1));
    long long room = binomial(n, d);
    long long r = 1 + static_cast<long long>(seed % static_cast<unsigned long long>(room));
    MonomialIdeal ideal = random_ideal(n, d, r, seed * 31);
    if (!ideal.full_support()) continue;
    ++collected;
    FVector fn = f_vector(stanley_reisner_complex(ideal));
    for (int i = 0; i <= d - 2; ++i) {
      require(fn.at(i) == binomial(n, i + 1),
              "f_" + std::to_string(i) + " short of complete: " + ideal.text());
    }
  }
}

void criterion_10() {
  std::string stream = run_tool(
      {"enumerate", "--vars", "5", "--degree", "3", "--type", "0,0,1,0"});
  Json want = Json::parse(
      "{\"n\":5,\"generators\":[[1,2,4],[1,2,5],[1,4,5],[2,3,5],[3,4,5]]}");
  bool present = false;
  Json summary;
  std::istringstream lines(stream);
  std::string line;
  while (std::getline(lines, line)) {
    Json doc = Json::parse(line);
    if (doc.contains("count")) {
      summary = doc;
    } else if (doc == want) {
      present = true;
    }
  }
  require(present, "the running example ideal is missing from the stream");
  require(summary["count"].get<long long>() >= 1, "empty stream");

  std::string obstructed = run_tool(
      {"enumerate", "--vars", "5", "--degree", "2", "--type", "0,0,1"});
  std::istringstream olines(obstructed);
  int n_lines = 0;
  std::string oline, last;
  while (std::getline(olines, oline)) {
    last = oline;
    ++n_lines;
  }
  require(n_lines == 1, "expected only the summary record");
  Json osummary = Json::parse(last);
  require(osummary["count"] == 0 && osummary["pruned_by_parity"] == true,
          "parity pruning flag missing");
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<void()> body;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "first running example end-to-end via analyze", 1.0, criterion_1},
      {2, "second running example f-vectors and type", 1.0, criterion_2},
      {3, "Hilbert data: series terms, function, expansion, oracle", 1.0,
       criterion_3},
      {4, "Newton dual with imperfect generating set", 1.0, criterion_4},
      {5, "Newton dual with perfect generating set, duality match", 1.0,
       criterion_5},
      {6, "characterization equivalence sweep (n=5 d=2,3; n=6 d=2)", 300.0,
       criterion_6},
      {7, "dual predictions, perfectness transfer, involution x1000", 120.0,
       criterion_7},
      {8, "Stanley-Reisner oracle equivalence x500", 120.0, criterion_8},
      {9, "complete low skeleta of the non-face complex x500", 120.0,
       criterion_9},
      {10, "enumerate stream and parity pruning", 60.0, criterion_10},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
      c.body();
    } catch (const std::exception& e) {
      pass = false;
      detail = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (pass && elapsed > c.budget_seconds) {
      pass = false;
      detail = "over time budget of " + std::to_string(c.budget_seconds) + " s";
    }
    std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n",
                pass ? "PASS" : "FAIL", c.id, c.name.c_str(), elapsed,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
