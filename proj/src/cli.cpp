#include "qfi/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "qfi/combinatorics.hpp"
#include "qfi/complexes.hpp"
#include "qfi/dual.hpp"
#include "qfi/hilbert.hpp"
#include "qfi/json_io.hpp"
#include "qfi/monomial.hpp"
#include "qfi/quasi.hpp"
#include "qfi/search.hpp"

namespace qfi::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IdealArgs {
  std::string text;
  std::string json_path;
  int vars = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("generators", text,
                    "comma-separated generators, e.g. \"x1*x2,x2*x3\"");
    cmd->add_option("--vars", vars, "number of variables n");
    cmd->add_option("--json-in", json_path,
                    "read the ideal from a canonical-JSON file instead");
  }

  MonomialIdeal load() const {
    if (!json_path.empty()) {
      std::ifstream in(json_path);
      if (!in) {
        throw DomainError(ErrorKind::SyntaxError,
                          "cannot open " + json_path,
                          {{"path", json_path}});
      }
      Json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw DomainError(ErrorKind::SyntaxError,
                          std::string("invalid JSON: ") + e.what(),
                          {{"path", json_path}});
      }
      return ideal_from_json(j);
    }
    if (text.empty()) {
      throw UsageError("give generators inline (with --vars) or --json-in FILE");
    }
    if (vars < 1) {
      throw UsageError("--vars N is required with inline generators");
    }
    return parse_ideal(text, vars);
  }
};

void emit(const Json& doc, bool pretty, std::ostream& out) {
  out << (pretty ? doc.dump(2) : doc.dump()) << '\n';
}

Json or_error(const std::function<Json()>& body) {
  try {
    return body();
  } catch (const DomainError& e) {
    return Json{{"error", e.to_json()}};
  }
}

Json analyze_document(const MonomialIdeal& ideal) {
  SimplicialComplex facet = facet_complex(ideal);
  SimplicialComplex nonface = stanley_reisner_complex(ideal);
  CoverSet covers = minimal_vertex_covers(ideal);

  Json doc;
  doc["ideal"] = to_json(ideal);
  doc["text"] = ideal.text();
  doc["support"] = to_json(ideal.support());
  doc["full_support"] = ideal.full_support();
  doc["equigenerated"] = ideal.equigenerated();
  doc["degree"] = ideal.equigenerated() ? Json(ideal.degree()) : Json(nullptr);
  doc["facet_complex"] = to_json(facet);
  doc["stanley_reisner_complex"] = to_json(nonface);
  doc["f_facet"] = to_json(f_vector(facet));
  doc["f_nonface"] = to_json(f_vector(nonface));
  doc["minimal_vertex_covers"] = to_json(covers.covers);
  doc["height"] = height(ideal);
  doc["dim_facet"] = facet.dimension();
  doc["dim_nonface"] = nonface.dimension();
  doc["pure"] = facet.is_pure();
  doc["quasi_type"] = or_error([&] { return to_json(quasi_type(ideal)); });
  doc["characterization"] =
      or_error([&] { return to_json(characterize(ideal)); });
  doc["is_f_ideal"] = or_error([&] { return Json(is_f_ideal(ideal)); });
  return doc;
}

Json dual_document(const MonomialIdeal& ideal) {
  MonomialIdeal dual = newton_dual(ideal);
  Json doc;
  doc["ideal"] = to_json(ideal);
  doc["dual"] = to_json(dual);
  doc["dual_text"] = dual.text();
  doc["dual_f_vectors"] = or_error([&] {
    DualFVectors pred = dual_f_vectors(ideal);
    return Json{{"nonface_of_dual", to_json(pred.nonface_of_dual)},
                {"facet_of_dual", to_json(pred.facet_of_dual)}};
  });
  doc["report"] =
      or_error([&] { return to_json(check_duality_theorem(ideal)); });
  return doc;
}

std::string render_series(const HilbertSeries& series) {
  std::string out;
  for (const auto& [c, p] : series.terms) {
    if (!out.empty()) out += " + ";
    if (p == 0) {
      out += std::to_string(c);
    } else {
      std::string power = p == 1 ? "" : "^" + std::to_string(p);
      out += std::to_string(c) + "*k" + power + "/(1-k)" + power;
    }
  }
  return out;
}

Json hilbert_document(const MonomialIdeal& ideal, int max_degree) {
  Json doc;
  doc["ideal"] = to_json(ideal);
  doc["quasi_type"] = to_json(quasi_type(ideal));

  HilbertSeries series = hilbert_series(ideal);
  doc["series"] = to_json(series);
  doc["series_rendered"] = render_series(series);

  Json values = Json::array();
  for (int k = 0; k <= max_degree; ++k) {
    values.push_back(to_json(hilbert_function(ideal, k)));
  }
  doc["values"] = values;

  std::vector<BigInt> expansion = expand_series(series, max_degree);
  Json expansion_json = Json::array();
  bool matches = true;
  for (int k = 0; k <= max_degree; ++k) {
    expansion_json.push_back(to_json(expansion[static_cast<std::size_t>(k)]));
    matches = matches &&
              expansion[static_cast<std::size_t>(k)] ==
                  hilbert_function(ideal, k);
  }
  doc["expansion"] = expansion_json;
  doc["expansion_matches_values"] = matches;

  // Brute-force confirmation where the enumeration guard allows it.
  Json oracle = Json::array();
  bool oracle_complete = true;
  bool oracle_matches = true;
  for (int k = 0; k <= max_degree && oracle_complete; ++k) {
    try {
      BigInt count = hilbert_oracle(ideal, k);
      oracle.push_back(to_json(count));
      oracle_matches = oracle_matches && count == hilbert_function(ideal, k);
    } catch (const DomainError&) {
      oracle_complete = false;
    }
  }
  if (oracle_complete) {
    doc["oracle"] = oracle;
    doc["oracle_matches_values"] = oracle_matches;
  }
  return doc;
}

Json perfect_document(const MonomialIdeal& ideal) {
  Json doc;
  doc["ideal"] = to_json(ideal);
  doc["perfection"] = to_json(perfection(ideal.gens(), ideal.n()));
  return doc;
}

unsigned long long budget_from_env() {
  const char* env = std::getenv("QFI_BUDGET");
  if (env == nullptr) return 10'000'000ull;
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || value == 0) return 10'000'000ull;
  return std::min(value, 1'000'000'000'000'000ull);
}

std::vector<long long> parse_type_list(const std::string& list) {
  std::vector<long long> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      while (used < item.size() &&
             std::isspace(static_cast<unsigned char>(item[used]))) {
        ++used;
      }
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--type expects comma-separated integers, got \"" +
                       item + "\"");
    }
  }
  if (out.empty()) throw UsageError("--type must not be empty");
  return out;
}

// -------------------------------------------------------------------------
// selftest: the paper-example golden suite plus seeded cross-route checks.

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

template <typename Fn>
void run_check(std::vector<Check>& checks, const std::string& name, Fn body) {
  Check c;
  c.name = name;
  try {
    body(c);
    c.pass = c.detail.empty();
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = e.what();
  }
  checks.push_back(std::move(c));
}

std::vector<Check> run_selftest(std::uint64_t seed) {
  std::vector<Check> checks;

  const MonomialIdeal ex35 =
      parse_ideal("x1*x2*x4,x1*x2*x5,x3*x4*x5,x1*x4*x5,x2*x3*x5", 5);
  const MonomialIdeal ex36 =
      parse_ideal("x1*x2*x4,x1*x2*x5,x3*x4*x5,x1*x4*x5", 5);
  const MonomialIdeal ex47 = parse_ideal(
      "x1*x2,x1*x3,x2*x3,x4*x5,x4*x6,x5*x6,x2*x4,x3*x5", 6);

  run_check(checks, "facet_and_cover_complexes", [&](Check& c) {
    auto nf = stanley_reisner_complex(ex35);
    std::vector<Monomial> want = {
        Monomial::from_indices({1, 2, 3}), Monomial::from_indices({1, 3, 4}),
        Monomial::from_indices({1, 3, 5}), Monomial::from_indices({2, 3, 4}),
        Monomial::from_indices({2, 4, 5})};
    if (nf.facets() != want) c.detail = "unexpected Stanley-Reisner facets";
    if (height(ex35) != 2) c.detail = "height differs";
  });

  run_check(checks, "quasi_types", [&](Check& c) {
    if (quasi_type(ex35).entries != std::vector<long long>{0, 0, 1, 0}) {
      c.detail = "first ideal type differs";
    }
    if (quasi_type(ex36).entries != std::vector<long long>{0, 0, 2, 2}) {
      c.detail = "second ideal type differs";
    }
  });

  run_check(checks, "characterization_round_trip", [&](Check& c) {
    CharacterizationReport rep = characterize(ex35);
    if (!rep.verdict || rep.r != 5 || rep.binom_n_d != 10) {
      c.detail = "report numbers differ";
    }
    if (!(rep.claimed_type == quasi_type(ex35))) {
      c.detail = "claimed type differs from the direct one";
    }
  });

  run_check(checks, "hilbert_three_routes", [&](Check& c) {
    HilbertSeries series = hilbert_series(ex36);
    std::vector<std::pair<long long, int>> want_terms = {
        {1, 0}, {5, 1}, {10, 2}, {6, 3}};
    if (series.terms != want_terms) c.detail = "series terms differ";
    std::vector<BigInt> expanded = expand_series(series, 6);
    for (int k = 0; k <= 6; ++k) {
      BigInt direct = hilbert_function(ex36, k);
      if (direct != expanded[static_cast<std::size_t>(k)] ||
          direct != hilbert_oracle(ex36, k)) {
        c.detail = "routes disagree at k=" + std::to_string(k);
        break;
      }
    }
  });

  run_check(checks, "newton_dual_of_first_ideal", [&](Check& c) {
    MonomialIdeal dual = newton_dual(ex35);
    if (dual.text() != "x1*x2,x1*x4,x2*x3,x3*x4,x3*x5") {
      c.detail = "dual generators differ: " + dual.text();
    }
    DualityReport rep = check_duality_theorem(ex35);
    if (rep.applicable || rep.dual_type.defined()) {
      c.detail = "theorem unexpectedly applicable";
    }
    bool missing = false;
    for (const Monomial& m : rep.dual_g_perfect.missing_upper) {
      missing = missing || m == Monomial::from_indices({2, 4, 5});
    }
    if (!missing) c.detail = "expected missing upper witness not found";
  });

  run_check(checks, "duality_theorem_on_perfect_set", [&](Check& c) {
    DualityReport rep = check_duality_theorem(ex47);
    if (!rep.applicable || !rep.match) c.detail = "expected a clean match";
    if (!rep.original_type.defined() ||
        rep.original_type.type->entries !=
            std::vector<long long>{0, 0, -1}) {
      c.detail = "original type differs";
    }
    if (!rep.dual_type.defined() ||
        rep.dual_type.type->entries !=
            std::vector<long long>{0, 0, 0, 0, -1}) {
      c.detail = "dual type differs";
    }
  });

  run_check(checks, "seeded_cross_checks", [&](Check& c) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 50; ++trial) {
      int n = 2 + static_cast<int>(rng() % 7);
      int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      if (d == n) d = n - 1;
      if (d < 1) d = 1;
      long long room = binomial(n, d);
      long long r = 1 + static_cast<long long>(rng() % static_cast<unsigned long long>(room));
      MonomialIdeal ideal = random_ideal(n, d, r, rng());
      if (!(newton_dual(newton_dual(ideal)) == ideal)) {
        c.detail = "dual is not an involution on " + ideal.text();
        return;
      }
      DualFVectors pred = dual_f_vectors(ideal);
      MonomialIdeal dual = newton_dual(ideal);
      if (pred.nonface_of_dual != f_vector(stanley_reisner_complex(dual)) ||
          pred.facet_of_dual != f_vector(facet_complex(dual))) {
        c.detail = "dual f-vector prediction differs on " + ideal.text();
        return;
      }
      SimplicialComplex nf = stanley_reisner_complex(ideal);
      if (nf.dimension() != n - height(ideal) - 1) {
        c.detail = "dimension/height relation fails on " + ideal.text();
        return;
      }
    }
  });

  return checks;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "qfi - squarefree monomial ideal toolkit: facet and Stanley-Reisner "
      "complexes, quasi f-ideal types, Hilbert data, Newton complementary "
      "duals, and enumeration"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer("The QFI_BUDGET environment variable overrides the enumeration "
             "candidate budget (default 10000000).");

  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  IdealArgs analyze_in, dual_in, hilbert_in, perfect_in;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "complexes, f-vectors, covers, quasi type, characterization");
  analyze_in.attach(analyze);

  CLI::App* dual = app.add_subcommand(
      "dual", "Newton complementary dual and the duality-theorem report");
  dual_in.attach(dual);

  CLI::App* hilbert = app.add_subcommand(
      "hilbert", "Hilbert function values, series, expansion cross-check");
  hilbert_in.attach(hilbert);
  int max_degree = 6;
  hilbert->add_option("--max-degree", max_degree,
                      "largest degree to evaluate (default 6)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* perfect = app.add_subcommand(
      "perfect", "lower/upper perfection report for the generating set");
  perfect_in.attach(perfect);

  CLI::App* enumerate = app.add_subcommand(
      "enumerate",
      "stream all full-support equigenerated ideals of a given quasi type "
      "as JSON lines");
  int enum_vars = 0, enum_degree = 0, enum_threads = 1;
  long long enum_limit = 0;
  std::string type_list;
  bool modulo_symmetry = false;
  enumerate->add_option("--vars", enum_vars, "number of variables n")
      ->required();
  enumerate->add_option("--degree", enum_degree, "generator degree d")
      ->required();
  enumerate->add_option("--type", type_list,
                        "target type, short (a_0..a_{d-1}) or long "
                        "(a_{-1}..a_{d-1}) comma-separated form")
      ->required();
  enumerate->add_flag("--modulo-symmetry", modulo_symmetry,
                      "emit one representative per relabeling orbit");
  enumerate->add_option("--limit", enum_limit, "stop after N ideals");
  enumerate->add_option("--threads", enum_threads,
                        "worker threads for candidate testing");

  CLI::App* selftest = app.add_subcommand(
      "selftest", "golden examples plus seeded cross-route checks");
  std::uint64_t seed = 1;
  selftest->add_option("--seed", seed, "seed for the randomized checks");

  std::vector<char*> argv;
  std::vector<std::string> storage;
  storage.emplace_back("qfi");
  storage.insert(storage.end(), args.begin(), args.end());
  argv.reserve(storage.size());
  for (std::string& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (analyze->parsed()) {
      emit(analyze_document(analyze_in.load()), pretty, out);
    } else if (dual->parsed()) {
      emit(dual_document(dual_in.load()), pretty, out);
    } else if (hilbert->parsed()) {
      emit(hilbert_document(hilbert_in.load(), max_degree), pretty, out);
    } else if (perfect->parsed()) {
      emit(perfect_document(perfect_in.load()), pretty, out);
    } else if (enumerate->parsed()) {
      SearchSpec spec;
      spec.n = enum_vars;
      spec.d = enum_degree;
      spec.target_type = parse_type_list(type_list);
      spec.modulo_symmetry = modulo_symmetry;
      if (enum_limit > 0) spec.limit = enum_limit;
      spec.threads = enum_threads;
      spec.budget = budget_from_env();
      SearchSummary summary = enumerate_quasi(spec, [&](const MonomialIdeal& ideal) {
        out << to_json(ideal).dump() << '\n';
        return true;
      });
      Json tail;
      tail["count"] = summary.count;
      tail["candidates"] = summary.candidates;
      tail["r"] = summary.r;
      tail["pruned_by_parity"] = summary.pruned_by_parity;
      tail["pruned_by_count"] = summary.pruned_by_count;
      tail["limit_reached"] = summary.limit_reached;
      tail["modulo_symmetry"] = modulo_symmetry;
      out << tail.dump() << '\n';
    } else if (selftest->parsed()) {
      std::vector<Check> checks = run_selftest(seed);
      bool all = true;
      Json doc;
      doc["checks"] = Json::array();
      for (const Check& c : checks) {
        Json entry;
        entry["name"] = c.name;
        entry["pass"] = c.pass;
        if (!c.detail.empty()) entry["detail"] = c.detail;
        doc["checks"].push_back(entry);
        all = all && c.pass;
      }
      doc["pass"] = all;
      emit(doc, pretty, out);
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    Json doc;
    doc["error"] = e.to_json();
    emit(doc, pretty, out);
    return 1;
  }
  return 0;
}

}  // namespace qfi::cli
