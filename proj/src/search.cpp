#include "qfi/search.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>

#include "qfi/combinatorics.hpp"
#include "qfi/complexes.hpp"
#include "qfi/quasi.hpp"

namespace qfi {

namespace {

// Long form (a_{-1}..a_{d-1}); the short form gains a leading zero.
std::vector<long long> normalize_type(const SearchSpec& spec) {
  const auto& t = spec.target_type;
  if (static_cast<int>(t.size()) == spec.d) {
    std::vector<long long> out;
    out.reserve(t.size() + 1);
    out.push_back(0);
    out.insert(out.end(), t.begin(), t.end());
    return out;
  }
  if (static_cast<int>(t.size()) == spec.d + 1) return t;
  throw DomainError(ErrorKind::SyntaxError,
                    "type vector must have length d or d+1",
                    {{"length", t.size()}, {"d", spec.d}});
}

struct ColexSubset {
  std::vector<int> members;  // ascending positions into the monomial list

  static ColexSubset first(int r) {
    ColexSubset s;
    s.members.resize(static_cast<std::size_t>(r));
    std::iota(s.members.begin(), s.members.end(), 0);
    return s;
  }

  // Colex successor within positions 0..m-1; false when exhausted.
  bool advance(int m) {
    int r = static_cast<int>(members.size());
    for (int i = 0; i < r; ++i) {
      int ceiling = (i + 1 < r) ? members[static_cast<std::size_t>(i + 1)]
                                : m;
      if (members[static_cast<std::size_t>(i)] + 1 < ceiling) {
        ++members[static_cast<std::size_t>(i)];
        std::iota(members.begin(), members.begin() + i, 0);
        return true;
      }
    }
    return false;
  }
};

struct Candidate {
  std::vector<Monomial> gens;
  Monomial support;
};

// Ascending positions into the lex-sorted pool come out canonically
// sorted already.
Candidate gather(const std::vector<Monomial>& pool, const ColexSubset& subset) {
  Candidate c;
  c.gens.reserve(subset.members.size());
  for (int pos : subset.members) {
    c.gens.push_back(pool[static_cast<std::size_t>(pos)]);
    c.support = c.support.united(pool[static_cast<std::size_t>(pos)]);
  }
  return c;
}

// Theorem-side filters plus the direct confirmation. The candidate's
// generators are distinct equal-degree monomials, hence already minimal.
bool matches_target(const Candidate& candidate, const SearchSpec& spec,
                    const std::vector<long long>& target) {
  if (candidate.support != Monomial::full(spec.n)) return false;

  MonomialIdeal ideal = MonomialIdeal::make(spec.n, candidate.gens);

  // condition (3): lower entries are the non-face counts of delta_F
  FVector facet = f_vector(facet_complex(ideal));
  for (int i = 0; i <= spec.d - 2; ++i) {
    if (binomial(spec.n, i + 1) - facet.at(i) !=
        target[static_cast<std::size_t>(i) + 1]) {
      return false;
    }
  }

  // condition (1)
  if (height(ideal) != spec.n - spec.d) return false;

  // direct confirmation by definition
  TypeOrMismatch direct = quasi_type_or_mismatch(ideal);
  return direct.defined() && direct.type->entries == target;
}

}  // namespace

SearchSummary enumerate_quasi(
    const SearchSpec& spec,
    const std::function<bool(const MonomialIdeal&)>& sink) {
  if (spec.d < 2 || spec.d > spec.n) {
    throw DomainError(ErrorKind::DegreeTooSmall,
                      "enumeration needs 2 <= d <= n",
                      {{"n", spec.n}, {"d", spec.d}});
  }
  if (spec.n > spec.max_n) {
    throw DomainError(ErrorKind::SpecTooLarge,
                      "n exceeds the enumeration cap of " +
                          std::to_string(spec.max_n),
                      {{"n", spec.n}, {"max_n", spec.max_n}});
  }

  std::vector<long long> target = normalize_type(spec);
  SearchSummary summary;

  if (target.front() != 0) return summary;  // a_{-1} is always zero

  long long cnd = binomial(spec.n, spec.d);
  long long a_top = target.back();
  if (((cnd - a_top) % 2 + 2) % 2 != 0) {
    summary.pruned_by_parity = true;
    return summary;
  }

  // condition (2) fixes the generator count up front
  long long r = (cnd - a_top) / 2;
  summary.r = r;
  if (r < 1 || r > cnd) {
    summary.pruned_by_count = true;
    return summary;
  }

  std::vector<Monomial> pool = all_monomials_of_degree(spec.n, spec.d);
  int m = static_cast<int>(pool.size());

  unsigned long long space = binomial_capped(
      static_cast<unsigned long long>(m), static_cast<unsigned long long>(r),
      spec.budget);
  if (space > spec.budget && !spec.modulo_symmetry) {
    throw DomainError(
        ErrorKind::SpecTooLarge,
        "candidate space C(" + std::to_string(m) + "," + std::to_string(r) +
            ") exceeds the budget; raise QFI_BUDGET or reduce the spec",
        {{"candidates", "over budget"}, {"budget", spec.budget}});
  }

  int threads = std::max(1, spec.threads);
  const long long block = 4096;

  ColexSubset cursor = ColexSubset::first(static_cast<int>(r));
  bool exhausted = false;
  while (!exhausted) {
    // collect one block of candidate subsets in colex order
    std::vector<ColexSubset> batch;
    batch.reserve(static_cast<std::size_t>(block));
    for (long long i = 0; i < block && !exhausted; ++i) {
      batch.push_back(cursor);
      exhausted = !cursor.advance(m);
    }
    summary.candidates += static_cast<long long>(batch.size());

    // test candidates, in parallel across slices of the batch; slices are
    // pure, and re-concatenation restores colex order
    std::vector<std::optional<MonomialIdeal>> found(batch.size());
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        Candidate c = gather(pool, batch[i]);
        if (matches_target(c, spec, target)) {
          found[i] = MonomialIdeal::make(spec.n, std::move(c.gens));
        }
      }
    };
    if (threads == 1 || batch.size() < 64) {
      work(0, batch.size());
    } else {
      std::vector<std::future<void>> futures;
      std::size_t chunk = (batch.size() + static_cast<std::size_t>(threads) - 1) /
                          static_cast<std::size_t>(threads);
      for (int t = 0; t < threads; ++t) {
        std::size_t begin = std::min(batch.size(), chunk * static_cast<std::size_t>(t));
        std::size_t end = std::min(batch.size(), begin + chunk);
        if (begin < end) {
          futures.push_back(std::async(std::launch::async, work, begin, end));
        }
      }
      for (auto& f : futures) f.get();
    }

    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!found[i]) continue;
      if (spec.modulo_symmetry && !(canonical_form(*found[i]) == *found[i])) {
        continue;
      }
      ++summary.count;
      bool keep_going = sink(*found[i]);
      if (spec.limit && summary.count >= *spec.limit) {
        summary.limit_reached = true;
        return summary;
      }
      if (!keep_going) return summary;
    }
  }
  return summary;
}

namespace {

// Bounded uniform draw independent of the standard library's
// distribution internals, so seeds reproduce across platforms.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t draw = rng();
    if (draw >= threshold) return draw % bound;
  }
}

}  // namespace

MonomialIdeal random_ideal(int n, int d, long long r, std::uint64_t seed) {
  if (d < 1 || d > n) {
    throw DomainError(ErrorKind::DegreeTooSmall,
                      "need 1 <= d <= n", {{"n", n}, {"d", d}});
  }
  long long total = binomial(n, d);
  if (r < 1 || r > total) {
    throw DomainError(ErrorKind::RTooLarge,
                      "requested " + std::to_string(r) + " generators but " +
                          "sm(R)_d has " + std::to_string(total),
                      {{"r", r}, {"available", total}});
  }

  std::vector<Monomial> pool = all_monomials_of_degree(n, d);
  std::mt19937_64 rng(seed);
  // partial Fisher-Yates: the first r entries become the sample
  for (long long i = 0; i < r; ++i) {
    std::uint64_t j = i + uniform_below(rng, static_cast<std::uint64_t>(
                                                 total - i));
    std::swap(pool[static_cast<std::size_t>(i)],
              pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(r));
  return MonomialIdeal::make(n, std::move(pool));
}

MonomialIdeal canonical_form(const MonomialIdeal& ideal, int cap) {
  int n = ideal.n();
  if (n > cap) {
    throw DomainError(ErrorKind::SymmetryCapExceeded,
                      "canonical form enumerates n! relabelings; n = " +
                          std::to_string(n) + " exceeds the cap of " +
                          std::to_string(cap),
                      {{"n", n}, {"cap", cap}});
  }

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);

  std::optional<MonomialIdeal> best;
  std::vector<Monomial> relabeled(ideal.gens().size());
  do {
    for (std::size_t g = 0; g < ideal.gens().size(); ++g) {
      Monomial image;
      for (int v : ideal.gens()[g].indices()) {
        image = image.with(perm[static_cast<std::size_t>(v - 1)]);
      }
      relabeled[g] = image;
    }
    MonomialIdeal candidate = MonomialIdeal::make(n, relabeled);
    if (!best || canonical_less(candidate, *best)) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

}  // namespace qfi
