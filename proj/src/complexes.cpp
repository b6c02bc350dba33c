#include "qfi/complexes.hpp"

#include <algorithm>
#include <unordered_set>

namespace qfi {

SimplicialComplex SimplicialComplex::make(int n, std::vector<Face> faces) {
  Monomial ambient = Monomial::full(n);
  for (const Face& f : faces) {
    if (!f.divides(ambient)) {
      throw DomainError(ErrorKind::IndexOutOfRange,
                        "face " + f.text() + " uses a vertex beyond " +
                            std::to_string(n),
                        {{"face", f.text()}, {"n", n}});
    }
  }
  // The complex generated by the given faces: keep the maximal ones.
  // The empty face is implicit, so the degenerate complex {empty} comes
  // out facetless.
  std::sort(faces.begin(), faces.end(), CanonicalLess{});
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> maximal;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].is_unit()) continue;
    bool contained = false;
    for (std::size_t j = i + 1; j < faces.size() && !contained; ++j) {
      contained = faces[i] != faces[j] && faces[i].divides(faces[j]);
    }
    if (!contained) maximal.push_back(faces[i]);
  }
  return SimplicialComplex(n, std::move(maximal));
}

int SimplicialComplex::dimension() const {
  int best = -1;
  for (const Face& f : facets_) best = std::max(best, f.degree() - 1);
  return best;
}

bool SimplicialComplex::is_pure() const {
  for (const Face& f : facets_) {
    if (f.degree() != facets_.front().degree()) return false;
  }
  return true;
}

SimplicialComplex facet_complex(const MonomialIdeal& ideal) {
  // G(I) is a minimal antichain, so its members are honest facets.
  return SimplicialComplex::make(ideal.n(), ideal.gens());
}

namespace {

// Depth-first enumeration of minimal transversals. Branching on the
// vertices of the first uncovered generator, with each vertex banned in
// the branches to its right, visits every minimal cover at least once;
// the private-generator test keeps exactly the minimal ones.
void cover_dfs(const std::vector<Monomial>& gens, Monomial cover,
               Monomial banned, std::vector<Monomial>& out) {
  const Monomial* uncovered = nullptr;
  for (const Monomial& g : gens) {
    if (!g.intersects(cover)) {
      uncovered = &g;
      break;
    }
  }
  if (uncovered == nullptr) {
    // minimal iff every chosen vertex is the sole hit of some generator
    for (int v : cover.indices()) {
      bool has_private = false;
      for (const Monomial& g : gens) {
        if (g.intersected(cover) == Monomial{}.with(v)) {
          has_private = true;
          break;
        }
      }
      if (!has_private) return;
    }
    out.push_back(cover);
    return;
  }
  Monomial choices = uncovered->minus(banned);
  for (int v : choices.indices()) {
    cover_dfs(gens, cover.with(v), banned, out);
    banned = banned.with(v);
  }
}

}  // namespace

CoverSet minimal_vertex_covers(const MonomialIdeal& ideal) {
  std::vector<Monomial> covers;
  cover_dfs(ideal.gens(), Monomial{}, Monomial{}, covers);
  std::sort(covers.begin(), covers.end(), CanonicalLess{});
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  return CoverSet{std::move(covers)};
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  // Complements of minimal covers are exactly the maximal faces. If the
  // only cover is the whole vertex set (every variable is a generator),
  // the complex degenerates to {empty face}.
  std::vector<Face> facets;
  for (const Monomial& cover : minimal_vertex_covers(ideal).covers) {
    facets.push_back(cover.complement(ideal.n()));
  }
  return SimplicialComplex::make(ideal.n(), std::move(facets));
}

FVector f_vector(const SimplicialComplex& complex) {
  FVector fv;
  fv.entries.assign(static_cast<std::size_t>(complex.dimension()) + 2, 0);
  fv.entries[0] = 1;  // the empty face
  std::unordered_set<std::uint64_t> seen;
  for (const Face& facet : complex.facets()) {
    std::uint64_t m = facet.bits();
    // iterate all nonempty submasks of the facet
    for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
      if (sub != 0 && seen.insert(sub).second) {
        int dim = std::popcount(sub) - 1;
        ++fv.entries[static_cast<std::size_t>(dim) + 1];
      }
      if (sub == 0) break;
    }
  }
  return fv;
}

int height(const MonomialIdeal& ideal) {
  int best = ideal.n() + 1;
  for (const Monomial& cover : minimal_vertex_covers(ideal).covers) {
    best = std::min(best, cover.degree());
  }
  return best;
}

bool is_pure(const SimplicialComplex& complex) { return complex.is_pure(); }

}  // namespace qfi
