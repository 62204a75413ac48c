#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hnerve/complex.hpp"
#include "hnerve/config.hpp"
#include "hnerve/homology.hpp"

namespace hnerve {

/// A complex on the ground set {0, ..., r-1}, kept both in facet form and as
/// its full face family (bit masks, sorted, including the empty mask).
/// Vertex v of `complex` is ground element `ground[v]` and is labelled with
/// the 1-based index `ground[v] + 1`. Ground elements that lie in no face are
/// simply absent from `complex`.
struct IndexComplex {
  SimplicialComplex complex = SimplicialComplex::irrelevant();
  std::vector<std::uint32_t> ground;
  std::size_t ground_size = 0;
  std::vector<std::uint64_t> faces;

  bool contains(std::uint64_t mask) const;
  /// Translates a ground-set mask to a face of `complex`; the mask must be a face.
  Face face_of(std::uint64_t mask) const;
};

/// Builds the facet form of a downward-closed family of masks over {0..r-1}.
IndexComplex index_complex_from_family(std::size_t r, std::vector<std::uint64_t> faces);

/// N_j(Δ): subsets of facet indices whose facets share at least j vertices.
struct NerveComplex {
  IndexComplex index;
  std::size_t level = 1;
  std::vector<Face> source_facets;

  const SimplicialComplex& complex() const { return index.complex; }
};

/// Level-by-level subset enumeration; a subset that fails is never extended.
/// Throws CapExceeded if the facet count exceeds limits.max_facets (or 63).
NerveComplex nerve(const SimplicialComplex& c, std::size_t level, const Limits& limits = {});

/// N_1 .. N_{d+1}, computed from one shared table of facet intersections.
std::vector<NerveComplex> nerve_family(const SimplicialComplex& c, const Limits& limits = {});

/// χ and χ̃ from face counts alone.
EulerPair euler_characteristics(const SimplicialComplex& c, const Limits& limits = {});

}  // namespace hnerve
