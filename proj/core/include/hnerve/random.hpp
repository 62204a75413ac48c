#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hnerve/complex.hpp"
#include "hnerve/monomial.hpp"

namespace hnerve {

/// Seeded generator with platform-independent bounded draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish value in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

struct ComplexShape {
  std::size_t max_vertices = 8;
  std::size_t max_facets = 6;
};

/// Facets of uniformly random size 1..n over n <= max_vertices labelled A, B, ...
SimplicialComplex random_complex(Rng& rng, const ComplexShape& shape = {});
std::vector<SimplicialComplex> random_corpus(std::uint64_t seed, std::size_t count,
                                             const ComplexShape& shape = {});

/// Squarefree ideal over variables x1..xn (all declared, some possibly unused).
MonomialIdeal random_squarefree_ideal(Rng& rng, std::size_t max_vars = 7, std::size_t max_gens = 5);
/// Ideal with at least one exponent >= 2 after minimalization.
MonomialIdeal random_nonsquarefree_ideal(Rng& rng, std::size_t max_vars = 4, std::size_t max_gens = 5,
                                         std::uint32_t max_exponent = 3);

}  // namespace hnerve
