#include "hnerve/random.hpp"

#include <numeric>
#include <string>

namespace hnerve {

namespace {

std::string vertex_label(std::size_t v, std::size_t n) {
  if (n <= 26) return std::string(1, static_cast<char>('A' + v));
  return "v" + std::to_string(v);
}

std::vector<std::size_t> sample(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
  pool.resize(k);
  return pool;
}

std::vector<std::string> variable_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t v = 1; v <= n; ++v) names.push_back("x" + std::to_string(v));
  return names;
}

}  // namespace

SimplicialComplex random_complex(Rng& rng, const ComplexShape& shape) {
  const std::size_t n = 1 + rng.below(shape.max_vertices);
  const std::size_t m = 1 + rng.below(shape.max_facets);
  std::vector<std::vector<std::string>> facets;
  for (std::size_t f = 0; f < m; ++f) {
    const std::size_t size = 1 + rng.below(n);
    std::vector<std::string> facet;
    for (std::size_t v : sample(rng, n, size)) facet.push_back(vertex_label(v, shape.max_vertices));
    facets.push_back(std::move(facet));
  }
  return build_complex(facets).complex;
}

std::vector<SimplicialComplex> random_corpus(std::uint64_t seed, std::size_t count, const ComplexShape& shape) {
  Rng rng(seed);
  std::vector<SimplicialComplex> corpus;
  corpus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) corpus.push_back(random_complex(rng, shape));
  return corpus;
}

MonomialIdeal random_squarefree_ideal(Rng& rng, std::size_t max_vars, std::size_t max_gens) {
  const std::size_t n = 1 + rng.below(max_vars);
  const std::size_t r = 1 + rng.below(max_gens);
  std::vector<Monomial> gens;
  for (std::size_t g = 0; g < r; ++g) {
    std::vector<Monomial::Term> terms;
    for (std::size_t v : sample(rng, n, 1 + rng.below(n))) terms.emplace_back(static_cast<VarId>(v), 1);
    gens.emplace_back(std::move(terms));
  }
  return MonomialIdeal::make(variable_names(n), std::move(gens));
}

MonomialIdeal random_nonsquarefree_ideal(Rng& rng, std::size_t max_vars, std::size_t max_gens,
                                         std::uint32_t max_exponent) {
  while (true) {
    const std::size_t n = 1 + rng.below(max_vars);
    const std::size_t r = 1 + rng.below(max_gens);
    std::vector<Monomial> gens;
    for (std::size_t g = 0; g < r; ++g) {
      std::vector<Monomial::Term> terms;
      for (std::size_t v : sample(rng, n, 1 + rng.below(n)))
        terms.emplace_back(static_cast<VarId>(v), static_cast<std::uint32_t>(1 + rng.below(max_exponent)));
      gens.emplace_back(std::move(terms));
    }
    auto ideal = MonomialIdeal::make(variable_names(n), std::move(gens));
    if (!ideal.is_squarefree()) return ideal;
  }
}

}  // namespace hnerve
