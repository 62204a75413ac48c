#include "hnerve/nerve.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "family.hpp"
#include "hnerve/error.hpp"

namespace hnerve {

bool IndexComplex::contains(std::uint64_t mask) const {
  return std::binary_search(faces.begin(), faces.end(), mask);
}

Face IndexComplex::face_of(std::uint64_t mask) const {
  std::vector<VertexId> members;
  for (std::size_t v = 0; v < ground.size(); ++v)
    if (mask >> ground[v] & 1U) members.push_back(static_cast<VertexId>(v));
  return Face::from_sorted(std::move(members));
}

IndexComplex index_complex_from_family(std::size_t r, std::vector<std::uint64_t> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  if (faces.empty() || faces.front() != 0) throw PreconditionError("face family must contain the empty set");

  IndexComplex out;
  out.ground_size = r;
  std::uint64_t support = 0;
  for (auto m : faces) support |= m;
  std::vector<std::int64_t> compact(r, -1);
  std::vector<std::string> labels;
  for (std::size_t t = 0; t < r; ++t) {
    if (support >> t & 1U) {
      compact[t] = static_cast<std::int64_t>(out.ground.size());
      out.ground.push_back(static_cast<std::uint32_t>(t));
      labels.push_back(std::to_string(t + 1));
    }
  }

  const std::unordered_set<std::uint64_t> members(faces.begin(), faces.end());
  std::vector<Face> facets;
  for (auto m : faces) {
    bool maximal = true;
    for (std::size_t t = 0; t < r && maximal; ++t) {
      const std::uint64_t bit = std::uint64_t{1} << t;
      if (!(m & bit) && members.count(m | bit)) maximal = false;
    }
    if (!maximal) continue;
    std::vector<VertexId> ids;
    for (std::size_t t = 0; t < r; ++t)
      if (m >> t & 1U) ids.push_back(static_cast<VertexId>(compact[t]));
    facets.push_back(Face::from_sorted(std::move(ids)));
  }
  out.complex = SimplicialComplex::from_facets(std::move(labels), std::move(facets));
  out.faces = std::move(faces);
  return out;
}

namespace {

// Intersection of the facets indexed by a subset; nullopt stands for the
// intersection over the empty family, which contains everything.
using Meet = std::optional<Face>;

Meet meet_with(const Meet& state, const Face& facet) {
  return state ? set_intersection(*state, facet) : facet;
}

std::size_t meet_size(const Meet& m) {
  return m ? m->size() : std::numeric_limits<std::size_t>::max();
}

}  // namespace

NerveComplex nerve(const SimplicialComplex& c, std::size_t level, const Limits& limits) {
  if (level < 1) throw PreconditionError("nerve level must be >= 1");
  const auto facets = c.facets();
  const std::size_t r = facets.size();
  detail::check_ground_size(r, limits.max_facets, "nerve");

  std::vector<std::uint64_t> faces;
  detail::enumerate_downward_closed(
      r, Meet{}, [&](const Meet& s, std::size_t t) { return meet_with(s, facets[t]); },
      [&](const Meet& s) { return meet_size(s) >= level; },
      [&](std::uint64_t mask, const Meet&) { faces.push_back(mask); }, limits.max_faces);

  NerveComplex out;
  out.index = index_complex_from_family(r, std::move(faces));
  out.level = level;
  out.source_facets.assign(facets.begin(), facets.end());
  return out;
}

std::vector<NerveComplex> nerve_family(const SimplicialComplex& c, const Limits& limits) {
  const auto facets = c.facets();
  const std::size_t r = facets.size();
  detail::check_ground_size(r, limits.max_facets, "nerve");

  // Every subset with a nonempty intersection, i.e. the face set of N_1.
  std::unordered_map<std::uint64_t, std::size_t> meet_sizes;
  detail::enumerate_downward_closed(
      r, Meet{}, [&](const Meet& s, std::size_t t) { return meet_with(s, facets[t]); },
      [](const Meet& s) { return meet_size(s) >= 1; },
      [&](std::uint64_t mask, const Meet& s) { meet_sizes.emplace(mask, meet_size(s)); },
      limits.max_faces);

  std::vector<NerveComplex> family;
  const std::size_t d = c.dim_plus_one();
  for (std::size_t j = 1; j <= d + 1; ++j) {
    std::vector<std::uint64_t> faces;
    for (const auto& [mask, size] : meet_sizes)
      if (size >= j) faces.push_back(mask);
    NerveComplex n;
    n.index = index_complex_from_family(r, std::move(faces));
    n.level = j;
    n.source_facets.assign(facets.begin(), facets.end());
    family.push_back(std::move(n));
  }
  return family;
}

EulerPair euler_characteristics(const SimplicialComplex& c, const Limits& limits) {
  EulerPair e;
  for (const auto& f : all_faces(c, limits)) {
    if (f.empty()) continue;
    e.chi += (f.size() % 2 == 1) ? 1 : -1;
  }
  e.reduced = e.chi - 1;
  return e;
}

}  // namespace hnerve
