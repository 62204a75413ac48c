#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hnerve/config.hpp"

namespace hnerve {

using VertexId = std::uint32_t;

/// A finite set of vertex ids, stored sorted and duplicate free.
/// Ordering is lexicographic on the sorted members.
class Face {
 public:
  Face() = default;
  explicit Face(std::vector<VertexId> members);
  Face(std::initializer_list<VertexId> members) : Face(std::vector<VertexId>(members)) {}

  /// Caller guarantees `members` is strictly increasing.
  static Face from_sorted(std::vector<VertexId> members);

  std::span<const VertexId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  VertexId operator[](std::size_t i) const { return members_[i]; }

  bool contains(VertexId v) const;
  bool is_subset_of(const Face& other) const;
  bool intersects(const Face& other) const;

  /// The face with the member at `position` removed.
  Face without_position(std::size_t position) const;
  Face with(VertexId v) const;

  friend Face set_union(const Face& a, const Face& b);
  friend Face set_intersection(const Face& a, const Face& b);
  friend Face set_difference(const Face& a, const Face& b);

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face&, const Face&) = default;

 private:
  std::vector<VertexId> members_;
};

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept;
};

/// Orders faces by cardinality, then lexicographically.
struct ByCardinality {
  bool operator()(const Face& a, const Face& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

enum class UnusedVertices {
  reject,  // a label that lies in no facet is an error
  drop,    // such labels are removed and ids renumbered (order preserved)
};

/// A finite simplicial complex in facet form.
///
/// Vertices carry display labels; ids are dense 0..n-1. Facets are pairwise
/// incomparable and sorted lexicographically. The empty face belongs to every
/// complex, so the irrelevant complex {∅} is the complex with the single facet ∅.
/// The void complex (no faces at all) is not representable.
class SimplicialComplex {
 public:
  /// Normalizes `facets` to maximal faces. Labels keep the given order.
  /// `pruned`, when given, receives the number of dropped duplicate or
  /// non-maximal input sets.
  static SimplicialComplex from_facets(std::vector<std::string> labels, std::vector<Face> facets,
                                       UnusedVertices policy = UnusedVertices::reject,
                                       std::size_t* pruned = nullptr);

  /// The irrelevant complex {∅}.
  static SimplicialComplex irrelevant();

  std::span<const std::string> labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  std::size_t vertex_count() const { return labels_.size(); }
  std::span<const Face> facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }

  /// d = max facet cardinality = Krull dimension of the Stanley–Reisner ring.
  std::size_t dim_plus_one() const { return d_; }
  /// s = min facet cardinality.
  std::size_t min_facet_size() const { return s_; }
  int dimension() const { return static_cast<int>(d_) - 1; }
  bool is_irrelevant() const { return d_ == 0; }

  bool contains(const Face& f) const;
  bool is_facet(const Face& f) const;

  std::optional<VertexId> find_vertex(std::string_view label) const;
  /// Face from labels; throws PreconditionError on an unknown label.
  Face face_of(const std::vector<std::string>& labels) const;
  /// "ABD" when every label is one character, "{x1,x2}" otherwise, "∅" for the empty face.
  std::string format(const Face& f) const;
  std::vector<std::string> face_labels(const Face& f) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex() = default;
  std::vector<std::string> labels_;
  std::vector<Face> facets_;
  std::size_t d_ = 0;
  std::size_t s_ = 0;
};

struct BuildResult {
  SimplicialComplex complex;
  std::size_t pruned = 0;
};

/// Builds a complex from raw label sets. Vertex ids follow lexicographic label
/// order. Throws PreconditionError("void complex unsupported") on empty input.
BuildResult build_complex(const std::vector<std::vector<std::string>>& raw_facets);

/// Parses the ".facets" text format: one facet per line, whitespace separated
/// labels, `#` comments, blank lines ignored, `EMPTY` for the empty facet.
std::vector<std::vector<std::string>> parse_facets(std::string_view text);
BuildResult read_facets_file(const std::string& path);
std::string write_facets(const SimplicialComplex& c);

/// Upper bound on the number of faces (sum of 2^|F| over facets), saturating.
std::size_t predicted_face_count(const SimplicialComplex& c);

/// Every face, including ∅, sorted by cardinality then lexicographically.
std::vector<Face> all_faces(const SimplicialComplex& c, const Limits& limits = {});

/// (f_{-1}, f_0, ..., f_{d-1}).
std::vector<std::int64_t> f_vector_direct(const SimplicialComplex& c, const Limits& limits = {});

/// Standard f-to-h transform; `f` must have length d+1.
std::vector<std::int64_t> h_from_f(std::span<const std::int64_t> f, std::size_t d);

std::int64_t binomial(std::int64_t n, std::int64_t k);

SimplicialComplex link(const SimplicialComplex& c, const Face& t);
SimplicialComplex star(const SimplicialComplex& c, const Face& t);
SimplicialComplex antistar(const SimplicialComplex& c, const Face& t);
SimplicialComplex induced(const SimplicialComplex& c, const Face& w);
/// Faces of cardinality at most k+1; requires -1 <= k <= d-1.
SimplicialComplex skeleton(const SimplicialComplex& c, int k);

/// Order complex of the faces of cardinality > k, ordered by inclusion.
/// Vertex v of `base` is the face `origin[v]` of the source complex; ids are
/// ordered by (cardinality, lexicographic) of the origin faces.
struct PosetChainComplex {
  SimplicialComplex base;
  std::vector<Face> origin;

  std::size_t origin_card(VertexId v) const { return origin[v].size(); }
  std::optional<VertexId> vertex_of(const Face& source_face) const;
};

/// [Δ]_{>k}; requires 0 <= k <= d.
PosetChainComplex order_complex_above(const SimplicialComplex& c, std::size_t k,
                                      const Limits& limits = {});
inline PosetChainComplex barycentric_subdivision(const SimplicialComplex& c,
                                                 const Limits& limits = {}) {
  return order_complex_above(c, 0, limits);
}
/// Upper bound on the face count of [Δ]_{>k}, saturating.
std::size_t predicted_chain_face_count(const SimplicialComplex& c, std::size_t k);

/// True iff deleting any set of at most c-1 vertices leaves the 1-skeleton connected.
/// Requires c >= 1 and n >= c+1.
bool is_graph_c_connected(const SimplicialComplex& complex, std::size_t c,
                          const Limits& limits = {});

}  // namespace hnerve
