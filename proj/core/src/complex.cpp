#include "hnerve/complex.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "hnerve/error.hpp"

namespace hnerve {

namespace {

__extension__ using Wide = unsigned __int128;

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

std::size_t saturating_binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Exact while it fits: each partial product is itself a binomial coefficient.
  Wide acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::size_t>(acc);
}

// Calls `visit` with every k-subset of positions {0..n-1}, in lexicographic order.
template <class Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    visit(std::span<const std::size_t>(idx));
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string trim(std::string_view s) {
  const auto* ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

// ---------------------------------------------------------------------------
// Face

Face::Face(std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Face Face::from_sorted(std::vector<VertexId> members) {
  Face f;
  f.members_ = std::move(members);
  return f;
}

bool Face::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool Face::is_subset_of(const Face& other) const {
  if (size() > other.size()) return false;
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

bool Face::intersects(const Face& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a;
    else ++b;
  }
  return false;
}

Face Face::without_position(std::size_t position) const {
  std::vector<VertexId> out;
  out.reserve(members_.size() - 1);
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (i != position) out.push_back(members_[i]);
  return from_sorted(std::move(out));
}

Face Face::with(VertexId v) const {
  if (contains(v)) return *this;
  std::vector<VertexId> out = members_;
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return from_sorted(std::move(out));
}

Face set_union(const Face& a, const Face& b) {
  std::vector<VertexId> out;
  std::set_union(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
                 std::back_inserter(out));
  return Face::from_sorted(std::move(out));
}

Face set_intersection(const Face& a, const Face& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.members_.begin(), a.members_.end(), b.members_.begin(),
                        b.members_.end(), std::back_inserter(out));
  return Face::from_sorted(std::move(out));
}

Face set_difference(const Face& a, const Face& b) {
  std::vector<VertexId> out;
  std::set_difference(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
                      std::back_inserter(out));
  return Face::from_sorted(std::move(out));
}

std::size_t FaceHash::operator()(const Face& f) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ f.size();
  for (VertexId v : f.members()) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> labels,
                                                 std::vector<Face> facets, UnusedVertices policy,
                                                 std::size_t* pruned) {
  if (facets.empty()) throw PreconditionError("void complex unsupported");
  {
    std::set<std::string_view> seen;
    for (const auto& l : labels) {
      if (l.empty()) throw PreconditionError("vertex labels must be nonempty");
      if (!seen.insert(l).second) throw PreconditionError("duplicate vertex label '" + l + "'");
    }
  }
  for (const auto& f : facets) {
    if (!f.empty() && f.members().back() >= labels.size())
      throw PreconditionError("facet refers to an unknown vertex id");
  }

  const std::size_t input_count = facets.size();
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  // Keep a facet only if no strictly larger kept facet contains it.
  std::stable_sort(facets.begin(), facets.end(),
                   [](const Face& a, const Face& b) { return a.size() > b.size(); });
  std::vector<Face> maximal;
  maximal.reserve(facets.size());
  for (auto& f : facets) {
    bool dominated = false;
    for (const auto& g : maximal) {
      if (g.size() <= f.size()) break;
      if (f.is_subset_of(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(std::move(f));
  }
  if (pruned) *pruned = input_count - maximal.size();

  std::vector<bool> used(labels.size(), false);
  for (const auto& f : maximal)
    for (VertexId v : f.members()) used[v] = true;
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    if (policy == UnusedVertices::reject) {
      const auto v = static_cast<std::size_t>(std::find(used.begin(), used.end(), false) -
                                              used.begin());
      throw PreconditionError("vertex '" + labels[v] + "' lies in no facet");
    }
    std::vector<VertexId> remap(labels.size());
    std::vector<std::string> kept;
    for (std::size_t v = 0; v < labels.size(); ++v) {
      if (used[v]) {
        remap[v] = static_cast<VertexId>(kept.size());
        kept.push_back(std::move(labels[v]));
      }
    }
    labels = std::move(kept);
    for (auto& f : maximal) {
      std::vector<VertexId> m;
      m.reserve(f.size());
      for (VertexId v : f.members()) m.push_back(remap[v]);
      f = Face::from_sorted(std::move(m));
    }
  }

  std::sort(maximal.begin(), maximal.end());
  SimplicialComplex c;
  c.labels_ = std::move(labels);
  c.facets_ = std::move(maximal);
  c.d_ = 0;
  c.s_ = std::numeric_limits<std::size_t>::max();
  for (const auto& f : c.facets_) {
    c.d_ = std::max(c.d_, f.size());
    c.s_ = std::min(c.s_, f.size());
  }
  return c;
}

SimplicialComplex SimplicialComplex::irrelevant() { return from_facets({}, {Face{}}); }

bool SimplicialComplex::contains(const Face& f) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Face& g) { return f.is_subset_of(g); });
}

bool SimplicialComplex::is_facet(const Face& f) const {
  return std::binary_search(facets_.begin(), facets_.end(), f);
}

std::optional<VertexId> SimplicialComplex::find_vertex(std::string_view label) const {
  for (std::size_t v = 0; v < labels_.size(); ++v)
    if (labels_[v] == label) return static_cast<VertexId>(v);
  return std::nullopt;
}

Face SimplicialComplex::face_of(const std::vector<std::string>& labels) const {
  std::vector<VertexId> ids;
  for (const auto& l : labels) {
    auto v = find_vertex(l);
    if (!v) throw PreconditionError("unknown vertex '" + l + "'");
    ids.push_back(*v);
  }
  return Face(std::move(ids));
}

std::string SimplicialComplex::format(const Face& f) const {
  if (f.empty()) return "∅";
  const bool short_labels = std::all_of(f.members().begin(), f.members().end(),
                                        [&](VertexId v) { return labels_[v].size() == 1; });
  std::string out;
  if (short_labels) {
    for (VertexId v : f.members()) out += labels_[v];
    return out;
  }
  out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += labels_[f[i]];
  }
  return out + "}";
}

std::vector<std::string> SimplicialComplex::face_labels(const Face& f) const {
  std::vector<std::string> out;
  for (VertexId v : f.members()) out.push_back(labels_[v]);
  return out;
}

// ---------------------------------------------------------------------------
// Construction and I/O

BuildResult build_complex(const std::vector<std::vector<std::string>>& raw_facets) {
  if (raw_facets.empty()) throw PreconditionError("void complex unsupported");
  std::set<std::string> universe;
  for (const auto& facet : raw_facets) {
    for (const auto& l : facet) {
      if (l.empty()) throw PreconditionError("vertex labels must be nonempty");
      universe.insert(l);
    }
  }
  std::vector<std::string> labels(universe.begin(), universe.end());
  std::map<std::string_view, VertexId> ids;
  for (std::size_t v = 0; v < labels.size(); ++v) ids.emplace(labels[v], static_cast<VertexId>(v));

  std::vector<Face> facets;
  facets.reserve(raw_facets.size());
  for (const auto& facet : raw_facets) {
    std::vector<VertexId> m;
    for (const auto& l : facet) m.push_back(ids.at(l));
    facets.emplace_back(std::move(m));
  }
  BuildResult result{SimplicialComplex::from_facets(std::move(labels), std::move(facets),
                                                    UnusedVertices::reject, nullptr),
                     0};
  result.pruned = raw_facets.size() - result.complex.facet_count();
  return result;
}

std::vector<std::vector<std::string>> parse_facets(std::string_view text) {
  std::vector<std::vector<std::string>> facets;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream tokens(line);
    std::vector<std::string> facet;
    std::string tok;
    bool has_empty_marker = false;
    while (tokens >> tok) {
      if (tok == "EMPTY") has_empty_marker = true;
      else facet.push_back(tok);
    }
    if (has_empty_marker && !facet.empty())
      throw ParseError("line " + std::to_string(lineno) + ": EMPTY must stand alone");
    facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw ParseError("no facets: void complex unsupported");
  return facets;
}

BuildResult read_facets_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open facet file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return build_complex(parse_facets(buf.str()));
}

std::string write_facets(const SimplicialComplex& c) {
  std::string out;
  for (const auto& f : c.facets()) {
    if (f.empty()) {
      out += "EMPTY\n";
      continue;
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ' ';
      out += c.label(f[i]);
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Faces and counting

std::size_t predicted_face_count(const SimplicialComplex& c) {
  std::size_t total = 0;
  for (const auto& f : c.facets()) {
    const std::size_t term = f.size() >= 63 ? kSaturated : (std::size_t{1} << f.size());
    total = saturating_add(total, term);
  }
  return total;
}

std::vector<Face> all_faces(const SimplicialComplex& c, const Limits& limits) {
  const std::size_t predicted = predicted_face_count(c);
  if (predicted > limits.max_faces)
    throw CapExceeded("face enumeration would exceed cap (" + std::to_string(limits.max_faces) +
                      " faces)");
  std::unordered_set<Face, FaceHash> seen;
  seen.reserve(predicted);
  for (const auto& facet : c.facets()) {
    const std::size_t m = facet.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<VertexId> members;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1U) members.push_back(facet[i]);
      seen.insert(Face::from_sorted(std::move(members)));
    }
  }
  std::vector<Face> faces(seen.begin(), seen.end());
  std::sort(faces.begin(), faces.end(), ByCardinality{});
  return faces;
}

std::vector<std::int64_t> f_vector_direct(const SimplicialComplex& c, const Limits& limits) {
  std::vector<std::int64_t> f(c.dim_plus_one() + 1, 0);
  for (const auto& face : all_faces(c, limits)) ++f[face.size()];
  return f;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

std::vector<std::int64_t> h_from_f(std::span<const std::int64_t> f, std::size_t d) {
  if (f.size() != d + 1) throw PreconditionError("f-vector length must be d+1");
  const auto dd = static_cast<std::int64_t>(d);
  std::vector<std::int64_t> h(d + 1, 0);
  for (std::int64_t k = 0; k <= dd; ++k) {
    std::int64_t acc = 0;
    for (std::int64_t i = 0; i <= k; ++i) {
      const std::int64_t sign = (k - i) % 2 == 0 ? 1 : -1;
      acc += sign * binomial(dd - i, k - i) * f[static_cast<std::size_t>(i)];
    }
    h[static_cast<std::size_t>(k)] = acc;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Local constructions

namespace {

std::vector<std::string> copy_labels(const SimplicialComplex& c) {
  return {c.labels().begin(), c.labels().end()};
}

void require_vertices(const SimplicialComplex& c, const Face& t, const char* what) {
  if (!t.empty() && t.members().back() >= c.vertex_count())
    throw PreconditionError(std::string(what) + ": vertex not in complex");
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& c, const Face& t) {
  require_vertices(c, t, "link");
  std::vector<Face> facets;
  for (const auto& f : c.facets())
    if (t.is_subset_of(f)) facets.push_back(set_difference(f, t));
  if (facets.empty()) throw PreconditionError("void link: face not in complex");
  return SimplicialComplex::from_facets(copy_labels(c), std::move(facets), UnusedVertices::drop);
}

SimplicialComplex star(const SimplicialComplex& c, const Face& t) {
  require_vertices(c, t, "star");
  std::vector<Face> facets;
  for (const auto& f : c.facets())
    if (t.is_subset_of(f)) facets.push_back(f);
  if (facets.empty()) throw PreconditionError("void star: face not in complex");
  return SimplicialComplex::from_facets(copy_labels(c), std::move(facets), UnusedVertices::drop);
}

SimplicialComplex antistar(const SimplicialComplex& c, const Face& t) {
  require_vertices(c, t, "antistar");
  if (t.size() == c.vertex_count())
    throw PreconditionError("antistar requires a proper subset of the vertices");
  std::vector<Face> facets;
  for (const auto& f : c.facets()) facets.push_back(set_difference(f, t));
  return SimplicialComplex::from_facets(copy_labels(c), std::move(facets), UnusedVertices::drop);
}

SimplicialComplex induced(const SimplicialComplex& c, const Face& w) {
  require_vertices(c, w, "induced");
  std::vector<Face> facets;
  for (const auto& f : c.facets()) facets.push_back(set_intersection(f, w));
  return SimplicialComplex::from_facets(copy_labels(c), std::move(facets), UnusedVertices::drop);
}

SimplicialComplex skeleton(const SimplicialComplex& c, int k) {
  if (k < -1 || k > c.dimension())
    throw PreconditionError("skeleton dimension out of range");
  const auto card = static_cast<std::size_t>(k + 1);
  std::vector<Face> facets;
  for (const auto& f : c.facets()) {
    if (f.size() <= card) {
      facets.push_back(f);
      continue;
    }
    for_each_combination(f.size(), card, [&](std::span<const std::size_t> pos) {
      std::vector<VertexId> m;
      for (std::size_t p : pos) m.push_back(f[p]);
      facets.push_back(Face::from_sorted(std::move(m)));
    });
  }
  return SimplicialComplex::from_facets(copy_labels(c), std::move(facets), UnusedVertices::drop);
}

// ---------------------------------------------------------------------------
// Order complexes

std::size_t predicted_chain_face_count(const SimplicialComplex& c, std::size_t k) {
  // chains_top[t]: nonempty chains whose top element is a fixed t-set, all elements of size > k.
  const std::size_t d = c.dim_plus_one();
  std::vector<std::size_t> chains_top(d + 1, 0);
  for (std::size_t t = k + 1; t <= d; ++t) {
    std::size_t acc = 1;
    for (std::size_t u = k + 1; u < t; ++u)
      acc = saturating_add(acc, saturating_mul(saturating_binomial(t, u), chains_top[u]));
    chains_top[t] = acc;
  }
  std::size_t total = 1;  // the empty chain
  for (const auto& f : c.facets()) {
    for (std::size_t t = k + 1; t <= f.size(); ++t)
      total = saturating_add(total, saturating_mul(saturating_binomial(f.size(), t), chains_top[t]));
  }
  return total;
}

std::optional<VertexId> PosetChainComplex::vertex_of(const Face& source_face) const {
  auto it = std::lower_bound(origin.begin(), origin.end(), source_face, ByCardinality{});
  if (it == origin.end() || *it != source_face) return std::nullopt;
  return static_cast<VertexId>(it - origin.begin());
}

PosetChainComplex order_complex_above(const SimplicialComplex& c, std::size_t k,
                                      const Limits& limits) {
  if (k > c.dim_plus_one()) throw PreconditionError("order complex level out of range");

  // Maximal chains are saturated chains from a (k+1)-subset up to a facet.
  std::size_t chain_count = 0;
  for (const auto& f : c.facets()) {
    if (f.size() <= k) continue;
    std::size_t perms = 1;
    for (std::size_t i = 2; i <= f.size() - k - 1; ++i) perms = saturating_mul(perms, i);
    chain_count = saturating_add(chain_count, saturating_mul(saturating_binomial(f.size(), k + 1), perms));
  }
  if (chain_count > limits.max_faces)
    throw CapExceeded("order complex would exceed cap (" + std::to_string(limits.max_faces) +
                      " faces)");

  PosetChainComplex out{SimplicialComplex::irrelevant(), {}};
  for (auto& f : all_faces(c, limits))
    if (f.size() > k) out.origin.push_back(std::move(f));
  if (out.origin.empty()) return out;

  std::vector<std::string> labels;
  labels.reserve(out.origin.size());
  for (const auto& f : out.origin) labels.push_back(c.format(f));

  std::vector<Face> chains;
  chains.reserve(chain_count);
  for (const auto& facet : c.facets()) {
    if (facet.size() <= k) continue;
    for_each_combination(facet.size(), k + 1, [&](std::span<const std::size_t> pos) {
      std::vector<VertexId> bottom;
      for (std::size_t p : pos) bottom.push_back(facet[p]);
      Face base = Face::from_sorted(bottom);
      std::vector<VertexId> rest;
      std::set_difference(facet.members().begin(), facet.members().end(), bottom.begin(),
                          bottom.end(), std::back_inserter(rest));
      do {
        std::vector<VertexId> chain{*out.vertex_of(base)};
        Face current = base;
        for (VertexId v : rest) {
          current = current.with(v);
          chain.push_back(*out.vertex_of(current));
        }
        chains.emplace_back(std::move(chain));
      } while (std::next_permutation(rest.begin(), rest.end()));
    });
  }
  out.base = SimplicialComplex::from_facets(std::move(labels), std::move(chains));
  return out;
}

// ---------------------------------------------------------------------------
// Graph connectivity

bool is_graph_c_connected(const SimplicialComplex& complex, std::size_t c, const Limits& limits) {
  const std::size_t n = complex.vertex_count();
  if (c < 1) throw PreconditionError("connectivity parameter must be >= 1");
  if (n < c + 1) throw PreconditionError("connectivity requires at least c+1 vertices");
  if (saturating_binomial(n, c - 1) > limits.max_subsets)
    throw CapExceeded("connectivity check would exceed subset cap");

  std::vector<std::vector<VertexId>> adj(n);
  {
    std::set<std::pair<VertexId, VertexId>> edges;
    for (const auto& f : complex.facets())
      for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = a + 1; b < f.size(); ++b) edges.emplace(f[a], f[b]);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }

  std::vector<char> removed(n, 0);
  std::vector<char> seen(n, 0);
  auto connected_after_removal = [&]() {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t start = 0;
    while (removed[start]) ++start;
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (VertexId v : adj[u]) {
        if (!removed[v] && !seen[v]) {
          seen[v] = 1;
          ++reached;
          stack.push_back(v);
        }
      }
    }
    const auto remaining =
        n - static_cast<std::size_t>(std::count(removed.begin(), removed.end(), 1));
    return reached == remaining;
  };

  for (std::size_t size = 0; size + 1 <= c; ++size) {
    bool ok = true;
    for_each_combination(n, size, [&](std::span<const std::size_t> pos) {
      if (!ok) return;
      for (std::size_t p : pos) removed[p] = 1;
      ok = connected_after_removal();
      for (std::size_t p : pos) removed[p] = 0;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace hnerve
