#include "hnerve/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <unordered_map>

#include "hnerve/error.hpp"

namespace hnerve {

namespace {

std::int8_t boundary_sign(std::size_t position) {
#ifdef HNERVE_MUTATE_SIGN_RULE
  (void)position;
  return 1;  // deliberately broken sign rule, used to test the validation harness
#else
  return position % 2 == 0 ? 1 : -1;
#endif
}

struct RationalOps {
  using value_type = mpq_class;
  value_type from_int(int v) const { return value_type(v); }
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  value_type inv(const value_type& v) const { return value_type(1) / v; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
};

struct PrimeOps {
  using value_type = std::uint32_t;
  std::uint32_t p;
  value_type from_int(int v) const {
    const auto m = static_cast<std::int64_t>(v) % p;
    return static_cast<value_type>(m < 0 ? m + p : m);
  }
  bool is_zero(value_type v) const { return v == 0; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p - b); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type inv(value_type a) const {
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    return static_cast<value_type>(result);
  }
};

template <class Ops>
std::size_t sparse_rank(const BoundaryMatrix& m, const Ops& ops) {
  using V = typename Ops::value_type;
  struct Entry {
    std::uint32_t row;
    V val;
  };
  using Vec = std::vector<Entry>;

  std::vector<Vec> vecs(m.cols);
  std::vector<std::uint32_t> row_count(m.rows, 0);
  std::vector<std::vector<std::uint32_t>> occupants(m.rows);
  for (std::size_t c = 0; c < m.cols; ++c) {
    auto col = m.columns[c];
    std::sort(col.begin(), col.end());
    for (auto [r, s] : col) {
      V v = ops.from_int(s);
      if (ops.is_zero(v)) continue;
      vecs[c].push_back({r, std::move(v)});
      ++row_count[r];
      occupants[r].push_back(static_cast<std::uint32_t>(c));
    }
  }

  using Item = std::pair<std::size_t, std::uint32_t>;  // (nnz, column)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (std::size_t c = 0; c < m.cols; ++c) queue.emplace(vecs[c].size(), static_cast<std::uint32_t>(c));
  std::vector<char> alive(m.cols, 1);

  std::size_t rank = 0;
  Vec merged;
  while (!queue.empty()) {
    const auto [nnz, p] = queue.top();
    queue.pop();
    if (!alive[p] || vecs[p].size() != nnz) continue;
    alive[p] = 0;
    if (nnz == 0) continue;

    const Vec& pivot_vec = vecs[p];
    std::size_t best = 0;
    for (std::size_t k = 1; k < pivot_vec.size(); ++k)
      if (row_count[pivot_vec[k].row] < row_count[pivot_vec[best].row]) best = k;
    const std::uint32_t pivot_row = pivot_vec[best].row;
    const V pivot_inv = ops.inv(pivot_vec[best].val);
    for (const auto& e : pivot_vec) --row_count[e.row];

    std::vector<std::uint32_t> targets;
    targets.swap(occupants[pivot_row]);
    for (std::uint32_t q : targets) {
      if (!alive[q]) continue;
      Vec& target = vecs[q];
      auto hit = std::lower_bound(target.begin(), target.end(), pivot_row,
                                  [](const Entry& e, std::uint32_t r) { return e.row < r; });
      if (hit == target.end() || hit->row != pivot_row) continue;
      const V factor = ops.mul(hit->val, pivot_inv);

      // target -= factor * pivot_vec
      merged.clear();
      merged.reserve(target.size() + pivot_vec.size());
      auto a = target.begin();
      auto b = pivot_vec.begin();
      while (a != target.end() || b != pivot_vec.end()) {
        if (b == pivot_vec.end() || (a != target.end() && a->row < b->row)) {
          merged.push_back(std::move(*a));
          ++a;
        } else if (a == target.end() || b->row < a->row) {
          merged.push_back({b->row, ops.neg(ops.mul(factor, b->val))});
          ++row_count[b->row];
          occupants[b->row].push_back(q);
          ++b;
        } else {
          V v = ops.sub(a->val, ops.mul(factor, b->val));
          if (b->row == pivot_row || ops.is_zero(v)) {
            --row_count[a->row];
          } else {
            merged.push_back({a->row, std::move(v)});
          }
          ++a;
          ++b;
        }
      }
      target.swap(merged);
      queue.emplace(target.size(), q);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c, const Limits& limits) {
  const auto faces = all_faces(c, limits);
  const std::size_t d = c.dim_plus_one();
  std::vector<std::vector<const Face*>> by_size(d + 1);
  for (const auto& f : faces) by_size[f.size()].push_back(&f);

  std::vector<BoundaryMatrix> out;
  std::unordered_map<Face, std::uint32_t, FaceHash> lower_index;
  for (std::size_t size = 1; size <= d; ++size) {
    lower_index.clear();
    for (std::size_t i = 0; i < by_size[size - 1].size(); ++i)
      lower_index.emplace(*by_size[size - 1][i], static_cast<std::uint32_t>(i));

    BoundaryMatrix m;
    m.degree = static_cast<int>(size) - 1;
    m.rows = by_size[size - 1].size();
    m.cols = by_size[size].size();
    m.columns.resize(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
      const Face& sigma = *by_size[size][j];
      auto& col = m.columns[j];
      col.reserve(size);
      for (std::size_t pos = 0; pos < size; ++pos)
        col.emplace_back(lower_index.at(sigma.without_position(pos)), boundary_sign(pos));
      std::sort(col.begin(), col.end());
    }
    out.push_back(std::move(m));
  }
  return out;
}

bool boundary_squares_to_zero(std::span<const BoundaryMatrix> matrices) {
  for (std::size_t i = 1; i < matrices.size(); ++i) {
    const auto& lower = matrices[i - 1];
    const auto& upper = matrices[i];
    std::map<std::uint32_t, std::int64_t> acc;
    for (const auto& col : upper.columns) {
      acc.clear();
      for (auto [r, s] : col)
        for (auto [rr, ss] : lower.columns[r]) acc[rr] += static_cast<std::int64_t>(s) * ss;
      for (const auto& [row, v] : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

std::size_t rank(const BoundaryMatrix& m, const Field& field) {
  if (field.is_rational()) return sparse_rank(m, RationalOps{});
  return sparse_rank(m, PrimeOps{field.characteristic()});
}

BettiProfile::BettiProfile(std::vector<std::size_t> from_minus_one, Field field)
    : betti_(std::move(from_minus_one)), field_(field) {}

std::size_t BettiProfile::at(int degree) const {
  const int idx = degree + 1;
  if (idx < 0 || idx >= static_cast<int>(betti_.size())) return 0;
  return betti_[static_cast<std::size_t>(idx)];
}

bool BettiProfile::is_acyclic() const {
  return std::all_of(betti_.begin(), betti_.end(), [](std::size_t b) { return b == 0; });
}

std::optional<int> BettiProfile::first_nonzero() const {
  for (std::size_t i = 0; i < betti_.size(); ++i)
    if (betti_[i] != 0) return static_cast<int>(i) - 1;
  return std::nullopt;
}

bool BettiProfile::same_numbers(const BettiProfile& other) const {
  const int top = std::max(top_degree(), other.top_degree());
  for (int i = -1; i <= top; ++i)
    if (at(i) != other.at(i)) return false;
  return true;
}

BettiProfile betti_profile(const SimplicialComplex& c, const Config& config) {
  const auto matrices = boundary_matrices(c, config.limits);
  const std::size_t d = c.dim_plus_one();

  // chain_dim[k] = number of faces of cardinality k (k = 0 is C_{-1}).
  std::vector<std::int64_t> chain_dim(d + 1, 0);
  chain_dim[0] = 1;
  for (const auto& m : matrices) chain_dim[static_cast<std::size_t>(m.degree) + 1] = static_cast<std::int64_t>(m.cols);

  // ranks[k] = rank ∂_{k-1}; ranks[0] = rank ∂_{-1} = 0, ranks[d+1] = 0.
  std::vector<std::int64_t> ranks(d + 2, 0);
  for (const auto& m : matrices)
    ranks[static_cast<std::size_t>(m.degree) + 1] = static_cast<std::int64_t>(rank(m, config.field));

  std::vector<std::int64_t> signed_betti(d + 1);
  for (std::size_t k = 0; k <= d; ++k) signed_betti[k] = chain_dim[k] - ranks[k] - ranks[k + 1];

  if (config.audit) {
    config.audit->complexes.fetch_add(1, std::memory_order_relaxed);
    if (!boundary_squares_to_zero(matrices))
      config.audit->boundary_violations.fetch_add(1, std::memory_order_relaxed);
    std::int64_t from_faces = 0, from_betti = 0;
    for (std::size_t k = 0; k <= d; ++k) {
      const std::int64_t sign = k % 2 == 0 ? -1 : 1;  // degree k-1
      from_faces += sign * chain_dim[k];
      from_betti += sign * signed_betti[k];
    }
    if (from_faces != from_betti)
      config.audit->euler_violations.fetch_add(1, std::memory_order_relaxed);
  }

  std::vector<std::size_t> betti(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    if (signed_betti[k] < 0) throw InvariantViolation("negative Betti number: boundary maps are inconsistent");
    betti[k] = static_cast<std::size_t>(signed_betti[k]);
  }
  return BettiProfile(std::move(betti), config.field);
}

EulerPair euler_from_betti(const BettiProfile& b) {
  EulerPair e;
  for (int i = -1; i <= b.top_degree(); ++i) {
    const auto v = static_cast<std::int64_t>(b.at(i));
    e.reduced += (i % 2 == 0) ? v : -v;
  }
  e.chi = e.reduced + 1;
  return e;
}

}  // namespace hnerve
