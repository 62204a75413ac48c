#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hnerve/complex.hpp"
#include "hnerve/config.hpp"

namespace hnerve {

/// Boundary map ∂_degree : C_degree -> C_{degree-1}, column-major, with
/// integer entries (always ±1). Degree 0 is the augmentation onto C_{-1} = k.
/// Rows index the (degree-1)-faces and columns the degree-faces, both in
/// ByCardinality order.
struct BoundaryMatrix {
  int degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int8_t>>> columns;
};

/// ∂_0 .. ∂_dim for `c`; empty for the irrelevant complex.
std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c, const Limits& limits = {});

/// True iff every consecutive product ∂_{i-1} ∂_i vanishes over the integers.
bool boundary_squares_to_zero(std::span<const BoundaryMatrix> matrices);

/// Rank over `field` by sparse elimination. Pivots are chosen from the
/// sparsest remaining column, on the row touched by the fewest columns.
std::size_t rank(const BoundaryMatrix& m, const Field& field);

/// Reduced Betti numbers dim H̃_i for i = -1 .. top_degree.
class BettiProfile {
 public:
  BettiProfile() = default;
  BettiProfile(std::vector<std::size_t> from_minus_one, Field field);

  /// 0 outside the stored range.
  std::size_t at(int degree) const;
  /// Highest stored degree (the complex dimension); -1 for {∅}.
  int top_degree() const { return static_cast<int>(betti_.size()) - 2; }
  std::span<const std::size_t> values() const { return betti_; }
  const Field& field() const { return field_; }
  bool is_acyclic() const;
  /// Lowest degree with nonzero homology, if any.
  std::optional<int> first_nonzero() const;

  /// Compares the Betti numbers only, padding the shorter profile with zeros.
  bool same_numbers(const BettiProfile& other) const;
  friend bool operator==(const BettiProfile& a, const BettiProfile& b) {
    return a.field_ == b.field_ && a.same_numbers(b);
  }

 private:
  std::vector<std::size_t> betti_;  // index = degree + 1
  Field field_ = Field::rationals();
};

BettiProfile betti_profile(const SimplicialComplex& c, const Config& config = {});

struct EulerPair {
  std::int64_t chi = 0;
  std::int64_t reduced = 0;
  friend bool operator==(const EulerPair&, const EulerPair&) = default;
};

/// χ̃ = Σ_{i>=-1} (-1)^i b_i and χ = χ̃ + 1.
EulerPair euler_from_betti(const BettiProfile& b);

}  // namespace hnerve
