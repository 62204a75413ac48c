#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hnerve/complex.hpp"
#include "hnerve/config.hpp"
#include "hnerve/nerve.hpp"

namespace hnerve {

using VarId = std::uint32_t;

/// A monomial as sorted (variable, exponent) pairs; zero exponents are never stored.
class Monomial {
 public:
  using Term = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  /// Repeated variables have their exponents added.
  explicit Monomial(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::uint32_t exponent(VarId v) const;
  std::uint64_t total_degree() const;
  bool is_one() const { return terms_.empty(); }
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Term> terms_;
};

/// A monomial ideal given by its minimal generators over named variables.
class MonomialIdeal {
 public:
  /// Drops duplicate and non-minimal generators (keeping input order of the
  /// survivors). Throws PreconditionError for no generators, a constant
  /// generator, or duplicate variable names.
  static MonomialIdeal make(std::vector<std::string> variables, std::vector<Monomial> generators,
                            std::size_t* pruned = nullptr);

  std::span<const std::string> variables() const { return variables_; }
  std::size_t variable_count() const { return variables_.size(); }
  std::span<const Monomial> generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  bool is_squarefree() const;

  /// lcm of the generators selected by `mask` (bit t = generator t).
  Monomial lcm_of(std::uint64_t mask) const;

  /// `x*y^2*z` style rendering.
  std::string format(const Monomial& m) const;
  /// Ideal file text: a `vars:` header then one generator per line.
  std::string to_text() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Monomial> generators_;
};

struct IdealParseResult {
  MonomialIdeal ideal;
  std::size_t pruned = 0;
};

/// Parses ".ideal" text: an optional `vars: x y z` header, then monomials
/// separated by commas or newlines, written with `*` and `^`. Without a header,
/// a variable name is a letter, optional digits, and an optional `_k` or
/// `_(k)` suffix, so `xy` reads as x*y. With a header, names are matched
/// greedily against the declared list.
IdealParseResult parse_ideal(std::string_view text);
IdealParseResult read_ideal_file(const std::string& path);

/// L_j(I): generator subsets whose lcm has total degree <= j.
IndexComplex lcm_complex(const MonomialIdeal& ideal, std::size_t j, const Limits& limits = {});

struct RegularityResult {
  std::int64_t reg = 0;
  int witness_degree = -1;
  std::size_t witness_level = 0;
};

/// sup{ j - i : H̃_i(L_j(I)) != 0 }, searched over 0 <= j <= deg lcm(all generators).
/// Ties go to the smallest j, then the smallest i.
RegularityResult regularity(const MonomialIdeal& ideal, const Config& config = {});

/// Replaces x^e by x_(1)...x_(e); new variables are ordered by original
/// variable, then slot. Variables that occur in no generator are dropped.
MonomialIdeal polarize(const MonomialIdeal& ideal);

/// Complex whose facets are the complements of the generator supports.
/// Variables contained in every generator lie in no facet and are dropped.
SimplicialComplex dual_complex(const MonomialIdeal& ideal);

/// n - depth of the dual complex; requires a squarefree ideal.
std::int64_t regularity_via_dual(const MonomialIdeal& ideal, const Config& config = {});

}  // namespace hnerve
