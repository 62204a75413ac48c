#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hnerve/complex.hpp"
#include "hnerve/config.hpp"
#include "hnerve/homology.hpp"

namespace hnerve {

/// b_{ij} = dim H̃_i(N_j(Δ)) for -1 <= i <= d and 1 <= j <= d+1, with the
/// Euler characteristics of each nerve.
struct NerveTable {
  std::size_t d = 0;
  std::vector<std::vector<std::size_t>> betti;  // betti[j-1][i+1]
  std::vector<std::int64_t> chi;                // chi[j-1]
  std::vector<std::int64_t> chi_reduced;

  std::size_t at(int i, std::size_t j) const;
  BettiProfile column(std::size_t j, const Field& field) const;

  friend bool operator==(const NerveTable&, const NerveTable&) = default;
};

NerveTable nerve_table(const SimplicialComplex& c, const Config& config = {});

enum class DepthMethod { nerve, reisner };

struct DepthReport {
  std::size_t depth = 0;
  /// Homology degree of the witness.
  int witness_degree = -1;
  /// Nerve level j for the nerve method; |T| for the Reisner method.
  std::size_t witness_index = 0;
  DepthMethod method = DepthMethod::nerve;
  /// The face T for the Reisner method.
  std::optional<Face> witness_face;

  friend bool operator==(const DepthReport&, const DepthReport&) = default;
};

/// Minimizes i+j over nonzero table entries; ties go to the smallest j, then i.
DepthReport depth_via_nerves(const NerveTable& table);
DepthReport depth_via_nerves(const SimplicialComplex& c, const Config& config = {});

struct LinkHomology {
  Face face;
  BettiProfile betti;
};

/// Betti profile of lk T for every face T, including ∅ and the facets.
std::vector<LinkHomology> link_homologies(const SimplicialComplex& c, const Config& config = {});

/// Largest t with H̃_{i-1}(lk T) = 0 whenever i + |T| < t, over all faces T.
DepthReport depth_via_reisner(std::span<const LinkHomology> links);
DepthReport depth_via_reisner(const SimplicialComplex& c, const Config& config = {});

/// (f_{-1}, ..., f_{d-1}) from the χ column.
std::vector<std::int64_t> f_via_nerves(const NerveTable& table);
/// (h_0, ..., h_d) from the χ̃ column.
std::vector<std::int64_t> h_via_nerves(const NerveTable& table);

bool is_cohen_macaulay(const SimplicialComplex& c, const Config& config = {});

struct CheckResult {
  std::string name;
  bool pass = true;
  bool skipped = false;
  std::string witness;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

/// Runs every cross-check between the nerve formulas and their oracles.
/// Checks whose inputs exceed a guard are reported as skipped.
ValidationReport validate(const SimplicialComplex& c, const Config& config = {});

/// Everything the CLI reports about a complex.
struct InvariantReport {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t s = 0;
  NerveTable table;
  DepthReport depth;
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> h;
  bool cm = false;
  std::vector<CheckResult> checks;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

InvariantReport analyze(const SimplicialComplex& c, const Config& config = {}, bool run_checks = false);

}  // namespace hnerve
