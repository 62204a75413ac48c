#include "hnerve/invariants.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "hnerve/error.hpp"
#include "hnerve/nerve.hpp"

namespace hnerve {

std::size_t NerveTable::at(int i, std::size_t j) const {
  if (j < 1 || j > betti.size()) return 0;
  const auto& col = betti[j - 1];
  const int idx = i + 1;
  if (idx < 0 || idx >= static_cast<int>(col.size())) return 0;
  return col[static_cast<std::size_t>(idx)];
}

BettiProfile NerveTable::column(std::size_t j, const Field& field) const {
  return BettiProfile(betti.at(j - 1), field);
}

NerveTable nerve_table(const SimplicialComplex& c, const Config& config) {
  NerveTable t;
  t.d = c.dim_plus_one();
  for (const auto& n : nerve_family(c, config.limits)) {
    const auto b = betti_profile(n.complex(), config);
    std::vector<std::size_t> col(t.d + 2, 0);
    for (int i = -1; i <= static_cast<int>(t.d); ++i) col[static_cast<std::size_t>(i + 1)] = b.at(i);
    const auto e = euler_characteristics(n.complex(), config.limits);
    t.betti.push_back(std::move(col));
    t.chi.push_back(e.chi);
    t.chi_reduced.push_back(e.reduced);
  }
  return t;
}

DepthReport depth_via_nerves(const NerveTable& table) {
  DepthReport r;
  r.method = DepthMethod::nerve;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t j = 1; j <= table.d + 1; ++j) {
    for (int i = -1; i <= static_cast<int>(table.d); ++i) {
      if (table.at(i, j) == 0) continue;
      const auto value = static_cast<std::size_t>(i + static_cast<int>(j));
      if (value < best) {
        best = value;
        r.witness_degree = i;
        r.witness_index = j;
      }
    }
  }
  // b_{-1,d+1} = 1 always, so the infimum is attained.
  if (best == std::numeric_limits<std::size_t>::max())
    throw InvariantViolation("nerve table has no nonzero entry");
  r.depth = best;
  return r;
}

DepthReport depth_via_nerves(const SimplicialComplex& c, const Config& config) {
  return depth_via_nerves(nerve_table(c, config));
}

std::vector<LinkHomology> link_homologies(const SimplicialComplex& c, const Config& config) {
  std::vector<LinkHomology> out;
  for (auto& face : all_faces(c, config.limits)) {
    auto b = betti_profile(link(c, face), config);
    out.push_back({std::move(face), std::move(b)});
  }
  return out;
}

DepthReport depth_via_reisner(std::span<const LinkHomology> links) {
  DepthReport r;
  r.method = DepthMethod::reisner;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& [face, betti] : links) {
    const auto degree = betti.first_nonzero();
    if (!degree) continue;
    // H̃_{i-1}(lk T) != 0 with i = degree + 1 violates every t > i + |T|.
    const auto value = static_cast<std::size_t>(*degree + 1) + face.size();
    if (value < best) {
      best = value;
      r.witness_degree = *degree;
      r.witness_index = face.size();
      r.witness_face = face;
    }
  }
  if (best == std::numeric_limits<std::size_t>::max())
    throw InvariantViolation("no link with nonzero homology (facet links must contribute)");
  r.depth = best;
  return r;
}

DepthReport depth_via_reisner(const SimplicialComplex& c, const Config& config) {
  const auto links = link_homologies(c, config);
  return depth_via_reisner(links);
}

std::vector<std::int64_t> f_via_nerves(const NerveTable& table) {
  const auto d = static_cast<std::int64_t>(table.d);
  std::vector<std::int64_t> f(table.d + 1, 0);
  f[0] = 1;
  for (std::int64_t i = 0; i < d; ++i) {
    std::int64_t acc = 0;
    for (std::int64_t j = i + 1; j <= d; ++j)
      acc += binomial(j - 1, i) * table.chi[static_cast<std::size_t>(j - 1)];
    f[static_cast<std::size_t>(i + 1)] = acc;
  }
  return f;
}

std::vector<std::int64_t> h_via_nerves(const NerveTable& table) {
  const auto d = static_cast<std::int64_t>(table.d);
  std::vector<std::int64_t> h(table.d + 1, 0);
  h[0] = 1;
  for (std::int64_t k = 1; k <= d; ++k) {
    std::int64_t acc = 0;
    for (std::int64_t j = 1; j <= d; ++j)
      acc += binomial(d - j, k - 1) * table.chi_reduced[static_cast<std::size_t>(j - 1)];
    h[static_cast<std::size_t>(k)] = (k % 2 == 1) ? acc : -acc;
  }
  return h;
}

bool is_cohen_macaulay(const SimplicialComplex& c, const Config& config) {
  return depth_via_nerves(c, config).depth == c.dim_plus_one();
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::string join(std::span<const std::int64_t> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string describe(const BettiProfile& b) {
  std::ostringstream os;
  os << '[';
  for (int i = -1; i <= b.top_degree(); ++i) os << (i > -1 ? "," : "") << b.at(i);
  os << ']';
  return os.str();
}

CheckResult skipped(std::string name, std::string reason) {
  return {std::move(name), true, true, std::move(reason)};
}

CheckResult passed(std::string name, std::string witness) {
  return {std::move(name), true, false, std::move(witness)};
}

CheckResult failed(std::string name, std::string witness) {
  return {std::move(name), false, false, std::move(witness)};
}

}  // namespace

ValidationReport validate(const SimplicialComplex& c, const Config& config) {
  ValidationReport report;
  auto& out = report.checks;
  const std::size_t d = c.dim_plus_one();

  const auto table = nerve_table(c, config);
  const auto links = link_homologies(c, config);
  const auto complex_betti = betti_profile(c, config);

  // Nerve depth against the Reisner criterion, plus depth <= s <= d.
  const auto by_nerves = depth_via_nerves(table);
  const auto by_links = depth_via_reisner(links);
  {
    std::ostringstream w;
    w << "nerves " << by_nerves.depth << " at (i=" << by_nerves.witness_degree
      << ",j=" << by_nerves.witness_index << "), links " << by_links.depth << " at T="
      << c.format(*by_links.witness_face) << " degree " << by_links.witness_degree;
    const bool ok = by_nerves.depth == by_links.depth && by_nerves.depth <= c.min_facet_size() &&
                    c.min_facet_size() <= d;
    out.push_back(ok ? passed("depth_oracle", w.str()) : failed("depth_oracle", w.str()));
  }

  // Equivalence of the nerve and link vanishing conditions for every m.
  {
    std::string mismatch;
    for (std::size_t m = 0; m <= d + 1 && mismatch.empty(); ++m) {
      bool nerve_side = true;
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i + j < m; ++i)
          if (table.at(static_cast<int>(i) - 1, j + 1) != 0) nerve_side = false;
      bool link_side = true;
      for (const auto& [face, betti] : links)
        for (std::size_t i = 0; i + face.size() < m; ++i)
          if (betti.at(static_cast<int>(i) - 1) != 0) link_side = false;
      if (nerve_side != link_side)
        mismatch = "m=" + std::to_string(m) + ": nerve condition " + (nerve_side ? "holds" : "fails") +
                   ", link condition " + (link_side ? "holds" : "fails");
    }
    out.push_back(mismatch.empty() ? passed("depth_equivalence", "m=0.." + std::to_string(d + 1))
                                   : failed("depth_equivalence", mismatch));
  }

  // b_{ij} = 0 for i + j > d, 1 <= j <= d, i >= 0.
  {
    std::string violation;
    for (std::size_t j = 1; j <= d && violation.empty(); ++j)
      for (std::size_t i = 0; i <= d && violation.empty(); ++i)
        if (i + j > d && table.at(static_cast<int>(i), j) != 0)
          violation = "b(" + std::to_string(i) + "," + std::to_string(j) + ")=" +
                      std::to_string(table.at(static_cast<int>(i), j));
    out.push_back(violation.empty() ? passed("vanishing", "all b(i,j) with i+j>d vanish")
                                    : failed("vanishing", violation));
  }

  const auto f_direct = f_vector_direct(c, config.limits);
  {
    const auto f = f_via_nerves(table);
    const auto w = "nerves " + join(f) + ", direct " + join(f_direct);
    out.push_back(f == f_direct ? passed("f_vector", w) : failed("f_vector", w));
  }
  {
    const auto h = h_via_nerves(table);
    const auto h_direct = h_from_f(f_direct, d);
    const auto w = "nerves " + join(h) + ", from f " + join(h_direct);
    out.push_back(h == h_direct ? passed("h_vector", w) : failed("h_vector", w));
  }

  {
    const auto n1 = table.column(1, config.field);
    const auto w = "complex " + describe(complex_betti) + ", N_1 " + describe(n1);
    out.push_back(complex_betti.same_numbers(n1) ? passed("borsuk", w) : failed("borsuk", w));
  }

  // Subdivision-based checks share one guard on the size of sd Δ.
  const std::size_t sd_size = predicted_chain_face_count(c, 0);
  const bool sd_ok = sd_size <= config.limits.max_subdivision_faces;
  const std::string guard_reason = "skipped: subdivision has up to " + std::to_string(sd_size) +
                                   " faces (guard " +
                                   std::to_string(config.limits.max_subdivision_faces) + ")";
  if (!sd_ok) {
    out.push_back(skipped("subdivision", guard_reason));
    out.push_back(skipped("generalized_nerve", guard_reason));
    out.push_back(skipped("link_isomorphism", guard_reason));
  } else {
    std::vector<PosetChainComplex> above;  // above[k] = [Δ]_{>k}
    std::vector<BettiProfile> above_betti;
    for (std::size_t k = 0; k <= d; ++k) {
      above.push_back(order_complex_above(c, k, config.limits));
      above_betti.push_back(betti_profile(above.back().base, config));
    }

    {
      const auto w = "complex " + describe(complex_betti) + ", sd " + describe(above_betti[0]);
      out.push_back(complex_betti.same_numbers(above_betti[0]) ? passed("subdivision", w)
                                                               : failed("subdivision", w));
    }
    {
      std::string mismatch;
      for (std::size_t j = 0; j <= d && mismatch.empty(); ++j) {
        const auto nerve_b = table.column(j + 1, config.field);
        if (!above_betti[j].same_numbers(nerve_b))
          mismatch = "j=" + std::to_string(j) + ": order complex " + describe(above_betti[j]) +
                     ", N_" + std::to_string(j + 1) + " " + describe(nerve_b);
      }
      out.push_back(mismatch.empty() ? passed("generalized_nerve", "j=0.." + std::to_string(d))
                                     : failed("generalized_nerve", mismatch));
    }
    {
      std::string mismatch;
      std::size_t compared = 0;
      for (const auto& [face, betti] : links) {
        if (face.empty() || c.is_facet(face)) continue;
        const auto& chains = above[face.size() - 1];
        const auto v = chains.vertex_of(face);
        if (!v) {
          mismatch = "face " + c.format(face) + " missing from order complex";
          break;
        }
        const auto lk = betti_profile(link(chains.base, Face{*v}), config);
        ++compared;
        if (!lk.same_numbers(betti)) {
          mismatch = "T=" + c.format(face) + ": order complex link " + describe(lk) +
                     ", link " + describe(betti);
          break;
        }
      }
      out.push_back(mismatch.empty()
                        ? passed("link_isomorphism", std::to_string(compared) + " faces compared")
                        : failed("link_isomorphism", mismatch));
    }
  }

  {
    const std::size_t t = by_nerves.depth;
    if (t < 2 || c.vertex_count() < t) {
      out.push_back(skipped("graph_connectivity", "skipped: not applicable (depth " +
                                                      std::to_string(t) + ", n " +
                                                      std::to_string(c.vertex_count()) + ")"));
    } else {
      try {
        const bool ok = is_graph_c_connected(c, t - 1, config.limits);
        const auto w = "1-skeleton " + std::string(ok ? "is" : "is not") + " " +
                       std::to_string(t - 1) + "-connected";
        out.push_back(ok ? passed("graph_connectivity", w) : failed("graph_connectivity", w));
      } catch (const CapExceeded& e) {
        out.push_back(skipped("graph_connectivity", std::string("skipped: ") + e.what()));
      }
    }
  }
  return report;
}

InvariantReport analyze(const SimplicialComplex& c, const Config& config, bool run_checks) {
  InvariantReport r;
  r.d = c.dim_plus_one();
  r.n = c.vertex_count();
  r.s = c.min_facet_size();
  r.table = nerve_table(c, config);
  r.depth = depth_via_nerves(r.table);
  r.f = f_via_nerves(r.table);
  r.h = h_via_nerves(r.table);
  r.cm = r.depth.depth == r.d;
  if (run_checks) r.checks = validate(c, config).checks;
  return r;
}

}  // namespace hnerve
