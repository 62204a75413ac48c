#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "hnerve/complex.hpp"
#include "hnerve/error.hpp"
#include "hnerve/monomial.hpp"
#include "hnerve/random.hpp"
#include "hnerve/report_json.hpp"

namespace hnerve::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string path;
  std::string field = "q";
  bool json = false;
  std::size_t max_faces = Limits{}.max_faces;
  std::size_t max_facets = Limits{}.max_facets;
  std::uint64_t seed = 1;
  std::size_t random = 0;
  bool module = false;
  bool via_dual = false;
};

Config make_config(const RunConfig& rc) {
  Config c;
  c.field = Field::parse(rc.field);
  c.limits.max_faces = rc.max_faces;
  c.limits.max_facets = rc.max_facets;
  return c;
}

std::string vec(std::span<const std::int64_t> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

SimplicialComplex load_complex(const RunConfig& rc, std::ostream& err) {
  if (rc.path.empty()) throw PreconditionError("missing input path");
  auto built = read_facets_file(rc.path);
  if (built.pruned)
    err << "warning: pruned " << built.pruned << " duplicate or non-maximal facet(s)\n";
  return std::move(built.complex);
}

MonomialIdeal load_ideal(const RunConfig& rc, std::ostream& err) {
  if (rc.path.empty()) throw PreconditionError("missing input path");
  auto parsed = read_ideal_file(rc.path);
  if (parsed.pruned)
    err << "warning: pruned " << parsed.pruned << " redundant generator(s)\n";
  return std::move(parsed.ideal);
}

void print_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
  for (const auto& c : checks) {
    const char* status = c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL");
    out << status << "  " << c.name << ": " << c.witness << '\n';
  }
}

int cmd_complex(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const auto config = make_config(rc);
  const auto delta = load_complex(rc, err);
  const auto report = analyze(delta, config, false);
  if (rc.json) {
    out << to_json(report).dump(2) << '\n';
    return kOk;
  }
  if (rc.command == "nerves") {
    out << render_nerve_table(report.table, config.field);
  } else if (rc.command == "depth") {
    out << "depth " << report.depth.depth << '\n'
        << "witness: i=" << report.depth.witness_degree << ", j=" << report.depth.witness_index << '\n'
        << "cohen-macaulay: " << (report.cm ? "yes" : "no") << " (d = " << report.d << ")\n";
  } else if (rc.command == "fvector") {
    out << "f = " << vec(report.f) << '\n';
  } else {
    out << "h = " << vec(report.h) << '\n';
  }
  return kOk;
}

int cmd_homology(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const auto config = make_config(rc);
  const auto delta = load_complex(rc, err);
  const auto betti = betti_profile(delta, config);
  if (rc.json) {
    out << to_json(betti).dump(2) << '\n';
    return kOk;
  }
  out << "reduced homology over " << config.field.name() << '\n';
  for (int i = -1; i <= betti.top_degree(); ++i) out << "H~_" << i << " = " << betti.at(i) << '\n';
  const auto e = euler_from_betti(betti);
  out << "chi = " << e.chi << ", reduced chi = " << e.reduced << '\n';
  return kOk;
}

int cmd_reg(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const auto config = make_config(rc);
  const auto ideal = load_ideal(rc, err);
  const std::int64_t shift = rc.module ? 1 : 0;
  if (rc.via_dual) {
    if (!ideal.is_squarefree())
      throw PreconditionError("--via-dual requires a squarefree ideal");
    const auto reg = regularity_via_dual(ideal, config) - shift;
    if (rc.json) {
      Json j;
      j["reg"] = reg;
      j["witness"] = nullptr;
      j["module"] = rc.module;
      out << j.dump(2) << '\n';
    } else {
      out << (rc.module ? "reg(S/I) " : "reg ") << reg << " (via dual complex)\n";
    }
    return kOk;
  }
  const auto result = regularity(ideal, config);
  if (rc.json) {
    out << to_json(result, rc.module).dump(2) << '\n';
    return kOk;
  }
  out << (rc.module ? "reg(S/I) " : "reg ") << result.reg - shift << '\n'
      << "witness: i=" << result.witness_degree << ", j=" << result.witness_level << '\n';
  return kOk;
}

struct Tally {
  std::size_t pass = 0, fail = 0, skipped = 0;
  std::string first_failure;
};

void tally(std::map<std::string, Tally>& totals, std::vector<std::string>& order, const std::string& name,
           bool pass, bool skip, const std::string& witness) {
  if (!totals.count(name)) order.push_back(name);
  auto& t = totals[name];
  if (skip) ++t.skipped;
  else if (pass) ++t.pass;
  else {
    ++t.fail;
    if (t.first_failure.empty()) t.first_failure = witness;
  }
}

int cmd_check(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  if (rc.path.empty() && rc.random == 0) throw PreconditionError("check needs a facet file or --random N");
  AuditCounters audit;
  auto config = make_config(rc);
  config.audit = &audit;
  bool ok = true;

  if (!rc.path.empty()) {
    const auto delta = load_complex(rc, err);
    auto report = analyze(delta, config, true);
    if (rc.json) {
      out << to_json(report).dump(2) << '\n';
    } else {
      print_checks(report.checks, out);
      out << report.checks.size() << " checks\n";
    }
    for (const auto& c : report.checks) ok = ok && c.pass;
  }

  if (rc.random > 0) {
    std::map<std::string, Tally> totals;
    std::vector<std::string> order;
    const auto corpus = random_corpus(rc.seed, rc.random);
    for (const auto& delta : corpus) {
      for (const auto& c : validate(delta, config).checks)
        tally(totals, order, c.name, c.pass, c.skipped, write_facets(delta) + c.witness);
    }
    Rng rng(rc.seed ^ 0x5eedULL);
    for (std::size_t k = 0; k < rc.random; ++k) {
      const auto sf = random_squarefree_ideal(rng);
      const auto reg = regularity(sf, config).reg;
      const auto dual = regularity_via_dual(sf, config);
      tally(totals, order, "regularity_dual", reg == dual, false,
            sf.to_text() + "lcm " + std::to_string(reg) + ", dual " + std::to_string(dual));

      const auto ns = random_nonsquarefree_ideal(rng);
      const auto pol = polarize(ns);
      const auto reg_ns = regularity(ns, config).reg;
      const auto reg_pol = regularity(pol, config).reg;
      tally(totals, order, "polarization", reg_ns == reg_pol, false,
            ns.to_text() + "reg " + std::to_string(reg_ns) + ", polarized " + std::to_string(reg_pol));
      const auto reg_pol_dual = regularity_via_dual(pol, config);
      tally(totals, order, "polarization_dual", reg_ns == reg_pol_dual, false,
            ns.to_text() + "reg " + std::to_string(reg_ns) + ", polarized dual " + std::to_string(reg_pol_dual));
    }
    out << "random suite: " << rc.random << " complexes and " << 2 * rc.random << " ideals, seed "
        << rc.seed << '\n';
    for (const auto& name : order) {
      const auto& t = totals[name];
      out << (t.fail ? "FAIL" : "PASS") << "  " << name << ": " << t.pass << " pass, " << t.fail << " fail, "
          << t.skipped << " skipped\n";
      if (t.fail) {
        out << "      first failure: " << t.first_failure << '\n';
        ok = false;
      }
    }
  }

  const auto boundary = audit.boundary_violations.load();
  const auto euler = audit.euler_violations.load();
  if (!rc.json)
    out << "audit: " << audit.complexes.load() << " chain complexes, " << boundary
        << " boundary violations, " << euler << " euler violations\n";
  if (boundary || euler) ok = false;
  return ok ? kOk : kCheckFailed;
}

int cmd_bench(const RunConfig& rc, std::ostream& out) {
  const auto config = make_config(rc);
  const std::size_t count = rc.random ? rc.random : 200;
  const auto corpus = random_corpus(rc.seed, count);
  using clock = std::chrono::steady_clock;
  auto time = [&](const char* label, auto&& body) {
    const auto start = clock::now();
    body();
    const std::chrono::duration<double, std::milli> ms = clock::now() - start;
    out << std::left << std::setw(22) << label << std::fixed << std::setprecision(1) << ms.count() << " ms\n";
  };
  out << "corpus: " << count << " random complexes, seed " << rc.seed << ", field " << config.field.name() << '\n';
  time("nerve tables", [&] {
    for (const auto& d : corpus) (void)nerve_table(d, config);
  });
  time("depth via nerves", [&] {
    for (const auto& d : corpus) (void)depth_via_nerves(d, config);
  });
  time("depth via links", [&] {
    for (const auto& d : corpus) (void)depth_via_reisner(d, config);
  });
  time("full validation", [&] {
    for (const auto& d : corpus) (void)validate(d, config);
  });
  Rng rng(rc.seed);
  std::vector<MonomialIdeal> ideals;
  for (std::size_t k = 0; k < count; ++k) ideals.push_back(random_nonsquarefree_ideal(rng));
  time("regularity", [&] {
    for (const auto& i : ideals) (void)regularity(i, config);
  });
  return kOk;
}

}  // namespace

std::string render_nerve_table(const NerveTable& table, const Field& field) {
  std::ostringstream os;
  const std::size_t d = table.d;
  constexpr int w = 6;
  os << "nerve homologies over " << field.name() << ", d = " << d << '\n';
  os << std::setw(w) << "";
  for (std::size_t i = 0; i < d; ++i) os << std::setw(w) << ("H~" + std::to_string(i));
  os << std::setw(w) << "chi" << '\n';
  for (std::size_t j = 1; j <= d; ++j) {
    os << std::left << std::setw(w) << ("N_" + std::to_string(j)) << std::right;
    for (std::size_t i = 0; i < d; ++i) os << std::setw(w) << table.at(static_cast<int>(i), j);
    os << std::setw(w) << table.chi[j - 1] << '\n';
  }
  os << "footnote:";
  bool any = false;
  for (std::size_t j = 1; j <= d + 1; ++j) {
    for (int i = -1; i <= static_cast<int>(d); ++i) {
      if (i != -1 && j != d + 1) continue;
      if (table.at(i, j) == 0) continue;
      os << (any ? ";" : "") << " H~_" << i << "(N_" << j << ") = " << table.at(i, j);
      any = true;
    }
  }
  if (!any) os << " none";
  os << " (chi(N_" << d + 1 << ") = " << table.chi[d] << ")\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig rc;
  CLI::App app{"Higher nerve complexes, Stanley-Reisner depth, f/h-vectors and monomial ideal regularity",
               "hnerve"};
  app.require_subcommand(1, 1);
  app.add_option("--field", rc.field, "Coefficient field: q or gf:p")->default_str("q");
  app.add_flag("--json", rc.json, "Emit JSON");
  app.add_option("--max-faces", rc.max_faces, "Face enumeration cap");
  app.add_option("--max-facets", rc.max_facets, "Cap on facets (nerves) or generators (LCM complexes)");
  app.add_option("--seed", rc.seed, "Seed for randomized suites");

  const std::vector<std::pair<std::string, std::string>> complex_cmds = {
      {"nerves", "Print the nerve homology table of a .facets file"},
      {"depth", "Depth of the Stanley-Reisner ring"},
      {"fvector", "f-vector computed from nerve Euler characteristics"},
      {"hvector", "h-vector computed from nerve Euler characteristics"},
      {"homology", "Reduced homology of the complex itself"},
  };
  for (const auto& [name, help] : complex_cmds) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    sub->add_option("path", rc.path, "Input .facets file")->required();
  }
  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity of a monomial ideal")->fallthrough();
  reg->add_option("path", rc.path, "Input .ideal file")->required();
  reg->add_flag("--module", rc.module, "Report reg(S/I) = reg(I) - 1");
  reg->add_flag("--via-dual", rc.via_dual, "Use the squarefree dual-complex route");
  auto* check = app.add_subcommand("check", "Cross-validate every formula against its oracle")->fallthrough();
  check->add_option("path", rc.path, "Input .facets file");
  check->add_option("--random", rc.random, "Also run N random complexes and ideals");
  auto* bench = app.add_subcommand("bench", "Time the main computations on a random corpus")->fallthrough();
  bench->add_option("--random", rc.random, "Corpus size (default 200)");

  std::vector<const char*> argv{"hnerve"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  rc.command = app.get_subcommands().front()->get_name();

  try {
    if (rc.command == "homology") return cmd_homology(rc, out, err);
    if (rc.command == "reg") return cmd_reg(rc, out, err);
    if (rc.command == "check") return cmd_check(rc, out, err);
    if (rc.command == "bench") return cmd_bench(rc, out);
    return cmd_complex(rc, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace hnerve::cli
