#include "hnerve/report_json.hpp"

namespace hnerve {

Json to_json(const CheckResult& check) {
  Json j;
  j["name"] = check.name;
  j["pass"] = check.pass;
  j["witness"] = check.witness;
  j["skipped"] = check.skipped;
  return j;
}

CheckResult check_from_json(const Json& j) {
  CheckResult c;
  c.name = j.at("name").get<std::string>();
  c.pass = j.at("pass").get<bool>();
  c.witness = j.at("witness").get<std::string>();
  c.skipped = j.value("skipped", false);
  return c;
}

Json to_json(const InvariantReport& report) {
  Json j;
  j["d"] = report.d;
  j["n"] = report.n;
  j["s"] = report.s;
  j["table"] = report.table.betti;
  j["chi"] = report.table.chi;
  j["chi_reduced"] = report.table.chi_reduced;
  j["depth"] = {{"value", report.depth.depth},
                {"witness", {report.depth.witness_degree, report.depth.witness_index}}};
  j["f"] = report.f;
  j["h"] = report.h;
  j["cm"] = report.cm;
  j["checks"] = Json::array();
  for (const auto& c : report.checks) j["checks"].push_back(to_json(c));
  return j;
}

InvariantReport report_from_json(const Json& j) {
  InvariantReport r;
  r.d = j.at("d").get<std::size_t>();
  r.n = j.at("n").get<std::size_t>();
  r.s = j.at("s").get<std::size_t>();
  r.table.d = r.d;
  r.table.betti = j.at("table").get<std::vector<std::vector<std::size_t>>>();
  r.table.chi = j.at("chi").get<std::vector<std::int64_t>>();
  r.table.chi_reduced = j.at("chi_reduced").get<std::vector<std::int64_t>>();
  const auto& depth = j.at("depth");
  r.depth.depth = depth.at("value").get<std::size_t>();
  r.depth.witness_degree = depth.at("witness").at(0).get<int>();
  r.depth.witness_index = depth.at("witness").at(1).get<std::size_t>();
  r.depth.method = DepthMethod::nerve;
  r.f = j.at("f").get<std::vector<std::int64_t>>();
  r.h = j.at("h").get<std::vector<std::int64_t>>();
  r.cm = j.at("cm").get<bool>();
  for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
  return r;
}

Json to_json(const BettiProfile& betti) {
  Json j;
  j["field"] = betti.field().name();
  j["betti"] = std::vector<std::size_t>(betti.values().begin(), betti.values().end());
  return j;
}

Json to_json(const RegularityResult& result, bool module) {
  Json j;
  j["reg"] = module ? result.reg - 1 : result.reg;
  j["witness"] = {result.witness_degree, result.witness_level};
  j["module"] = module;
  return j;
}

}  // namespace hnerve
