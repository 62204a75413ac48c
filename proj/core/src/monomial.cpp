#include "hnerve/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "family.hpp"
#include "hnerve/error.hpp"
#include "hnerve/homology.hpp"
#include "hnerve/invariants.hpp"

namespace hnerve {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end());
  for (const auto& [v, e] : terms) {
    if (e == 0) continue;
    if (!terms_.empty() && terms_.back().first == v) terms_.back().second += e;
    else terms_.emplace_back(v, e);
  }
}

std::uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{v, 0});
  return it != terms_.end() && it->first == v ? it->second : 0;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t deg = 0;
  for (const auto& t : terms_) deg += t.second;
  return deg;
}

bool Monomial::is_squarefree() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second == 1; });
}

bool Monomial::divides(const Monomial& other) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return other.exponent(t.first) >= t.second; });
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto x = a.terms_.begin();
  auto y = b.terms_.begin();
  while (x != a.terms_.end() || y != b.terms_.end()) {
    if (y == b.terms_.end() || (x != a.terms_.end() && x->first < y->first)) {
      out.terms_.push_back(*x++);
    } else if (x == a.terms_.end() || y->first < x->first) {
      out.terms_.push_back(*y++);
    } else {
      out.terms_.emplace_back(x->first, std::max(x->second, y->second));
      ++x;
      ++y;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal MonomialIdeal::make(std::vector<std::string> variables, std::vector<Monomial> generators,
                                  std::size_t* pruned) {
  {
    std::set<std::string_view> seen;
    for (const auto& v : variables) {
      if (v.empty()) throw PreconditionError("variable names must be nonempty");
      if (!seen.insert(v).second) throw PreconditionError("duplicate variable '" + v + "'");
    }
  }
  if (generators.empty()) throw PreconditionError("ideal needs at least one generator");
  for (const auto& g : generators) {
    if (g.is_one()) throw PreconditionError("unit ideal unsupported");
    if (g.terms().back().first >= variables.size())
      throw PreconditionError("generator refers to an unknown variable");
  }

  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < generators.size() && !redundant; ++k) {
      if (k == i || !generators[k].divides(generators[i])) continue;
      // Strict divisor, or an equal generator that appears earlier.
      redundant = generators[k] != generators[i] || k < i;
    }
    if (!redundant) minimal.push_back(generators[i]);
  }
  if (pruned) *pruned = generators.size() - minimal.size();

  MonomialIdeal ideal;
  ideal.variables_ = std::move(variables);
  ideal.generators_ = std::move(minimal);
  return ideal;
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

Monomial MonomialIdeal::lcm_of(std::uint64_t mask) const {
  Monomial acc;
  for (std::size_t t = 0; t < generators_.size(); ++t)
    if (mask >> t & 1U) acc = lcm(acc, generators_[t]);
  return acc;
}

std::string MonomialIdeal::format(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.terms()) {
    if (!out.empty()) out += '*';
    out += variables_[v];
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string MonomialIdeal::to_text() const {
  std::string out = "vars:";
  for (const auto& v : variables_) out += " " + v;
  out += '\n';
  for (const auto& g : generators_) out += format(g) + '\n';
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Factor {
  std::string name;
  std::uint32_t exponent;
};

class TermParser {
 public:
  TermParser(std::string_view text, const std::vector<std::string>* declared)
      : text_(text), declared_(declared) {}

  std::vector<Factor> parse() {
    std::vector<Factor> factors;
    skip_space();
    if (at_end()) throw ParseError("empty monomial term");
    while (true) {
      skip_space();
      if (at_end()) break;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError(std::string("unexpected number in term '") + std::string(text_) +
                         "' (coefficients and the unit ideal are unsupported)");
      }
      std::string name = read_name();
      std::uint32_t exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        exponent = read_exponent();
      }
      factors.push_back({std::move(name), exponent});
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end()) throw ParseError("dangling '*' in term '" + std::string(text_) + "'");
      }
    }
    return factors;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string read_name() {
    if (declared_) {
      std::size_t best = 0;
      for (const auto& v : *declared_)
        if (v.size() > best && text_.substr(pos_, v.size()) == v) best = v.size();
      if (best == 0)
        throw ParseError("unknown variable at '" + std::string(text_.substr(pos_)) + "'");
      std::string name(text_.substr(pos_, best));
      pos_ += best;
      return name;
    }
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError("malformed term '" + std::string(text_) + "'");
    const std::size_t start = pos_++;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '_') {
      ++pos_;
      const bool paren = !at_end() && peek() == '(';
      if (paren) ++pos_;
      const std::size_t digits = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == digits) throw ParseError("malformed subscript in '" + std::string(text_) + "'");
      if (paren) {
        if (at_end() || peek() != ')') throw ParseError("unclosed subscript in '" + std::string(text_) + "'");
        ++pos_;
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint32_t read_exponent() {
    if (!at_end() && peek() == '-') throw ParseError("negative exponent in '" + std::string(text_) + "'");
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("missing exponent in '" + std::string(text_) + "'");
    const auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 9) throw ParseError("exponent too large in '" + std::string(text_) + "'");
    const auto value = static_cast<std::uint32_t>(std::stoul(std::string(digits)));
    if (value == 0) throw ParseError("zero exponent in '" + std::string(text_) + "'");
    return value;
  }

  std::string_view text_;
  const std::vector<std::string>* declared_;
  std::size_t pos_ = 0;
};

std::string strip(std::string_view s) {
  const auto* ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return std::string(s.substr(b, s.find_last_not_of(ws) - b + 1));
}

}  // namespace

IdealParseResult parse_ideal(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      line = strip(line);
      if (!line.empty()) lines.push_back(line);
    }
  }
  if (lines.empty()) throw ParseError("empty ideal text");

  std::optional<std::vector<std::string>> declared;
  std::size_t first = 0;
  if (lines[0].starts_with("vars:")) {
    declared.emplace();
    std::istringstream names(lines[0].substr(5));
    std::string v;
    while (names >> v) declared->push_back(v);
    if (declared->empty()) throw ParseError("empty vars: header");
    first = 1;
  }

  std::vector<std::vector<Factor>> terms;
  for (std::size_t l = first; l < lines.size(); ++l) {
    std::string_view rest = lines[l];
    while (true) {
      const auto comma = rest.find(',');
      const auto piece = strip(rest.substr(0, comma));
      if (piece.empty()) throw ParseError("empty term in '" + lines[l] + "'");
      terms.push_back(TermParser(piece, declared ? &*declared : nullptr).parse());
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  if (terms.empty()) throw ParseError("ideal has no generators");

  std::vector<std::string> variables;
  if (declared) {
    variables = *declared;
  } else {
    std::set<std::string> names;
    for (const auto& t : terms)
      for (const auto& f : t) names.insert(f.name);
    variables.assign(names.begin(), names.end());
  }
  std::map<std::string, VarId> ids;
  for (std::size_t v = 0; v < variables.size(); ++v) ids.emplace(variables[v], static_cast<VarId>(v));

  std::vector<Monomial> generators;
  for (const auto& t : terms) {
    std::vector<Monomial::Term> m;
    for (const auto& f : t) m.emplace_back(ids.at(f.name), f.exponent);
    generators.emplace_back(std::move(m));
  }
  IdealParseResult result{MonomialIdeal::make(std::move(variables), std::move(generators)), 0};
  result.pruned = terms.size() - result.ideal.generator_count();
  return result;
}

IdealParseResult read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open ideal file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ideal(buf.str());
}

// ---------------------------------------------------------------------------
// LCM complexes and regularity

IndexComplex lcm_complex(const MonomialIdeal& ideal, std::size_t j, const Limits& limits) {
  const auto gens = ideal.generators();
  const std::size_t r = gens.size();
  detail::check_ground_size(r, limits.max_facets, "lcm complex");
  std::vector<std::uint64_t> faces;
  detail::enumerate_downward_closed(
      r, Monomial{}, [&](const Monomial& m, std::size_t t) { return lcm(m, gens[t]); },
      [&](const Monomial& m) { return m.total_degree() <= j; },
      [&](std::uint64_t mask, const Monomial&) { faces.push_back(mask); }, limits.max_faces);
  return index_complex_from_family(r, std::move(faces));
}

RegularityResult regularity(const MonomialIdeal& ideal, const Config& config) {
  const std::uint64_t mask_all =
      ideal.generator_count() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ideal.generator_count()) - 1;
  const std::uint64_t top = ideal.lcm_of(mask_all).total_degree();

  RegularityResult best;
  bool found = false;
  for (std::uint64_t j = 0; j <= top; ++j) {
    const auto lj = lcm_complex(ideal, j, config.limits);
    const auto b = betti_profile(lj.complex, config);
    for (int i = -1; i <= b.top_degree(); ++i) {
      if (b.at(i) == 0) continue;
      const auto value = static_cast<std::int64_t>(j) - i;
      if (!found || value > best.reg) {
        found = true;
        best.reg = value;
        best.witness_degree = i;
        best.witness_level = j;
      }
    }
  }
  // L_0 = {∅} always contributes, so a witness exists.
  return best;
}

MonomialIdeal polarize(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.variable_count();
  std::vector<std::uint32_t> slots(n, 0);
  for (const auto& g : ideal.generators())
    for (const auto& [v, e] : g.terms()) slots[v] = std::max(slots[v], e);

  std::vector<std::string> names;
  std::vector<VarId> first_slot(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    first_slot[v] = static_cast<VarId>(names.size());
    for (std::uint32_t k = 1; k <= slots[v]; ++k)
      names.push_back(std::string(ideal.variables()[v]) + "_(" + std::to_string(k) + ")");
  }
  std::vector<Monomial> generators;
  for (const auto& g : ideal.generators()) {
    std::vector<Monomial::Term> terms;
    for (const auto& [v, e] : g.terms())
      for (std::uint32_t k = 0; k < e; ++k) terms.emplace_back(first_slot[v] + k, 1);
    generators.emplace_back(std::move(terms));
  }
  return MonomialIdeal::make(std::move(names), std::move(generators));
}

SimplicialComplex dual_complex(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw PreconditionError("dual complex requires a squarefree ideal");
  const std::size_t n = ideal.variable_count();
  std::vector<Face> facets;
  for (const auto& g : ideal.generators()) {
    std::vector<VertexId> complement;
    for (std::size_t v = 0; v < n; ++v)
      if (g.exponent(static_cast<VarId>(v)) == 0) complement.push_back(static_cast<VertexId>(v));
    facets.push_back(Face::from_sorted(std::move(complement)));
  }
  std::vector<std::string> labels(ideal.variables().begin(), ideal.variables().end());
  return SimplicialComplex::from_facets(std::move(labels), std::move(facets), UnusedVertices::drop);
}

std::int64_t regularity_via_dual(const MonomialIdeal& ideal, const Config& config) {
  const auto delta = dual_complex(ideal);
  const auto depth = depth_via_nerves(delta, config).depth;
  return static_cast<std::int64_t>(ideal.variable_count()) - static_cast<std::int64_t>(depth);
}

}  // namespace hnerve
