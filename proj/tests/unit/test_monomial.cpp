#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "hnerve/error.hpp"
#include "hnerve/monomial.hpp"
#include "hnerve/random.hpp"
#include "hnerve/report_json.hpp"

using namespace hnerve;

namespace {

MonomialIdeal ideal(const std::string& text) { return parse_ideal(text).ideal; }

std::set<oracle::Mask> family(const IndexComplex& k) { return {k.faces.begin(), k.faces.end()}; }

TEST(Monomial, Arithmetic) {
  const Monomial a({{0, 2}, {1, 1}}), b({{1, 3}, {2, 1}});
  EXPECT_EQ(lcm(a, b), Monomial({{0, 2}, {1, 3}, {2, 1}}));
  EXPECT_TRUE(Monomial({{0, 1}}).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(Monomial({{1, 1}, {1, 2}, {0, 0}}), Monomial({{1, 3}}));
  EXPECT_EQ(a.total_degree(), 3u);
  EXPECT_FALSE(a.is_squarefree());
}

TEST(Monomial, ParsesBothGrammars) {
  const auto i = ideal("xy, yz");
  EXPECT_EQ(i.variable_count(), 3u);
  EXPECT_EQ(i.generator_count(), 2u);
  EXPECT_TRUE(i.is_squarefree());
  const auto j = ideal("vars: x y z w\nx^2*y\nz*w, x^3");
  EXPECT_EQ(j.variable_count(), 4u);
  EXPECT_EQ(j.format(j.generators()[0]), "x^2*y");
  const auto k = ideal("vars: ab a b\nab*a");
  EXPECT_EQ(k.generators()[0].total_degree(), 2u);
  EXPECT_EQ(ideal("x_1*x_(2)").variable_count(), 2u);
}

TEST(Monomial, RejectsBadInput) {
  EXPECT_THROW(parse_ideal("2*x"), ParseError);
  EXPECT_THROW(parse_ideal("x^0"), ParseError);
  EXPECT_THROW(parse_ideal("x^-1"), ParseError);
  EXPECT_THROW(parse_ideal("x*"), ParseError);
  EXPECT_THROW(parse_ideal("vars: x\ny"), ParseError);
  EXPECT_THROW(parse_ideal(""), ParseError);
  EXPECT_THROW(parse_ideal("1"), ParseError);
  EXPECT_THROW(read_ideal_file("/nonexistent.ideal"), ParseError);
}

TEST(Monomial, Minimalizes) {
  const auto r = parse_ideal("x*y, x, x*y*z, y^2, x");
  EXPECT_EQ(r.pruned, 3u);
  EXPECT_EQ(r.ideal.generator_count(), 2u);
}

TEST(Monomial, TextRoundTrip) {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const auto i = random_nonsquarefree_ideal(rng);
    EXPECT_EQ(parse_ideal(i.to_text()).ideal, i);
  }
}

TEST(Regularity, HandValues) {
  EXPECT_EQ(regularity(ideal("xy, yz")).reg, 2);
  EXPECT_EQ(regularity(ideal("xy, yz")).witness_degree, -1);
  EXPECT_EQ(regularity(ideal("xy, yz")).witness_level, 1u);
  EXPECT_EQ(regularity(ideal("x^2")).reg, 2);
  EXPECT_EQ(regularity(ideal("x, yzw")).reg, 3);
  EXPECT_EQ(regularity(ideal("x, yzw")).witness_degree, 0);
  EXPECT_EQ(regularity(ideal("x, yzw")).witness_level, 3u);
  // complete intersection of three quadrics: reg = 2+2+2-2
  EXPECT_EQ(regularity(ideal("x^2, y^2, z^2")).reg, 4);
  const auto j = to_json(regularity(ideal("xy, yz")), true);
  EXPECT_EQ(j["reg"], 1);
  EXPECT_EQ(j["module"], true);
}

TEST(Regularity, LcmComplexMatchesDefinition) {
  Rng rng(5);
  for (int k = 0; k < 60; ++k) {
    const auto i = k % 2 ? random_squarefree_ideal(rng) : random_nonsquarefree_ideal(rng);
    const auto top = i.lcm_of((oracle::Mask{1} << i.generator_count()) - 1).total_degree();
    std::set<oracle::Mask> previous;
    for (std::size_t j = 0; j <= top; ++j) {
      const auto fam = family(lcm_complex(i, j));
      EXPECT_EQ(fam, oracle::lcm_family(i, j));
      for (auto m : previous) EXPECT_TRUE(fam.count(m));
      previous = fam;
    }
  }
}

TEST(Regularity, MatchesOracleAndBounds) {
  Rng rng(6);
  for (int k = 0; k < 60; ++k) {
    const auto i = k % 2 ? random_squarefree_ideal(rng) : random_nonsquarefree_ideal(rng);
    const auto reg = regularity(i).reg;
    EXPECT_EQ(reg, oracle::regularity(i)) << i.to_text();
    std::uint64_t max_deg = 0;
    for (const auto& g : i.generators()) max_deg = std::max(max_deg, g.total_degree());
    EXPECT_GE(reg, static_cast<std::int64_t>(max_deg));
  }
}

TEST(Regularity, SquarefreeBridgeToNerves) {
  // L_j(I) = N_{n-j}(dual) once generator t is matched to its complement facet.
  Rng rng(7);
  for (int k = 0; k < 80; ++k) {
    const auto i = random_squarefree_ideal(rng);
    const auto dual = dual_complex(i);
    const std::size_t n = i.variable_count();
    std::vector<std::size_t> facet_of(i.generator_count());
    for (std::size_t t = 0; t < i.generator_count(); ++t) {
      std::vector<std::string> complement;
      for (VarId v = 0; v < n; ++v)
        if (i.generators()[t].exponent(v) == 0) complement.push_back(std::string(i.variables()[v]));
      const auto face = dual.face_of(complement);
      const auto it = std::find(dual.facets().begin(), dual.facets().end(), face);
      ASSERT_NE(it, dual.facets().end());
      facet_of[t] = static_cast<std::size_t>(it - dual.facets().begin());
    }
    for (std::size_t j = 0; j <= n; ++j) {
      std::set<oracle::Mask> translated;
      for (auto m : oracle::lcm_family(i, j)) {
        oracle::Mask out = 0;
        for (std::size_t t = 0; t < facet_of.size(); ++t)
          if (m >> t & 1) out |= oracle::Mask{1} << facet_of[t];
        translated.insert(out);
      }
      if (j == n) {
        EXPECT_EQ(translated.size(), std::size_t{1} << i.generator_count());
      } else {
        EXPECT_EQ(translated, oracle::nerve(dual, n - j)) << i.to_text() << "j=" << j;
      }
    }
    EXPECT_EQ(regularity(i).reg, regularity_via_dual(i));
  }
}

TEST(Regularity, PolarizationPreservesRegularity) {
  Rng rng(8);
  for (int k = 0; k < 60; ++k) {
    const auto i = random_nonsquarefree_ideal(rng);
    const auto p = polarize(i);
    EXPECT_TRUE(p.is_squarefree());
    EXPECT_EQ(p.generator_count(), i.generator_count());
    for (std::size_t t = 0; t < i.generator_count(); ++t)
      EXPECT_EQ(p.generators()[t].total_degree(), i.generators()[t].total_degree());
    EXPECT_EQ(regularity(p).reg, regularity(i).reg) << i.to_text();
    EXPECT_EQ(regularity_via_dual(p), regularity(i).reg);
  }
  EXPECT_EQ(polarize(ideal("x^2")).variables()[1], "x_(2)");
}

TEST(Regularity, DualRequiresSquarefree) {
  EXPECT_THROW(dual_complex(ideal("x^2, y")), PreconditionError);
  EXPECT_THROW(regularity_via_dual(ideal("x^2, y")), PreconditionError);
  // ghost variable y lies in every generator
  const auto d = dual_complex(ideal("xy, yz"));
  EXPECT_EQ(d.vertex_count(), 2u);
  EXPECT_EQ(regularity_via_dual(ideal("xy, yz")), 2);
}

}  // namespace
