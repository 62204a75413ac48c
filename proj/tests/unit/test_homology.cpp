#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hnerve/error.hpp"
#include "hnerve/random.hpp"

using namespace hnerve;
using testing_helpers::complex_of;
using testing_helpers::numbers;

namespace {

Config over(const Field& f) {
  Config c;
  c.field = f;
  return c;
}

TEST(Field, ParsesAndValidates) {
  EXPECT_TRUE(Field::parse("q").is_rational());
  EXPECT_EQ(Field::parse("gf:5").characteristic(), 5u);
  EXPECT_EQ(Field::parse("gf:3").name(), "GF(3)");
  EXPECT_THROW(Field::parse("gf:4"), PreconditionError);
  EXPECT_THROW(Field::parse("r"), PreconditionError);
}

TEST(Homology, HandValues) {
  EXPECT_EQ(numbers(betti_profile(complex_of("0"))), (std::vector<std::size_t>{1}));
  EXPECT_EQ(numbers(betti_profile(complex_of("ABC"))), (std::vector<std::size_t>{0}));
  EXPECT_EQ(numbers(betti_profile(complex_of("AB BC CA"))), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(numbers(betti_profile(complex_of("A B C"))), (std::vector<std::size_t>{0, 2}));
  // boundary of the tetrahedron: a 2-sphere
  EXPECT_EQ(numbers(betti_profile(complex_of("ABC ABD ACD BCD"))), (std::vector<std::size_t>{0, 0, 0, 1}));
}

TEST(Homology, RealProjectivePlaneDependsOnCharacteristic) {
  // six-vertex RP^2
  const auto rp2 = complex_of("ABC ACD ADE AEF ABF BCE CDF BDE CEF BDF");
  EXPECT_EQ(numbers(betti_profile(rp2, over(Field::rationals()))), (std::vector<std::size_t>{0}));
  EXPECT_EQ(numbers(betti_profile(rp2, over(Field::prime(3)))), (std::vector<std::size_t>{0}));
  EXPECT_EQ(numbers(betti_profile(rp2, over(Field::prime(2)))), (std::vector<std::size_t>{0, 0, 1, 1}));
  EXPECT_EQ(numbers(betti_profile(rp2, over(Field::prime(2)))),
            oracle::reduced_betti(oracle::faces_of(rp2).faces, 2));
}

TEST(Homology, MatchesDenseOracleOverEveryField) {
  for (const auto& c : random_corpus(23, 150)) {
    const auto faces = oracle::faces_of(c).faces;
    for (long p : {0L, 2L, 3L, 5L}) {
      const Field f = p ? Field::prime(static_cast<std::uint32_t>(p)) : Field::rationals();
      EXPECT_EQ(numbers(betti_profile(c, over(f))), oracle::reduced_betti(faces, p)) << write_facets(c);
    }
  }
}

TEST(Homology, FieldsAgreeOnSmallComplexes) {
  for (const auto& c : random_corpus(5, 60)) {
    const auto q = betti_profile(c, over(Field::rationals()));
    for (std::uint32_t p : {2u, 3u, 5u}) EXPECT_TRUE(q.same_numbers(betti_profile(c, over(Field::prime(p)))));
  }
}

TEST(Homology, BoundarySquaresToZero) {
  for (const auto& c : random_corpus(3, 60)) EXPECT_TRUE(boundary_squares_to_zero(boundary_matrices(c)));
}

TEST(Homology, SparseRankMatchesDenseRank) {
  for (const auto& c : random_corpus(9, 60)) {
    for (const auto& m : boundary_matrices(c)) {
      std::vector<std::vector<long>> dense(m.rows, std::vector<long>(m.cols, 0));
      for (std::size_t col = 0; col < m.cols; ++col)
        for (auto [row, v] : m.columns[col]) dense[row][col] = v;
      EXPECT_EQ(rank(m, Field::rationals()), oracle::dense_rank(dense, 0));
      EXPECT_EQ(rank(m, Field::prime(2)), oracle::dense_rank(dense, 2));
    }
  }
}

TEST(Homology, EulerPoincare) {
  for (const auto& c : random_corpus(4, 80)) {
    const auto f = f_vector_direct(c);
    std::int64_t reduced = 0;
    for (std::size_t k = 0; k < f.size(); ++k) reduced += (k % 2 ? 1 : -1) * f[k];
    EXPECT_EQ(euler_from_betti(betti_profile(c)).reduced, reduced);
  }
}

TEST(Homology, AuditCountsComplexes) {
  AuditCounters audit;
  Config config;
  config.audit = &audit;
  for (const auto& c : random_corpus(8, 10)) (void)betti_profile(c, config);
  EXPECT_EQ(audit.complexes.load(), 10u);
  EXPECT_EQ(audit.boundary_violations.load(), 0u);
  EXPECT_EQ(audit.euler_violations.load(), 0u);
}

TEST(Homology, ProfileComparison) {
  BettiProfile a({0, 1}, Field::rationals()), b({0, 1, 0, 0}, Field::rationals()), c({0, 1}, Field::prime(2));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_TRUE(a.same_numbers(c));
  EXPECT_EQ(a.first_nonzero(), 0);
  EXPECT_FALSE(a.is_acyclic());
  EXPECT_EQ(a.at(7), 0u);
}

}  // namespace
