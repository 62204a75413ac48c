#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hnerve/error.hpp"
#include "hnerve/random.hpp"

using namespace hnerve;
using testing_helpers::complex_of;

namespace {

std::vector<SimplicialComplex> corpus() { return random_corpus(11, 120); }

TEST(Complex, NormalizesToMaximalFacets) {
  std::size_t pruned = 0;
  auto c = SimplicialComplex::from_facets({"a", "b", "c"}, {Face{0, 1}, Face{0}, Face{1, 0}, Face{2}}, UnusedVertices::reject,
                                          &pruned);
  EXPECT_EQ(pruned, 2u);
  ASSERT_EQ(c.facet_count(), 2u);
  EXPECT_EQ(c.dim_plus_one(), 2u);
  EXPECT_EQ(c.min_facet_size(), 1u);
}

TEST(Complex, NormalizationIsIdempotent) {
  for (const auto& c : corpus()) {
    std::vector<Face> facets(c.facets().begin(), c.facets().end());
    std::vector<std::string> labels(c.labels().begin(), c.labels().end());
    std::size_t pruned = 1;
    auto again = SimplicialComplex::from_facets(labels, facets, UnusedVertices::reject, &pruned);
    EXPECT_EQ(again, c);
    EXPECT_EQ(pruned, 0u);
  }
}

TEST(Complex, RejectsVoidAndUnusedVertices) {
  EXPECT_THROW(build_complex({}), PreconditionError);
  EXPECT_THROW(SimplicialComplex::from_facets({"a", "b"}, {Face{0}}), PreconditionError);
  auto dropped = SimplicialComplex::from_facets({"a", "b", "c"}, {Face{0, 2}}, UnusedVertices::drop);
  EXPECT_EQ(dropped.vertex_count(), 2u);
  EXPECT_EQ(dropped.label(1), "c");
}

TEST(Complex, IrrelevantComplex) {
  auto c = build_complex({{}}).complex;
  EXPECT_TRUE(c.is_irrelevant());
  EXPECT_EQ(c.dim_plus_one(), 0u);
  EXPECT_EQ(f_vector_direct(c), (std::vector<std::int64_t>{1}));
}

TEST(Complex, ParsesFacetText) {
  auto raw = parse_facets("# comment\nA B C D\n\nB C D E # trailing\nEMPTY\n");
  ASSERT_EQ(raw.size(), 3u);
  EXPECT_EQ(raw[0], (std::vector<std::string>{"A", "B", "C", "D"}));
  EXPECT_TRUE(raw[2].empty());
  EXPECT_THROW(parse_facets("# nothing\n"), ParseError);
  EXPECT_THROW(parse_facets("A EMPTY\n"), ParseError);
  EXPECT_THROW(read_facets_file("/nonexistent/file.facets"), ParseError);
}

TEST(Complex, WriteParseRoundTrip) {
  for (const auto& c : corpus()) EXPECT_EQ(build_complex(parse_facets(write_facets(c))).complex, c);
}

TEST(Complex, FVectorMatchesPowerSet) {
  for (const auto& c : corpus()) EXPECT_EQ(f_vector_direct(c), oracle::f_vector(oracle::faces_of(c)));
  EXPECT_EQ(f_vector_direct(complex_of("ABCD BCDE DEFG DFGH")), (std::vector<std::int64_t>{1, 8, 17, 14, 4}));
}

TEST(Complex, HFromFStandardTransform) {
  // simplex on 3 vertices: h = (1,0,0,0)
  EXPECT_EQ(h_from_f(std::vector<std::int64_t>{1, 3, 3, 1}, 3), (std::vector<std::int64_t>{1, 0, 0, 0}));
  // boundary of a triangle: h = (1,1,1)
  EXPECT_EQ(h_from_f(std::vector<std::int64_t>{1, 3, 3}, 2), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_THROW(h_from_f(std::vector<std::int64_t>{1, 3}, 2), PreconditionError);
}

TEST(Complex, AllFacesCapped) {
  Limits limits;
  limits.max_faces = 10;
  EXPECT_THROW(all_faces(complex_of("ABCDE"), limits), CapExceeded);
  EXPECT_EQ(all_faces(complex_of("ABC")).size(), 8u);
}

TEST(Complex, LinkStarAntistarMatchDefinitions) {
  for (const auto& c : corpus()) {
    const auto k = oracle::faces_of(c);
    for (oracle::Mask t : k.faces) {
      Face tf;
      std::vector<VertexId> members;
      for (std::size_t v = 0; v < c.vertex_count(); ++v)
        if (t >> v & 1) members.push_back(static_cast<VertexId>(v));
      tf = Face(members);
      EXPECT_EQ(oracle::label_family(link(c, tf)), oracle::label_family(c, oracle::link(k, t)));
      std::set<oracle::Mask> st, ast;
      for (oracle::Mask g : k.faces) {
        if (k.faces.count(g | t)) st.insert(g);
        if ((g & t) == 0) ast.insert(g);
      }
      EXPECT_EQ(oracle::label_family(star(c, tf)), oracle::label_family(c, st));
      if (tf.size() < c.vertex_count()) {
        // st ∩ ast = lk always; st ∪ ast = Δ when T is a vertex
        const auto a = oracle::label_family(antistar(c, tf));
        EXPECT_EQ(a, oracle::label_family(c, ast));
        const auto s = oracle::label_family(star(c, tf));
        oracle::Family meet, join = s;
        for (const auto& f : a) {
          if (s.count(f)) meet.insert(f);
          join.insert(f);
        }
        EXPECT_EQ(meet, oracle::label_family(link(c, tf)));
        if (tf.size() == 1) EXPECT_EQ(join, oracle::label_family(c));
      }
    }
  }
}

TEST(Complex, LinkHandValues) {
  const auto c = complex_of("ABCD BCDE DEFG DFGH");
  EXPECT_EQ(link(c, c.face_of({"D"})), complex_of("ABC BCE EFG FGH"));
  EXPECT_EQ(induced(c, c.face_of({"A", "B", "C", "D", "E"})), complex_of("ABCD BCDE"));
  EXPECT_THROW(link(c, c.face_of({"A", "H"})), PreconditionError);
  EXPECT_TRUE(link(c, c.face_of({"A", "B", "C", "D"})).is_irrelevant());
}

TEST(Complex, InducedMatchesRestriction) {
  for (const auto& c : corpus()) {
    const auto k = oracle::faces_of(c);
    const oracle::Mask w = 0b1011 & ((oracle::Mask{1} << c.vertex_count()) - 1);
    std::vector<VertexId> members;
    for (std::size_t v = 0; v < c.vertex_count(); ++v)
      if (w >> v & 1) members.push_back(static_cast<VertexId>(v));
    std::set<oracle::Mask> expect;
    for (oracle::Mask g : k.faces)
      if ((g & ~w) == 0) expect.insert(g);
    EXPECT_EQ(oracle::label_family(induced(c, Face(members))), oracle::label_family(c, expect));
  }
}

TEST(Complex, SkeletonTruncates) {
  for (const auto& c : corpus()) {
    const auto f = f_vector_direct(c);
    for (int k = -1; k < static_cast<int>(c.dim_plus_one()); ++k) {
      const auto sk = f_vector_direct(skeleton(c, k));
      ASSERT_EQ(sk.size(), static_cast<std::size_t>(k + 2));
      for (int i = 0; i <= k + 1; ++i) EXPECT_EQ(sk[i], f[i]);
    }
    EXPECT_THROW(skeleton(c, static_cast<int>(c.dim_plus_one())), PreconditionError);
  }
}

TEST(Complex, OrderComplexShapes) {
  const auto c = complex_of("ABCD BCDE DEFG DFGH");
  const auto sd = barycentric_subdivision(c);
  EXPECT_EQ(sd.base.vertex_count(), 43u);  // nonempty faces
  EXPECT_EQ(sd.base.dim_plus_one(), 4u);
  EXPECT_EQ(order_complex_above(c, 3).base.vertex_count(), 4u);
  EXPECT_EQ(order_complex_above(c, 3).base.dim_plus_one(), 1u);
  EXPECT_TRUE(order_complex_above(c, 4).base.is_irrelevant());
  EXPECT_THROW(order_complex_above(c, 5), PreconditionError);
  for (const auto& x : corpus()) {
    if (predicted_chain_face_count(x, 0) > Limits{}.max_subdivision_faces) continue;
    const auto p = barycentric_subdivision(x);
    std::size_t sd_faces = 0;
    for (auto v : f_vector_direct(p.base)) sd_faces += static_cast<std::size_t>(v);
    EXPECT_LE(sd_faces, predicted_chain_face_count(x, 0));
    std::int64_t nonempty = -1;
    for (auto v : oracle::f_vector(oracle::faces_of(x))) nonempty += v;
    EXPECT_EQ(static_cast<std::int64_t>(p.base.vertex_count()), nonempty);
  }
}

TEST(Complex, GraphConnectivityHandValues) {
  const auto cycle = complex_of("AB BC CD DE EA");
  EXPECT_TRUE(is_graph_c_connected(cycle, 2));
  EXPECT_FALSE(is_graph_c_connected(cycle, 3));
  EXPECT_FALSE(is_graph_c_connected(complex_of("AB BC"), 2));
  EXPECT_TRUE(is_graph_c_connected(complex_of("AB BC"), 1));
  EXPECT_FALSE(is_graph_c_connected(complex_of("AB CD"), 1));
  EXPECT_THROW(is_graph_c_connected(complex_of("AB"), 2), PreconditionError);
}

TEST(Complex, FormatsFaces) {
  const auto c = complex_of("ABD");
  EXPECT_EQ(c.format(c.face_of({"A", "D"})), "AD");
  EXPECT_EQ(c.format(Face{}), "∅");
  const auto w = build_complex({{"x1", "x2"}}).complex;
  EXPECT_EQ(w.format(w.face_of({"x1", "x2"})), "{x1,x2}");
}

}  // namespace
