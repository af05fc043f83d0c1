#include <flagcoh/checker.hpp>
#include <flagcoh/space.hpp>
#include <flagcoh/veronese.hpp>

#include <gtest/gtest.h>

using namespace flagcoh;

TEST(Morphisms, CohomologicalCriterion) {
  SourceDescriptor p3{"A3(1)", 3, 3, 3, true, ""};
  EXPECT_TRUE(no_nonconstant_morphisms_cohomological(p3, MarkedDiagram::parse("A2(1)")).holds);
  EXPECT_FALSE(no_nonconstant_morphisms_cohomological(p3, MarkedDiagram::parse("A3(1)")).holds);
  // type D targets also need 2 g.d. > h
  SourceDescriptor q{"Q", 7, 3, 8, true, ""};
  auto d4 = no_nonconstant_morphisms_cohomological(q, MarkedDiagram::parse("D4(1)"));
  EXPECT_EQ(d4.steps.size(), 2u);
  EXPECT_FALSE(d4.holds);
  q.gd = 4;
  EXPECT_TRUE(no_nonconstant_morphisms_cohomological(q, MarkedDiagram::parse("D4(1)")).holds);
  EXPECT_THROW(no_nonconstant_morphisms_cohomological(q, MarkedDiagram::parse("E6(1)")), InputError);
}

TEST(Morphisms, DimensionCriterion) {
  SourceDescriptor m{"D5(5)", 0, 0, 10, true, ""};
  EXPECT_TRUE(no_nonconstant_morphisms_dimension(m, MarkedDiagram::parse("A4(2)")).holds);
  m.dim = 6;
  EXPECT_FALSE(no_nonconstant_morphisms_dimension(m, MarkedDiagram::parse("A4(2)")).holds);
  EXPECT_THROW(no_nonconstant_morphisms_dimension(m, MarkedDiagram::parse("B4(2)")), InputError);
}

TEST(FiberData, KnownFamilies) {
  auto p = fiber_data(MarkedDiagram::parse("A4(4)"));
  EXPECT_EQ(p.gd, 4);
  EXPECT_EQ(p.ed, 4);
  auto g = fiber_data(MarkedDiagram::parse("A5(4)"));
  EXPECT_EQ(g.gd, 4);
  EXPECT_EQ(g.ed, 5);
  auto q = fiber_data(MarkedDiagram::parse("D5(1)"));
  EXPECT_EQ(q.gd, 4);
  EXPECT_EQ(q.ed, 7);
  EXPECT_EQ(q.dim, 8);
  EXPECT_THROW(fiber_data(MarkedDiagram::parse("A5(3)")), InputError);
  EXPECT_THROW(fiber_data(MarkedDiagram::parse("E6(1)")), InputError);
}

TEST(CheckH, Verdicts) {
  auto v = check_splitting_h(MarkedDiagram::parse("B4(1)"), DynkinDiagram::parse("A2"));
  EXPECT_EQ(v.result, Result::Diagonalizable);
  EXPECT_TRUE(v.warnings.empty());
  EXPECT_FALSE(v.trace.empty());

  auto g = check_splitting_h(MarkedDiagram::parse("A4(2)"), DynkinDiagram::parse("A1"));
  EXPECT_EQ(g.result, Result::Inconclusive);
  EXPECT_FALSE(g.trace.front().holds);

  auto line = check_splitting_h(MarkedDiagram::parse("A1(1)"), DynkinDiagram::parse("D8"));
  EXPECT_EQ(line.result, Result::Diagonalizable);

  auto spinor = check_splitting_h(MarkedDiagram::parse("D6(5)"), DynkinDiagram::parse("A3"));
  EXPECT_EQ(spinor.trace.front().rule, "normalize");
  EXPECT_EQ(spinor.result, Result::Diagonalizable);

  EXPECT_THROW(check_splitting_h(MarkedDiagram::parse("E6(1)"), DynkinDiagram::parse("A2")), InputError);
  EXPECT_THROW(check_splitting_h(MarkedDiagram::parse("A4(1,2)"), DynkinDiagram::parse("A2")), InputError);
  EXPECT_THROW(check_splitting_h(MarkedDiagram::parse("B4(1)"), DynkinDiagram::parse("G2")), InputError);
}

TEST(CheckH, TagMode) {
  auto x = MarkedDiagram::parse("C5(3)");
  auto fiber = DynkinDiagram::parse("A3");
  // all tag values zero: nothing to check
  CheckOptions zero;
  zero.tag = parse_tag(fiber, "0,0,0");
  EXPECT_EQ(check_splitting_h(x, fiber, zero).result, Result::Diagonalizable);
  CheckOptions mixed;
  mixed.tag = parse_tag(fiber, "1,0,1");
  EXPECT_EQ(check_splitting_h(x, fiber, mixed).result, Result::Inconclusive);
  CheckOptions wrong;
  wrong.tag = parse_tag(DynkinDiagram::parse("B3"), "1,0,1");
  EXPECT_THROW(check_splitting_h(x, fiber, wrong), InputError);
}

TEST(CheckR, Verdicts) {
  EXPECT_EQ(check_splitting_r(MarkedDiagram::parse("E6(1)"), DynkinDiagram::parse("A4")).result, Result::Diagonalizable);
  EXPECT_EQ(check_splitting_r(MarkedDiagram::parse("E6(1)"), DynkinDiagram::parse("A5")).result, Result::Inconclusive);
  EXPECT_EQ(check_splitting_r(MarkedDiagram::parse("B5(1)"), DynkinDiagram::parse("A3")).result, Result::Diagonalizable);
  EXPECT_THROW(check_splitting_r(MarkedDiagram::parse("B5(1)"), DynkinDiagram::parse("B3")), InputError);
}

TEST(Space, Parsing) {
  EXPECT_EQ(parse_space("Q5").marked->name(), "B3(1)");
  EXPECT_EQ(parse_space("Q6").marked->name(), "D4(1)");
  EXPECT_EQ(parse_space("Q1").marked->name(), "A1(1)");
  EXPECT_TRUE(parse_space("B3").full_flag());
  EXPECT_THROW(parse_space("Q2"), InputError);
  EXPECT_THROW(parse_space("Qx"), InputError);
  EXPECT_THROW(parse_space(""), InputError);
}

TEST(Veronese, Forms) {
  EXPECT_EQ(build_quadric(3).form.to_string(), "Z_0_0*Z_1_1 - Z_0_1^2 + Z_2_2*Z_3_3 - Z_2_3^2");
  EXPECT_EQ(build_quadric(2).form.to_string(), "Z_0_0*Z_1_1 - Z_0_1^2 + Z_0_1*Z_2_2 - Z_0_2*Z_1_2");
  // three hyperbolic blocks
  auto f5 = build_quadric(5).form;
  EXPECT_EQ(f5.term_count(), 6u);
  EXPECT_THROW(build_quadric(1), InputError);
}

TEST(Veronese, VertexAndTarget) {
  EXPECT_EQ(vertex_codimension(build_quadric(3)), 6);
  EXPECT_EQ(vertex_codimension(build_quadric(4)), 9);
  EXPECT_EQ(vertex_codimension(build_quadric(7)), 12);
  EXPECT_EQ(target_quadric_dimension(3), 4);
  EXPECT_EQ(target_quadric_dimension(4), 7);
  EXPECT_EQ(target_quadric_dimension(9), 13);
  for (int n = 2; n <= 9; ++n) {
    auto q = build_quadric(n);
    EXPECT_TRUE(verify_disjoint(q)) << n;
    EXPECT_TRUE(listed_equations_match(q)) << n;
    // kernel dimension + rank = number of coordinates
    auto red = row_reduce(q.gram);
    const std::size_t N = q.coords.count();
    EXPECT_EQ(static_cast<std::size_t>((n + 1) * (n + 2) / 2), N);
    std::size_t kernel = 0;
    for (std::size_t f = 0; f < N; ++f) {
      if (std::find(red.pivot_columns.begin(), red.pivot_columns.end(), f) != red.pivot_columns.end()) continue;
      std::vector<Rational> v(N, Rational(0));
      v[f] = 1;
      for (std::size_t k = 0; k < red.rank(); ++k) v[red.pivot_columns[k]] = -red.reduced[k][f];
      for (const auto& row : q.gram) {
        Rational s = 0;
        for (std::size_t j = 0; j < N; ++j) s += row[j] * v[j];
        ASSERT_EQ(s, 0);
      }
      ++kernel;
    }
    EXPECT_EQ(kernel + red.rank(), N);
    for (std::size_t i = 0; i < q.gram.size(); ++i)
      for (std::size_t j = 0; j < q.gram.size(); ++j) ASSERT_EQ(q.gram[i][j], q.gram[j][i]);
  }
}

TEST(Veronese, CohomologicalObstructionMustFail) {
  // P^n -> Q^d with d = 3 floor(n/2) + 1 is nonconstant, so the cohomological
  // hypothesis ed(P^n) = n >= h must fail for the quadric's group.
  for (int n = 2; n <= 9; ++n) {
    int d = target_quadric_dimension(n);
    auto target = quadric(d);
    SourceDescriptor pn{"P^n", n, n, n, true, ""};
    EXPECT_FALSE(no_nonconstant_morphisms_cohomological(pn, target).holds) << n;
  }
}
