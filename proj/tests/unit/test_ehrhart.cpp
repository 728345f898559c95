#include <gtest/gtest.h>

#include <thread>

#include "fixtures.hpp"
#include "gen.hpp"
#include "wehrhart/ehrhart.hpp"
#include "wehrhart/error.hpp"
#include "wehrhart/stanley.hpp"
#include "wehrhart/verify.hpp"

using namespace wehrhart;

namespace {

LaurentPoly y(int k = 1) { return LaurentPoly::monomial(1, k); }

HomogPoly m1() { return HomogPoly(1, {{{1}, 1}}); }
HomogPoly one(int n) { return HomogPoly::constant(n, 1); }

CharacterSum chars(int n, std::vector<std::pair<Point, LaurentPoly>> terms) {
  CharacterSum s(n);
  for (const auto& [m, c] : terms) s.add(m, c);
  return s;
}

int find_vertex(const FaceLattice& l, const Point& p) {
  for (const auto& f : l.faces())
    if (f.dim == 0 && l.polytope().vertices()[f.vertices[0]] == p) return f.id;
  throw std::out_of_range("vertex");
}

const Variant kVariants[] = {Variant::E, Variant::Etilde};

class CorpusEhrhart : public ::testing::TestWithParam<std::string> {};

}  // namespace

TEST(Variant, ParsesAndRenders) {
  EXPECT_EQ(parse_variant("E"), Variant::E);
  EXPECT_EQ(parse_variant("Etilde"), Variant::Etilde);
  EXPECT_EQ(to_string(Variant::Etilde), "Etilde");
  EXPECT_THROW(parse_variant("e"), ParseError);
}

TEST(HodgeCharacterSum, SegmentAllOnes) {
  const auto l = fixtures::lattice("segment");
  const WeightFunction f = all_ones_weight(l);
  EXPECT_EQ(hodge_character_sum(f, 1), chars(1, {{{0}, 1}, {{-1}, 1}}));
  EXPECT_EQ(hodge_character_sum(f, 0), chars(1, {{{0}, 1 - y()}}));
  EXPECT_EQ(hodge_character_sum(f, -1), chars(1, {{{0}, -y()}, {{1}, -y()}}));
}

TEST(NegateCharacters, Examples) {
  const CharacterSum fixed = chars(2, {{{0, 0}, 3 + y()}});
  EXPECT_EQ(negate_characters(fixed), fixed);
  EXPECT_EQ(negate_characters(chars(2, {{{1, 2}, 1}})), chars(2, {{{-1, -2}, 1}}));
}

TEST(ApplyPhi, SegmentExamples) {
  const CharacterSum s = chars(1, {{{0}, 1}, {{-1}, 1}});
  EXPECT_EQ(apply_phi(s, m1(), Variant::Etilde), LaurentPoly(1));
  EXPECT_EQ(apply_phi(s, m1(), Variant::E), 1 + y());
  EXPECT_EQ(apply_phi(s, one(1), Variant::E), LaurentPoly(2));
  EXPECT_EQ(apply_phi(s, one(1), Variant::Etilde), LaurentPoly(2));
  EXPECT_THROW(apply_phi(s, one(2), Variant::E), ValidationError);
}

TEST(WeightedEhrhartValue, Examples) {
  const auto seg = fixtures::lattice("segment");
  EXPECT_EQ(weighted_ehrhart_value(all_ones_weight(seg), one(1), 2, Variant::Etilde), 3 + y());
  EXPECT_EQ(weighted_ehrhart_value(all_ones_weight(seg), m1(), 2, Variant::Etilde), 3 + y());
  const auto sq = fixtures::lattice("square");
  EXPECT_EQ(weighted_ehrhart_value(all_ones_weight(sq), one(2), 3, Variant::Etilde).evaluate(0), Rat(16));
  EXPECT_THROW(weighted_ehrhart_value(all_ones_weight(sq), one(2), 0, Variant::E), ValidationError);
}

TEST(EhrhartPolynomial, Examples) {
  const auto seg = fixtures::lattice("segment");
  EXPECT_EQ(ehrhart_polynomial(all_ones_weight(seg), one(1), Variant::Etilde), ZPoly({1 - y(), 1 + y()}));
  // z + (1+y) z (z-1)/2
  EXPECT_EQ(ehrhart_polynomial(all_ones_weight(seg), m1(), Variant::Etilde),
            ZPoly({LaurentPoly(), Rat(1, 2) - Rat(1, 2) * y(), Rat(1, 2) + Rat(1, 2) * y()}));
  const auto sq = fixtures::lattice("square");
  const LaurentPoly u = 1 + y();
  const ZPoly square = ehrhart_polynomial(all_ones_weight(sq), one(2), Variant::Etilde);
  EXPECT_EQ(square, ZPoly({4 - 4 * u + u * u, 4 * u - 2 * u * u, u * u}));
  EXPECT_EQ(square(Rat(5)).evaluate(0), Rat(36));
}

TEST(EhrhartPolynomial, DegreeBound) {
  const auto cube = fixtures::lattice("cube");
  EXPECT_EQ(ehrhart_degree_bound(*cube, fixtures::quadratic_form(3)), 5);
  EXPECT_EQ(ehrhart_degree_bound(*cube, one(3)), 3);
}

TEST(Reciprocity, SegmentLinear) {
  const auto seg = fixtures::lattice("segment");
  for (std::int64_t l = 1; l <= 2; ++l) {
    const CheckResult r = verify_reciprocity(all_ones_weight(seg), m1(), l, Variant::Etilde);
    EXPECT_TRUE(r.passed);
    const Rat tri(l * (l + 1), 2);
    EXPECT_EQ(closed_face_value(all_ones_weight(seg), m1(), l, Variant::Etilde),
              LaurentPoly(Rat(-l)) + tri * (1 + y()));
  }
}

TEST(Reciprocity, DeltaWeightsGiveClassicalReciprocityAtYZero) {
  const auto cube = fixtures::lattice("cube");
  const auto& ref = fixtures::reference("cube");
  for (const auto& q : cube->faces()) {
    if (q.dim < 0) continue;
    const ZPoly p = ehrhart_polynomial(delta_weight(cube, q.id), one(3), Variant::E);
    for (std::int64_t l = 1; l <= 3; ++l) {
      // faces of the unit cube are unit cubes of dimension dim Q
      Rat interior = 1, closed = 1;
      for (int i = 0; i < q.dim; ++i) {
        interior *= l - 1;
        closed *= l + 1;
      }
      EXPECT_EQ(p(Rat(l)).evaluate(0), interior);
      EXPECT_EQ(p(Rat(-l)).evaluate(0), sign_power(q.dim) * closed);
    }
  }
  EXPECT_EQ(oracle::lattice_points(ref.vertices, ref.facets, 2).size(), 27u);
}

TEST(DualityReciprocity, RandomPyramidLinear) {
  const auto pyr = fixtures::lattice("pyramid");
  const std::vector<Rat> c{1, 1, 1};
  const HomogPoly phi = HomogPoly::linear(c);
  for (std::uint64_t s = 0; s < 5; ++s)
    for (Variant v : kVariants)
      for (std::int64_t l = 1; l <= 3; ++l)
        EXPECT_TRUE(verify_duality_reciprocity(random_weight(pyr, s), phi, l, v).passed);
}

TEST(HodgeDuality, SegmentDeltaEdge) {
  const auto seg = fixtures::lattice("segment");
  const WeightFunction f = delta_weight(seg, seg->top());
  const CheckResult r = verify_hodge_duality(f, 1);
  EXPECT_TRUE(r.passed);
  const LaurentPoly c = -(1 + y()) * y(-1);
  const CharacterSum expected = chars(1, {{{0}, c}, {{-1}, c}});
  EXPECT_EQ(hodge_character_sum(dualize(f), 1), expected);
  EXPECT_EQ(negate_characters(substitute_inverse(hodge_character_sum(f, -1))), expected);
  EXPECT_EQ(r.lhs, expected.to_string());
}

TEST(HodgeDuality, SquareAndPyramid) {
  const auto sq = fixtures::lattice("square");
  for (std::int64_t l = 1; l <= 2; ++l) EXPECT_TRUE(verify_hodge_duality(all_ones_weight(sq), l).passed);
  const auto pyr = fixtures::lattice("pyramid");
  const WeightFunction g = g_weight_function(pyr, pyr->top());
  EXPECT_TRUE(verify_hodge_duality(g, 1).passed);
  EXPECT_EQ(hodge_character_sum(dualize(g), 1), LaurentPoly::minus_y_pow(-3) * hodge_character_sum(g, 1));
}

TEST(Purity, Examples) {
  const auto pyr = fixtures::lattice("pyramid");
  const PolarGTable pyr_table(pyr);
  for (std::int64_t l = 1; l <= 3; ++l)
    for (Variant v : kVariants) EXPECT_TRUE(verify_purity(pyr_table, pyr->top(), one(3), l, v).passed);

  const auto cube = fixtures::lattice("cube");
  const PolarGTable cube_table(cube);
  const HomogPoly sq(3, {{{2, 0, 0}, 1}});
  for (const auto& f : cube->faces()) {
    if (f.dim != 2) continue;
    for (std::int64_t l = 1; l <= 2; ++l)
      for (Variant v : kVariants) EXPECT_TRUE(verify_purity(cube_table, f.id, sq, l, v).passed);
  }
  EXPECT_THROW(verify_purity(cube_table, cube->empty_face(), sq, 1, Variant::E), ValidationError);
}

TEST(Purity, SimplexAllOnes) {
  const auto s = fixtures::lattice("simplex3");
  const PolarGTable table(s);
  EXPECT_EQ(table.g_weights(s->top()), all_ones_weight(s));
  for (std::int64_t l = 1; l <= 3; ++l)
    EXPECT_TRUE(verify_purity(table, s->top(), fixtures::linear_form(3), l, Variant::E).passed);
}

TEST(Verifiers, DetectWrongPolynomial) {
  const auto sq = fixtures::lattice("square");
  const WeightFunction f = all_ones_weight(sq);
  ZPoly wrong({LaurentPoly(1), LaurentPoly(2), LaurentPoly(1)});
  const CheckResult r = verify_reciprocity(wrong, f, one(2), 1, Variant::E);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.lhs.empty());
  EXPECT_FALSE(r.rhs.empty());
  EXPECT_NE(r.lhs, r.rhs);
  EXPECT_FALSE(verify_duality_reciprocity(wrong, f, one(2), 2, Variant::Etilde).passed);
}

TEST(ConstantTerm, HLink) {
  for (const auto& c : fixtures::corpus()) {
    const auto& l = c.lattice;
    const WeightFunction g = g_weight_function(l, l->top());
    const LaurentPoly at_zero =
        apply_phi(hodge_character_sum(g, 0), one(l->dim()), Variant::Etilde);
    EXPECT_EQ(at_zero, h_polynomial(l).at_minus_y()) << c.name;
    EXPECT_EQ(constant_term(g, one(l->dim()), Variant::Etilde), at_zero) << c.name;
  }
}

TEST(ConstantTerm, DehnSommervilleForSimplePolytopes) {
  for (const auto& c : fixtures::corpus()) {
    if (!is_simple(c.lattice->polytope())) continue;
    const LaurentPoly e0 = substitute_negated(
        constant_term(all_ones_weight(c.lattice), one(c.lattice->dim()), Variant::E));
    EXPECT_TRUE(is_palindromic(e0, c.lattice->dim())) << c.name;
  }
}

TEST_P(CorpusEhrhart, ValuesMatchBruteForceAndCharacterRoute) {
  const std::string name = GetParam();
  const auto l = fixtures::lattice(name);
  const int n = l->dim();
  const std::vector<WeightFunction> weights{all_ones_weight(l), g_weight_function(l, l->top()),
                                            random_weight(l, 7)};
  const std::vector<HomogPoly> phis{one(n), fixtures::linear_form(n), fixtures::quadratic_form(n)};
  for (const auto& f : weights) {
    for (const auto& phi : phis) {
      for (Variant v : kVariants) {
        const ZPoly poly = ehrhart_polynomial(f, phi, v);
        EXPECT_LE(poly.degree(), ehrhart_degree_bound(*l, phi));
        for (std::int64_t dil = 1; dil <= 3; ++dil) {
          const LaurentPoly direct = weighted_ehrhart_value(f, phi, dil, v);
          EXPECT_EQ(direct, fixtures::brute_value(name, f, phi, dil, v));
          EXPECT_EQ(direct, apply_phi(hodge_character_sum(f, dil), phi, v));
          EXPECT_EQ(poly(Rat(dil)), direct);
          EXPECT_EQ(closed_face_value(f, phi, dil, v), apply_phi(hodge_character_sum(f, -dil), phi, v));
          const bool a = verify_reciprocity(poly, f, phi, dil, v).passed;
          const bool b = verify_duality_reciprocity(poly, f, phi, dil, v).passed;
          EXPECT_TRUE(a);
          EXPECT_EQ(a, b);
        }
        EXPECT_EQ(poly(Rat(0)), constant_term(f, phi, v));
        EXPECT_EQ(poly(Rat(0)), apply_phi(hodge_character_sum(f, 0), phi, v));
      }
    }
  }
}

TEST_P(CorpusEhrhart, ClosedSumsAssembleFromRelativeInteriors) {
  const std::string name = GetParam();
  const auto l = fixtures::lattice(name);
  const auto& ref = fixtures::reference(name);
  const HomogPoly phi = fixtures::quadratic_form(l->dim());
  const std::vector<Rat> closed = closed_phi_sums(*l, phi, 2);
  const std::vector<Rat> relint = relint_phi_sums(*l, phi, 2);
  Rat all = 0, inner = 0;
  for (const auto& m : oracle::lattice_points(ref.vertices, ref.facets, 2)) all += phi(m);
  for (const auto& m : oracle::interior_points(ref.vertices, ref.facets, 2)) inner += phi(m);
  EXPECT_EQ(closed[l->top()], all);
  EXPECT_EQ(relint[l->top()], inner);
  EXPECT_EQ(relint[l->empty_face()], Rat(0));
}

INSTANTIATE_TEST_SUITE_P(Corpus, CorpusEhrhart,
                         ::testing::Values("segment", "square", "cube", "simplex1", "simplex2",
                                           "simplex3", "simplex4", "pyramid", "random3"));

TEST(RunSuites, DeterministicAcrossThreadCounts) {
  const auto pyr = fixtures::lattice("pyramid");
  SuiteConfig config;
  config.suites = parse_suites("all");
  config.lmax = 2;
  config.weights = {{"ones", all_ones_weight(pyr)}, {"r", random_weight(pyr, 3)}};
  config.phis = {{"one", one(3)}, {"lin", fixtures::linear_form(3)}};
  config.threads = 1;
  const EhrhartReport serial = run_suites(pyr, config);
  config.threads = 4;
  const EhrhartReport parallel = run_suites(pyr, config);
  ASSERT_EQ(serial.checks.size(), parallel.checks.size());
  for (std::size_t i = 0; i < serial.checks.size(); ++i) {
    EXPECT_EQ(serial.checks[i].identity, parallel.checks[i].identity);
    EXPECT_EQ(serial.checks[i].params, parallel.checks[i].params);
    EXPECT_EQ(serial.checks[i].lhs, parallel.checks[i].lhs);
  }
  EXPECT_TRUE(serial.passed());
  EXPECT_EQ(serial.polytope_hash, pyr->polytope().hash());
}

TEST(RunSuites, ParsesSuiteNames) {
  EXPECT_EQ(parse_suites("all").size(), 4u);
  EXPECT_EQ(parse_suites("purity"), std::vector<Suite>{Suite::Purity});
  EXPECT_THROW(parse_suites("bogus"), ParseError);
}

TEST(EhrhartPolynomial, ConcurrentEvaluationOnSharedLattice) {
  const auto cube = build_face_lattice(facet_presentation(corpus::unit_cube()));
  std::vector<ZPoly> out(6, ZPoly(std::vector<LaurentPoly>{}));
  {
    std::vector<std::jthread> pool;
    for (int i = 0; i < 6; ++i)
      pool.emplace_back([&, i] { out[i] = ehrhart_polynomial(all_ones_weight(cube), one(3), Variant::E); });
  }
  for (const auto& p : out) EXPECT_EQ(p, out[0]);
}
