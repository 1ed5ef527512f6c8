#include "cuntz/cuntz.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace cuntz;

namespace {

const AlgebraTag O2 = AlgebraTag::finite(2);
const AlgebraTag O3 = AlgebraTag::finite(3);
const AlgebraTag Oinf = AlgebraTag::infinite();

Element P(AlgebraTag tag, const char* text) { return parse(tag, text); }

Monomial M(const char* j, const char* k) { return Monomial(word_from_string(j), word_from_string(k)); }

} // namespace

TEST(Coefficient, Arithmetic) {
  Coefficient a(Rational(1, 2), 3);
  Coefficient b = Coefficient::i();
  EXPECT_EQ(a * b, Coefficient(-3, Rational(1, 2)));
  EXPECT_EQ(b * b, Coefficient(-1));
  EXPECT_EQ(a.conj(), Coefficient(Rational(1, 2), -3));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(Coefficient(Rational(3, 2)).to_string(), "3/2");
  EXPECT_EQ(Coefficient::i().to_string(), "i");
  EXPECT_EQ((-Coefficient::i()).to_string(), "-i");
  EXPECT_EQ(Coefficient(1, 2).to_string(), "(1+2i)");
  EXPECT_EQ(Coefficient(1, Rational(-3, 2)).to_string(), "(1-3/2i)");
}

TEST(Word, RoundTrip) {
  Word w{2, 1, 12};
  EXPECT_EQ(word_to_string(w), "21[12]");
  EXPECT_EQ(word_from_string("21[12]"), w);
  EXPECT_EQ(word_to_string({}), "e");
  EXPECT_TRUE(is_prefix(word_from_string("21"), w));
  EXPECT_FALSE(is_prefix(word_from_string("22"), w));
  EXPECT_EQ(M("11", "2").grade(), 1);
}

TEST(AlgebraTag, ParsingAndBounds) {
  EXPECT_EQ(AlgebraTag::parse("O3"), O3);
  EXPECT_EQ(AlgebraTag::parse("O_3"), O3);
  EXPECT_EQ(AlgebraTag::parse("Oinf"), Oinf);
  EXPECT_EQ(AlgebraTag::r(2), O3);
  EXPECT_THROW(AlgebraTag::finite(1), Error);
  EXPECT_THROW(AlgebraTag::parse("X"), Error);
  EXPECT_TRUE(Oinf.admits(1000));
  EXPECT_FALSE(O3.admits(4));
}

TEST(Multiply, CuntzRelations) {
  EXPECT_TRUE(equals(P(O3, "s1' s1"), Element::unit(O3)));
  EXPECT_TRUE(P(O3, "s1' s2").is_zero());
  EXPECT_TRUE(P(Oinf, "s5' s7").is_zero());
  EXPECT_EQ(P(O2, "s1 s1' s1"), P(O2, "s1"));
  // prefix matching: s_J s_K^* s_L s_M^* with K = L x
  EXPECT_EQ(*multiply(M("1", "21"), M("2", "3")), M("1", "31"));
  EXPECT_EQ(*multiply(M("1", "2"), M("21", "3")), M("11", "3"));
  EXPECT_FALSE(multiply(M("1", "2"), M("1", "3")).has_value());
}

TEST(Normalize, Completeness) {
  EXPECT_EQ(P(O2, "s1s1' + s2s2'"), Element::unit(O2));
  EXPECT_EQ(P(O3, "s1 s1 s1' s1' + s1 s2 s2' s1' + s1 s3 s3' s1'"), P(O3, "s1 s1'"));
  EXPECT_EQ(to_string(P(O2, "s1 (s1s1' + s2s2') s2'")), "s1 s2'");
  // negative coefficients collapse componentwise; the result is the same
  // however the terms were grouped
  EXPECT_EQ(to_string(P(O2, "-s1s1'")), "-I + s2 s2'");
  EXPECT_EQ(to_string(P(O2, "I - s1 s1'")), "s2 s2'");
  // O_inf has no completeness relation
  EXPECT_EQ(P(Oinf, "s1s1' + s2s2'").size(), 2u);
}

TEST(Normalize, NegativeSiblingsCounterexampleIsConfluent) {
  // With only full sibling sets collapsing, this table rewrites to two
  // different normal forms depending on the order.
  Terms t;
  accumulate(t, M("1", "1"), -1);
  accumulate(t, M("2", "2"), -2);
  accumulate(t, M("11", "11"), 1);
  accumulate(t, M("12", "12"), 1);
  const Element e = Element::from_terms(O2, t);
  EXPECT_EQ(to_string(normalize(e)), "-2 + 2 s1 s1'");
  EXPECT_TRUE(oracle::same_operator(e, normalize(e)));
}

TEST(Equals, Examples) {
  EXPECT_TRUE(equals(P(O2, "s1s1' + s2s2'"), P(O2, "I")));
  EXPECT_TRUE(equals(P(O3, "s2"), P(O3, "s2 s1 s1' + s2 s2 s2' + s2 s3 s3'")));
  EXPECT_FALSE(equals(P(O2, "s1"), P(O2, "s2")));
  EXPECT_FALSE(equals(P(Oinf, "s1s1' + s2s2'"), P(Oinf, "I")));
  EXPECT_THROW(equals(P(O2, "s1"), P(O3, "s1")), Error);
}

TEST(Equals, LeveledExpansion) {
  oracle::Generator gen(7);
  for (int t = 0; t < 200; ++t) {
    Element e = gen.element(O3, 4, 3);
    for (std::size_t d = 0; d <= 2; ++d)
      EXPECT_TRUE(equals(e, expand_to_depth(e, d))) << to_string(e);
    EXPECT_TRUE(oracle::same_operator(e, expand_to_depth(e, 2)));
  }
}

TEST(Grading, ComponentsSumBack) {
  oracle::Generator gen(11);
  for (int t = 0; t < 200; ++t) {
    Element e = gen.element(O2, 5, 3);
    Element sum = Element::zero(O2);
    for (const auto& [g, part] : grade_components(e)) {
      for (const auto& [m, c] : part.terms())
        EXPECT_EQ(m.grade(), g);
      sum = sum + part;
    }
    EXPECT_TRUE(equals(sum, e));
  }
}

TEST(Grading, ProductAddsGrades) {
  oracle::Generator gen(12);
  for (int t = 0; t < 200; ++t) {
    Element a = Element::monomial(O3, Monomial(gen.word(3, 3), gen.word(3, 3)));
    Element b = Element::monomial(O3, Monomial(gen.word(3, 3), gen.word(3, 3)));
    const long ga = a.terms().begin()->first.grade(), gb = b.terms().begin()->first.grade();
    for (const auto& [m, c] : (a * b).terms())
      EXPECT_EQ(m.grade(), ga + gb);
  }
}

TEST(Parse, Examples) {
  Element e = P(O2, "s1*s2' + 3/2*I");
  EXPECT_EQ(e.size(), 2u);
  EXPECT_EQ(e.coefficient(M("1", "2")), Coefficient(1));
  EXPECT_EQ(e.coefficient(Monomial{}), Coefficient(Rational(3, 2)));
  EXPECT_THROW(P(O3, "s4"), Error);
  EXPECT_EQ(P(Oinf, "s100 s100'").size(), 1u);
  EXPECT_EQ(P(O2, "(s1 s2)'"), P(O2, "s2' s1'"));
  EXPECT_EQ(P(O2, "2i s1"), Element::monomial(O2, M("1", "e"), Coefficient(0, 2)));
  EXPECT_EQ(P(O2, "-s1 + -s2"), scale(-1, P(O2, "s1 + s2")));
}

TEST(Parse, Errors) {
  try {
    P(O2, "s1 + * s2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(P(O2, ""), ParseError);
  EXPECT_THROW(P(O2, "(s1"), ParseError);
  EXPECT_THROW(P(O2, "1/0"), ParseError);
  EXPECT_THROW(P(O2, "s"), ParseError);
  EXPECT_THROW(P(O2, "s0"), ParseError);
}

TEST(Parse, RenderRoundTrip) {
  oracle::Generator gen(2026);
  for (int t = 0; t < 1000; ++t) {
    const AlgebraTag tag = t % 3 == 0 ? Oinf : t % 3 == 1 ? O2 : O3;
    Element e = normalize(gen.element(tag, 5, 3));
    const std::string text = to_string(e);
    Element back = parse(tag, text);
    ASSERT_EQ(back, e) << text;
    ASSERT_EQ(to_string(back), text);
  }
}

// ---------------------------------------------------------------------------
// Property suites
// ---------------------------------------------------------------------------

TEST(Property, CollapseOrderConfluence) {
  oracle::Generator gen(31);
  for (int t = 0; t < 1000; ++t) {
    const AlgebraTag tag = t % 2 ? O2 : O3;
    const std::uint32_t n = tag.generators();
    // build tables rich in sibling sets by expanding random elements
    Element e = gen.element(tag, 4, 2, 0, t % 4 == 0);
    Terms terms = expand_to_depth(e, 1 + t % 2).terms();
    for (const auto& [m, c] : gen.element(tag, 3, 3).terms())
      accumulate(terms, m, c);
    const Element start = Element::from_terms(tag, terms);
    const Element expected = normalize(start);
    for (int order = 0; order < 3; ++order) {
      Terms work = terms;
      for (;;) {
        auto parents = detail::collapsible_parents(work, n);
        if (parents.empty())
          break;
        detail::collapse_at(work, parents[gen.below(static_cast<std::uint32_t>(parents.size()))], n);
      }
      ASSERT_EQ(Element::from_terms(tag, work), expected) << to_string(start);
    }
    ASSERT_TRUE(oracle::same_operator(start, expected)) << to_string(start);
  }
}

TEST(Property, EqualsAgreesWithShiftRepresentation) {
  oracle::Generator gen(41);
  for (int t = 0; t < 1000; ++t) {
    const AlgebraTag tag = t % 3 == 0 ? Oinf : t % 3 == 1 ? O2 : O3;
    Element a = gen.element(tag, 3, 2, tag.is_finite() ? 0 : 3);
    Element b = t % 2 ? gen.element(tag, 3, 2, tag.is_finite() ? 0 : 3)
                      : (tag.is_finite() ? expand_to_depth(a, 1) : a) + Element::zero(tag);
    if (t % 5 == 0)
      b = b + Element::monomial(tag, Monomial(gen.word(2, 2), gen.word(2, 2)));
    ASSERT_EQ(equals(a, b), oracle::same_operator(a, b)) << to_string(a) << " vs " << to_string(b);
  }
}

TEST(Property, RingAndInvolutionAxioms) {
  oracle::Generator gen(51);
  for (int t = 0; t < 1000; ++t) {
    const AlgebraTag tag = t % 3 == 0 ? Oinf : t % 3 == 1 ? O2 : O3;
    const Element a = gen.element(tag, 3, 2, tag.is_finite() ? 0 : 3);
    const Element b = gen.element(tag, 3, 2, tag.is_finite() ? 0 : 3);
    const Element c = gen.element(tag, 3, 2, tag.is_finite() ? 0 : 3);
    ASSERT_TRUE(equals((a * b) * c, a * (b * c)));
    ASSERT_TRUE(equals(a * (b + c), a * b + a * c));
    ASSERT_TRUE(equals((a + b) * c, a * c + b * c));
    ASSERT_TRUE(equals(a + b, b + a));
    ASSERT_TRUE(equals(adjoint(a * b), adjoint(b) * adjoint(a)));
    ASSERT_TRUE(equals(adjoint(adjoint(a)), a));
    ASSERT_TRUE(equals(adjoint(Coefficient::i() * a), scale(-Coefficient::i(), adjoint(a))));
    ASSERT_TRUE(equals(Element::unit(tag) * a, a));
    ASSERT_TRUE(oracle::product_is(a, b, a * b)) << to_string(a) << " * " << to_string(b);
  }
}
