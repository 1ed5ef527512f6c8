#include "cuntz/cuntz.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

using namespace cuntz;

namespace {

const AlgebraTag O2 = AlgebraTag::finite(2);
const AlgebraTag Oinf = AlgebraTag::infinite();

Word W(const char* s) { return word_from_string(s); }

} // namespace

TEST(Coherence, HandBuiltFamilies) {
  // x_1 = f(1,2)(x_2) with x_2 = s3 in R_2
  CoherentFamily good{Chain({1, 2}), {parse(O2, "s2 s2"), parse(AlgebraTag::r(2), "s3")}};
  EXPECT_TRUE(check_coherent(good));
  CoherentFamily bad{Chain({1, 2}), {parse(O2, "s2 s1"), parse(AlgebraTag::r(2), "s3")}};
  auto where = find_incoherence(bad);
  ASSERT_TRUE(where);
  EXPECT_EQ(*where, std::make_pair(std::size_t{0}, std::size_t{1}));
  CoherentFamily wrong_tag{Chain({1, 2}), {parse(O2, "s1"), parse(O2, "s1")}};
  EXPECT_THROW(check_coherent(wrong_tag), Error);
}

TEST(Coherence, PsiOfRandomElements) {
  oracle::Generator gen(5);
  for (int t = 0; t < 100; ++t) {
    Element x = gen.element(Oinf, 3, 3, 9);
    const std::vector<std::vector<Natural>> chains{{1, 2, 4, 8}, {1, 3, 6, 12}, {2, 2, 6}, {3, 12}, {5}};
    Chain c(chains[t % chains.size()]);
    EXPECT_TRUE(check_coherent(psi(c, x))) << to_string(x);
  }
  EXPECT_THROW(psi(Chain({1}), parse(O2, "s1")), Error);
}

TEST(Semigroups, MembershipMatchesGeneration) {
  for (std::uint32_t n = 1; n <= 5; ++n) {
    const auto generated = oracle::semigroup_L(n, 10);
    for (const auto& w : binary_words(10)) {
      const oracle::Str s(w.begin(), w.end());
      ASSERT_EQ(in_L(n, w), generated.count(s) > 0) << n << " " << word_to_string(w);
    }
  }
  EXPECT_TRUE(in_L_inf(W("221")));
  EXPECT_FALSE(in_L_inf(W("12")));
  EXPECT_TRUE(in_K(2, W("2222")));
  EXPECT_FALSE(in_K(2, W("222")));
  EXPECT_FALSE(in_L(2, W("13")));
}

TEST(Semigroups, Split) {
  auto s = decompose_word(2, W("12122"));
  EXPECT_EQ(s.kind, WordClass::y_n);
  EXPECT_EQ(word_to_string(s.x), "121");
  EXPECT_EQ(word_to_string(s.u), "22");
  s = decompose_word(2, W("2222"));
  EXPECT_EQ(s.kind, WordClass::y_n);
  EXPECT_TRUE(s.x.empty());
  EXPECT_EQ(decompose_word(3, W("21")).kind, WordClass::l_inf);
  EXPECT_THROW(decompose_word(2, W("222")), Error);
}

TEST(Decomposition, MonomialCases) {
  // a = b > 0: x u u^* y^* becomes x (I - sum t2^j t1 t1^* t2^*j) y^*
  auto d = classify_monomial(1, Monomial(W("2"), W("2")));
  EXPECT_TRUE(d.v.is_zero());
  EXPECT_TRUE(d.v_star.is_zero());
  EXPECT_EQ(to_string(d.q_inf), "I - s1 s1'");
  // a > b > 0
  d = classify_monomial(1, Monomial(W("122"), W("2")));
  EXPECT_EQ(to_string(d.v), "s1 s2");
  EXPECT_EQ(to_string(d.q_inf), "-s1 s2 s1 s1'");
  EXPECT_TRUE(d.v_star.is_zero());
  // b > a = 0
  d = classify_monomial(2, Monomial(W("1"), W("22")));
  EXPECT_EQ(to_string(d.v_star), "s1 s2' s2'");
  EXPECT_THROW(classify_monomial(2, Monomial(W("2"), W("1"))), Error);
}

TEST(Decomposition, SumsBackByShiftRepresentation) {
  for (std::uint32_t n : {2u, 3u}) {
    std::vector<Word> words{Word{}};
    for (const auto& w : binary_words(5))
      if (in_L(n, w))
        words.push_back(w);
    for (const auto& j : words)
      for (const auto& k : words) {
        auto d = classify_monomial(n, Monomial(j, k));
        ASSERT_TRUE(oracle::same_operator(d.q_inf + d.v + d.v_star, Element::monomial(O2, Monomial(j, k))));
      }
  }
}

TEST(Decomposition, ProjectionIdentity) {
  for (std::uint32_t n = 1; n <= 8; ++n)
    EXPECT_TRUE(projection_identity_holds(n));
}

TEST(State, ClosedFormMatchesVacuumVector) {
  oracle::Generator gen(9);
  for (int t = 0; t < 300; ++t) {
    const std::uint32_t n = 1 + t % 4;
    Element e = gen.element(AlgebraTag::r(n), 4, 3);
    const auto expect = oracle::omega(e);
    const Coefficient got = state_omega(n, e);
    ASSERT_EQ(got.real(), expect.re);
    ASSERT_EQ(got.imag(), expect.im);
  }
  EXPECT_EQ(state_omega(1, parse(O2, "s1")), Coefficient(1));
  EXPECT_EQ(state_omega(1, parse(O2, "s1 s1 s1'")), Coefficient(1));
  EXPECT_EQ(state_omega(1, parse(O2, "s2 s2'")), Coefficient(0));
  EXPECT_THROW(state_omega(2, parse(O2, "s1")), Error);
}

TEST(State, PullbackAlongFamilies) {
  oracle::Generator gen(10);
  for (std::uint32_t m = 1; m <= 12; ++m)
    for (std::uint32_t n : divisors(m))
      for (int t = 0; t < 10; ++t) {
        Element e = gen.element(AlgebraTag::r(m), 3, 4, std::min<std::uint32_t>(m + 1, 3));
        const auto lhs = oracle::omega(apply(f(n, m), e));
        const auto rhs = oracle::omega(e);
        ASSERT_TRUE(lhs == rhs) << n << "," << m << " " << to_string(e);
      }
}

TEST(Suites, PassAndRefuteUnderMutation) {
  const FamilyOptions bad{true};
  EXPECT_TRUE(verify_inverse_system(12).passed());
  EXPECT_FALSE(verify_inverse_system(12, bad).passed());
  EXPECT_TRUE(verify_infinite_compatibility(12).passed());
  EXPECT_FALSE(verify_infinite_compatibility(12, 30, bad).passed());
  const Element x = parse(Oinf, "s1 s3' + 2 s5");
  EXPECT_TRUE(verify_psi(Chain({1, 2, 4}), x).passed());
  EXPECT_FALSE(verify_psi(Chain({1, 2, 4}), x, bad).passed());
  EXPECT_TRUE(verify_decomposition(2, 6).passed());
  EXPECT_FALSE(verify_decomposition(2, 6, 10, bad).passed());
  EXPECT_TRUE(verify_uhf(2, 3).passed());
  EXPECT_FALSE(verify_uhf(2, 3, bad).passed());
  EXPECT_TRUE(verify_state(6).passed());
  EXPECT_FALSE(verify_state(6, 6, 10, bad).passed());
}

TEST(Partition, Rows) {
  const std::string text = render_partition(Chain({1, 2, 4}), 16);
  EXPECT_EQ(text, "R1=O2 |s1     |s2     |\n"
                  "R2=O3 |s1     |s2 |s3 |\n"
                  "R4=O5 |s1     |s2 | |||\n");
}
