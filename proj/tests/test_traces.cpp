#include <gtest/gtest.h>

#include "rookbraid/error.hpp"
#include "rookbraid/homs.hpp"
#include "rookbraid/traces.hpp"
#include "rookbraid/verify.hpp"

using namespace rookbraid;
using P = LaurentPoly;

TEST(Traces, BubbleTraceExamples) {
  const P beta = P::M();
  EXPECT_EQ(bubble_trace(beta, AlgebraElement::identity(3)), beta.pow(3));
  EXPECT_EQ(bubble_trace(beta, AlgebraElement(p2_basis()[0])), P(1));

  const auto coeffs = family_coefficients(FamilySpec::make(5));
  const auto& k = coeffs.positive;
  const P expected = k[0] + k[1] * beta + k[2] + k[3] + k[4] * beta + beta * beta;
  EXPECT_EQ(bubble_trace(beta, phi_generator(FamilySpec::make(5), 1, 1, 2)), expected);
}

TEST(Traces, SingleLineTraceExamples) {
  EXPECT_EQ(single_line_trace(AlgebraElement::identity(1)), P(1));
  EXPECT_TRUE(single_line_trace(AlgebraElement::identity(3)).is_zero());
  EXPECT_EQ(single_line_trace(phi_generator(FamilySpec::make(2, true), 1, 1, 2)),
            -P::UV(-1) - P::UV(1));
}

TEST(Traces, MarkovTraceOfUnknot) {
  EXPECT_EQ(markov_trace_5(BraidWord(1)), P::UV(-1) + P::UV(1));
  EXPECT_EQ(jones_bubble_parameter(), P::UV(-2) + 1);
}

TEST(Traces, Trace2Normalization) {
  EXPECT_EQ(trace_2(BraidWord(1)), P(1));
  EXPECT_TRUE(trace_2(BraidWord(3)).is_zero());
  EXPECT_TRUE(trace_2(BraidWord(2)).is_zero());
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(trace_2(coxeter_word(n)), P(1)) << n;
}

TEST(Traces, AlexanderNormalizerClosedForm) {
  EXPECT_EQ(alexander_normalizer(1), P(1));
  EXPECT_EQ(alexander_normalizer(2), -P::UV(-1) - P::UV(1));
  EXPECT_EQ(alexander_normalizer(3), P::UV(-2) + 1 + P::UV(2));
}

TEST(Traces, ClosedFormClaims) {
  const auto two = vip_checks(2);
  EXPECT_TRUE(two.ok()) << two.render();
  for (int n = 3; n <= kVipCap; ++n) EXPECT_TRUE(vip_checks(n).ok()) << n;
  EXPECT_THROW(vip_checks(1), Error);
  EXPECT_THROW(vip_checks(kVipCap + 1), Error);
}

TEST(Traces, BlockBraids) {
  EXPECT_EQ(tau_lambda({4}), coxeter_word(4));
  EXPECT_EQ(tau_lambda({4, 1}), BraidWord(5, {1, 2, 3}));
  EXPECT_EQ(tau_lambda({2, 3}), BraidWord(5, {1, 3, 4}));
  EXPECT_EQ(tau_lambda({1, 1, 1}), BraidWord(3));
  try {
    tau_lambda({2, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadPartition);
  }
  EXPECT_THROW(tau_lambda({}), Error);
}

TEST(Traces, BlockBraidTracesVanish) {
  for (int n = 1; n <= 5; ++n) {
    const auto r = block_braid_check(n);
    EXPECT_TRUE(r.ok()) << r.render();
  }
  EXPECT_EQ(compositions(4).size(), 8u);
}

TEST(Traces, MarkovPropertiesSmallSample) {
  for (int n = 2; n <= 3; ++n) {
    EXPECT_TRUE(markov5_check(n, 10, 100 + n).ok());
    EXPECT_TRUE(trace2_check(n, 10, 200 + n).ok());
    EXPECT_TRUE(trace_cyclicity_check(n, 10, 300 + n).ok());
  }
}
