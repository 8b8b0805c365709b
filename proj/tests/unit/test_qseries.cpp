#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qetude/lehmer.hpp"
#include "qetude/qseries.hpp"

namespace qetude {
namespace {

const QPoly q = QPoly::variable(0);

std::vector<Rational> rationals(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Each a-term of the limit sum, expanded by multiplying geometric series
// 1/(1 - q^i) one at a time (a different route from the library's partition DP).
RationalSeries term_by_term_specialisation(unsigned order, long x_coeff, unsigned x_exp) {
  std::vector<Rational> total(order + 1, Rational(0));
  for (unsigned a = 0;; ++a) {
    unsigned shift = a * (a - 1) + a * x_exp;
    if (a > 0 && a * (a - 1) > order) break;
    if (shift > order) continue;
    std::vector<Rational> term(order + 1, Rational(0));
    Rational sign = 1;
    for (unsigned i = 0; i < a; ++i) sign *= -x_coeff;
    term[shift] = sign;
    for (unsigned i = 1; i <= a; ++i)
      for (unsigned k = i; k <= order; ++k) term[k] += term[k - i];
    for (unsigned k = 0; k <= order; ++k) total[k] += term[k];
  }
  return RationalSeries(total);
}

TEST(Theorem1Truncated, OrderZero) {
  XSeries s = theorem1_truncated(0);
  ASSERT_EQ(s.order(), 0U);
  EXPECT_EQ(s[0], 1 - XPoly::variable(0));
}

TEST(Theorem1Truncated, SpecialisedAtQ) {
  // The a=1 term -X/(1-q) becomes -q - q^2 - ..., so q^1 carries -1.
  EXPECT_EQ(substitute_x(theorem1_truncated(2), 1, 1).coeffs(), rationals({1, -1, -1}));
  EXPECT_EQ(substitute_x(theorem1_truncated(6), 1, 1).coeffs(), rationals({1, -1, -1, -1, 0, 0, 1}));
}

TEST(Theorem1Truncated, LowerOrdersAreTruncationsOfHigherOnes) {
  XSeries high = theorem1_truncated(30);
  for (unsigned k = 0; k <= 30; ++k) ASSERT_EQ(theorem1_truncated(k), high.truncated(k)) << "order " << k;
}

TEST(Theorem1Truncated, SpecialisationsMatchTermByTermExpansion) {
  for (auto [c, e] : {std::pair{1L, 1U}, std::pair{-1L, 1U}, std::pair{-1L, 0U}, std::pair{-1L, 2U}, std::pair{3L, 2U}}) {
    for (unsigned order : {0U, 1U, 5U, 17U, 40U}) {
      EXPECT_EQ(substitute_x(theorem1_truncated(order), c, e), term_by_term_specialisation(order, c, e))
          << "X=" << c << "q^" << e << " order " << order;
    }
  }
}

TEST(Theorem1Truncated, StabilisesToDeterminant) {
  std::vector<XQPoly> prefix = det_recurrence_prefix(30);
  EXPECT_EQ(theorem1_truncated(18), to_xseries(prefix[19], 18));
  for (int n = 3; n <= 30; ++n) {
    auto k = static_cast<unsigned>(n - 2);
    ASSERT_EQ(theorem1_truncated(k), to_xseries(prefix[n - 1], k)) << "n=" << n;
  }
}

TEST(SubstituteX, ConstantSeries) {
  XSeries s(std::vector<XPoly>{1 - XPoly::variable(0)});
  EXPECT_EQ(substitute_x(s, -1, 0).coeffs(), rationals({2}));
}

TEST(SubstituteX, FirstSumSide) {
  EXPECT_EQ(substitute_x(theorem1_truncated(9), -1, 1).coeffs(), rationals({1, 1, 1, 1, 2, 2, 3, 3, 4, 5}));
}

TEST(RrProduct, SmallOrders) {
  EXPECT_EQ(rr_product_truncated(4, {1, 4}, 5).coeffs(), rationals({1, 1, 1, 1, 2}));
  EXPECT_EQ(rr_product_truncated(3, {2, 3}, 5).coeffs(), rationals({1, 0, 1, 1}));
  EXPECT_EQ(rr_product_truncated(0, {2, 3}, 5).coeffs(), rationals({1}));
  EXPECT_EQ(rr_product_truncated(6, {}, 5).coeffs(), rationals({1, 0, 0, 0, 0, 0, 0}));
  EXPECT_THROW(rr_product_truncated(3, {0}, 5), std::invalid_argument);
  EXPECT_THROW(rr_product_truncated(3, {6}, 5), std::invalid_argument);
}

TEST(RPartitions, Examples) {
  EXPECT_EQ(count_r_partitions({5, -1}), 13);
  EXPECT_EQ(count_r_partitions({4, -3}), 8);
  EXPECT_EQ(count_r_partitions({4, 2}), 2);
  EXPECT_THROW(count_r_partitions({0, 1}), std::invalid_argument);
  EXPECT_EQ(sequence_rpartitions(-1, 1), std::vector<Integer>{1});
  std::vector<Integer> gap2 = sequence_rpartitions(2, 9);
  EXPECT_EQ(gap2, (std::vector<Integer>{1, 1, 1, 2, 2, 3, 3, 4, 5}));
}

TEST(RPartitions, TwentyTermsOfRelaxedPartitions) {
  std::vector<Integer> expected{1,   2,   4,    7,    13,   23,   41,    72,    127,   222,
                                388, 677, 1179, 2052, 3569, 6203, 10778, 18722, 32513, 56455};
  EXPECT_EQ(sequence_rpartitions(-1, 20), expected);
}

TEST(RPartitions, AgreeWithBruteForceEnumeration) {
  for (int n = 1; n <= 16; ++n)
    for (int r = -16; r <= 4; ++r)
      ASSERT_EQ(count_r_partitions({n, r}), testing::brute_force_compositions(n, r)) << "n=" << n << " r=" << r;
}

TEST(RPartitions, UnconstrainedAndMonotone) {
  for (int n = 1; n <= 16; ++n) {
    Integer all = Integer(1) << (n - 1);
    for (int r = -(n - 1) - 3; r <= -(n - 1); ++r) ASSERT_EQ(count_r_partitions({n, r}), all);
    for (int r = -n; r < n + 1; ++r) ASSERT_GE(count_r_partitions({n, r}), count_r_partitions({n, r + 1}));
  }
}

TEST(RPartitions, DistinctPartsMatchProduct) {
  QPoly product(1L);
  for (std::uint32_t i = 1; i <= 20; ++i) product *= 1 + q_pow(i);
  std::vector<Integer> counts = sequence_rpartitions(1, 20);
  for (std::uint32_t k = 1; k <= 20; ++k) EXPECT_EQ(Rational(counts[k - 1]), coefficient(product, k)) << k;
}

TEST(Reciprocal, InverseOfSpecialisationCountsRelaxedPartitions) {
  RationalSeries inv = series_invert(substitute_x(theorem1_truncated(20), 1, 1));
  std::vector<Integer> counts = sequence_rpartitions(-1, 20);
  EXPECT_EQ(inv[0], 1);
  for (unsigned k = 1; k <= 20; ++k) EXPECT_EQ(inv[k], Rational(counts[k - 1])) << k;
  RationalSeries inv6 = series_invert(substitute_x(theorem1_truncated(6), 1, 1));
  EXPECT_EQ(inv6.coeffs(), rationals({1, 1, 2, 4, 7, 13, 23}));
}

TEST(RogersRamanujan, FirstIdentityAtOrderForty) {
  RationalSeries sum = substitute_x(theorem1_truncated(40), -1, 1);
  EXPECT_EQ(sum, rr_product_truncated(40, {1, 4}, 5));
  std::vector<Integer> gap2 = sequence_rpartitions(2, 40);
  for (unsigned k = 1; k <= 40; ++k) EXPECT_EQ(sum[k], Rational(gap2[k - 1]));
}

TEST(RogersRamanujan, SecondSumSideFromMinusQSquared) {
  EXPECT_EQ(substitute_x(theorem1_truncated(40), -1, 2), rr_product_truncated(40, {2, 3}, 5));
}

TEST(RogersRamanujan, MinusOneSpecialisationStartsAtTwo) {
  RationalSeries s = substitute_x(theorem1_truncated(10), -1, 0);
  EXPECT_EQ(s[0], 2);
  EXPECT_NE(s, rr_product_truncated(10, {1, 4}, 5));
  EXPECT_NE(s, rr_product_truncated(10, {2, 3}, 5));
}

TEST(BFile, Format) {
  EXPECT_EQ(format_bfile({1, 2, 4}), "1 1\n2 2\n3 4\n");
  EXPECT_EQ(format_bfile({1, -1}, 0), "0 1\n1 -1\n");
}

}  // namespace
}  // namespace qetude
