#include <gtest/gtest.h>

#include "qetude/lehmer.hpp"
#include "qetude/serialize.hpp"

namespace qetude {
namespace {

const QPoly q = QPoly::variable(0);
const HalfPoly Y = HalfPoly::variable(kY);
const HalfPoly P = HalfPoly::variable(kP);

XQPoly xpoly(std::initializer_list<std::pair<const std::uint32_t, QPoly>> c) { return XQPoly::from_coeffs(c); }

TEST(BuildMatrix, SmallSizes) {
  LehmerMatrix m1 = build_matrix(1);
  EXPECT_EQ(m1.n, 1U);
  EXPECT_EQ(m1.at(0, 0), HalfPoly(1L));

  LehmerMatrix m2 = build_matrix(2);
  EXPECT_EQ(m2.at(0, 1), Y);
  EXPECT_EQ(m2.at(1, 0), Y);

  LehmerMatrix m3 = build_matrix(3);
  EXPECT_EQ(m3.at(0, 1), Y);
  EXPECT_EQ(m3.at(1, 2), Y * P);
  EXPECT_EQ(m3.at(2, 1), Y * P);
  EXPECT_TRUE(m3.at(0, 2).is_zero());
  EXPECT_TRUE(m3.at(2, 0).is_zero());

  EXPECT_THROW(build_matrix(0), std::invalid_argument);
  EXPECT_THROW(build_matrix(-3), std::invalid_argument);
}

TEST(BuildMatrix, TridiagonalWithUnitDiagonal) {
  LehmerMatrix m = build_matrix(9);
  for (unsigned i = 0; i < m.n; ++i) {
    for (unsigned j = 0; j < m.n; ++j) {
      unsigned gap = i > j ? i - j : j - i;
      if (gap == 0) {
        EXPECT_EQ(m.at(i, j), HalfPoly(1L));
      } else if (gap == 1) {
        EXPECT_EQ(m.at(i, j), Y * P.pow(std::min(i, j)));
      } else {
        EXPECT_TRUE(m.at(i, j).is_zero());
      }
    }
  }
}

TEST(DetRecurrence, SmallValues) {
  EXPECT_EQ(det_recurrence(1), XQPoly(QPoly(1L)));
  EXPECT_EQ(det_recurrence(2), xpoly({{0, QPoly(1L)}, {1, QPoly(-1L)}}));
  EXPECT_EQ(to_string(det_recurrence(4)), "1 - (1+q+q^2)*X + q^2*X^2");
  EXPECT_EQ(det_recurrence(5),
            xpoly({{0, QPoly(1L)}, {1, -(1 + q + q.pow(2) + q.pow(3))}, {2, q.pow(2) + q.pow(3) + q.pow(4)}}));
  EXPECT_THROW(det_recurrence(0), std::invalid_argument);
}

TEST(DetRecurrence, PrefixMatchesSingleValues) {
  std::vector<XQPoly> prefix = det_recurrence_prefix(15);
  ASSERT_EQ(prefix.size(), 15U);
  for (int n = 1; n <= 15; ++n) EXPECT_EQ(prefix[n - 1], det_recurrence(n));
}

TEST(DetOracle, SmallValues) {
  EXPECT_EQ(det_oracle(1), XQPoly(QPoly(1L)));
  EXPECT_EQ(det_oracle(3), xpoly({{0, QPoly(1L)}, {1, -(1 + q)}}));
  QPoly seven;
  for (unsigned i = 0; i <= 6; ++i) seven += q.pow(i);
  EXPECT_EQ(det_oracle(8).coefficient(1), -seven);
  EXPECT_THROW(det_oracle(0), std::invalid_argument);
}

TEST(DetOracle, AgreesWithRecurrence) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(det_oracle(n), det_recurrence(n)) << "n=" << n;
}

TEST(DetRecurrence, DegreeSignAndLowestExponent) {
  std::vector<XQPoly> prefix = det_recurrence_prefix(60);
  for (int n = 1; n <= 60; ++n) {
    const XQPoly& v = prefix[n - 1];
    ASSERT_EQ(v.x_degree(), n / 2) << "n=" << n;
    ASSERT_EQ(v.coefficient(0), QPoly(1L));
    ASSERT_TRUE(v.has_integer_coefficients());
    for (int a = 1; 2 * a <= n; ++a) {
      QPoly c = v.coefficient(a);
      ASSERT_EQ(low_degree(c), static_cast<std::uint32_t>(a * (a - 1))) << "n=" << n << " a=" << a;
      for (const auto& t : c.terms()) ASSERT_EQ(sgn(t.coeff), a % 2 ? -1 : 1) << "n=" << n << " a=" << a;
    }
  }
}

TEST(DetRecurrence, ConsecutiveDifference) {
  std::vector<XQPoly> prefix = det_recurrence_prefix(61);
  for (int n = 2; n <= 60; ++n) {
    XQPoly lhs = prefix[n] - prefix[n - 1];
    XQPoly rhs = -prefix[n - 2].times(1, static_cast<std::uint32_t>(n - 1));
    ASSERT_EQ(lhs, rhs) << "n=" << n;
  }
}

TEST(DetRecurrence, JsonRoundTrip) {
  XQPoly v = det_recurrence(30);
  EXPECT_EQ(xqpoly_from_json(Json::parse(to_json(v).dump())), v);
}

}  // namespace
}  // namespace qetude
