#include <gtest/gtest.h>

#include "qetude/closedform.hpp"
#include "qetude/discovery.hpp"
#include "qetude/expression.hpp"
#include "qetude/interpolate.hpp"
#include "qetude/lehmer.hpp"

namespace qetude {
namespace {

const QPoly q = QPoly::variable(0);

QPoly geometric(unsigned top) {
  QPoly p;
  for (unsigned i = 0; i <= top; ++i) p += q_pow(i);
  return p;
}

struct Expected {
  int sign;
  unsigned shift;
  int m_offset;
};

void expect_gaussian(const GuessTerm& t, int a, Expected e) {
  ASSERT_TRUE(std::holds_alternative<GaussianForm>(t.form)) << "a=" << a;
  const auto& g = std::get<GaussianForm>(t.form);
  EXPECT_EQ(t.a, a);
  EXPECT_EQ(t.sign, e.sign) << "a=" << a;
  EXPECT_EQ(t.q_shift, e.shift) << "a=" << a;
  EXPECT_EQ(g.m_offset, e.m_offset) << "a=" << a;
  EXPECT_EQ(g.n_param, a);
}

CoefficientTable corrupted_table() {
  CoefficientTable table = generate_table(24);
  table.rows[11][2] += q_pow(99);
  return table;
}

TEST(GenerateTable, Columns) {
  CoefficientTable t = generate_table(10);
  ASSERT_EQ(t.rows.size(), 10U);
  EXPECT_TRUE(t.coefficient(1, 1).is_zero());
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(t.coefficient(n, 1), -geometric(n - 2)) << n;
  EXPECT_TRUE(t.coefficient(3, 2).is_zero());
  EXPECT_EQ(t.coefficient(4, 2), q.pow(2));
  EXPECT_EQ(t.coefficient(10, 2), parse_qpoly("q^2+q^3+2q^4+2q^5+3q^6+3q^7+4q^8+3q^9+3q^10+2q^11+2q^12+q^13+q^14"));
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(t.rows[n - 1].size(), static_cast<std::size_t>(n / 2 + 1));
    EXPECT_EQ(t.rows[n - 1][0], QPoly(1L));
  }
  EXPECT_EQ(generate_table(1).rows, (std::vector<std::vector<QPoly>>{{QPoly(1L)}}));
  EXPECT_THROW(t.coefficient(11, 0), std::out_of_range);
}

TEST(AndrewsGuess, RecognisesGaussianColumns) {
  CoefficientTable t = generate_table(20);
  expect_gaussian(andrews_guess(t, 1), 1, {-1, 0, -2});
  expect_gaussian(andrews_guess(t, 2), 2, {1, 2, -4});
  expect_gaussian(andrews_guess(t, 4), 4, {1, 12, -8});
  EXPECT_THROW(andrews_guess(t, 9), std::invalid_argument);
}

TEST(AnsatzGuess, FitsRationalForms) {
  CoefficientTable t = generate_table(24);
  GuessTerm t1 = ansatz_guess(t, 1);
  EXPECT_TRUE(rational_equal(std::get<RationalForm>(t1.form).expr, parse_nrational("(N-q)/(q(1-q))")));
  EXPECT_EQ(t1.fit_degree, 1U);
  GuessTerm t4 = ansatz_guess(t, 4);
  EXPECT_TRUE(rational_equal(std::get<RationalForm>(t4.form).expr,
                             parse_nrational("(N-q^4)(N-q^5)(N-q^6)(N-q^7)/(q^10(q^2+1)(q-1)^4(1+q)^2(q^2+q+1))")));
  GuessTerm t0 = ansatz_guess(t, 0);
  EXPECT_TRUE(rational_equal(std::get<RationalForm>(t0.form).expr, NRational(NPoly2(1L))));
}

TEST(Synthesize, AndrewsPipeline) {
  GuessReport r = synthesize_conjecture(GuessMode::andrews, 5, 20);
  ASSERT_EQ(r.terms.size(), 6U);
  expect_gaussian(r.terms[0], 0, {1, 0, 0});
  expect_gaussian(r.terms[1], 1, {-1, 0, -2});
  expect_gaussian(r.terms[2], 2, {1, 2, -4});
  expect_gaussian(r.terms[3], 3, {-1, 6, -6});
  expect_gaussian(r.terms[4], 4, {1, 12, -8});
  expect_gaussian(r.terms[5], 5, {-1, 20, -10});
  EXPECT_TRUE(r.holdout_verified);
  EXPECT_TRUE(r.closed_form_consistent);
  EXPECT_EQ(r.data_range, std::make_pair(1, 20));

  GuessReport trivial = synthesize_conjecture(GuessMode::andrews, 0, 6);
  ASSERT_EQ(trivial.terms.size(), 1U);
  EXPECT_EQ(trivial.terms[0].value_at(5), QPoly(1L));
  EXPECT_THROW(synthesize_conjecture(GuessMode::andrews, 5, 15), std::invalid_argument);
}

TEST(Synthesize, AnsatzPipelineAndDenominators) {
  GuessReport r = synthesize_conjecture(GuessMode::ansatz, 5, 24);
  ASSERT_EQ(r.terms.size(), 6U);
  EXPECT_TRUE(r.holdout_verified);
  EXPECT_TRUE(r.closed_form_consistent);
  for (int a = 1; a <= 5; ++a) {
    EXPECT_TRUE(rational_equal(std::get<RationalForm>(r.terms[a].form).expr, coefficient_in_N(a))) << a;
  }
  ASSERT_TRUE(r.denominator_ratios.has_value());
  std::vector<QPoly> expected;
  for (std::uint32_t a = 2; a <= 5; ++a) expected.push_back(q_pow(a) - q_pow(2 * a));
  EXPECT_EQ(*r.denominator_ratios, expected);
  DenominatorAnalysis d = analyze_denominators(r);
  EXPECT_EQ(d.ratios, expected);
  EXPECT_EQ(d.signs, std::vector<int>(5, 1));
  EXPECT_EQ(d.denominators.front(), q - q.pow(2));
}

TEST(Synthesize, PipelinesAgree) {
  CoefficientTable t = generate_table(24);
  GuessReport andrews = synthesize_conjecture(GuessMode::andrews, 5, t);
  GuessReport ansatz = synthesize_conjecture(GuessMode::ansatz, 5, t);
  for (int a = 0; a <= 5; ++a) {
    for (int n = 2 * a; n <= 24; ++n) {
      if (n == 0) continue;
      const NRational& expr = std::get<RationalForm>(ansatz.terms[a].form).expr;
      ASSERT_TRUE(matches_at_node(expr, q_pow(static_cast<std::uint32_t>(n)), andrews.terms[a].value_at(n)))
          << "a=" << a << " n=" << n;
    }
  }
}

TEST(Synthesize, EveryTermHoldsOutAtLeastTwoRows) {
  GuessReport r = synthesize_conjecture(GuessMode::ansatz, 5, 24);
  for (const auto& term : r.terms) {
    ASSERT_TRUE(term.fit_degree.has_value());
    int first = std::max(1, 2 * term.a);
    int fitted_through = first + static_cast<int>(*term.fit_degree);
    EXPECT_GE(r.data_range.second - fitted_through, 2) << "a=" << term.a;
  }
}

TEST(Synthesize, RebuildRoundTrip) {
  for (GuessMode mode : {GuessMode::andrews, GuessMode::ansatz}) {
    GuessReport r = synthesize_conjecture(mode, 5, 24);
    for (int n = 1; n <= 24; ++n) {
      XQPoly expected = det_recurrence(n);
      XQPoly truncated;
      for (const auto& [a, c] : expected.coeffs())
        if (a <= 5) truncated += XQPoly::monomial(a, c);
      ASSERT_EQ(rebuild(r, n), truncated) << to_string(mode) << " n=" << n;
    }
  }
}

TEST(Synthesize, CorruptedEntryMakesBothPipelinesFail) {
  CoefficientTable bad = corrupted_table();
  try {
    andrews_guess(bad, 2);
    ADD_FAILURE() << "andrews pipeline accepted corrupted data";
  } catch (const DiscoveryError& e) {
    EXPECT_EQ(e.counterexample_n(), 12);
    EXPECT_NE(std::string(e.what()).find("no Gaussian fit"), std::string::npos);
  }
  try {
    ansatz_guess(bad, 2);
    ADD_FAILURE() << "ansatz pipeline accepted corrupted data";
  } catch (const DiscoveryError& e) {
    EXPECT_NE(std::string(e.what()).find("ansatz failed"), std::string::npos);
  }
  EXPECT_THROW(synthesize_conjecture(GuessMode::andrews, 5, bad), DiscoveryError);
  EXPECT_THROW(synthesize_conjecture(GuessMode::ansatz, 5, bad), DiscoveryError);
}

TEST(AnalyzeDenominators, RejectsWrongRoots) {
  GuessReport r = synthesize_conjecture(GuessMode::ansatz, 3, 24);
  auto& expr = std::get<RationalForm>(r.terms[2].form).expr;
  expr = expr * NRational(NPoly2::variable(kN) - NPoly2::variable(kNq, 9));
  EXPECT_THROW(analyze_denominators(r), DiscoveryError);
}

TEST(GuessReport, JsonRoundTrip) {
  for (GuessMode mode : {GuessMode::andrews, GuessMode::ansatz}) {
    GuessReport r = synthesize_conjecture(mode, 4, 20);
    Json j = to_json(r);
    EXPECT_EQ(j.at("mode"), to_string(mode));
    EXPECT_EQ(j.at("data_range"), Json::array({1, 20}));
    GuessReport back = guess_report_from_json(Json::parse(j.dump()));
    EXPECT_EQ(to_json(back), j);
    for (int n = 1; n <= 20; ++n) EXPECT_EQ(rebuild(back, n), rebuild(r, n));
  }
  EXPECT_EQ(parse_guess_mode("ansatz"), GuessMode::ansatz);
  EXPECT_THROW(parse_guess_mode("oracle"), std::invalid_argument);
}

}  // namespace
}  // namespace qetude
