#include "qetude/discovery.hpp"

#include <algorithm>
#include <string>

#include "qetude/closedform.hpp"
#include "qetude/interpolate.hpp"
#include "qetude/lehmer.hpp"

namespace qetude {

namespace {

constexpr int kHoldout = 2;

std::string at(int a, int n) { return " (a=" + std::to_string(a) + ", n=" + std::to_string(n) + ")"; }

int first_row(int a) { return std::max(1, 2 * a); }

// Sign shared by every coefficient, or 0 if they disagree.
int common_sign(const QPoly& p) {
  const bool all_pos = std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.coeff > 0; });
  const bool all_neg = std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.coeff < 0; });
  return all_pos ? 1 : (all_neg ? -1 : 0);
}

// Rewrites an ansatz fit as prod (N - q^j) * c / D with c/D reduced by a
// univariate GCD, when that shape applies; otherwise returns the fit as is.
NRational factored_form(const NRational& fit, int a) {
  const TrialDivision split = trial_divide_numerator(fit, static_cast<unsigned>(2 * a + 2));
  if (split.remainder.num().degree(kN) != 0 || split.remainder.den().degree(kN) != 0) return fit;
  const QPoly num = drop_n(split.remainder.num());
  const QPoly den = drop_n(split.remainder.den());
  const QPoly g = gcd(num, den);
  QPoly reduced_num = *num.divide_exact(g);
  QPoly reduced_den = *den.divide_exact(g);
  // Integer-normalise: make the denominator's lowest coefficient +1.
  const Rational scale = 1 / reduced_den.terms().front().coeff;
  reduced_num = reduced_num.scaled(scale);
  reduced_den = reduced_den.scaled(scale);
  NPoly2 product = lift_q(reduced_num);
  for (unsigned j : split.roots) product *= NPoly2::variable(kN) - NPoly2::monomial({0, j});
  NRational candidate(product, lift_q(reduced_den));
  return rational_equal(candidate, fit) ? candidate : fit;
}

}  // namespace

QPoly CoefficientTable::coefficient(int n, int a) const {
  if (n < 1 || n > n_max) throw std::out_of_range("row " + std::to_string(n) + " not in table");
  const auto& row = rows[static_cast<std::size_t>(n - 1)];
  if (a < 0 || static_cast<std::size_t>(a) >= row.size()) return QPoly{};
  return row[static_cast<std::size_t>(a)];
}

CoefficientTable generate_table(int n_max) {
  if (n_max < 1) throw std::invalid_argument("table needs n_max >= 1");
  CoefficientTable table;
  table.n_max = n_max;
  for (const XQPoly& q : det_recurrence_prefix(n_max)) {
    std::vector<QPoly> row(static_cast<std::size_t>(q.x_degree() + 1));
    for (const auto& [a, poly] : q.coeffs()) row[a] = poly;
    table.rows.push_back(std::move(row));
  }
  return table;
}

QPoly GuessTerm::value_at(int n) const {
  if (const auto* g = std::get_if<GaussianForm>(&form)) {
    return gaussian_poly(n + g->m_offset, g->n_param).times_monomial({q_shift}, sign);
  }
  const NRational& expr = std::get<RationalForm>(form).expr;
  const QPoly node = q_pow(static_cast<std::uint32_t>(n));
  auto value = evaluate_at_node(expr.num(), node).divide_exact(evaluate_at_node(expr.den(), node));
  if (!value) throw std::domain_error("rational form is not a polynomial at n=" + std::to_string(n));
  return value->times_monomial({q_shift}, sign);
}

std::string to_string(GuessMode mode) { return mode == GuessMode::andrews ? "andrews" : "ansatz"; }

GuessMode parse_guess_mode(const std::string& text) {
  if (text == "andrews") return GuessMode::andrews;
  if (text == "ansatz") return GuessMode::ansatz;
  throw std::invalid_argument("unknown guess mode '" + text + "'");
}

GuessTerm andrews_guess(const CoefficientTable& table, int a) {
  if (a < 0) throw std::invalid_argument("X-degree must be nonnegative");
  const int start = first_row(a);
  if (table.n_max < 2 * a + 4) {
    throw std::invalid_argument("andrews_guess(a=" + std::to_string(a) + ") needs rows up to n=" +
                                std::to_string(2 * a + 4));
  }
  GuessTerm term;
  term.a = a;
  term.form = GaussianForm{0, a};
  if (a == 0) {
    for (int n = start; n <= table.n_max; ++n) {
      if (table.coefficient(n, 0) != QPoly(1L)) throw DiscoveryError("no Gaussian fit" + at(a, n), n);
    }
    return term;
  }

  bool fixed = false;
  for (int n = start; n <= table.n_max; ++n) {
    const QPoly c = table.coefficient(n, a);
    const int sign = common_sign(c);
    if (c.is_zero() || sign == 0) throw DiscoveryError("no Gaussian fit: mixed signs" + at(a, n), n);
    const unsigned shift = low_degree(c);
    const QPoly p = *c.divide_exact(q_pow(shift, sign));
    const unsigned deg = degree(p);
    if (deg % static_cast<unsigned>(a) != 0) throw DiscoveryError("no Gaussian fit: degree" + at(a, n), n);
    const int m = static_cast<int>(deg) / a;
    if (p != gaussian_poly(m, a)) throw DiscoveryError("no Gaussian fit: not GP(m, a)" + at(a, n), n);
    if (!fixed) {
      term.sign = sign;
      term.q_shift = shift;
      term.form = GaussianForm{m - n, a};
      fixed = true;
    } else if (sign != term.sign || shift != term.q_shift || m - n != std::get<GaussianForm>(term.form).m_offset) {
      throw DiscoveryError("no Gaussian fit: parameters drift" + at(a, n), n);
    }
  }
  return term;
}

GuessTerm ansatz_guess(const CoefficientTable& table, int a) {
  if (a < 0) throw std::invalid_argument("X-degree must be nonnegative");
  const int start = first_row(a);
  const int cap = a + 2;
  int counterexample = start;
  for (int d = 0; d <= cap; ++d) {
    const int window_end = start + d;
    if (window_end + kHoldout > table.n_max) break;
    std::vector<InterpolationPoint> points;
    for (int n = start; n <= window_end; ++n) {
      points.push_back({q_pow(static_cast<std::uint32_t>(n)), table.coefficient(n, a)});
    }
    const NRational fit = interpolate_in_N(points, static_cast<unsigned>(d));
    bool ok = true;
    for (int n = window_end + 1; n <= table.n_max; ++n) {
      if (!matches_at_node(fit, q_pow(static_cast<std::uint32_t>(n)), table.coefficient(n, a))) {
        counterexample = n;
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    GuessTerm term;
    term.a = a;
    term.form = RationalForm{factored_form(fit, a)};
    term.fit_degree = static_cast<unsigned>(d);
    return term;
  }
  throw DiscoveryError("ansatz failed for a=" + std::to_string(a) + " up to degree " + std::to_string(cap) +
                           "; last mismatch at n=" + std::to_string(counterexample),
                       counterexample);
}

DenominatorAnalysis analyze_denominators(const GuessReport& report) {
  if (report.mode != GuessMode::ansatz) throw std::invalid_argument("denominator analysis needs an ansatz report");
  DenominatorAnalysis out;
  QPoly previous(1L);
  for (int a = 1; a <= report.a_max; ++a) {
    const auto broken = [a](const std::string& why) {
      return DiscoveryError("denominator pattern broken at a=" + std::to_string(a) + ": " + why, a);
    };
    const auto it = std::find_if(report.terms.begin(), report.terms.end(), [a](const GuessTerm& t) { return t.a == a; });
    if (it == report.terms.end() || !std::holds_alternative<RationalForm>(it->form)) throw broken("no rational term");
    const NRational& expr = std::get<RationalForm>(it->form).expr;

    const TrialDivision split = trial_divide_numerator(expr, static_cast<unsigned>(2 * a + 2));
    std::vector<unsigned> expected;
    for (int j = a; j <= 2 * a - 1; ++j) expected.push_back(static_cast<unsigned>(j));
    if (split.roots != expected) throw broken("numerator roots differ from a..2a-1");
    if (split.remainder.num().degree(kN) != 0 || split.remainder.den().degree(kN) != 0) {
      throw broken("remainder still depends on N");
    }
    const QPoly num = drop_n(split.remainder.num());
    const QPoly den = drop_n(split.remainder.den());
    const QPoly g = gcd(num, den);
    const QPoly reduced_num = *num.divide_exact(g);
    if (!reduced_num.is_constant()) throw broken("numerator does not reduce to a constant");
    QPoly d = den.divide_exact(g)->scaled(1 / reduced_num.constant_term());
    const int sign = d.terms().front().coeff > 0 ? 1 : -1;
    d = d.scaled(sign);

    if (a >= 2) {
      auto ratio = d.divide_exact(previous);
      if (!ratio) throw broken("d(a)/d(a-1) is not a polynomial");
      const auto ua = static_cast<std::uint32_t>(a);
      if (*ratio != q_pow(ua) - q_pow(2 * ua)) throw broken("ratio " + to_string(*ratio) + " is not q^a(1-q^a)");
      out.ratios.push_back(*ratio);
    }
    out.denominators.push_back(d);
    out.signs.push_back(sign);
    previous = d;
  }
  return out;
}

GuessReport synthesize_conjecture(GuessMode mode, int a_max, const CoefficientTable& table) {
  if (a_max < 0) throw std::invalid_argument("a_max must be nonnegative");
  if (table.n_max < 2 * a_max + 6) {
    throw std::invalid_argument("n_max must be at least 2*a_max + 6 = " + std::to_string(2 * a_max + 6));
  }
  GuessReport report;
  report.mode = mode;
  report.a_max = a_max;
  report.data_range = {1, table.n_max};
  for (int a = 0; a <= a_max; ++a) {
    report.terms.push_back(mode == GuessMode::andrews ? andrews_guess(table, a) : ansatz_guess(table, a));
  }
  // Each guess raises unless it matched at least kHoldout rows past its window.
  report.holdout_verified = true;

  report.closed_form_consistent = true;
  for (const GuessTerm& term : report.terms) {
    for (int n = first_row(term.a); n <= table.n_max && report.closed_form_consistent; ++n) {
      report.closed_form_consistent = term.value_at(n) == closed_form_coefficient(term.a, n);
    }
  }

  if (mode == GuessMode::ansatz && a_max >= 1) {
    DenominatorAnalysis analysis = analyze_denominators(report);
    report.denominator_ratios = std::move(analysis.ratios);
    report.denominator_signs = std::move(analysis.signs);
  }
  return report;
}

GuessReport synthesize_conjecture(GuessMode mode, int a_max, int n_max) {
  if (n_max < 2 * a_max + 6) {
    throw std::invalid_argument("n_max must be at least 2*a_max + 6 = " + std::to_string(2 * a_max + 6));
  }
  return synthesize_conjecture(mode, a_max, generate_table(n_max));
}

XQPoly rebuild(const GuessReport& report, int n) {
  XQPoly::CoeffMap coeffs;
  for (const GuessTerm& term : report.terms) {
    if (term.a <= n / 2) coeffs[static_cast<std::uint32_t>(term.a)] = term.value_at(n);
  }
  return XQPoly::from_coeffs(std::move(coeffs));
}

Json to_json(const GuessReport& report) {
  Json terms = Json::array();
  for (const GuessTerm& term : report.terms) {
    Json t{{"a", term.a}};
    if (const auto* g = std::get_if<GaussianForm>(&term.form)) {
      t["sign"] = term.sign;
      t["q_shift"] = term.q_shift;
      t["gaussian"] = Json{{"m_offset", g->m_offset}, {"n_param", g->n_param}};
    } else {
      t["rational"] = to_json(std::get<RationalForm>(term.form).expr);
      if (term.fit_degree) t["fit_degree"] = *term.fit_degree;
    }
    terms.push_back(std::move(t));
  }
  Json out{{"mode", to_string(report.mode)},
           {"a_max", report.a_max},
           {"data_range", Json::array({report.data_range.first, report.data_range.second})},
           {"holdout_verified", report.holdout_verified},
           {"closed_form_consistent", report.closed_form_consistent},
           {"terms", std::move(terms)}};
  if (report.denominator_ratios) {
    Json ratios = Json::array();
    for (const QPoly& r : *report.denominator_ratios) ratios.push_back(to_json(r));
    out["denominator_ratios"] = std::move(ratios);
    out["denominator_signs"] = report.denominator_signs;
  }
  return out;
}

GuessReport guess_report_from_json(const Json& j) {
  try {
    GuessReport report;
    report.mode = parse_guess_mode(j.at("mode").get<std::string>());
    report.a_max = j.at("a_max").get<int>();
    report.data_range = {j.at("data_range").at(0).get<int>(), j.at("data_range").at(1).get<int>()};
    report.holdout_verified = j.at("holdout_verified").get<bool>();
    report.closed_form_consistent = j.value("closed_form_consistent", false);
    for (const Json& t : j.at("terms")) {
      GuessTerm term;
      term.a = t.at("a").get<int>();
      if (t.contains("gaussian")) {
        term.sign = t.at("sign").get<int>();
        term.q_shift = t.at("q_shift").get<unsigned>();
        term.form = GaussianForm{t.at("gaussian").at("m_offset").get<int>(), t.at("gaussian").at("n_param").get<int>()};
      } else {
        term.form = RationalForm{rational_function_from_json<2>(t.at("rational"))};
        if (t.contains("fit_degree")) term.fit_degree = t.at("fit_degree").get<unsigned>();
      }
      report.terms.push_back(std::move(term));
    }
    if (j.contains("denominator_ratios")) {
      std::vector<QPoly> ratios;
      for (const Json& r : j.at("denominator_ratios")) ratios.push_back(qpoly_from_json(r));
      report.denominator_ratios = std::move(ratios);
      report.denominator_signs = j.value("denominator_signs", std::vector<int>{});
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed guess report: ") + e.what());
  }
}

}  // namespace qetude
