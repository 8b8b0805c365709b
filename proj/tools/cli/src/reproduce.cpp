#include "qetude/cli/reproduce.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qetude/cli/fixtures.hpp"
#include "qetude/closedform.hpp"
#include "qetude/discovery.hpp"
#include "qetude/expression.hpp"
#include "qetude/qseries.hpp"
#include "qetude/series.hpp"

namespace qetude::cli {

namespace {

// Displays as published, LaTeX markup included.
constexpr std::string_view kX1List =
    R"([0,-1,-1-q,-1-q-{q}^{2},-1-q-{q}^{2}-{q}^{3},-1-q-{q}^{2}-{q}^{3}-{q}^{4},-1-q-{q}^{2}-{q}^{3}-{q}^{4}-{q}^{5}, -1-q-{q}^{2}-{q}^{3}-{q}^{4}-{q}^{5}-q^{6}])";

constexpr std::string_view kX2List =
    R"([0,0,0,{q}^{2},{q}^{2}+{q}^{3}+{q}^{4},{q}^{2}+{q}^{3}+2\,{q}^{4}+{q}^{5}+{q}^{6},{q}^{2}+{q}^{3}+2\,{q}^{4}+2\,{q}^{5}+2\,{q}^{6}+{q}^{7}+{q}^{8},
{q}^{2}+{q}^{3}+2\,{q}^{4}+2\,{q}^{5}+3\,{q}^{6}+2\,{q}^{7}+2\,{q}^{8}+{q}^{10}+{q}^{9},{q}^{2}+{q}^{3}+2\,{q}^{4}+2\,{q}^{5}
+3\,{q}^{6}+3\,{q}^{7}+3\,{q}^{8}
+{q}^{11}+2\,{q}^{10}+2\,{q}^{9}+{q}^{12},
{q}^{2}+{q}^{3}+2\,{q}^{4}+2\,{q}^{5}+3\,{q}^{6}+3\,{q}^{7}+4\,{q}^{8}+2\,{q}^{11}+3\,{q}^{10}+3\,{q}^{9}+2\,{q}^{12}+{q
}^{13}+{q}^{14}])";

constexpr std::string_view kGaussianConjectures[] = {
    "-GP(n-2,1)", "q^2 GP(n-4,2)", "-q^6 GP(n-6,3)", "q^12 GP(n-8,4)", "-q^20 GP(n-10,5)",
};

constexpr std::string_view kRationalBullets[] = {
    "(N-q)/(q*(1-q))",
    "(N-q^2)*(N-q^3)/(q^3*(1+q)*(1-q)^2)",
    "-(N-q^3)*(N-q^4)*(N-q^5)/(q^6*(1+q)*(q^2+q+1)*(q-1)^3)",
    "(N-q^4)*(N-q^5)*(N-q^6)*(N-q^7)/(q^10*(q^2+1)*(q-1)^4*(1+q)^2*(q^2+q+1))",
    "-(N-q^5)*(N-q^6)*(N-q^7)*(N-q^8)*(N-q^9)/(q^15*(q-1)^5*(q^4+q^3+q^2+q+1)*(1+q)^2*(q^2+q+1)*(q^2+1))",
};

constexpr std::string_view kDenominators =
    R"([-q \left( q-1 \right) ,{q}^{3} \left( 1+q \right)  \left( q-1 \right) ^{2},-{q}^{6} \left( 1+q \right)  \left( {q}^{2}+q+1 \right)  \left( q-1 \right) ^{3}
,{q}^{10} \left( {q}^{2}+1 \right)  \left( q-1 \right) ^{4} \left( 1+q \right) ^{2} \left( {q}^{2}+q+1 \right)
,-{q}^{15} \left( q-1 \right) ^{5} \left( {q}
^{4}+{q}^{3}+{q}^{2}+q+1 \right)  \left( 1+q \right) ^{2} \left( {q}^{2}+q+1 \right)  \left( {q}^{2}+1 \right) ])";

constexpr std::string_view kRatios = R"([{q}^{2}-{q}^{4},{q}^{3}-{q}^{6},-{q}^{8}+{q}^{4},{q}^{5}-{q}^{10}])";

constexpr std::string_view kTwentyTerms =
    "1, 2, 4, 7, 13, 23, 41, 72, 127, 222, 388, 677, 1179, 2052, 3569, 6203, 10778, 18722, 32513, 56455";

// Splits "[a, b, ...]" at depth-zero commas after dropping \left, \right and thin spaces.
std::vector<std::string> split_list(std::string_view text) {
  std::string body;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 2, "\\,") == 0) {
      body += ' ';
      ++i;
    } else if (text.compare(i, 6, "\\left(") == 0) {
      body += '(';
      i += 5;
    } else if (text.compare(i, 7, "\\right)") == 0) {
      body += ')';
      i += 6;
    } else {
      body += text[i];
    }
  }
  std::size_t open = body.find('[');
  std::size_t close = body.rfind(']');
  if (open != std::string::npos && close != std::string::npos) body = body.substr(open + 1, close - open - 1);
  std::vector<std::string> parts(1);
  int depth = 0;
  for (char c : body) {
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      parts.emplace_back();
    } else {
      parts.back() += c;
    }
  }
  return parts;
}

std::vector<QPoly> parse_qpoly_list(std::string_view text) {
  std::vector<QPoly> out;
  for (const std::string& part : split_list(text)) out.push_back(parse_qpoly(part));
  return out;
}

ReproduceItem coefficient_list(const CoefficientTable& table, int a, std::string_view display, const char* name,
                               const char* title) {
  ReproduceItem item{name, title, true, {}};
  std::vector<QPoly> expected = parse_qpoly_list(display);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    int n = static_cast<int>(i) + 1;
    std::string want = to_string(expected[i]);
    std::string got = to_string(table.coefficient(n, a));
    if (want != got) {
      item.pass = false;
      item.detail = "n=" + std::to_string(n) + ": expected " + want + ", got " + got;
      return item;
    }
  }
  return item;
}

std::string render_gaussian_term(const GuessTerm& term) {
  const auto* form = std::get_if<GaussianForm>(&term.form);
  if (form == nullptr) return "<not a Gaussian form>";
  std::ostringstream out;
  if (term.sign < 0) out << '-';
  if (term.q_shift > 0) out << "q^" << term.q_shift << ' ';
  out << "GP(n";
  if (form->m_offset < 0) out << form->m_offset;
  if (form->m_offset > 0) out << '+' << form->m_offset;
  out << ',' << form->n_param << ')';
  return out.str();
}

ReproduceItem gaussian_conjectures(const CoefficientTable& table, const ReproduceOptions& options) {
  ReproduceItem item{"gaussian", "Gaussian conjectures for X^1..X^5", true, {}};
  auto fail = [&](std::string detail) {
    item.pass = false;
    item.detail = std::move(detail);
    return item;
  };
  GuessReport report;
  try {
    report = synthesize_conjecture(GuessMode::andrews, 5, table);
  } catch (const DiscoveryError& e) {
    return fail(e.what());
  }
  if (!report.holdout_verified) return fail("holdout rows not verified");
  auto gaussian = options.gaussian ? options.gaussian : [](int m, int n) { return gaussian_poly(m, n); };
  for (int a = 1; a <= 5; ++a) {
    const GuessTerm& term = report.terms.at(static_cast<std::size_t>(a));
    std::string got = render_gaussian_term(term);
    if (got != kGaussianConjectures[a - 1]) {
      return fail("a=" + std::to_string(a) + ": expected " + std::string(kGaussianConjectures[a - 1]) + ", got " + got);
    }
    const auto& form = std::get<GaussianForm>(term.form);
    for (int n = 2 * a; n <= table.n_max; ++n) {
      QPoly value = gaussian(n + form.m_offset, form.n_param).times_monomial({term.q_shift}).scaled(term.sign);
      if (!(value == table.coefficient(n, a))) {
        return fail(got + " at n=" + std::to_string(n) + ": gives " + to_string(value) + ", table has " +
                    to_string(table.coefficient(n, a)));
      }
    }
  }
  return item;
}

ReproduceItem rational_bullets(const GuessReport& report) {
  ReproduceItem item{"rational", "Rational forms in N = q^n for X^1..X^5", true, {}};
  for (int a = 1; a <= 5; ++a) {
    const auto* form = std::get_if<RationalForm>(&report.terms.at(static_cast<std::size_t>(a)).form);
    NRational expected = parse_nrational(kRationalBullets[a - 1]);
    if (form == nullptr || !rational_equal(form->expr, expected)) {
      item.pass = false;
      item.detail = "a=" + std::to_string(a) + ": expected " + std::string(kRationalBullets[a - 1]) + ", got " +
                    (form ? to_string(form->expr) : std::string("<no rational form>"));
      return item;
    }
  }
  return item;
}

ReproduceItem denominator_ratios(const GuessReport& report) {
  ReproduceItem item{"ratios", "Denominators d(a) and ratios d(a)/d(a-1)", true, {}};
  DenominatorAnalysis analysis;
  try {
    analysis = analyze_denominators(report);
  } catch (const DiscoveryError& e) {
    item.pass = false;
    item.detail = e.what();
    return item;
  }
  auto compare = [&](const std::vector<QPoly>& want, const std::vector<QPoly>& got, const char* what, int first_a) {
    if (want.size() != got.size()) {
      item.pass = false;
      item.detail = std::string(what) + ": expected " + std::to_string(want.size()) + " entries, got " +
                    std::to_string(got.size());
      return false;
    }
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (!(want[i] == got[i])) {
        item.pass = false;
        item.detail = std::string(what) + " a=" + std::to_string(first_a + static_cast<int>(i)) + ": expected " +
                      to_string(want[i]) + ", got " + to_string(got[i]);
        return false;
      }
    }
    return true;
  };
  if (compare(parse_qpoly_list(kDenominators), analysis.denominators, "d(a)", 1)) {
    compare(parse_qpoly_list(kRatios), analysis.ratios, "ratio", 2);
  }
  return item;
}

std::vector<Integer> twenty_terms() {
  std::vector<Integer> out;
  std::istringstream in{std::string(kTwentyTerms)};
  std::string token;
  while (std::getline(in, token, ',')) out.emplace_back(token.substr(token.find_first_not_of(' ')));
  return out;
}

std::string join(const std::vector<Integer>& values) {
  std::string out;
  for (const Integer& v : values) out += (out.empty() ? "" : ", ") + v.get_str();
  return out;
}

ReproduceItem twenty_term_sequence() {
  ReproduceItem item{"sequence", "(-1)-partitions and the reciprocal series, 20 terms", true, {}};
  std::vector<Integer> expected = twenty_terms();
  std::vector<Integer> counted = sequence_rpartitions(-1, 20);
  if (join(counted) != kTwentyTerms) {
    item.pass = false;
    item.detail = "(-1)-partition counts: " + join(counted);
    return item;
  }
  RationalSeries inverse = series_invert(substitute_x(theorem1_truncated(20), 1, 1));
  for (std::size_t k = 1; k <= 20; ++k) {
    if (inverse[k] != Rational(expected[k - 1])) {
      item.pass = false;
      item.detail = "reciprocal series at q^" + std::to_string(k) + ": expected " + expected[k - 1].get_str() +
                    ", got " + to_string(inverse[k]);
      return item;
    }
  }
  return item;
}

ReproduceItem oeis_fixtures(const ReproduceOptions& options) {
  ReproduceItem item{"oeis", "Vendored A003116 and A039924 b-files", true, {}};
  auto fail = [&](std::string detail) {
    item.pass = false;
    item.detail = std::move(detail);
    return item;
  };
  std::filesystem::path dir = options.fixture_dir.empty() ? default_fixture_dir() : options.fixture_dir;
  try {
    auto index = load_fixture_index(dir);
    FixtureSequence a003116 = load_fixture(dir, "A003116");
    std::vector<Integer> expected = twenty_terms();
    for (long n = 1; n <= 20; ++n) {
      if (a003116.at(n) != expected[static_cast<std::size_t>(n - 1)]) {
        return fail("A003116 term " + std::to_string(n) + " is " + a003116.at(n).get_str());
      }
    }
    constexpr unsigned kOrder = 60;
    RationalSeries limit = substitute_x(theorem1_truncated(kOrder), 1, 1);
    if (auto diff = compare_with_series(a003116, index.at("A003116"), series_invert(limit))) return fail(*diff);
    FixtureSequence a039924 = load_fixture(dir, "A039924");
    if (auto diff = compare_with_series(a039924, index.at("A039924"), limit)) return fail(*diff);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return item;
}

}  // namespace

std::vector<std::string> reproduce_item_names() {
  return {"x1-list", "x2-list", "gaussian", "rational", "ratios", "sequence", "oeis"};
}

std::vector<ReproduceItem> run_reproduce(const std::optional<std::string>& only, const ReproduceOptions& options) {
  auto names = reproduce_item_names();
  if (only && std::find(names.begin(), names.end(), *only) == names.end()) {
    std::string known;
    for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown reproduce item '" + *only + "' (known: " + known + ")");
  }
  auto wanted = [&](const char* name) { return !only || *only == name; };

  std::vector<ReproduceItem> items;
  std::optional<CoefficientTable> table;
  auto table_to = [&](int n_max) -> const CoefficientTable& {
    if (!table || table->n_max < n_max) table = generate_table(n_max);
    return *table;
  };
  if (wanted("x1-list")) items.push_back(coefficient_list(table_to(24), 1, kX1List, "x1-list", "X^1 coefficients, n = 1..8"));
  if (wanted("x2-list")) items.push_back(coefficient_list(table_to(24), 2, kX2List, "x2-list", "X^2 coefficients, n = 1..10"));
  if (wanted("gaussian")) {
    CoefficientTable first20 = table_to(24);
    first20.rows.resize(20);
    first20.n_max = 20;
    items.push_back(gaussian_conjectures(first20, options));
  }
  if (wanted("rational") || wanted("ratios")) {
    std::optional<GuessReport> report;
    std::string error;
    try {
      report = synthesize_conjecture(GuessMode::ansatz, 5, table_to(24));
    } catch (const DiscoveryError& e) {
      error = e.what();
    }
    if (wanted("rational")) {
      items.push_back(report ? rational_bullets(*report)
                             : ReproduceItem{"rational", "Rational forms in N = q^n for X^1..X^5", false, error});
    }
    if (wanted("ratios")) {
      items.push_back(report ? denominator_ratios(*report)
                             : ReproduceItem{"ratios", "Denominators d(a) and ratios d(a)/d(a-1)", false, error});
    }
  }
  if (wanted("sequence")) items.push_back(twenty_term_sequence());
  if (wanted("oeis")) items.push_back(oeis_fixtures(options));
  return items;
}

Json to_json(const std::vector<ReproduceItem>& items) {
  Json arr = Json::array();
  for (const auto& item : items) {
    Json j{{"item", item.name}, {"title", item.title}, {"pass", item.pass}};
    j["mismatch"] = item.pass ? Json(nullptr) : Json(item.detail);
    arr.push_back(j);
  }
  return Json{{"items", arr}};
}

}  // namespace qetude::cli
