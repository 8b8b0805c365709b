#include "qetude/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include "qetude/cli/cache.hpp"
#include "qetude/cli/fixtures.hpp"
#include "qetude/cli/reproduce.hpp"
#include "qetude/closedform.hpp"
#include "qetude/discovery.hpp"
#include "qetude/expression.hpp"
#include "qetude/interpolate.hpp"
#include "qetude/lehmer.hpp"
#include "qetude/qseries.hpp"
#include "qetude/serialize.hpp"
#include "qetude/verifier.hpp"

namespace qetude::cli {

namespace {

// Bad input discovered after parsing; reported like a parse error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  int n = 0;
  std::string method = "recurrence";
  std::string mode;
  int a_max = 0;
  int n_max = 0;
  std::optional<int> numeric;
  std::optional<int> coefficient;
  std::optional<std::string> certificate;
  std::optional<int> solve_cap;
  int truncate = 0;
  std::string x = "symbolic";
  bool invert = false;
  int r = 0;
  int count = 0;
  int order = 0;
  std::optional<std::string> only;
  std::string id;
  bool online = false;
  std::string fixtures;
};

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::vector<std::string> integer_strings(const std::vector<Integer>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

std::filesystem::path fixture_dir(const Options& o) {
  return o.fixtures.empty() ? default_fixture_dir() : std::filesystem::path(o.fixtures);
}

// ---- det, closed-form -------------------------------------------------------

int emit_xqpoly(const XQPoly& value, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    print_json(out, to_json(value));
  } else {
    out << to_string(value) << '\n';
  }
  return kExitOk;
}

int cmd_det(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.method == "oracle") return emit_xqpoly(det_oracle(o.n), o, out);
  std::optional<ResultCache> cache = ResultCache::from_environment();
  return emit_xqpoly(det_recurrence_cached(o.n, cache ? &*cache : nullptr, err), o, out);
}

// ---- guess -------------------------------------------------------------------

std::string render_term(const GuessTerm& term) {
  std::ostringstream s;
  if (const auto* g = std::get_if<GaussianForm>(&term.form)) {
    if (term.a == 0) return "1";
    if (term.sign < 0) s << '-';
    if (term.q_shift > 0) s << "q^" << term.q_shift << ' ';
    s << "GP(n";
    if (g->m_offset != 0) s << std::showpos << g->m_offset << std::noshowpos;
    s << ", " << g->n_param << ')';
    return s.str();
  }
  const NRational& expr = std::get<RationalForm>(term.form).expr;
  TrialDivision split = trial_divide_numerator(expr, static_cast<unsigned>(2 * term.a + 2));
  NRational rest = split.remainder.tidied();
  std::string factors;
  for (unsigned j : split.roots) factors += j == 1 ? "(N - q)" : "(N - q^" + std::to_string(j) + ")";
  const NPoly2& num = rest.num();
  if (factors.empty() || !num.is_constant()) {
    s << factors << (factors.empty() ? "" : "*") << to_string(rest);
  } else {
    Rational c = num.constant_term();
    if (c == -1) s << '-';
    if (c != 1 && c != -1) s << to_string(c) << '*';
    s << factors << " / (" << format_poly(rest.den(), kNVars) << ')';
  }
  if (term.fit_degree) s << "   [degree " << *term.fit_degree << ']';
  return s.str();
}

int cmd_guess(const Options& o, std::ostream& out) {
  GuessReport report = synthesize_conjecture(parse_guess_mode(o.mode), o.a_max, o.n_max);
  if (o.format == "json") {
    print_json(out, to_json(report));
    return kExitOk;
  }
  out << "mode: " << to_string(report.mode) << '\n';
  out << "data: n = " << report.data_range.first << ".." << report.data_range.second << '\n';
  for (const auto& term : report.terms) out << "X^" << term.a << ": " << render_term(term) << '\n';
  out << "holdout verified: " << (report.holdout_verified ? "yes" : "no") << '\n';
  out << "closed form consistent: " << (report.closed_form_consistent ? "yes" : "no") << '\n';
  if (report.denominator_ratios && !report.denominator_ratios->empty()) {
    out << "d(a)/d(a-1), a = 2.." << report.a_max << ":";
    const char* sep = " ";
    for (const auto& r : *report.denominator_ratios) {
      out << sep << to_string(r);
      sep = ", ";
    }
    out << '\n';
  }
  return kExitOk;
}

// ---- verify ------------------------------------------------------------------

std::string replace_all(std::string text, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = text.find(from, pos)) != std::string::npos; pos += to.size()) {
    text.replace(pos, from.size(), to);
  }
  return text;
}

MultiRational parse_certificate(const std::string& text) {
  std::string s = text;
  for (const char* brace : {"q^{n}", "q^{a}"}) s = replace_all(s, brace, std::string("q^") + brace[3]);
  s = replace_all(s, "q^n", "N");
  s = replace_all(s, "q^a", "A");
  return parse_multirational(s);
}

void print_outcomes(const std::vector<CheckOutcome>& outcomes, std::ostream& out) {
  for (const auto& c : outcomes) {
    out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
    if (!c.pass && !c.counterexample.is_null()) {
      out << "  (counterexample: "
          << (c.counterexample.is_string() ? c.counterexample.get<std::string>() : c.counterexample.dump()) << ')';
    }
    out << '\n';
  }
}

int cmd_verify(Options o, std::ostream& out) {
  if (!o.numeric && !o.coefficient && !o.certificate && !o.solve_cap) {
    o.numeric = 40;
    o.coefficient = 8;
    o.solve_cap = 4;
  }
  std::vector<CheckOutcome> checks;
  bool ok = true;
  Json extra = Json::object();

  if (o.numeric) {
    if (*o.numeric < 3) throw UsageError("--numeric must be at least 3");
    auto add = [&](const std::string& name, const SequenceFn& fn) {
      NumericCheck r = check_recurrence_numeric(*o.numeric, fn);
      checks.push_back({name + ", n <= " + std::to_string(*o.numeric), r.ok,
                        r.first_failure ? Json(*r.first_failure) : Json(nullptr)});
      ok = ok && r.ok;
    };
    add("recurrence holds for det_recurrence", [](int n) { return det_recurrence(n); });
    add("recurrence holds for theorem2_value", [](int n) { return theorem2_value(n); });
  }
  if (o.coefficient) {
    if (*o.coefficient < 1) throw UsageError("--coefficient must be at least 1");
    for (int a = 1; a <= *o.coefficient; ++a) {
      bool pass = check_coefficient_identity(a);
      checks.push_back({"coefficient identity, a = " + std::to_string(a), pass, pass ? Json(nullptr) : Json(a)});
      ok = ok && pass;
    }
  }
  Recurrence lehmer = Recurrence::lehmer();
  if (o.certificate) {
    Certificate cert{parse_certificate(*o.certificate)};
    bool any = false;
    for (auto [orientation, label] : {std::pair{Orientation::forward, "forward, G(n,a+1) - G(n,a)"},
                                      std::pair{Orientation::backward, "backward, G(n,a) - G(n,a-1)"}}) {
      CertificateCheck r = check_certificate(lehmer, cert, orientation);
      checks.push_back({std::string("given certificate, ") + label, r.ok,
                        r.ok ? Json(nullptr) : Json(to_string(MultiRational(r.residual)))});
      any = any || r.ok;
    }
    extra["certificate"] = to_string(cert.value);
    extra["certificate_verifies"] = any;
    ok = ok && any;
  }
  if (o.solve_cap) {
    if (*o.solve_cap < 1) throw UsageError("--solve-certificate must be at least 1");
    std::string name = "certificate search, degree cap " + std::to_string(*o.solve_cap);
    try {
      Certificate cert = solve_certificate(lehmer, *o.solve_cap);
      bool pass = check_certificate(lehmer, cert).ok;
      checks.push_back({name, pass, nullptr});
      extra["solved_certificate"] = to_json(cert.value);
      extra["solved_certificate_text"] = to_string(cert.value);
      ok = ok && pass;
    } catch (const CertificateNotFound& e) {
      checks.push_back({name, false, Json(std::string(e.what()))});
      ok = false;
    }
  }

  if (o.format == "json") {
    Json j{{"checks", to_json(checks)}, {"pass", ok}};
    j.update(extra);
    print_json(out, j);
  } else {
    print_outcomes(checks, out);
    if (extra.contains("certificate")) {
      out << "given certificate: " << extra["certificate"].get<std::string>() << '\n';
      if (!extra["certificate_verifies"].get<bool>()) out << "given certificate verifies in neither orientation\n";
    }
    if (extra.contains("solved_certificate_text")) {
      out << "solved certificate (forward): " << extra["solved_certificate_text"].get<std::string>() << '\n';
    }
  }
  return ok ? kExitOk : kExitFailure;
}

// ---- series, sequence, rr-check -----------------------------------------------

XQPoly xseries_as_xqpoly(const XSeries& s) {
  XQPoly total;
  for (std::size_t k = 0; k <= s.order(); ++k) {
    for (const auto& t : s[k].terms()) total += XQPoly::monomial(t.exp[0], q_pow(static_cast<std::uint32_t>(k), t.coeff));
  }
  return total;
}

struct Specialization {
  Rational coeff;
  unsigned q_exponent;
};

std::optional<Specialization> specialization(const std::string& x) {
  if (x == "q") return Specialization{1, 1};
  if (x == "-q") return Specialization{-1, 1};
  if (x == "-1") return Specialization{-1, 0};
  if (x == "-q^2") return Specialization{-1, 2};
  return std::nullopt;
}

std::vector<Integer> integer_coefficients(const RationalSeries& s) {
  std::vector<Integer> out;
  for (const auto& c : s.coeffs()) {
    if (!is_integer(c)) throw std::domain_error("series coefficient " + to_string(c) + " is not an integer");
    out.push_back(c.get_num());
  }
  return out;
}

std::string order_term(unsigned order) { return "O(q^" + std::to_string(order + 1) + ")"; }

int cmd_series(const Options& o, std::ostream& out) {
  unsigned order = static_cast<unsigned>(o.truncate);
  XSeries limit = theorem1_truncated(order);
  std::optional<Specialization> spec = specialization(o.x);
  if (!spec) {
    if (o.invert) throw UsageError("--invert needs a specialised --x");
    if (o.format == "bfile") throw UsageError("--format bfile needs a specialised --x");
    XQPoly value = xseries_as_xqpoly(limit);
    if (o.format == "json") {
      print_json(out, Json{{"x", o.x}, {"order", order}, {"value", to_json(value)}});
    } else {
      out << (value.is_zero() ? std::string("0") : to_string(value)) << " + " << order_term(order) << '\n';
    }
    return kExitOk;
  }
  RationalSeries s = substitute_x(limit, spec->coeff, spec->q_exponent);
  if (o.invert) s = series_invert(s);
  if (o.format == "bfile") {
    out << format_bfile(integer_coefficients(s), 0);
  } else if (o.format == "json") {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
    print_json(out, Json{{"x", o.x}, {"order", order}, {"inverted", o.invert}, {"coefficients", coeffs}});
  } else {
    out << to_string(s) << '\n';
  }
  return kExitOk;
}

int cmd_sequence(const Options& o, std::ostream& out) {
  std::vector<Integer> terms = sequence_rpartitions(o.r, o.count);
  if (o.format == "bfile") {
    out << format_bfile(terms, 1);
  } else if (o.format == "json") {
    print_json(out, Json{{"r", o.r}, {"offset", 1}, {"terms", integer_strings(terms)}});
  } else {
    std::string line;
    for (const auto& t : terms) line += (line.empty() ? "" : ", ") + t.get_str();
    out << line << '\n';
  }
  return kExitOk;
}

CheckOutcome series_match(const std::string& name, const RationalSeries& a, const RationalSeries& b) {
  for (std::size_t k = 0; k <= std::min(a.order(), b.order()); ++k) {
    if (a[k] != b[k]) {
      return {name, false, Json{{"q_exponent", k}, {"left", to_string(a[k])}, {"right", to_string(b[k])}}};
    }
  }
  return {name, true, nullptr};
}

int cmd_rr_check(const Options& o, std::ostream& out) {
  unsigned order = static_cast<unsigned>(o.order);
  XSeries limit = theorem1_truncated(order);
  RationalSeries minus_q = substitute_x(limit, -1, 1);
  RationalSeries minus_q2 = substitute_x(limit, -1, 2);
  RationalSeries minus_one = substitute_x(limit, -1, 0);

  RationalSeries gap_two(order);
  gap_two[0] = 1;
  if (order > 0) {
    std::vector<Integer> counts = sequence_rpartitions(2, static_cast<int>(order));
    for (unsigned k = 1; k <= order; ++k) gap_two[k] = counts[k - 1];
  }

  std::vector<CheckOutcome> checks{
      series_match("X=-q series equals prod 1/(1-q^j), j = 1, 4 mod 5", minus_q, rr_product_truncated(order, {1, 4}, 5)),
      series_match("X=-q series equals 1 + gap-2 partition counts", minus_q, gap_two),
      series_match("X=-q^2 series equals prod 1/(1-q^j), j = 2, 3 mod 5", minus_q2,
                   rr_product_truncated(order, {2, 3}, 5)),
  };
  bool ok = std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.pass; });

  if (o.format == "json") {
    auto coeffs = [](const RationalSeries& s) {
      Json arr = Json::array();
      for (const auto& c : s.coeffs()) arr.push_back(to_string(c));
      return arr;
    };
    print_json(out, Json{{"order", order},
                         {"checks", to_json(checks)},
                         {"pass", ok},
                         {"series", {{"X=-1", coeffs(minus_one)}, {"X=-q^2", coeffs(minus_q2)}}}});
  } else {
    print_outcomes(checks, out);
    out << "X=-1:   " << to_string(minus_one) << '\n';
    out << "X=-q^2: " << to_string(minus_q2) << '\n';
  }
  return ok ? kExitOk : kExitFailure;
}

// ---- reproduce, fetch ----------------------------------------------------------

int cmd_reproduce(const Options& o, std::ostream& out, std::ostream& err) {
  ReproduceOptions options;
  options.fixture_dir = fixture_dir(o);
  std::vector<ReproduceItem> items = run_reproduce(o.only, options);
  auto failed = std::find_if(items.begin(), items.end(), [](const ReproduceItem& i) { return !i.pass; });
  if (o.format == "json") {
    print_json(out, to_json(items));
  } else {
    std::size_t width = 0;
    for (const auto& i : items) width = std::max(width, i.name.size());
    for (const auto& i : items) {
      out << (i.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << i.name << "  "
          << i.title << '\n';
      if (!i.pass) out << "      " << i.detail << '\n';
    }
  }
  if (failed != items.end()) {
    err << "first mismatch: " << failed->name << ": " << failed->detail << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_fetch(const Options& o, std::ostream& out, std::ostream& err) {
  FixtureSequence seq = fetch_bfile(o.id, o.online, fixture_dir(o), err);
  if (o.format == "json") {
    print_json(out, Json{{"id", seq.id}, {"offset", seq.offset}, {"terms", integer_strings(seq.values)}});
  } else {
    out << format_bfile(seq.values, static_cast<int>(seq.offset));
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with the Lehmer tridiagonal determinants", "qetude"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for all commands");

  auto format_option = [&](CLI::App* sub, std::initializer_list<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::vector<std::string>(allowed)));
  };

  auto* det = app.add_subcommand("det", "Determinant Q_n(X, q)");
  det->add_option("--n", o.n, "Matrix size")->required()->check(CLI::Range(1, std::numeric_limits<int>::max()));
  det->add_option("--method", o.method, "recurrence or oracle")->check(CLI::IsMember({"recurrence", "oracle"}));
  format_option(det, {"text", "json"});

  auto* closed = app.add_subcommand("closed-form", "Sum of Gaussian polynomials equal to Q_n");
  closed->add_option("--n", o.n, "Matrix size")->required()->check(CLI::Range(1, std::numeric_limits<int>::max()));
  format_option(closed, {"text", "json"});

  auto* guess = app.add_subcommand("guess", "Rediscover the coefficient of each X^a from data");
  guess->add_option("--mode", o.mode, "andrews or ansatz")->required()->check(CLI::IsMember({"andrews", "ansatz"}));
  guess->add_option("--amax", o.a_max, "Largest X-degree")->required()->check(CLI::Range(0, std::numeric_limits<int>::max()));
  guess->add_option("--nmax", o.n_max, "Table size")->required()->check(CLI::Range(1, std::numeric_limits<int>::max()));
  format_option(guess, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "Check the recurrence, coefficient identities and certificates");
  verify->add_option("--numeric", o.numeric, "Check the recurrence numerically up to this n");
  verify->add_option("--coefficient", o.coefficient, "Check the per-X^a identity for a = 1..AMAX");
  auto* cert = verify->add_option("--certificate", o.certificate, "Certificate to check, in q, X, q^n, q^a");
  auto* solve = verify->add_option("--solve-certificate", o.solve_cap, "Search a certificate up to this degree");
  cert->excludes(solve);
  format_option(verify, {"text", "json"});

  auto* series = app.add_subcommand("series", "Truncated limit series, optionally specialised");
  series->add_option("--truncate", o.truncate, "Highest power of q kept")->required()->check(CLI::Range(0, std::numeric_limits<int>::max()));
  series->add_option("--x", o.x, "Value substituted for X")->check(CLI::IsMember({"q", "-q", "-1", "-q^2", "symbolic"}));
  series->add_flag("--invert", o.invert, "Print the reciprocal series");
  format_option(series, {"text", "json", "bfile"});

  auto* sequence = app.add_subcommand("sequence", "Counts of r-partitions of 1..COUNT");
  sequence->add_option("--r", o.r, "Minimum difference between consecutive parts")->required();
  sequence->add_option("--count", o.count, "Number of terms")->required()->check(CLI::Range(1, std::numeric_limits<int>::max()));
  format_option(sequence, {"text", "json", "bfile"});

  auto* rr = app.add_subcommand("rr-check", "Compare specialisations with Rogers-Ramanujan products");
  rr->add_option("--order", o.order, "Highest power of q kept")->required()->check(CLI::Range(0, std::numeric_limits<int>::max()));
  format_option(rr, {"text", "json"});

  auto* reproduce = app.add_subcommand("reproduce", "Regenerate the published tables and compare");
  std::vector<std::string> items = reproduce_item_names();
  reproduce->add_option("--only", o.only, "Run one item")->check(CLI::IsMember(items));
  reproduce->add_option("--fixtures", o.fixtures, "Fixture directory");
  format_option(reproduce, {"text", "json"});

  auto* fetch = app.add_subcommand("fetch", "Print an OEIS b-file, from the vendored copy or the web");
  fetch->add_option("--id", o.id, "Sequence id, e.g. A003116")->required();
  fetch->add_flag("--online", o.online, "Download from oeis.org and refresh the vendored copy");
  fetch->add_option("--fixtures", o.fixtures, "Fixture directory");
  format_option(fetch, {"text", "bfile", "json"});

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-') {
    auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* s) { return s->get_name() == args.front(); });
    if (!known) {
      err << "usage error: unknown command '" << args.front() << "'\n";
      err << "run 'qetude --help' for the list of commands\n";
      return kExitUsage;
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    if (app.get_subcommands().empty()) {
      err << "run 'qetude --help' for the list of commands\n";
    } else {
      err << "run 'qetude " << app.get_subcommands().front()->get_name() << " --help' for its options\n";
    }
    return kExitUsage;
  }

  try {
    if (det->parsed()) return cmd_det(o, out, err);
    if (closed->parsed()) return emit_xqpoly(theorem2_value(o.n), o, out);
    if (guess->parsed()) return cmd_guess(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (series->parsed()) return cmd_series(o, out);
    if (sequence->parsed()) return cmd_sequence(o, out);
    if (rr->parsed()) return cmd_rr_check(o, out);
    if (reproduce->parsed()) return cmd_reproduce(o, out, err);
    if (fetch->parsed()) return cmd_fetch(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace qetude::cli
