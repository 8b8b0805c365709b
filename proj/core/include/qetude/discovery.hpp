#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qetude/qpoly.hpp"
#include "qetude/ratfunc.hpp"
#include "qetude/serialize.hpp"
#include "qetude/xqpoly.hpp"

namespace qetude {

/// X-coefficients of Q_1..Q_n_max; row n holds floor(n/2)+1 entries.
struct CoefficientTable {
  int n_max = 0;
  std::vector<std::vector<QPoly>> rows;  ///< rows[n - 1]

  /// c_a(n); zero when a > floor(n/2). Throws std::out_of_range for n outside the table.
  QPoly coefficient(int n, int a) const;
};

CoefficientTable generate_table(int n_max);

/// GP(n + m_offset, n_param)
struct GaussianForm {
  int m_offset = 0;
  int n_param = 0;
};

/// A rational function of (N, q), N = q^n.
struct RationalForm {
  NRational expr;
};

/// Conjectured coefficient of X^a: sign * q^q_shift * form(n).
struct GuessTerm {
  int a = 0;
  int sign = 1;
  unsigned q_shift = 0;
  std::variant<GaussianForm, RationalForm> form;
  /// Degree in N accepted by the ansatz search; unset for Gaussian forms.
  std::optional<unsigned> fit_degree;

  /// The conjectured c_a(n). Throws std::domain_error if a rational form
  /// does not evaluate to a polynomial at N = q^n.
  QPoly value_at(int n) const;
};

enum class GuessMode { andrews, ansatz };

std::string to_string(GuessMode mode);
GuessMode parse_guess_mode(const std::string& text);

struct GuessReport {
  GuessMode mode = GuessMode::andrews;
  int a_max = 0;
  std::vector<GuessTerm> terms;  ///< sorted by a
  std::pair<int, int> data_range{1, 1};
  bool holdout_verified = false;
  /// Every term equals (-1)^a q^(a(a-1)) GP(n-2a, a) on all table rows.
  bool closed_form_consistent = false;
  std::optional<std::vector<QPoly>> denominator_ratios;  ///< d(a)/d(a-1), a = 2..a_max
  std::vector<int> denominator_signs;                     ///< s_a in C_a = s_a prod(N - q^j) / d(a), a = 1..a_max
};

/// A pipeline could not produce a conjecture consistent with the data.
class DiscoveryError : public std::runtime_error {
 public:
  DiscoveryError(const std::string& what, int counterexample_n)
      : std::runtime_error(what), counterexample_n_(counterexample_n) {}
  int counterexample_n() const { return counterexample_n_; }

 private:
  int counterexample_n_;
};

/// Recognises c_a(n) as sign * q^e * GP(n + offset, a) from the table rows
/// n >= 2a. The parameters are read off the first row n = 2a (m from
/// deg = m * a) and every later row is held out and checked. Throws
/// DiscoveryError("no Gaussian fit ...") with the first counterexample, or
/// std::invalid_argument when the table ends before n = 2a + 4.
GuessTerm andrews_guess(const CoefficientTable& table, int a);

/// Fits c_a(n) by a polynomial in N = q^n of degree 0, 1, 2, ... (capped at
/// a + 2) through consecutive rows starting at n = max(1, 2a). A degree is
/// accepted once the next two rows match, and every remaining row must match
/// too. Throws DiscoveryError("ansatz failed ...").
GuessTerm ansatz_guess(const CoefficientTable& table, int a);

struct DenominatorAnalysis {
  std::vector<QPoly> denominators;  ///< d(1)..d(a_max), lowest coefficient positive
  std::vector<int> signs;           ///< s_1..s_a_max
  std::vector<QPoly> ratios;        ///< d(a)/d(a-1) for a = 2..a_max
};

/// Strips the (N - q^j) roots of each ansatz term (j <= 2a+2; they must be
/// exactly a..2a-1), reduces the remaining q-only factor, and divides
/// consecutive denominators. Each ratio must be exact and equal q^a (1 - q^a).
/// Throws DiscoveryError("denominator pattern broken at a=...").
DenominatorAnalysis analyze_denominators(const GuessReport& report);

/// Runs one pipeline for a = 0..a_max over generate_table(n_max).
/// Precondition n_max >= 2 a_max + 6.
GuessReport synthesize_conjecture(GuessMode mode, int a_max, int n_max);

/// Same, over a caller-supplied table (used to inject corrupted data).
GuessReport synthesize_conjecture(GuessMode mode, int a_max, const CoefficientTable& table);

/// sum_{a <= min(a_max, n/2)} value_at(n) X^a
XQPoly rebuild(const GuessReport& report, int n);

Json to_json(const GuessReport& report);
GuessReport guess_report_from_json(const Json& j);

}  // namespace qetude
