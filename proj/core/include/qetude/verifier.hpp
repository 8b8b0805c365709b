#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qetude/ratfunc.hpp"
#include "qetude/serialize.hpp"
#include "qetude/xqpoly.hpp"

namespace qetude {

/// The operator c2 S^2 + c1 S + c0 on sequences in n, where S is the forward
/// shift and the coefficients are polynomials in (q, X, N) with N = q^n.
struct Recurrence {
  MultiPoly c0;
  MultiPoly c1;
  MultiPoly c2;

  /// Throws std::invalid_argument when c2 is zero or a coefficient mentions A.
  Recurrence(MultiPoly c0, MultiPoly c1, MultiPoly c2);

  /// S^2 - S + X N, the operator satisfied by Q_n.
  static Recurrence lehmer();

  Recurrence scaled(const Rational& factor) const;
};

/// Rational function R(q, X, N, A), A = q^a, with G(n, a) = R * F(n, a).
struct Certificate {
  MultiRational value;
};

/// Which difference in a the certificate telescopes to:
/// forward:  G(n, a+1) - G(n, a)
/// backward: G(n, a) - G(n, a-1)
enum class Orientation { forward, backward };

struct NumericCheck {
  bool ok = false;
  std::optional<int> first_failure;  ///< n at which the first mismatch was seen
};

using SequenceFn = std::function<XQPoly(int)>;

/// values(1) = 1, values(2) = 1 - X and
/// values(n) - values(n-1) + X q^(n-2) values(n-2) = 0 for 3 <= n <= n_max.
NumericCheck check_recurrence_numeric(int n_max, const SequenceFn& values);

/// c2(q^n) values(n+2) + c1(q^n) values(n+1) + c0(q^n) values(n) = 0 for
/// 1 <= n <= n_max - 2; a failure is reported at index n + 2.
NumericCheck check_operator_numeric(const Recurrence& rec, int n_max, const SequenceFn& values);

/// C_a(N) = C_a(N/q) - (N/q^2) C_{a-1}(N/q^2) as rational functions of (N, q),
/// with C = coefficient_in_N unless another family is supplied.
bool check_coefficient_identity(int a);
bool check_coefficient_identity(int a, const std::function<NRational(int)>& coefficient);

struct CertificateCheck {
  bool ok = false;
  MultiPoly residual;  ///< cleared numerator of (left side - right side); zero iff ok
};

/// Tests, after dividing by F(n, a) = (-1)^a X^a q^(a(a-1)) GP(n-2a, a),
///   c2 r2 + c1 r1 + c0 = R(N, qA) rA - R(N, A)          (forward)
///   c2 r2 + c1 r1 + c0 = R(N, A) - R(N, A/q) / rA(A/q)   (backward)
/// where r1, r2, rA are the shift ratios of F in n and a.
CertificateCheck check_certificate(const Recurrence& rec, const Certificate& cert,
                                   Orientation orientation = Orientation::forward);

class CertificateNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Searches R = P(A) / D(A) with D a product of a subset of
/// (A^2 - qN), (A^2 - q^2 N), (A - N), (1 - qA) and P of degree <= degree_cap
/// in A with coefficients in Q(q, X, N), solving the forward identity as a
/// linear system by fraction-free elimination. The result always passes
/// check_certificate. Throws CertificateNotFound("certificate not found at
/// degree cap") otherwise.
Certificate solve_certificate(const Recurrence& rec, int degree_cap);

/// Shift ratios of F, cleared to polynomial quotients in (q, X, N, A).
MultiRational shift_ratio_n1();
MultiRational shift_ratio_n2();
MultiRational shift_ratio_a();

/// One line of a verification report.
struct CheckOutcome {
  std::string name;
  bool pass = false;
  Json counterexample;  ///< null when passing; an n or a residual polynomial otherwise
};

Json to_json(const std::vector<CheckOutcome>& outcomes);

}  // namespace qetude
