#pragma once

#include "qetude/qpoly.hpp"
#include "qetude/ratfunc.hpp"
#include "qetude/xqpoly.hpp"

namespace qetude {

struct GaussianParams {
  int m = 0;
  int n = 0;
};

/// Gaussian polynomial GP(m, n) = prod_{i=1..n} (1 - q^(m+i)) / (1 - q^i).
///
/// Computed by exact division of the two products; the quotient is a
/// polynomial of degree m*n. For -n <= m <= -1 one numerator factor is
/// (1 - q^0) = 0 and the result is 0. Throws std::invalid_argument for n < 0
/// or m < -n ("out of supported range") and std::logic_error if the division
/// leaves a remainder.
QPoly gaussian_poly(int m, int n);
inline QPoly gaussian_poly(GaussianParams p) { return gaussian_poly(p.m, p.n); }

/// sum_{a=0}^{floor(n/2)} (-1)^a X^a q^(a(a-1)) GP(n-2a, a)
XQPoly theorem2_value(int n);

/// (-1)^a q^(a(a-1)) GP(n-2a, a): the closed-form coefficient of X^a in Q_n.
QPoly closed_form_coefficient(int a, int n);

/// The coefficient of X^a as a function of N = q^n, kept factored:
///   (-1)^a (N - q^a)(N - q^(a+1))...(N - q^(2a-1)) / (q^(a(a+1)/2) (q - 1)(q^2 - 1)...(q^a - 1))
/// which equals prod (N - q^j) / (q^(a(a+1)/2) (1 - q)...(1 - q^a)).
NRational coefficient_in_N(int a);

/// coefficient_in_N(a) at N = q^n equals closed_form_coefficient(a, n).
/// Precondition n >= 2a.
bool coefficient_consistency(int a, int n);

}  // namespace qetude
