#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qetude/qpoly.hpp"

namespace qetude {

/// Polynomial in X whose coefficients are polynomials in q, stored as a map
/// from X-degree to a nonzero QPoly.
class XQPoly {
 public:
  using CoeffMap = std::map<std::uint32_t, QPoly>;

  XQPoly() = default;
  XQPoly(const QPoly& constant);  // NOLINT(google-explicit-constructor)

  static XQPoly monomial(std::uint32_t x_degree, const QPoly& coeff);
  static XQPoly from_coeffs(CoeffMap coeffs);

  const CoeffMap& coeffs() const { return coeffs_; }
  QPoly coefficient(std::uint32_t x_degree) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int x_degree() const;

  /// this * c * X^x_degree * q^q_degree
  XQPoly times(std::uint32_t x_degree, std::uint32_t q_degree, const Rational& c = 1) const;

  /// Drops every q-monomial of exponent above max_q.
  XQPoly truncated(std::uint32_t max_q) const;

  bool has_integer_coefficients() const;

  XQPoly operator-() const;
  friend XQPoly operator+(const XQPoly& a, const XQPoly& b);
  friend XQPoly operator-(const XQPoly& a, const XQPoly& b);
  friend XQPoly operator*(const XQPoly& a, const XQPoly& b);
  XQPoly& operator+=(const XQPoly& o) { return *this = *this + o; }
  XQPoly& operator-=(const XQPoly& o) { return *this = *this - o; }
  friend bool operator==(const XQPoly& a, const XQPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  CoeffMap coeffs_;
};

/// Canonical text, ascending in X, e.g. "1 - (1+q+q^2)*X + q^2*X^2".
/// A coefficient whose terms are all negative has its sign pulled out; a
/// multi-term coefficient is parenthesised in compact form.
std::string to_string(const XQPoly& p);

}  // namespace qetude
