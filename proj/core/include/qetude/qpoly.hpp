#pragma once

#include <string>
#include <utility>

#include "qetude/sparse_poly.hpp"

namespace qetude {

/// Univariate polynomial in q. The same representation also serves as a
/// polynomial in X where a series coefficient needs one (see XPoly).
using QPoly = SparsePoly<1>;
using XPoly = SparsePoly<1>;

/// c * q^e
inline QPoly q_pow(std::uint32_t e, const Rational& c = 1) { return QPoly::monomial({e}, c); }

inline std::uint32_t degree(const QPoly& p) { return p.degree(0); }
inline std::uint32_t low_degree(const QPoly& p) { return p.min_degree(0); }
inline Rational coefficient(const QPoly& p, std::uint32_t e) { return p.coefficient({e}); }

/// (1-q)(1-q^2)...(1-q^a); 1 when a == 0.
QPoly qpochhammer(unsigned a);

/// Long division: returns (quotient, remainder) with deg(remainder) < deg(divisor).
std::pair<QPoly, QPoly> divmod(const QPoly& dividend, const QPoly& divisor);

/// Monic greatest common divisor over Q; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);

/// Every coefficient an integer.
bool has_integer_coefficients(const QPoly& p);

std::string to_string(const QPoly& p);
std::string to_compact_string(const QPoly& p);

}  // namespace qetude
