#pragma once

#include <vector>

#include "qetude/sparse_poly.hpp"
#include "qetude/xqpoly.hpp"

namespace qetude {

/// Polynomials in Y and P, read as Y = sqrt(X) and P = sqrt(q), so that the
/// half-integer exponents of the matrix entries stay integral.
using HalfPoly = SparsePoly<2>;
inline constexpr std::size_t kY = 0;
inline constexpr std::size_t kP = 1;

/// The n x n tridiagonal matrix with unit diagonal and Y * P^(i-1) on both
/// off-diagonals at position (i, i+1) and (i+1, i), 1-based.
struct LehmerMatrix {
  unsigned n = 0;
  std::vector<std::vector<HalfPoly>> entries;  ///< row-major, 0-based

  const HalfPoly& at(unsigned row, unsigned col) const { return entries.at(row).at(col); }
};

/// Throws std::invalid_argument for n < 1.
LehmerMatrix build_matrix(int n);

/// Q_1..Q_n from Q_1 = 1, Q_2 = 1 - X, Q_m = Q_{m-1} - X q^(m-2) Q_{m-2}.
/// Throws std::invalid_argument for n < 1.
std::vector<XQPoly> det_recurrence_prefix(int n);

/// Q_n = det M(n), by the three-term recurrence.
XQPoly det_recurrence(int n);

/// det M(n) by fraction-free (Bareiss) elimination over Q[Y, P], followed by
/// the reduction Y^2 -> X, P^2 -> q. Shares nothing with det_recurrence.
/// Throws std::logic_error if an odd exponent survives or a Bareiss division
/// is inexact; either indicates a bug rather than bad input.
XQPoly det_oracle(int n);

}  // namespace qetude
