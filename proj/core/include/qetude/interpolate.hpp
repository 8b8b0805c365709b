#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qetude/qpoly.hpp"
#include "qetude/ratfunc.hpp"

namespace qetude {

struct InterpolationPoint {
  QPoly node;   ///< value of N, normally q^n
  QPoly value;  ///< data at that node
};

/// Embeds a polynomial in q into the (N, q) ring.
NPoly2 lift_q(const QPoly& p);

/// The q-only part of an NPoly2. Throws std::invalid_argument if N occurs.
QPoly drop_n(const NPoly2& p);

/// p(N = node, q)
QPoly evaluate_at_node(const NPoly2& p, const QPoly& node);

/// True iff r(N = node) == value, tested as num(node) == value * den(node).
bool matches_at_node(const NRational& r, const QPoly& node, const QPoly& value);

/// The polynomial of degree <= `degree` in N, with coefficients rational in
/// q, through the first degree+1 points, written in Lagrange form over the
/// Vandermonde denominator prod_{i<j} (x_j - x_i). Any further points must
/// lie on it. Throws std::invalid_argument for duplicate nodes, too few
/// points, or extra points off the curve.
NRational interpolate_in_N(std::span<const InterpolationPoint> points, unsigned degree);

struct TrialDivision {
  std::vector<unsigned> roots;  ///< j with (N - q^j) divided out, sorted, with multiplicity
  NRational remainder;
};

/// Divides the numerator by (N - q^j), j = 0..j_max, as often as each
/// division is exact.
TrialDivision trial_divide_numerator(const NRational& r, unsigned j_max);

}  // namespace qetude
