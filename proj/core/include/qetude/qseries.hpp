#pragma once

#include <set>
#include <string>
#include <vector>

#include "qetude/series.hpp"
#include "qetude/xqpoly.hpp"

namespace qetude {

/// sum_a (-1)^a X^a q^(a(a-1)) / ((1-q)...(1-q^a)) through order q^K.
/// Terms with a(a-1) > K are skipped; each 1/(q;q)_a is expanded directly
/// (partitions into parts <= a), not via series_invert.
XSeries theorem1_truncated(unsigned order);

/// Substitutes X <- coeff * q^q_exponent and re-truncates at the same order.
RationalSeries substitute_x(const XSeries& series, const Rational& coeff, unsigned q_exponent);

/// The q-expansion of an XQPoly through order q^K, coefficient-wise in X.
XSeries to_xseries(const XQPoly& p, unsigned order);

/// prod over j >= 1 with (j mod modulus) in `residues` of 1/(1 - q^j), through
/// q^K. A residue equal to `modulus` selects multiples of the modulus.
/// Throws std::invalid_argument for residues outside [1, modulus].
RationalSeries rr_product_truncated(unsigned order, const std::set<int>& residues, int modulus);

/// Compositions (p_1, ..., p_k) of n with p_i - p_{i+1} >= r.
struct RPartitionSpec {
  int n = 1;
  int r = 0;
};

/// Throws std::invalid_argument for n < 1.
Integer count_r_partitions(RPartitionSpec spec);

/// count_r_partitions(n, r) for n = 1..count.
std::vector<Integer> sequence_rpartitions(int r, int count);

/// OEIS b-file text: one "n a(n)" line per term starting at `offset`.
std::string format_bfile(const std::vector<Integer>& terms, int offset = 1);

}  // namespace qetude
