#include "qetude/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qetude {

XSeries theorem1_truncated(unsigned order) {
  XSeries sum(order);
  for (unsigned a = 0;; ++a) {
    const unsigned shift = a == 0 ? 0 : a * (a - 1);
    if (shift > order) break;
    const unsigned room = order - shift;
    // 1/(q;q)_a through q^room: partitions into parts of size at most a.
    std::vector<Integer> inverse(room + 1);
    inverse[0] = 1;
    for (unsigned part = 1; part <= a; ++part) {
      for (unsigned k = part; k <= room; ++k) inverse[k] += inverse[k - part];
    }
    const Rational sign = a % 2 == 0 ? 1 : -1;
    for (unsigned k = 0; k <= room; ++k) {
      if (inverse[k] == 0) continue;
      sum[shift + k] += XPoly::monomial({a}, sign * Rational(inverse[k]));
    }
  }
  return sum;
}

RationalSeries substitute_x(const XSeries& series, const Rational& coeff, unsigned q_exponent) {
  RationalSeries out(series.order());
  for (std::size_t i = 0; i <= series.order(); ++i) {
    for (const auto& t : series[i].terms()) {
      const std::uint64_t target = i + std::uint64_t{q_exponent} * t.exp[0];
      if (target > series.order()) continue;
      Rational power = 1;
      for (std::uint32_t k = 0; k < t.exp[0]; ++k) power *= coeff;
      out[target] += t.coeff * power;
    }
  }
  return out;
}

XSeries to_xseries(const XQPoly& p, unsigned order) {
  XSeries out(order);
  for (const auto& [a, poly] : p.coeffs()) {
    for (const auto& t : poly.terms()) {
      if (t.exp[0] <= order) out[t.exp[0]] += XPoly::monomial({a}, t.coeff);
    }
  }
  return out;
}

RationalSeries rr_product_truncated(unsigned order, const std::set<int>& residues, int modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  for (int r : residues) {
    if (r < 1 || r > modulus) throw std::invalid_argument("residue " + std::to_string(r) + " outside [1, modulus]");
  }
  std::vector<Integer> counts(order + 1);
  counts[0] = 1;
  for (unsigned part = 1; part <= order; ++part) {
    const int residue = static_cast<int>(part % static_cast<unsigned>(modulus));
    if (!residues.contains(residue == 0 ? modulus : residue)) continue;
    for (unsigned k = part; k <= order; ++k) counts[k] += counts[k - part];
  }
  RationalSeries out(order);
  for (unsigned k = 0; k <= order; ++k) out[k] = counts[k];
  return out;
}

Integer count_r_partitions(RPartitionSpec spec) {
  if (spec.n < 1) throw std::invalid_argument("r-partitions need n >= 1, got " + std::to_string(spec.n));
  const auto n = static_cast<std::size_t>(spec.n);
  // ways[rem][cap]: completions of a remaining sum `rem` whose next part may
  // be at most `cap` (cap <= rem). Either the next part is below cap, or it
  // equals cap and the one after is bounded by cap - r.
  std::vector<std::vector<Integer>> ways(n + 1);
  for (std::size_t rem = 0; rem <= n; ++rem) {
    ways[rem].resize(rem + 1);
    ways[rem][0] = rem == 0 ? 1 : 0;
    for (std::size_t cap = 1; cap <= rem; ++cap) {
      const std::size_t left = rem - cap;
      const std::int64_t next = static_cast<std::int64_t>(cap) - spec.r;
      const auto next_cap = static_cast<std::size_t>(std::clamp<std::int64_t>(next, 0, static_cast<std::int64_t>(left)));
      ways[rem][cap] = ways[rem][cap - 1] + ways[left][next_cap];
    }
  }
  return ways[n][n];
}

std::vector<Integer> sequence_rpartitions(int r, int count) {
  if (count < 1) throw std::invalid_argument("count must be positive");
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int n = 1; n <= count; ++n) out.push_back(count_r_partitions({n, r}));
  return out;
}

std::string format_bfile(const std::vector<Integer>& terms, int offset) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out += std::to_string(offset + static_cast<int>(i)) + " " + terms[i].get_str() + "\n";
  }
  return out;
}

}  // namespace qetude
