#include "qetude/lehmer.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace qetude {

namespace {

void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive, got " + std::to_string(n));
}

XQPoly reduce_half_exponents(const HalfPoly& p) {
  XQPoly::CoeffMap coeffs;
  for (const auto& t : p.terms()) {
    if (t.exp[kY] % 2 != 0 || t.exp[kP] % 2 != 0) {
      throw std::logic_error("odd exponent in determinant: Y^" + std::to_string(t.exp[kY]) + " P^" +
                             std::to_string(t.exp[kP]));
    }
    coeffs[t.exp[kY] / 2] += q_pow(t.exp[kP] / 2, t.coeff);
  }
  return XQPoly::from_coeffs(std::move(coeffs));
}

}  // namespace

LehmerMatrix build_matrix(int n) {
  require_positive(n);
  LehmerMatrix m;
  m.n = static_cast<unsigned>(n);
  m.entries.assign(m.n, std::vector<HalfPoly>(m.n));
  for (unsigned i = 0; i < m.n; ++i) {
    m.entries[i][i] = HalfPoly(1L);
    if (i + 1 < m.n) {
      // 1-based row i+1 carries sqrt(X) q^(i/2) on the superdiagonal; the
      // mirrored subdiagonal entry sits in the next row.
      const HalfPoly off = HalfPoly::monomial({1, i});
      m.entries[i][i + 1] = off;
      m.entries[i + 1][i] = off;
    }
  }
  return m;
}

std::vector<XQPoly> det_recurrence_prefix(int n) {
  require_positive(n);
  std::vector<XQPoly> q;
  q.reserve(static_cast<std::size_t>(n));
  q.emplace_back(QPoly(1L));
  if (n >= 2) q.push_back(XQPoly(QPoly(1L)) - XQPoly::monomial(1, QPoly(1L)));
  for (int m = 3; m <= n; ++m) {
    const XQPoly& prev = q[static_cast<std::size_t>(m - 2)];
    const XQPoly& prev2 = q[static_cast<std::size_t>(m - 3)];
    q.push_back(prev - prev2.times(1, static_cast<std::uint32_t>(m - 2)));
  }
  return q;
}

XQPoly det_recurrence(int n) { return std::move(det_recurrence_prefix(n).back()); }

XQPoly det_oracle(int n) {
  LehmerMatrix matrix = build_matrix(n);
  auto& a = matrix.entries;
  const unsigned size = matrix.n;
  HalfPoly previous(1L);
  bool negate = false;
  for (unsigned k = 0; k + 1 < size; ++k) {
    if (a[k][k].is_zero()) {
      unsigned swap_row = k + 1;
      while (swap_row < size && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == size) return XQPoly{};
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    const HalfPoly& pivot = a[k][k];
    for (unsigned i = k + 1; i < size; ++i) {
      for (unsigned j = k + 1; j < size; ++j) {
        HalfPoly cross = pivot * a[i][j] - a[i][k] * a[k][j];
        auto quotient = cross.divide_exact(previous);
        if (!quotient) throw std::logic_error("inexact Bareiss division at step " + std::to_string(k));
        a[i][j] = std::move(*quotient);
      }
      a[i][k] = HalfPoly{};
    }
    previous = pivot;
  }
  HalfPoly det = a[size - 1][size - 1];
  if (negate) det = -det;
  return reduce_half_exponents(det);
}

}  // namespace qetude
