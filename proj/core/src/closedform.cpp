#include "qetude/closedform.hpp"

#include <stdexcept>
#include <string>

#include "qetude/interpolate.hpp"

namespace qetude {

QPoly gaussian_poly(int m, int n) {
  if (n < 0) throw std::invalid_argument("GP(m, n) needs n >= 0");
  if (m < -n) {
    throw std::invalid_argument("GP(" + std::to_string(m) + ", " + std::to_string(n) + ") out of supported range");
  }
  if (m < 0) return QPoly{};
  QPoly numerator(1L);
  for (int i = 1; i <= n; ++i) numerator *= QPoly(1L) - q_pow(static_cast<std::uint32_t>(m + i));
  auto quotient = numerator.divide_exact(qpochhammer(static_cast<unsigned>(n)));
  if (!quotient) {
    throw std::logic_error("GP(" + std::to_string(m) + ", " + std::to_string(n) + ") left a nonzero remainder");
  }
  return *quotient;
}

QPoly closed_form_coefficient(int a, int n) {
  if (a < 0) throw std::invalid_argument("X-degree must be nonnegative");
  const auto shift = static_cast<std::uint32_t>(a * (a - 1));
  return gaussian_poly(n - 2 * a, a).times_monomial({shift}, a % 2 == 0 ? 1 : -1);
}

XQPoly theorem2_value(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive, got " + std::to_string(n));
  XQPoly::CoeffMap coeffs;
  for (int a = 0; a <= n / 2; ++a) coeffs[static_cast<std::uint32_t>(a)] = closed_form_coefficient(a, n);
  return XQPoly::from_coeffs(std::move(coeffs));
}

NRational coefficient_in_N(int a) {
  if (a < 0) throw std::invalid_argument("X-degree must be nonnegative");
  NPoly2 numerator(a % 2 == 0 ? 1L : -1L);
  for (int j = a; j <= 2 * a - 1; ++j) {
    numerator *= NPoly2::variable(kN) - NPoly2::monomial({0, static_cast<std::uint32_t>(j)});
  }
  NPoly2 denominator = NPoly2::monomial({0, static_cast<std::uint32_t>(a * (a + 1) / 2)});
  for (int i = 1; i <= a; ++i) {
    denominator *= NPoly2::monomial({0, static_cast<std::uint32_t>(i)}) - NPoly2(1L);
  }
  return {numerator, denominator};
}

bool coefficient_consistency(int a, int n) {
  if (n < 2 * a) throw std::invalid_argument("coefficient_consistency needs n >= 2a");
  return matches_at_node(coefficient_in_N(a), q_pow(static_cast<std::uint32_t>(n)), closed_form_coefficient(a, n));
}

}  // namespace qetude
