#include "qetude/qpoly.hpp"

#include <stdexcept>

namespace qetude {

namespace {
constexpr std::array<std::string_view, 1> kQName{"q"};
}

QPoly qpochhammer(unsigned a) {
  QPoly result(1L);
  for (unsigned i = 1; i <= a; ++i) result *= QPoly(1L) - q_pow(i);
  return result;
}

std::pair<QPoly, QPoly> divmod(const QPoly& dividend, const QPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  QPoly quotient;
  QPoly rem = dividend;
  const auto dd = degree(divisor);
  const Rational& lead = divisor.leading().coeff;
  while (!rem.is_zero() && degree(rem) >= dd) {
    QPoly step = q_pow(degree(rem) - dd, rem.leading().coeff / lead);
    quotient += step;
    rem -= step * divisor;
  }
  return {quotient, rem};
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.leading().coeff);
}

bool has_integer_coefficients(const QPoly& p) {
  for (const auto& t : p.terms()) {
    if (!is_integer(t.coeff)) return false;
  }
  return true;
}

std::string to_string(const QPoly& p) { return format_poly(p, kQName, true); }
std::string to_compact_string(const QPoly& p) { return format_poly(p, kQName, false); }

}  // namespace qetude
