#include "qetude/series.hpp"

namespace qetude {

RationalSeries series_invert(const RationalSeries& s) {
  if (s[0] == 0) throw std::domain_error("non-invertible series");
  RationalSeries t(s.order());
  const Rational inv0 = 1 / s[0];
  t[0] = inv0;
  for (std::size_t k = 1; k <= s.order(); ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += s[i] * t[k - i];
    t[k] = -acc * inv0;
  }
  return t;
}

RationalSeries truncate_to_series(const QPoly& p, std::size_t order) {
  RationalSeries s(order);
  for (const auto& t : p.terms()) {
    if (t.exp[0] <= order) s[t.exp[0]] = t.coeff;
  }
  return s;
}

std::string to_string(const RationalSeries& s) {
  std::vector<QPoly::TermT> terms;
  for (std::size_t i = 0; i <= s.order(); ++i) terms.push_back({{static_cast<std::uint32_t>(i)}, s[i]});
  const QPoly p = QPoly::from_terms(std::move(terms));
  const std::string big_o = "O(q^" + std::to_string(s.order() + 1) + ")";
  if (p.is_zero()) return big_o;
  return to_string(p) + " + " + big_o;
}

}  // namespace qetude
