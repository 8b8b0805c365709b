#include "qetude/interpolate.hpp"

#include <stdexcept>
#include <string>

namespace qetude {

NPoly2 lift_q(const QPoly& p) {
  std::vector<NPoly2::TermT> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({{0, t.exp[0]}, t.coeff});
  return NPoly2::from_terms(std::move(terms));
}

QPoly drop_n(const NPoly2& p) {
  std::vector<QPoly::TermT> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    if (t.exp[kN] != 0) throw std::invalid_argument("polynomial depends on N");
    terms.push_back({{t.exp[kNq]}, t.coeff});
  }
  return QPoly::from_terms(std::move(terms));
}

QPoly evaluate_at_node(const NPoly2& p, const QPoly& node) {
  // Horner in N over the coefficient polynomials in q.
  QPoly acc;
  const std::uint32_t top = p.degree(kN);
  std::vector<std::vector<QPoly::TermT>> by_degree(top + 1);
  for (const auto& t : p.terms()) by_degree[t.exp[kN]].push_back({{t.exp[kNq]}, t.coeff});
  for (std::int64_t d = top; d >= 0; --d) {
    acc = acc * node + QPoly::from_terms(std::move(by_degree[d]));
  }
  return acc;
}

bool matches_at_node(const NRational& r, const QPoly& node, const QPoly& value) {
  return evaluate_at_node(r.num(), node) == value * evaluate_at_node(r.den(), node);
}

NRational interpolate_in_N(std::span<const InterpolationPoint> points, unsigned degree) {
  const std::size_t m = std::size_t{degree} + 1;
  if (points.size() < m) {
    throw std::invalid_argument("interpolation of degree " + std::to_string(degree) + " needs " +
                                std::to_string(m) + " points, got " + std::to_string(points.size()));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].node == points[j].node) {
        throw std::invalid_argument("duplicate interpolation node " + to_string(points[i].node));
      }
    }
  }

  // diff[i][j] = x_j - x_i for i < j
  std::vector<std::vector<QPoly>> diff(m, std::vector<QPoly>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) diff[i][j] = points[j].node - points[i].node;
  }

  QPoly vandermonde(1L);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) vandermonde *= diff[i][j];
  }

  const NPoly2 n_var = NPoly2::variable(kN);
  NPoly2 numerator;
  for (std::size_t i = 0; i < m; ++i) {
    // V * w_i = (-1)^(m-1-i) * prod over pairs not touching i.
    QPoly weight((m - 1 - i) % 2 == 0 ? 1L : -1L);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t l = k + 1; l < m; ++l) {
        if (k != i && l != i) weight *= diff[k][l];
      }
    }
    NPoly2 basis = lift_q(weight * points[i].value);
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) basis *= n_var - lift_q(points[j].node);
    }
    numerator += basis;
  }

  NRational fit(numerator, lift_q(vandermonde));
  for (std::size_t i = m; i < points.size(); ++i) {
    if (!matches_at_node(fit, points[i].node, points[i].value)) {
      throw std::invalid_argument("point " + std::to_string(i) + " does not lie on the degree-" +
                                  std::to_string(degree) + " interpolant");
    }
  }
  return fit;
}

TrialDivision trial_divide_numerator(const NRational& r, unsigned j_max) {
  TrialDivision out;
  NPoly2 num = r.num();
  for (unsigned j = 0; j <= j_max; ++j) {
    const NPoly2 factor = NPoly2::variable(kN) - NPoly2::monomial({0, j});
    while (!num.is_zero() && num.degree(kN) > 0) {
      auto quotient = num.divide_exact(factor);
      if (!quotient) break;
      num = std::move(*quotient);
      out.roots.push_back(j);
    }
  }
  out.remainder = NRational(num, r.den());
  return out;
}

}  // namespace qetude
