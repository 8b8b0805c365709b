#include "qetude/xqpoly.hpp"

#include <algorithm>

namespace qetude {

XQPoly::XQPoly(const QPoly& constant) {
  if (!constant.is_zero()) coeffs_.emplace(0, constant);
}

XQPoly XQPoly::monomial(std::uint32_t x_degree, const QPoly& coeff) {
  XQPoly p;
  if (!coeff.is_zero()) p.coeffs_.emplace(x_degree, coeff);
  return p;
}

XQPoly XQPoly::from_coeffs(CoeffMap coeffs) {
  std::erase_if(coeffs, [](const auto& kv) { return kv.second.is_zero(); });
  XQPoly p;
  p.coeffs_ = std::move(coeffs);
  return p;
}

QPoly XQPoly::coefficient(std::uint32_t x_degree) const {
  auto it = coeffs_.find(x_degree);
  return it == coeffs_.end() ? QPoly{} : it->second;
}

int XQPoly::x_degree() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.rbegin()->first); }

XQPoly XQPoly::times(std::uint32_t x_degree, std::uint32_t q_degree, const Rational& c) const {
  XQPoly r;
  if (c == 0) return r;
  for (const auto& [a, poly] : coeffs_) r.coeffs_.emplace(a + x_degree, poly.times_monomial({q_degree}, c));
  return r;
}

XQPoly XQPoly::truncated(std::uint32_t max_q) const {
  CoeffMap out;
  for (const auto& [a, poly] : coeffs_) {
    std::vector<QPoly::TermT> kept;
    for (const auto& t : poly.terms()) {
      if (t.exp[0] <= max_q) kept.push_back(t);
    }
    out.emplace(a, QPoly::from_terms(std::move(kept)));
  }
  return from_coeffs(std::move(out));
}

bool XQPoly::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& kv) { return qetude::has_integer_coefficients(kv.second); });
}

XQPoly XQPoly::operator-() const {
  XQPoly r = *this;
  for (auto& [a, poly] : r.coeffs_) poly = -poly;
  return r;
}

XQPoly operator+(const XQPoly& a, const XQPoly& b) {
  XQPoly::CoeffMap out = a.coeffs_;
  for (const auto& [k, poly] : b.coeffs_) out[k] += poly;
  return XQPoly::from_coeffs(std::move(out));
}

XQPoly operator-(const XQPoly& a, const XQPoly& b) {
  XQPoly::CoeffMap out = a.coeffs_;
  for (const auto& [k, poly] : b.coeffs_) out[k] -= poly;
  return XQPoly::from_coeffs(std::move(out));
}

XQPoly operator*(const XQPoly& a, const XQPoly& b) {
  XQPoly::CoeffMap out;
  for (const auto& [i, p] : a.coeffs_) {
    for (const auto& [j, r] : b.coeffs_) out[i + j] += p * r;
  }
  return XQPoly::from_coeffs(std::move(out));
}

std::string to_string(const XQPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [a, poly] : p.coeffs()) {
    const bool negative = std::all_of(poly.terms().begin(), poly.terms().end(),
                                      [](const QPoly::TermT& t) { return t.coeff < 0; });
    const QPoly mag = negative ? -poly : poly;
    std::string xpart;
    if (a == 1) {
      xpart = "X";
    } else if (a > 1) {
      xpart = "X^" + std::to_string(a);
    }
    std::string body;
    if (mag.size() > 1) {
      body = "(" + to_compact_string(mag) + ")";
      if (!xpart.empty()) body += "*" + xpart;
    } else if (xpart.empty()) {
      body = to_compact_string(mag);
    } else if (mag == QPoly(1L)) {
      body = xpart;
    } else {
      body = to_compact_string(mag) + "*" + xpart;
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

}  // namespace qetude
