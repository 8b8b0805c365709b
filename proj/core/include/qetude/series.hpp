#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qetude/qpoly.hpp"

namespace qetude {

/// Power series in q truncated at order K: holds the exact coefficients of
/// q^0..q^K. Binary operations truncate to the smaller of the two orders.
template <typename Coeff>
class QSeries {
 public:
  explicit QSeries(std::size_t order) : coeffs_(order + 1) {}
  explicit QSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  const Coeff& operator[](std::size_t i) const { return coeffs_.at(i); }
  Coeff& operator[](std::size_t i) { return coeffs_.at(i); }

  QSeries truncated(std::size_t order) const {
    return QSeries(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1));
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }
  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
      if (a.coeffs_[i] == Coeff{}) continue;
      for (std::size_t j = 0; i + j <= r.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }
  friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Coeff> coeffs_;
};

using RationalSeries = QSeries<Rational>;
/// Series whose q^i coefficient is a polynomial in X.
using XSeries = QSeries<XPoly>;

/// t with s * t = 1 mod q^(K+1). Throws std::domain_error("non-invertible
/// series") when the constant term is zero.
RationalSeries series_invert(const RationalSeries& s);

RationalSeries truncate_to_series(const QPoly& p, std::size_t order);

/// "1 + q + 2*q^2 + O(q^3)"
std::string to_string(const RationalSeries& s);

}  // namespace qetude
