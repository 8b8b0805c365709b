#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "qetude/sparse_poly.hpp"

namespace qetude {

/// Quotient of two sparse polynomials. There is no canonical form: nothing is
/// ever cancelled by a GCD, and equality is decided by cross-multiplication.
template <std::size_t Vars>
class RationalFunction {
 public:
  using Poly = SparsePoly<Vars>;

  RationalFunction() : den_(1L) {}
  RationalFunction(const Poly& num) : num_(num), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const { return {-num_, den_}; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  RationalFunction pow(int k) const {
    if (k >= 0) return {num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k))};
    if (is_zero()) throw std::domain_error("negative power of zero");
    return {den_.pow(static_cast<unsigned>(-k)), num_.pow(static_cast<unsigned>(-k))};
  }

  /// Folds a constant denominator, or one that divides the numerator
  /// exactly, into the numerator. Never changes the value.
  RationalFunction tidied() const {
    if (den_.is_constant()) return {num_.scaled(1 / den_.constant_term()), Poly(1L)};
    if (auto q = num_.divide_exact(den_)) return {*q, Poly(1L)};
    return *this;
  }

  /// Numerator when the value is a polynomial (exact division), else nullopt.
  std::optional<Poly> as_polynomial() const { return num_.divide_exact(den_); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  Poly num_;
  Poly den_;
};

/// a.num * b.den - b.num * a.den == 0
template <std::size_t Vars>
bool rational_equal(const RationalFunction<Vars>& a, const RationalFunction<Vars>& b) {
  return a == b;
}

/// Applies a monomial substitution (see substitute_monomials) to numerator
/// and denominator, clearing any negative exponents it produces.
template <std::size_t To, std::size_t From, typename Map>
RationalFunction<To> substitute(const RationalFunction<From>& r, Map&& map) {
  auto [num, num_offset] = substitute_monomials<To>(r.num(), map);
  auto [den, den_offset] = substitute_monomials<To>(r.den(), map);
  Exponents<To> num_shift{};
  Exponents<To> den_shift{};
  for (std::size_t v = 0; v < To; ++v) {
    const auto common = std::min(num_offset[v], den_offset[v]);
    num_shift[v] = static_cast<std::uint32_t>(den_offset[v] - common);
    den_shift[v] = static_cast<std::uint32_t>(num_offset[v] - common);
  }
  return {num.times_monomial(num_shift), den.times_monomial(den_shift)};
}

template <std::size_t Vars>
std::string format_rational_function(const RationalFunction<Vars>& r,
                                     const std::array<std::string_view, Vars>& names) {
  const std::string num = format_poly(r.num(), names, false);
  if (r.den() == SparsePoly<Vars>(1L)) return num;
  const std::string den = format_poly(r.den(), names, false);
  return "(" + num + ")/(" + den + ")";
}

/// Polynomials in (N, q) with N = q^n; N is the major variable.
using NPoly2 = SparsePoly<2>;
using NRational = RationalFunction<2>;
inline constexpr std::array<std::string_view, 2> kNVars{"N", "q"};
inline constexpr std::size_t kN = 0;
inline constexpr std::size_t kNq = 1;

/// Polynomials in (q, X, N, A) with N = q^n and A = q^a.
using MultiPoly = SparsePoly<4>;
using MultiRational = RationalFunction<4>;
inline constexpr std::array<std::string_view, 4> kMultiVars{"q", "X", "N", "A"};
inline constexpr std::size_t kMq = 0;
inline constexpr std::size_t kMX = 1;
inline constexpr std::size_t kMN = 2;
inline constexpr std::size_t kMA = 3;

inline std::string to_string(const NRational& r) { return format_rational_function(r, kNVars); }
inline std::string to_string(const MultiRational& r) { return format_rational_function(r, kMultiVars); }

}  // namespace qetude
