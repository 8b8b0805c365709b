#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qetude/rational.hpp"

namespace qetude {

template <std::size_t Vars>
using Exponents = std::array<std::uint32_t, Vars>;

template <std::size_t Vars>
struct Term {
  Exponents<Vars> exp{};
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) { return a.exp == b.exp && a.coeff == b.coeff; }
};

/// Sparse polynomial in `Vars` indeterminates with rational coefficients.
///
/// Terms are sorted by ascending lexicographic exponent vector (variable 0 is
/// the most significant) and carry no zero coefficients; the empty term list
/// is the zero polynomial. Two polynomials are equal iff their term lists are.
template <std::size_t Vars>
class SparsePoly {
 public:
  static_assert(Vars >= 1);
  using Exp = Exponents<Vars>;
  using TermT = Term<Vars>;

  SparsePoly() = default;
  SparsePoly(const Rational& constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.push_back({Exp{}, constant});
  }
  SparsePoly(long constant) : SparsePoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static SparsePoly monomial(const Exp& exp, const Rational& coeff = 1) {
    SparsePoly p;
    if (coeff != 0) p.terms_.push_back({exp, coeff});
    return p;
  }

  static SparsePoly variable(std::size_t var, std::uint32_t power = 1) {
    Exp e{};
    e.at(var) = power;
    return monomial(e);
  }

  /// Accepts terms in any order, merges duplicates and drops zeros.
  static SparsePoly from_terms(std::vector<TermT> terms) {
    SparsePoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exp{}); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<TermT>& terms() const { return terms_; }

  /// Lexicographically largest term. Precondition: nonzero.
  const TermT& leading() const { return terms_.back(); }

  Rational coefficient(const Exp& exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const TermT& t, const Exp& e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) return it->coeff;
    return Rational(0);
  }

  Rational constant_term() const { return coefficient(Exp{}); }

  /// Largest exponent of `var`; 0 for the zero polynomial.
  std::uint32_t degree(std::size_t var = 0) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exp[var]);
    return d;
  }

  /// Smallest exponent of `var`; 0 for the zero polynomial.
  std::uint32_t min_degree(std::size_t var = 0) const {
    if (terms_.empty()) return 0;
    std::uint32_t d = terms_.front().exp[var];
    for (const auto& t : terms_) d = std::min(d, t.exp[var]);
    return d;
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return multiply(a, b); }
  SparsePoly& operator+=(const SparsePoly& o) { return *this = merge(*this, o, false); }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = merge(*this, o, true); }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = multiply(*this, o); }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  SparsePoly scaled(const Rational& c) const {
    if (c == 0) return {};
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  /// Product with coeff * x^exp; cheaper than a general multiply.
  SparsePoly times_monomial(const Exp& exp, const Rational& coeff = 1) const {
    if (coeff == 0) return {};
    SparsePoly r = *this;
    for (auto& t : r.terms_) {
      t.exp = add_exp(t.exp, exp);
      t.coeff *= coeff;
    }
    return r;
  }

  SparsePoly pow(unsigned k) const {
    SparsePoly result(1L);
    SparsePoly base = *this;
    while (k != 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k != 0) base *= base;
    }
    return result;
  }

  /// Exact quotient when `divisor` divides this polynomial, std::nullopt
  /// otherwise. Uses leading-term division in lexicographic order, which
  /// recovers the quotient whenever one exists. Throws std::domain_error on
  /// a zero divisor.
  std::optional<SparsePoly> divide_exact(const SparsePoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return SparsePoly{};
    if constexpr (Vars == 1) {
      return divide_exact_dense(divisor);
    } else {
      const TermT& lead = divisor.leading();
      std::map<Exp, Rational> rem;
      for (const auto& t : terms_) rem.emplace(t.exp, t.coeff);
      std::vector<TermT> quotient;
      while (!rem.empty()) {
        auto top = std::prev(rem.end());
        Exp shift{};
        for (std::size_t v = 0; v < Vars; ++v) {
          if (top->first[v] < lead.exp[v]) return std::nullopt;
          shift[v] = top->first[v] - lead.exp[v];
        }
        Rational factor = top->second / lead.coeff;
        quotient.push_back({shift, factor});
        for (const auto& t : divisor.terms_) {
          Exp e = add_exp(t.exp, shift);
          auto [it, inserted] = rem.try_emplace(e, 0);
          it->second -= factor * t.coeff;
          if (it->second == 0) rem.erase(it);
        }
      }
      return from_terms(std::move(quotient));
    }
  }

  static Exp add_exp(const Exp& a, const Exp& b) {
    Exp r{};
    for (std::size_t v = 0; v < Vars; ++v) r[v] = a[v] + b[v];
    return r;
  }

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const TermT& a, const TermT& b) { return a.exp < b.exp; });
    std::vector<TermT> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exp == t.exp) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    terms_ = std::move(out);
  }

  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
    SparsePoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exp < b.terms_[j].exp)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].exp < a.terms_[i].exp) {
        r.terms_.push_back(b.terms_[j]);
        if (subtract) r.terms_.back().coeff = -r.terms_.back().coeff;
        ++j;
      } else {
        Rational c = subtract ? Rational(a.terms_[i].coeff - b.terms_[j].coeff)
                              : Rational(a.terms_[i].coeff + b.terms_[j].coeff);
        if (c != 0) r.terms_.push_back({a.terms_[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  static SparsePoly multiply(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return b.times_monomial(a.terms_[0].exp, a.terms_[0].coeff);
    if (b.size() == 1) return a.times_monomial(b.terms_[0].exp, b.terms_[0].coeff);
    if constexpr (Vars == 1) {
      // Dense accumulation when the result's degree span is not much larger
      // than the number of partial products.
      const std::uint64_t lo = std::uint64_t{a.terms_.front().exp[0]} + b.terms_.front().exp[0];
      const std::uint64_t hi = std::uint64_t{a.leading().exp[0]} + b.leading().exp[0];
      if (hi - lo + 1 <= 4 * std::uint64_t{a.size()} * b.size() + 64) {
        std::vector<Rational> dense(hi - lo + 1);
        for (const auto& s : a.terms_) {
          for (const auto& t : b.terms_) dense[s.exp[0] + t.exp[0] - lo] += s.coeff * t.coeff;
        }
        SparsePoly r;
        for (std::size_t k = 0; k < dense.size(); ++k) {
          if (dense[k] != 0) r.terms_.push_back({Exp{static_cast<std::uint32_t>(k + lo)}, std::move(dense[k])});
        }
        return r;
      }
    }
    std::vector<TermT> products;
    products.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) products.push_back({add_exp(s.exp, t.exp), s.coeff * t.coeff});
    }
    return from_terms(std::move(products));
  }

  std::optional<SparsePoly> divide_exact_dense(const SparsePoly& divisor) const {
    const std::uint32_t dd = divisor.leading().exp[0];
    const std::uint32_t nd = leading().exp[0];
    if (nd < dd) return std::nullopt;
    std::vector<Rational> rem(nd + 1);
    for (const auto& t : terms_) rem[t.exp[0]] = t.coeff;
    const Rational& lead = divisor.leading().coeff;
    std::vector<TermT> quotient;
    for (std::int64_t k = nd; k >= static_cast<std::int64_t>(dd); --k) {
      if (rem[k] == 0) continue;
      Rational factor = rem[k] / lead;
      const auto shift = static_cast<std::uint32_t>(k - dd);
      for (const auto& t : divisor.terms_) rem[t.exp[0] + shift] -= factor * t.coeff;
      quotient.push_back({Exp{shift}, std::move(factor)});
    }
    for (std::uint32_t k = 0; k < dd; ++k) {
      if (rem[k] != 0) return std::nullopt;
    }
    std::reverse(quotient.begin(), quotient.end());
    SparsePoly q;
    q.terms_ = std::move(quotient);
    return q;
  }

  std::vector<TermT> terms_;
};

/// Substitutes every monomial through `map`, which returns the image
/// exponent vector (signed) and a coefficient factor for one source exponent
/// vector. Negative image exponents are lifted by the smallest common
/// offset; that offset is returned alongside the polynomial so callers can
/// clear it (image = result * x^(-offset)).
template <std::size_t To, std::size_t From, typename Map>
std::pair<SparsePoly<To>, std::array<std::int64_t, To>> substitute_monomials(const SparsePoly<From>& p, Map&& map) {
  std::vector<std::pair<std::array<std::int64_t, To>, Rational>> images;
  images.reserve(p.size());
  std::array<std::int64_t, To> offset{};
  for (const auto& t : p.terms()) {
    auto [exp, factor] = map(t.exp);
    for (std::size_t v = 0; v < To; ++v) offset[v] = std::max(offset[v], -exp[v]);
    images.emplace_back(exp, t.coeff * factor);
  }
  std::vector<Term<To>> terms;
  terms.reserve(images.size());
  for (auto& [exp, coeff] : images) {
    Exponents<To> e{};
    for (std::size_t v = 0; v < To; ++v) e[v] = static_cast<std::uint32_t>(exp[v] + offset[v]);
    terms.push_back({e, std::move(coeff)});
  }
  return {SparsePoly<To>::from_terms(std::move(terms)), offset};
}

/// Canonical text: ascending exponent order, explicit signs, `*` between
/// factors, e.g. "1 - q - q^2 + q^4". `spaced = false` drops the blanks
/// around binary signs ("1+q+q^2").
template <std::size_t Vars>
std::string format_poly(const SparsePoly<Vars>& p, const std::array<std::string_view, Vars>& names,
                        bool spaced = true) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string mono;
    for (std::size_t v = 0; v < Vars; ++v) {
      if (t.exp[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[v];
      if (t.exp[v] != 1) mono += "^" + std::to_string(t.exp[v]);
    }
    const bool negative = t.coeff < 0;
    Rational mag = abs(t.coeff);
    std::string body;
    if (mono.empty()) {
      body = to_string(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = to_string(mag) + "*" + mono;
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else if (spaced) {
      out += (negative ? " - " : " + ") + body;
    } else {
      out += (negative ? "-" : "+") + body;
    }
    first = false;
  }
  return out;
}

}  // namespace qetude
