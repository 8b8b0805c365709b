#include "qetude/serialize.hpp"

#include <stdexcept>
#include <string>

namespace qetude {

namespace {

std::uint32_t read_exponent(const Json& j) {
  if (!j.is_number_unsigned()) throw std::invalid_argument("exponent must be a nonnegative integer: " + j.dump());
  return j.get<std::uint32_t>();
}

Rational read_coefficient(const Json& num, const Json& den) {
  if (!num.is_string() || !den.is_string()) throw std::invalid_argument("coefficients must be integer strings");
  const Rational d = parse_rational(den.get<std::string>());
  if (d == 0) throw std::invalid_argument("zero denominator in coefficient");
  return parse_rational(num.get<std::string>()) / d;
}

}  // namespace

template <std::size_t Vars>
Json poly_to_json(const SparsePoly<Vars>& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) {
    Json exp;
    if constexpr (Vars == 1) {
      exp = t.exp[0];
    } else {
      exp = Json::array();
      for (auto e : t.exp) exp.push_back(e);
    }
    out.push_back(Json::array({exp, t.coeff.get_num().get_str(), t.coeff.get_den().get_str()}));
  }
  return out;
}

template <std::size_t Vars>
SparsePoly<Vars> poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Term<Vars>> terms;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 3) {
      throw std::invalid_argument("polynomial term must be [exp, \"num\", \"den\"]: " + entry.dump());
    }
    Exponents<Vars> exp{};
    if constexpr (Vars == 1) {
      exp[0] = read_exponent(entry[0]);
    } else {
      if (!entry[0].is_array() || entry[0].size() != Vars) {
        throw std::invalid_argument("exponent vector must have " + std::to_string(Vars) + " entries");
      }
      for (std::size_t v = 0; v < Vars; ++v) exp[v] = read_exponent(entry[0][v]);
    }
    terms.push_back({exp, read_coefficient(entry[1], entry[2])});
  }
  return SparsePoly<Vars>::from_terms(std::move(terms));
}

template Json poly_to_json<1>(const SparsePoly<1>&);
template Json poly_to_json<2>(const SparsePoly<2>&);
template Json poly_to_json<4>(const SparsePoly<4>&);
template SparsePoly<1> poly_from_json<1>(const Json&);
template SparsePoly<2> poly_from_json<2>(const Json&);
template SparsePoly<4> poly_from_json<4>(const Json&);

Json to_json(const XQPoly& p) {
  Json out = Json::object();
  for (const auto& [a, poly] : p.coeffs()) out[std::to_string(a)] = to_json(poly);
  return out;
}

XQPoly xqpoly_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("XQPoly JSON must be an object keyed by X-degree");
  XQPoly::CoeffMap coeffs;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    unsigned long degree = 0;
    try {
      degree = std::stoul(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != key.size() || key[0] == '-' || key[0] == '+') {
      throw std::invalid_argument("bad X-degree key '" + key + "'");
    }
    coeffs[static_cast<std::uint32_t>(degree)] += qpoly_from_json(value);
  }
  return XQPoly::from_coeffs(std::move(coeffs));
}

}  // namespace qetude
