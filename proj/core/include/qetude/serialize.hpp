#pragma once

#include <nlohmann/json.hpp>

#include "qetude/qpoly.hpp"
#include "qetude/ratfunc.hpp"
#include "qetude/xqpoly.hpp"

namespace qetude {

using Json = nlohmann::json;

// Polynomial JSON: [[exp, "num", "den"], ...] for QPoly; with more than one
// variable the exponent becomes an array, [[[e0, e1], "num", "den"], ...].
// Integers travel as decimal strings so nothing is lost to doubles.
// Readers throw std::invalid_argument on malformed input.

template <std::size_t Vars>
Json poly_to_json(const SparsePoly<Vars>& p);
template <std::size_t Vars>
SparsePoly<Vars> poly_from_json(const Json& j);

extern template Json poly_to_json<1>(const SparsePoly<1>&);
extern template Json poly_to_json<2>(const SparsePoly<2>&);
extern template Json poly_to_json<4>(const SparsePoly<4>&);
extern template SparsePoly<1> poly_from_json<1>(const Json&);
extern template SparsePoly<2> poly_from_json<2>(const Json&);
extern template SparsePoly<4> poly_from_json<4>(const Json&);

inline Json to_json(const QPoly& p) { return poly_to_json(p); }
inline QPoly qpoly_from_json(const Json& j) { return poly_from_json<1>(j); }

/// {"0": <QPoly>, "1": <QPoly>, ...} keyed by X-degree.
Json to_json(const XQPoly& p);
XQPoly xqpoly_from_json(const Json& j);

/// {"num": <poly>, "den": <poly>}
template <std::size_t Vars>
Json to_json(const RationalFunction<Vars>& r) {
  return Json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}
template <std::size_t Vars>
RationalFunction<Vars> rational_function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw std::invalid_argument("rational function JSON needs \"num\" and \"den\"");
  }
  return {poly_from_json<Vars>(j.at("num")), poly_from_json<Vars>(j.at("den"))};
}

}  // namespace qetude
