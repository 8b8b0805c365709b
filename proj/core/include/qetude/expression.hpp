#pragma once

#include <array>
#include <string_view>

#include "qetude/qpoly.hpp"
#include "qetude/ratfunc.hpp"
#include "qetude/xqpoly.hpp"

namespace qetude {

/// Parses an arithmetic expression in the given variables: integer literals,
/// + - * /, integer powers (negative allowed), parentheses or braces, and
/// juxtaposition as multiplication ("2 q^4"). A LaTeX thin space "\," is
/// treated as blank. Throws std::invalid_argument with the offending offset.
template <std::size_t Vars>
RationalFunction<Vars> parse_expression(std::string_view text, const std::array<std::string_view, Vars>& names);

extern template RationalFunction<1> parse_expression<1>(std::string_view, const std::array<std::string_view, 1>&);
extern template RationalFunction<2> parse_expression<2>(std::string_view, const std::array<std::string_view, 2>&);
extern template RationalFunction<4> parse_expression<4>(std::string_view, const std::array<std::string_view, 4>&);

/// Inverse of to_string(QPoly); rejects expressions that are not polynomials.
QPoly parse_qpoly(std::string_view text);

/// Inverse of to_string(XQPoly).
XQPoly parse_xqpoly(std::string_view text);

NRational parse_nrational(std::string_view text);
MultiRational parse_multirational(std::string_view text);

}  // namespace qetude
