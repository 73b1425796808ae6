#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qjfrac/qratfn.hpp"
#include "qjfrac/series.hpp"
#include "qjfrac/zpoly.hpp"

namespace qjfrac {

/// "1 - 2*q + 3/2*q^2", increasing powers; "0" for the zero polynomial.
std::string to_string(const QPoly& p);
/// "(num)/(den)", or the bare numerator when the denominator is 1.
std::string to_string(const QRatFn& f);
/// Human-oriented form with cyclotomic and small linear factors pulled out,
/// e.g. "(-2*q)/((1 - q)^2*(1 + q))". Parses back to the same value.
std::string to_factored_string(const QRatFn& f);
/// "c0 + c1*z + ..." with each coefficient rendered by to_string(QRatFn).
std::string to_string(const ZPoly& p);

/// Recursive-descent parser for rational expressions in q:
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := ('+' | '-') factor | power
///   power  := atom ('^' ['-'] integer)?
///   atom   := integer | 'q' | '(' expr ')'
/// Throws ParseError on malformed input and DivisionByZero on x/0.
QRatFn parse_qratfn(std::string_view text);

/// {"num": [[n, d], ...], "den": [[n, d], ...]}; coefficient pairs by
/// increasing power. Integers that do not fit in 64 bits are decimal strings.
nlohmann::json to_json(const QRatFn& f);
QRatFn qratfn_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

/// Rational as [n, d].
nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace qjfrac
