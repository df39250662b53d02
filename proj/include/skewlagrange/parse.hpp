#pragma once

// Text forms for the shipped quaternion instance.
//
// Quaternion grammar: `a`, `a+b*i+c*j+d*k`, components rational `p` or
// `p/q`, whitespace insignificant, omitted components zero, the `*` after
// a coefficient optional. parse(format(q)) == q on canonical forms.
//
// Polynomial text: `(c0) + (c1) z + (c2) z^2 + ...` with quaternion
// literals in parentheses; a bare quaternion literal is a constant
// polynomial. The JSON-facing list form is an array of quaternion strings
// indexed by power.

#include "skewlagrange/quaternion.hpp"
#include "skewlagrange/skew_poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace skl {

// Throw std::invalid_argument with offset information on malformed input.
Quaternion parse_quaternion(std::string_view text);
SkewPoly<Quaternion> parse_poly(std::string_view text);

std::string format_rational(const Rational& r);
std::string format_quaternion(const Quaternion& q);
std::string format_poly(const SkewPoly<Quaternion>& f);

std::vector<std::string> poly_to_strings(const SkewPoly<Quaternion>& f);
SkewPoly<Quaternion> poly_from_strings(const std::vector<std::string>& coeffs);

}  // namespace skl
