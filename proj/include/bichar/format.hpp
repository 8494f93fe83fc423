#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "bichar/bicharacter.hpp"
#include "bichar/hopf.hpp"

namespace bichar {

/// Parses an element of V over A, e.g. "3/2 * e^(2*a1 - a2) * x1^2 * x3 + x2"
/// or "(-1/4)*z^-1 * x1". Primitive names follow the signature's naming
/// (x1 / x(i,m) / y(k/2)). Juxtaposition is rejected. Throws ParseError
/// (with byte offset and expected tokens) or UnknownGenerator.
HopfElement parse_element(std::string_view src, const AlgebraSignature& sig);

/// Parses a coefficient in A, e.g. "-1/4*z^-1 + 3/32*z^-2".
LaurentPoly parse_laurent(std::string_view src);

/// Canonical text rendering; parse_element(render(a)) == a.
std::string render(const HopfElement& a, const AlgebraSignature& sig);
std::string render(const Monomial& m, const AlgebraSignature& sig);
std::string render(const BicharSpec& r, const AlgebraSignature& sig);

nlohmann::json to_json(const HopfElement& a, const AlgebraSignature& sig);
nlohmann::json to_json(const BicharSpec& r, const AlgebraSignature& sig);

/// Resolves a primitive generator name ("x3", "x(1,2)", "y(3/2)") under the signature.
PrimitiveId parse_primitive_name(std::string_view name, const AlgebraSignature& sig);

}  // namespace bichar
