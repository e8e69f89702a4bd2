#pragma once

#include "cobalt/ring.hpp"

#include <json.hpp>

#include <string_view>

namespace cobalt {

/// Parses an expression over the generators of `ring`: integer literals,
/// generator names, `name_inv` for invertible generators, + - * ( ) and ^ with
/// positive integer exponents. Errors carry the 1-based column.
Polynomial parse_expression(std::string_view text, const RingPresentation& ring);

/// Ring presentation from its JSON document:
///   {"base":"Z"|"Q", "generators":[{"name","adams_degree","invertible"}],
///    "relations":[expr, ...], "p_local": p (optional)}
RingPresentation parse_presentation(std::string_view json_text);
RingPresentation presentation_from_json(const nlohmann::json& doc);
nlohmann::json presentation_to_json(const RingPresentation& ring);

/// Parses JSON text, turning syntax errors into SyntaxError with line/column.
nlohmann::json parse_json_text(std::string_view text);

} // namespace cobalt
