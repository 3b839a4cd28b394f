#pragma once

#include <string_view>

#include "commalg/quiver.hpp"

namespace commalg {

// Parses the quiver DSL:
//
//   file       := "quiver" IDENT "{" vertexdecl arrowdecl* "}"
//   vertexdecl := "vertices" ":" IDENT ("," IDENT)* ";"
//   arrowdecl  := IDENT ":" IDENT "->" IDENT ("[" "weight" "=" RATIONAL "]")? ";"
//
// '#' starts a line comment. Throws ParseError (with 1-based line/column) on
// syntax errors and ValidationError on semantic ones.
Quiver parse_quiver(std::string_view text);

}  // namespace commalg
