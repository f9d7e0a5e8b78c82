#pragma once

#include <string>

#include <json.hpp>

#include "leibniz/cover.hpp"

namespace leibniz::io {

using Json = nlohmann::json;

/// {"field": "Q" | {"GF": p}}.
Json field_to_json(Field f);
Field field_from_json(const Json& j);

/// {"field", "basis", "brackets": [{"left", "right", "terms": [{"basis", "coeff"}]}]},
/// brackets in (left, right) order with zero terms dropped.
Json algebra_to_json(const LeibnizAlgebra& alg);
/// Structural errors throw ParseError; the Leibniz identity is not checked.
LeibnizAlgebra algebra_from_json(const Json& j);

/// {"span": [[coeff, ...], ...]} with the rref basis as rows.
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, Field f, std::size_t ambient);

/// {"algebra": ..., "ideal": ...}. Throws NotAnIdeal.
Json pair_to_json(const Pair& p);
Pair pair_from_json(const Json& j);

/// {"m", "g", "delta": rows, "left_action": [{"x", "m", "terms"}], "right_action": ...}.
Json crossed_module_to_json(const CrossedModule& cm);
CrossedModule crossed_module_from_json(const Json& j);

/// Throws ParseError with the parser's line and column.
Json parse(const std::string& text);
Json read_file(const std::string& path);
/// Two-space indent, sorted keys, trailing newline.
std::string emit(const Json& j);

}  // namespace leibniz::io
