#pragma once

// JSON and CSV forms of the library's values.
//
//   AlgebraicReal  {"modulus_order": 2pq, "coeffs": ["1", "0", "-1/2", ...]}
//   GroupMatrix    {"p": p, "q": q, "a": <AlgebraicReal>, "b": ..., "c": ..., "d": ...}
//   Word           {"sign": 1, "syllables": [["S", 2], ["U", 1]]}
//   Rational       "num/den"

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rademacher/rademacher.hpp"

namespace rademacher {

using Json = nlohmann::json;

Json to_json(const AlgebraicReal& x);
/// Accepts the object form, a bare coefficient array, or an integer /
/// "num/den" string for a rational constant. Throws InvalidArgument on a
/// modulus order that does not match ctx, NotReal on non-real input.
AlgebraicReal algebraic_from_json(const Json& j, const ContextPtr& ctx);

Json to_json(const GroupMatrix& g);
/// Throws InvalidArgument when "p"/"q" disagree with the group, NotUnimodular
/// when det != 1.
GroupMatrix matrix_from_json(const Json& j, const TriangleGroup& group);

Json to_json(const Word& w);
Word word_from_json(const Json& j);

/// Always "num/den", including den = 1.
std::string rational_string(const Rational& r);
Rational rational_from_string(const std::string& text);

Json to_json(const SymbolReport& report);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view field);
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace rademacher
