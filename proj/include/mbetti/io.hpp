#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mbetti/betti.hpp"
#include "mbetti/laurent.hpp"
#include "mbetti/lspace.hpp"

namespace mbetti::io {

using nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "num/den", or "num" when den = 1.
std::string to_string(const Rational& q);
/// Accepts "num", "num/den" and JSON integers.
Rational parse_rational(std::string_view s);

/// Terms in decreasing lex order, e.g. "t1^2 - t1*t2 + t2^2", "1/2*t1^-2", "0".
std::string to_text(const LaurentPoly& f);
/// Inverse of to_text. Also accepts products in any order, repeated
/// variables, "t1^(-2)" and redundant "1*" factors. When nvars is omitted the
/// largest variable index used decides it (at least 1). Throws ParseError.
LaurentPoly parse_poly(std::string_view text, std::optional<std::size_t> nvars = std::nullopt);

/// {"nvars": n, "terms": [{"exp": [...], "coeff": "num/den"}]}; coefficients
/// are always written as "num/den".
json to_json(const LaurentPoly& f);
/// Throws ParseError on schema violations.
LaurentPoly poly_from_json(const json& j);

/// {"nvars": n, "entries": [{"i": i, "deg": [...], "mult": "num/den"}]}.
json to_json(const BettiDiagram& d);
BettiDiagram diagram_from_json(const json& j);

/// {"in_space": ..., "cofactor": <poly>|null, "integral": ..., "reasons": [...]}.
json to_json(const MembershipReport& r);

/// Parses "2,3" style lists. Throws ParseError.
std::vector<int> parse_int_list(std::string_view s);

}  // namespace mbetti::io
