#pragma once

// Text and JSON forms of series, coset representatives and field specs.
//
// Series text: terms joined by '+', each "c*t^e", "c*t", "t^e", "t" or "c".
// A coefficient is an F_q element as an integer bitmask (decimal, 0x.., 0b..)
// or a power of the generator ("u", "u^k"). An optional final "O(t^N)" fixes
// the precision; without it the precision is one past the largest exponent.

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "aschar/artin_schreier.hpp"
#include "aschar/laurent.hpp"
#include "aschar/rational.hpp"

namespace aschar {

struct ParsedSeries {
  LaurentSeries series;
  bool explicit_prec;  // an O(t^N) term was given
};

ParsedSeries parse_series_text(std::string_view text, FieldPtr field,
                               std::optional<int> default_prec = std::nullopt);
inline LaurentSeries parse_series(std::string_view text, FieldPtr field,
                                  std::optional<int> default_prec = std::nullopt) {
  return parse_series_text(text, std::move(field), default_prec).series;
}
// Terms in increasing exponent, coefficients as decimal bitmasks, then O(t^prec).
std::string to_string(const LaurentSeries& s);

Bits parse_field_element(std::string_view text, const Field& field);

// "chi(n,j)" -> (n, j).
std::pair<int, int> parse_chi(std::string_view text);

// "0", or e.g. "beta0 + e(0,1) + e(2,3)" with e(n,j) = u_j t^{-(2n+1)}.
std::string to_string(const CosetRep& rep);

using Json = nlohmann::ordered_json;

Json field_to_json(const Field& field);
FieldPtr field_from_json(const Json& j);

// {"val": v|null, "prec": p, "coeffs": [[e, bits], ...]}
Json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const Json& j, FieldPtr field);

// {"c": 0|1, "wild": [[n, j, 1], ...]}
Json coset_to_json(const CosetRep& rep);
CosetRep coset_from_json(const Json& j, BasisPtr basis);

// {"k": k, "theta0": bits, "thetas": [θ_1, ...], "prec": p}
Json expansion_to_json(const ProductExpansion& e);

}  // namespace aschar
