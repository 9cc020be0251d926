#pragma once

// JSON for dice, sacks, totals and factor lists. Scalars are exact strings:
// "a/b" for rationals, or polynomials in z = zeta_n with a "conductor" key.

#include "totalparts/fibers.hpp"

#include "json.hpp"

#include <string>

namespace totalparts {

using Json = nlohmann::ordered_json;

/// Smallest common conductor of the values (1 when all are rational).
int common_conductor(std::span<const CycElem> values);

/// Strings for each value, all written in `conductor`.
std::vector<std::string> scalar_strings(std::span<const CycElem> values, int conductor);
std::vector<std::string> scalar_strings(std::span<const Rational> values);

Json die_to_json(const Die<Rational>& d);
Json die_to_json(const Die<CycElem>& d);
Json sack_to_json(const Sack<Rational>& s);
Json sack_to_json(const Sack<CycElem>& s);
Json total_to_json(const DistPoly<Rational>& t);
Json total_to_json(const DistPoly<CycElem>& t);

/// {"order", "probs", "conductor"?}; a bare array of strings is also accepted.
Die<CycElem> die_from_json(const Json& j);
/// {"dice": [...]} or a bare array of dice.
Sack<CycElem> sack_from_json(const Json& j);
/// {"probs": [...], "conductor"?} or a bare array.
DistPoly<CycElem> total_from_json(const Json& j);

/// [{"root": s} | {"poly": [s, ...]}, each with optional "mult"], or an
/// object {"conductor": n, "factors": [...]}.
FactorMultiset<CycElem> factors_from_json(const Json& j);

/// Parses inline JSON when `text` starts with '{' or '[', else reads the file.
Json load_json_argument(const std::string& text);

/// Every value rational: convert, else nullopt.
std::optional<Sack<Rational>> as_rational(const Sack<CycElem>& s);
std::optional<DistPoly<Rational>> as_rational(const DistPoly<CycElem>& t);

} // namespace totalparts
