#pragma once

#include <json.hpp>

#include "charpoly/bivar.hpp"
#include "charpoly/rational.hpp"
#include "charpoly/unipoly.hpp"

namespace charpoly {

// Exact-rational JSON encoding: {"num": "<decimal>", "den": "<decimal>"}
// with positive denominator and gcd(num, den) = 1 (the rational type keeps
// values in that canonical form).  Parsing checks both properties, so a
// round trip is bit-exact.
nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

// Bivariate polynomials as a list of records
//   {"m": <int>, "t": <int>, "num": "<decimal>", "den": "<decimal>"}
// sorted by (t, m), zero terms omitted.
nlohmann::json bivar_to_json(const BivarPoly& f);
BivarPoly bivar_from_json(const nlohmann::json& j);

// Univariate polynomials reuse the same record schema with the other
// exponent pinned to zero ("m" records for polynomials in m, "t" records
// for polynomials in t).
nlohmann::json unipoly_m_to_json(const UniPoly& f);
nlohmann::json unipoly_t_to_json(const UniPoly& f);
UniPoly unipoly_m_from_json(const nlohmann::json& j);
UniPoly unipoly_t_from_json(const nlohmann::json& j);

}  // namespace charpoly
