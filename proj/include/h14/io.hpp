#pragma once

#include <string>

#include "json.hpp"

#include "h14/certificate.hpp"
#include "h14/constructions.hpp"
#include "h14/laurent_poly.hpp"
#include "h14/report.hpp"
#include "h14/ring_map.hpp"
#include "h14/witness.hpp"

namespace h14::io {

using Json = nlohmann::ordered_json;

/// Every parser throws ParseError("<path>: <reason>") on malformed input.

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j, const std::string& path = "$");

/// {"vars": [...], "terms": [{"e": [...], "c": "n/d"}, ...]} in canonical order.
Json poly_to_json(const LaurentPoly& p);
/// Parses a polynomial that must be over `vars` (names compared in order;
/// the Laurent flags come from `vars`).
LaurentPoly poly_from_json(const Json& j, const VarSet& vars, const std::string& path = "$");
/// Parses a free-standing polynomial; a variable is invertible iff some term
/// gives it a negative exponent.
LaurentPoly poly_from_json(const Json& j, const std::string& path = "$");

/// {"terms": [{"e": [i, j, m], "c": "n/d"}, ...]}.
Json fg_to_json(const FGElement& p);
FGElement fg_from_json(const Json& j, const std::string& path = "$");

Json ring_map_to_json(const RingMap& m);
RingMap ring_map_from_json(const Json& j, const std::string& path = "$");

Json group_to_json(const PermGroupSpec& g);
PermGroupSpec group_from_json(const Json& j, const std::string& path = "$");

Json pack_to_json(const WitnessPack& p);
WitnessPack pack_from_json(const Json& j, const std::string& path = "$");

Json report_to_json(const Report& r);
Report report_from_json(const Json& j, const std::string& path = "$");

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j, const std::string& path = "$");

Json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j, const std::string& path = "$");

/// Reads and parses a JSON file; ParseError carries the file name and the
/// parser's line and column.
Json read_json_file(const std::string& file);
/// Writes with two-space indentation and a trailing newline.
void write_json_file(const std::string& file, const Json& j);

}  // namespace h14::io
