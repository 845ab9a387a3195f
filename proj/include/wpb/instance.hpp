#pragma once

#include "wpb/codes.hpp"

#include <json.hpp>

#include <string>

namespace wpb {

/// Instance documents: one JSON object with keys field, weight, poset,
/// labeling and code. Poset elements and cover pairs are 1-based.
///
///   {"field": {"q": 5},
///    "weight": {"kind": "lee"},            // or hamming, or
///                                          // {"kind": "table", "values": [...]}
///    "poset": {"elements": 2, "cover": [[1, 2]]},
///    "labeling": [2, 1],
///    "code": {"kind": "generator", "rows": [[1, 3, 4]]}}
///                                          // or {"kind": "list", "words": [...]}
///
/// "poset" may also be {"kind": "chain" | "antichain", "elements": s}.

/// Throws ParseError for malformed JSON or wrong shapes and
/// ConsistencyError when the parts do not fit together.
Code parse_instance(const std::string& text);
Code load_instance(const std::string& path);

/// Canonical form: Hasse cover pairs, reduced generator rows or sorted words.
nlohmann::json instance_to_json(const Code& code);
/// Canonical text, pretty-printed with sorted keys.
std::string dump_instance(const Code& code);
void save_instance(const Code& code, const std::string& path);

/// FNV-1a 64 of the compact canonical text, as 16 hex digits.
std::string instance_digest(const Code& code);
std::string digest_of(const std::string& text);

} // namespace wpb
