#pragma once

#include <json.hpp>
#include <string>

namespace graffiti {

using Json = nlohmann::json;

// Canonical form used for hashing and on-disk artifacts: keys sorted
// lexicographically (nlohmann objects are std::map backed, so plain
// dump() already yields that) and no insignificant whitespace.
inline std::string canonical_dump(const Json& j) { return j.dump(); }

Json parse_json(const std::string& text);       // throws Errc::parse
Json load_json_file(const std::string& path);   // throws Errc::io / Errc::parse
void save_json_file(const std::string& path, const Json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace graffiti
