#include "graffiti/canonical_json.hpp"

#include <fstream>
#include <sstream>

#include "graffiti/error.hpp"

namespace graffiti {

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::parse, "malformed JSON");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::io, "cannot write " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) fail(Errc::io, "short write to " + path);
}

Json load_json_file(const std::string& path) { return parse_json(read_file(path)); }

void save_json_file(const std::string& path, const Json& j) {
    write_file(path, canonical_dump(j));
}

} // namespace graffiti
