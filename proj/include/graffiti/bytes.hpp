#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace graffiti {

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;

std::string to_hex(BytesView data);
Bytes from_hex(const std::string& hex); // throws Errc::parse on bad input

inline BytesView as_bytes(const std::string& s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline std::string to_string(BytesView b) {
    return {reinterpret_cast<const char*>(b.data()), b.size()};
}

} // namespace graffiti
