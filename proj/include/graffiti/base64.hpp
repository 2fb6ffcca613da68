#pragma once

#include <string>

#include "graffiti/bytes.hpp"

namespace graffiti {

// Standard alphabet, '=' padding, no line wrapping.
std::string base64_encode(BytesView data);

// Strict decoder: rejects characters outside the alphabet, wrong padding,
// non-canonical trailing bits and lengths that are not a multiple of four.
// Throws Error(Errc::base64_syntax).
Bytes base64_decode(const std::string& text);

constexpr std::size_t base64_encoded_size(std::size_t n) {
    return (n + 2) / 3 * 4;
}

} // namespace graffiti
