#include "graffiti/base64.hpp"

#include <array>

#include "graffiti/error.hpp"

namespace graffiti {

static const char kAlphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string base64_encode(BytesView data) {
    std::string out;
    out.reserve(base64_encoded_size(data.size()));
    std::size_t i = 0;
    for (; i + 3 <= data.size(); i += 3) {
        std::uint32_t v = std::uint32_t(data[i]) << 16 | std::uint32_t(data[i + 1]) << 8 |
                          std::uint32_t(data[i + 2]);
        out.push_back(kAlphabet[v >> 18]);
        out.push_back(kAlphabet[v >> 12 & 0x3f]);
        out.push_back(kAlphabet[v >> 6 & 0x3f]);
        out.push_back(kAlphabet[v & 0x3f]);
    }
    const std::size_t rem = data.size() - i;
    if (rem == 1) {
        std::uint32_t v = std::uint32_t(data[i]) << 16;
        out.push_back(kAlphabet[v >> 18]);
        out.push_back(kAlphabet[v >> 12 & 0x3f]);
        out.push_back('=');
        out.push_back('=');
    } else if (rem == 2) {
        std::uint32_t v = std::uint32_t(data[i]) << 16 | std::uint32_t(data[i + 1]) << 8;
        out.push_back(kAlphabet[v >> 18]);
        out.push_back(kAlphabet[v >> 12 & 0x3f]);
        out.push_back(kAlphabet[v >> 6 & 0x3f]);
        out.push_back('=');
    }
    return out;
}

static std::array<std::int8_t, 256> build_reverse() {
    std::array<std::int8_t, 256> rev{};
    rev.fill(-1);
    for (int i = 0; i < 64; ++i) rev[static_cast<unsigned char>(kAlphabet[i])] = static_cast<std::int8_t>(i);
    return rev;
}

Bytes base64_decode(const std::string& text) {
    static const std::array<std::int8_t, 256> rev = build_reverse();

    if (text.size() % 4 != 0) fail(Errc::base64_syntax, "base64 length not a multiple of 4");
    if (text.empty()) return {};

    std::size_t pad = 0;
    if (text.back() == '=') pad = (text[text.size() - 2] == '=') ? 2 : 1;

    Bytes out;
    out.reserve(text.size() / 4 * 3);
    for (std::size_t i = 0; i < text.size(); i += 4) {
        const bool last = i + 4 == text.size();
        std::uint32_t v = 0;
        int chars = 4;
        if (last && pad) chars = 4 - static_cast<int>(pad);
        for (int j = 0; j < 4; ++j) {
            char c = text[i + j];
            if (j >= chars) {
                if (c != '=') fail(Errc::base64_syntax, "misplaced padding");
                v <<= 6;
                continue;
            }
            std::int8_t d = rev[static_cast<unsigned char>(c)];
            if (d < 0) fail(Errc::base64_syntax, "character outside base64 alphabet");
            v = v << 6 | static_cast<std::uint32_t>(d);
        }
        if (last && pad) {
            // Canonical form: bits beyond the encoded bytes must be zero.
            if (pad == 2 && (v & 0xffff) != 0) fail(Errc::base64_syntax, "non-canonical trailing bits");
            if (pad == 1 && (v & 0xff) != 0) fail(Errc::base64_syntax, "non-canonical trailing bits");
            out.push_back(static_cast<std::uint8_t>(v >> 16));
            if (pad == 1) out.push_back(static_cast<std::uint8_t>(v >> 8));
        } else {
            out.push_back(static_cast<std::uint8_t>(v >> 16));
            out.push_back(static_cast<std::uint8_t>(v >> 8));
            out.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return out;
}

} // namespace graffiti
