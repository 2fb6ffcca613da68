#include "graffiti/bitfield.hpp"

#include "graffiti/base64.hpp"
#include "graffiti/error.hpp"

namespace graffiti {

Bitfield Bitfield::from_base64(const std::string& text, std::size_t bit_count) {
    Bitfield f(bit_count);
    Bytes raw = base64_decode(text);
    if (raw.size() != f.bytes_.size())
        fail(Errc::parse, "bitfield has the wrong length for this fileset");
    // Spare bits past the last piece must be zero.
    for (std::size_t i = bit_count; i < raw.size() * 8; ++i)
        if (raw[i / 8] & (0x80u >> (i % 8))) fail(Errc::parse, "bitfield has spare bits set");
    f.bytes_ = std::move(raw);
    return f;
}

std::string Bitfield::to_base64() const { return base64_encode(bytes_); }

std::size_t Bitfield::count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < bits_; ++i)
        if (get(i)) ++n;
    return n;
}

} // namespace graffiti
