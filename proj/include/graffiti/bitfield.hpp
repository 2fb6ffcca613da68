#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graffiti/bytes.hpp"

namespace graffiti {

// Piece bitfield, most significant bit first within each byte (bit for
// piece p lives at byte p/8, mask 0x80 >> p%8). Serialized as base64.
class Bitfield {
public:
    Bitfield() = default;
    explicit Bitfield(std::size_t bit_count)
        : bits_(bit_count), bytes_((bit_count + 7) / 8, 0) {}

    static Bitfield from_base64(const std::string& text, std::size_t bit_count);
    std::string to_base64() const;

    bool get(std::size_t i) const { return bytes_[i / 8] & (0x80u >> (i % 8)); }
    void set(std::size_t i, bool v = true) {
        if (v)
            bytes_[i / 8] |= (0x80u >> (i % 8));
        else
            bytes_[i / 8] &= static_cast<std::uint8_t>(~(0x80u >> (i % 8)));
    }

    std::size_t size() const { return bits_; }
    std::size_t count() const;
    bool all() const { return count() == bits_; }

private:
    std::size_t bits_ = 0;
    Bytes bytes_;
};

} // namespace graffiti
