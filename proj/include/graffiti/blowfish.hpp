#pragma once

#include <array>
#include <cstdint>

#include "graffiti/bytes.hpp"

namespace graffiti {

// 64-bit-block Feistel cipher, 16 rounds, 32..448-bit keys. Checked against
// the classic published test vectors and an independent implementation in
// the test suite.
class Blowfish {
public:
    explicit Blowfish(BytesView key); // throws Errc::parse on bad key size

    void encrypt_block(std::uint32_t& left, std::uint32_t& right) const;
    void decrypt_block(std::uint32_t& left, std::uint32_t& right) const;

private:
    std::uint32_t feistel(std::uint32_t x) const;

    std::array<std::uint32_t, 18> p_;
    std::array<std::array<std::uint32_t, 256>, 4> s_;
};

// CBC mode with PKCS#7 padding over 8-byte blocks. The IV is supplied by
// the caller; plaintext of any length (including zero) round-trips.
Bytes blowfish_cbc_encrypt(BytesView key, const std::array<std::uint8_t, 8>& iv, BytesView plaintext);

// Throws Errc::padding when the decrypted tail is not valid PKCS#7, and
// Errc::length_mismatch when the ciphertext is empty or not block-aligned.
Bytes blowfish_cbc_decrypt(BytesView key, const std::array<std::uint8_t, 8>& iv, BytesView ciphertext);

} // namespace graffiti
