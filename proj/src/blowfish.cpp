#include "graffiti/blowfish.hpp"

#include "graffiti/error.hpp"

namespace graffiti {

#include "blowfish_tables.inc"

Blowfish::Blowfish(BytesView key) {
    if (key.empty() || key.size() > 56) fail(Errc::parse, "blowfish key must be 1..56 bytes");

    p_ = std::to_array(kInitP);
    for (int box = 0; box < 4; ++box)
        for (int i = 0; i < 256; ++i) s_[box][i] = kInitS[box][i];

    // XOR the key cyclically into the P-array.
    std::size_t k = 0;
    for (auto& pe : p_) {
        std::uint32_t v = 0;
        for (int j = 0; j < 4; ++j) {
            v = v << 8 | key[k];
            k = (k + 1) % key.size();
        }
        pe ^= v;
    }

    // Replace P and S entries with successive encryptions of the all-zero block.
    std::uint32_t l = 0, r = 0;
    for (std::size_t i = 0; i < p_.size(); i += 2) {
        encrypt_block(l, r);
        p_[i] = l;
        p_[i + 1] = r;
    }
    for (auto& box : s_) {
        for (std::size_t i = 0; i < box.size(); i += 2) {
            encrypt_block(l, r);
            box[i] = l;
            box[i + 1] = r;
        }
    }
}

std::uint32_t Blowfish::feistel(std::uint32_t x) const {
    const std::uint32_t a = s_[0][x >> 24];
    const std::uint32_t b = s_[1][x >> 16 & 0xff];
    const std::uint32_t c = s_[2][x >> 8 & 0xff];
    const std::uint32_t d = s_[3][x & 0xff];
    return ((a + b) ^ c) + d;
}

void Blowfish::encrypt_block(std::uint32_t& left, std::uint32_t& right) const {
    std::uint32_t l = left, r = right;
    for (int i = 0; i < 16; i += 2) {
        l ^= p_[i];
        r ^= feistel(l);
        r ^= p_[i + 1];
        l ^= feistel(r);
    }
    l ^= p_[16];
    r ^= p_[17];
    left = r;
    right = l;
}

void Blowfish::decrypt_block(std::uint32_t& left, std::uint32_t& right) const {
    std::uint32_t l = left, r = right;
    for (int i = 16; i > 0; i -= 2) {
        l ^= p_[i + 1];
        r ^= feistel(l);
        r ^= p_[i];
        l ^= feistel(r);
    }
    l ^= p_[1];
    r ^= p_[0];
    left = r;
    right = l;
}

static std::uint32_t load_be32(const std::uint8_t* p) {
    return std::uint32_t(p[0]) << 24 | std::uint32_t(p[1]) << 16 | std::uint32_t(p[2]) << 8 |
           std::uint32_t(p[3]);
}

static void store_be32(std::uint8_t* p, std::uint32_t v) {
    p[0] = static_cast<std::uint8_t>(v >> 24);
    p[1] = static_cast<std::uint8_t>(v >> 16);
    p[2] = static_cast<std::uint8_t>(v >> 8);
    p[3] = static_cast<std::uint8_t>(v);
}

Bytes blowfish_cbc_encrypt(BytesView key, const std::array<std::uint8_t, 8>& iv, BytesView plaintext) {
    Blowfish bf(key);

    const std::size_t pad = 8 - plaintext.size() % 8;
    Bytes buf(plaintext.begin(), plaintext.end());
    buf.insert(buf.end(), pad, static_cast<std::uint8_t>(pad));

    std::uint32_t cl = load_be32(iv.data());
    std::uint32_t cr = load_be32(iv.data() + 4);
    for (std::size_t i = 0; i < buf.size(); i += 8) {
        std::uint32_t l = load_be32(&buf[i]) ^ cl;
        std::uint32_t r = load_be32(&buf[i + 4]) ^ cr;
        bf.encrypt_block(l, r);
        store_be32(&buf[i], l);
        store_be32(&buf[i + 4], r);
        cl = l;
        cr = r;
    }
    return buf;
}

Bytes blowfish_cbc_decrypt(BytesView key, const std::array<std::uint8_t, 8>& iv, BytesView ciphertext) {
    if (ciphertext.empty() || ciphertext.size() % 8 != 0)
        fail(Errc::length_mismatch, "ciphertext not a positive multiple of the block size");
    Blowfish bf(key);

    Bytes out(ciphertext.size());
    std::uint32_t cl = load_be32(iv.data());
    std::uint32_t cr = load_be32(iv.data() + 4);
    for (std::size_t i = 0; i < ciphertext.size(); i += 8) {
        std::uint32_t l = load_be32(&ciphertext[i]);
        std::uint32_t r = load_be32(&ciphertext[i + 4]);
        const std::uint32_t nl = l, nr = r;
        bf.decrypt_block(l, r);
        store_be32(&out[i], l ^ cl);
        store_be32(&out[i + 4], r ^ cr);
        cl = nl;
        cr = nr;
    }

    const std::uint8_t pad = out.back();
    if (pad == 0 || pad > 8 || pad > out.size()) fail(Errc::padding, "invalid PKCS#7 padding");
    for (std::size_t i = out.size() - pad; i < out.size(); ++i)
        if (out[i] != pad) fail(Errc::padding, "invalid PKCS#7 padding");
    out.resize(out.size() - pad);
    return out;
}

} // namespace graffiti
