#include "graffiti/payload.hpp"

#include <algorithm>

#include "graffiti/base64.hpp"
#include "graffiti/blowfish.hpp"
#include "graffiti/digest.hpp"
#include "graffiti/error.hpp"

namespace graffiti {

ReplicaKey ReplicaKey::from_hex(const std::string& h) {
    ReplicaKey k{graffiti::from_hex(h)};
    if (k.key_bytes.size() != 16) fail(Errc::parse, "replica key must be 16 bytes");
    return k;
}

ReplicaKey generate_key(Rng& rng) { return ReplicaKey{rng.bytes(16)}; }

std::array<std::uint8_t, 8> payload_iv(const ReplicaKey& key) {
    const Bytes digest = sha256(key.key_bytes);
    std::array<std::uint8_t, 8> iv{};
    std::copy_n(digest.begin(), 8, iv.begin());
    return iv;
}

EncodedPayload encode_payload(BytesView subpiece, const ReplicaKey& key) {
    if (subpiece.empty()) fail(Errc::empty_input, "cannot encode an empty sub-piece");
    if (key.key_bytes.size() != 16) fail(Errc::parse, "replica key must be 16 bytes");

    EncodedPayload out;
    out.plaintext_checksum = sha256_hex(subpiece);
    out.text = base64_encode(blowfish_cbc_encrypt(key.key_bytes, payload_iv(key), subpiece));
    out.start_marker = out.text.substr(0, kMarkerLength);
    out.end_marker = out.text.substr(out.text.size() - kMarkerLength);
    return out;
}

std::string wrap_page(const EncodedPayload& payload, const std::string& notice,
                      const std::string& tracking_url) {
    std::string page = notice;
    page += "\n\n";
    if (!tracking_url.empty()) {
        page += tracking_url;
        page += "\n\n";
    }
    page += payload.text;
    page += '\n';
    return page;
}

std::vector<std::string> extract_payload(const std::string& page, const std::string& start_marker,
                                         const std::string& end_marker) {
    if (start_marker.size() != kMarkerLength || end_marker.size() != kMarkerLength)
        fail(Errc::parse, "markers must be 16 characters");

    std::vector<std::size_t> starts;
    for (std::size_t pos = page.find(start_marker); pos != std::string::npos;
         pos = page.find(start_marker, pos + 1))
        starts.push_back(pos);
    if (starts.empty()) fail(Errc::marker_not_found, "start marker not present");

    // Candidate cap guards against pathological pages full of marker copies.
    constexpr std::size_t kMaxCandidates = 64;
    std::vector<std::string> spans;
    for (std::size_t s : starts) {
        for (std::size_t pos = page.find(end_marker, s + start_marker.size());
             pos != std::string::npos; pos = page.find(end_marker, pos + 1)) {
            spans.push_back(page.substr(s, pos + end_marker.size() - s));
            if (spans.size() >= kMaxCandidates) return spans;
        }
    }
    if (spans.empty()) fail(Errc::marker_truncated, "no end marker after the start marker");
    return spans;
}

Bytes decode_payload(const std::string& text, const ReplicaKey& key,
                     const std::string& expected_checksum) {
    const Bytes ciphertext = base64_decode(text);
    Bytes plain;
    try {
        plain = blowfish_cbc_decrypt(key.key_bytes, payload_iv(key), ciphertext);
    } catch (const Error& e) {
        if (e.code() == Errc::length_mismatch) fail(Errc::padding, "truncated ciphertext");
        throw;
    }
    if (sha256_hex(plain) != expected_checksum)
        fail(Errc::checksum_mismatch, "decoded bytes do not match the expected checksum");
    return plain;
}

} // namespace graffiti
