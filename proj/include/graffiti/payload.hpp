#pragma once

#include <array>
#include <string>
#include <vector>

#include "graffiti/bytes.hpp"
#include "graffiti/rng.hpp"

namespace graffiti {

inline constexpr std::size_t kMarkerLength = 16;

// Per-replica 128-bit encryption key; every replica gets a fresh one so
// identical sub-pieces never share ciphertext.
struct ReplicaKey {
    Bytes key_bytes; // exactly 16

    std::string hex() const { return to_hex(key_bytes); }
    static ReplicaKey from_hex(const std::string& h);

    bool operator==(const ReplicaKey&) const = default;
};

ReplicaKey generate_key(Rng& rng);

// The page-storable form of one sub-piece: Blowfish-CBC ciphertext,
// base64 encoded, located later by its first and last 16 characters.
struct EncodedPayload {
    std::string text;
    std::string start_marker;
    std::string end_marker;
    std::string plaintext_checksum;
};

EncodedPayload encode_payload(BytesView subpiece, const ReplicaKey& key);

// Page layout, bit exact: "<notice>\n\n<tracking_url>\n\n<text>\n"; the
// tracking line and its following blank line are omitted when the URL is
// empty.
std::string wrap_page(const EncodedPayload& payload, const std::string& notice,
                      const std::string& tracking_url);

// All candidate spans from an occurrence of start_marker to the end of a
// later occurrence of end_marker, in page order. The caller tries each;
// the checksum disambiguates. Throws Errc::marker_not_found /
// Errc::marker_truncated when no span exists.
std::vector<std::string> extract_payload(const std::string& page, const std::string& start_marker,
                                         const std::string& end_marker);

// Reverses the encoding and verifies the digest; the three failure modes
// (base64_syntax, padding, checksum_mismatch) stay distinct so callers can
// report replica status precisely. Never returns bytes whose digest differs
// from expected_checksum.
Bytes decode_payload(const std::string& text, const ReplicaKey& key,
                     const std::string& expected_checksum);

// The CBC IV for a replica is derived from its key, which keeps encoding
// deterministic per (data, key) without reusing an IV across keys.
std::array<std::uint8_t, 8> payload_iv(const ReplicaKey& key);

} // namespace graffiti
