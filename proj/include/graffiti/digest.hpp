#pragma once

#include <string>

#include "graffiti/bytes.hpp"

namespace graffiti {

// SHA-256, lowercase hex. Backed by OpenSSL's EVP interface; the test
// suite carries its own independent implementation to check against.
Bytes sha256(BytesView data);
std::string sha256_hex(BytesView data);

inline std::string sha256_hex(const std::string& s) { return sha256_hex(as_bytes(s)); }

} // namespace graffiti
