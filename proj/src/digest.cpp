#include "graffiti/digest.hpp"

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

#include "graffiti/bytes.hpp"

namespace graffiti {

Bytes sha256(BytesView data) {
    Bytes out(32);
    unsigned int len = 0;
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                                EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), out.data(), &len) != 1 || len != 32) {
        throw std::runtime_error("sha256: EVP failure");
    }
    return out;
}

std::string sha256_hex(BytesView data) { return to_hex(sha256(data)); }

} // namespace graffiti
