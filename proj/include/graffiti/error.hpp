#pragma once

#include <stdexcept>
#include <string>

namespace graffiti {

// One error vocabulary for the whole stack so callers can classify
// failures (and the HTTP layers can map them to wire error codes)
// without string matching.
enum class Errc {
    geometry,
    empty_input,
    length_mismatch,
    incomplete,
    corruption,
    base64_syntax,
    padding,
    checksum_mismatch,
    marker_not_found,
    marker_truncated,
    not_tracked,
    stale_pair,
    duplicate_location,
    throttled,
    banned,
    starvation,
    target_exhaustion,
    upload_failed,
    parse,
    io,
    http,
    site_unknown,
    page_missing,
    site_unreachable,
    edit_refused,
    usage,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace graffiti
