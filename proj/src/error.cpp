#include "graffiti/error.hpp"

namespace graffiti {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::geometry: return "geometry";
        case Errc::empty_input: return "empty_input";
        case Errc::length_mismatch: return "length_mismatch";
        case Errc::incomplete: return "incomplete";
        case Errc::corruption: return "corruption";
        case Errc::base64_syntax: return "base64_syntax";
        case Errc::padding: return "padding";
        case Errc::checksum_mismatch: return "checksum_mismatch";
        case Errc::marker_not_found: return "marker_not_found";
        case Errc::marker_truncated: return "marker_truncated";
        case Errc::not_tracked: return "not_tracked";
        case Errc::stale_pair: return "stale_pair";
        case Errc::duplicate_location: return "duplicate_location";
        case Errc::throttled: return "throttled";
        case Errc::banned: return "banned";
        case Errc::starvation: return "starvation";
        case Errc::target_exhaustion: return "target_exhaustion";
        case Errc::upload_failed: return "upload_failed";
        case Errc::parse: return "parse";
        case Errc::io: return "io";
        case Errc::http: return "http";
        case Errc::site_unknown: return "site_unknown";
        case Errc::page_missing: return "page_missing";
        case Errc::site_unreachable: return "site_unreachable";
        case Errc::edit_refused: return "edit_refused";
        case Errc::usage: return "usage";
    }
    return "unknown";
}

} // namespace graffiti
