#include "graffiti/httpfetch.hpp"

#include <httplib.h>

#include "graffiti/error.hpp"

namespace graffiti {

UrlParts split_url(const std::string& url) {
    const std::size_t scheme = url.find("://");
    if (scheme == std::string::npos) fail(Errc::parse, "not an absolute URL: " + url);
    const std::size_t slash = url.find('/', scheme + 3);
    if (slash == std::string::npos) return {url, "/"};
    return {url.substr(0, slash), url.substr(slash)};
}

HttpResponse http_get(const std::string& url, int timeout_seconds) {
    const UrlParts parts = split_url(url);
    httplib::Client cli(parts.origin);
    cli.set_connection_timeout(timeout_seconds);
    cli.set_read_timeout(timeout_seconds);
    auto res = cli.Get(parts.path);
    if (!res) return {0, "", true};
    return {res->status, res->body, false};
}

HttpResponse http_post_json(const std::string& url, const std::string& body, int timeout_seconds) {
    const UrlParts parts = split_url(url);
    httplib::Client cli(parts.origin);
    cli.set_connection_timeout(timeout_seconds);
    cli.set_read_timeout(timeout_seconds);
    auto res = cli.Post(parts.path, body, "application/json");
    if (!res) return {0, "", true};
    return {res->status, res->body, false};
}

} // namespace graffiti
