#pragma once

#include <string>

namespace graffiti {

struct UrlParts {
    std::string origin; // scheme://host[:port]
    std::string path;   // begins with '/'
};
UrlParts split_url(const std::string& url); // throws Errc::parse

struct HttpResponse {
    int status = 0; // 0 when the connection itself failed
    std::string body;
    bool connect_failed = false;
};

HttpResponse http_get(const std::string& url, int timeout_seconds = 5);
HttpResponse http_post_json(const std::string& url, const std::string& body,
                            int timeout_seconds = 5);

} // namespace graffiti
