#pragma once

#include <map>
#include <memory>
#include <string>

#include "graffiti/sitehost.hpp"

namespace graffiti {

struct SiteTarget {
    std::string site_id;
    std::string base_url;   // http://host:port/site/<id>
    std::string protection; // hint from the tracker
};

// How the client talks to storage sites. The shipped implementation talks
// to the mock wiki service over HTTP; tests may substitute an in-process
// adapter bound directly to a SiteHost.
class SiteAdapter {
public:
    virtual ~SiteAdapter() = default;
    virtual std::string name() const = 0;

    struct Page {
        enum class Kind { ok, missing, dead, network_error } kind = Kind::network_error;
        std::string body;
    };
    virtual Page get_page(const std::string& location) = 0;

    struct EditOutcome {
        bool ok = false;
        std::string location;
        std::string refusal; // machine readable reason when !ok
    };
    virtual EditOutcome create_page(const SiteTarget& target, const std::string& title,
                                    const std::string& content) = 0;
};

// Parses the mock sites' arithmetic gate, e.g. "What is 6 × 7?". Accepts
// ASCII '-', 'x' and '*' next to the typographic minus and times signs.
// Throws Errc::parse on anything else.
std::int64_t solve_arithmetic_puzzle(const std::string& challenge);

class MockWikiAdapter final : public SiteAdapter {
public:
    std::string name() const override { return "mockwiki"; }
    Page get_page(const std::string& location) override;
    EditOutcome create_page(const SiteTarget& target, const std::string& title,
                            const std::string& content) override;

private:
    std::map<std::string, std::string> tokens_; // site base_url -> bearer token
};

// Direct binding to an in-process SiteHost; locations use the given base
// prefix (e.g. "mock://sites") so they stay parseable.
class InProcessAdapter final : public SiteAdapter {
public:
    InProcessAdapter(SiteHost& host, std::string base_prefix);
    std::string name() const override { return "inprocess"; }
    Page get_page(const std::string& location) override;
    EditOutcome create_page(const SiteTarget& target, const std::string& title,
                            const std::string& content) override;

private:
    SiteHost& host_;
    std::string prefix_;
    std::map<std::string, std::string> tokens_;
};

std::unique_ptr<SiteAdapter> make_adapter(const std::string& name); // throws Errc::usage

} // namespace graffiti
