#include "graffiti/adapter.hpp"

#include <mutex>

#include "graffiti/canonical_json.hpp"
#include "graffiti/error.hpp"
#include "graffiti/httpfetch.hpp"

namespace graffiti {

std::int64_t solve_arithmetic_puzzle(const std::string& challenge) {
    static const std::string kPrefix = "What is ";
    if (challenge.rfind(kPrefix, 0) != 0) fail(Errc::parse, "unrecognized challenge: " + challenge);
    std::size_t pos = kPrefix.size();

    auto skip_spaces = [&] {
        while (pos < challenge.size() && challenge[pos] == ' ') ++pos;
    };
    auto read_int = [&]() -> std::int64_t {
        skip_spaces();
        bool neg = false;
        if (pos < challenge.size() && challenge[pos] == '-') {
            neg = true;
            ++pos;
        }
        if (pos >= challenge.size() || !isdigit(static_cast<unsigned char>(challenge[pos])))
            fail(Errc::parse, "expected a number in: " + challenge);
        std::int64_t v = 0;
        while (pos < challenge.size() && isdigit(static_cast<unsigned char>(challenge[pos])))
            v = v * 10 + (challenge[pos++] - '0');
        return neg ? -v : v;
    };

    const std::int64_t a = read_int();
    skip_spaces();
    std::size_t op_end = challenge.find(' ', pos);
    if (op_end == std::string::npos) fail(Errc::parse, "no operator in: " + challenge);
    const std::string op = challenge.substr(pos, op_end - pos);
    pos = op_end;
    const std::int64_t b = read_int();
    skip_spaces();
    if (pos >= challenge.size() || challenge[pos] != '?')
        fail(Errc::parse, "challenge does not end with '?': " + challenge);

    if (op == "+") return a + b;
    if (op == "-" || op == "\xe2\x88\x92") return a - b;
    if (op == "x" || op == "*" || op == "\xc3\x97") return a * b;
    fail(Errc::parse, "unknown operator '" + op + "' in: " + challenge);
}

SiteAdapter::Page MockWikiAdapter::get_page(const std::string& location) {
    const HttpResponse res = http_get(location);
    if (res.connect_failed) return {Page::Kind::network_error, ""};
    if (res.status == 200) return {Page::Kind::ok, res.body};
    if (res.status == 404) return {Page::Kind::missing, ""};
    if (res.status == 503) return {Page::Kind::dead, ""};
    return {Page::Kind::network_error, ""};
}

SiteAdapter::EditOutcome MockWikiAdapter::create_page(const SiteTarget& target,
                                                      const std::string& title,
                                                      const std::string& content) {
    Json body{{"title", title}, {"content", content}};

    if (target.protection == "registration") {
        auto it = tokens_.find(target.base_url);
        if (it == tokens_.end()) {
            const HttpResponse reg = http_post_json(target.base_url + "/register",
                                                    Json{{"username", "mirrorbot"}}.dump());
            if (reg.status != 200) return {false, "", reg.status == 503 ? "unreachable" : "register_failed"};
            it = tokens_.emplace(target.base_url, parse_json(reg.body).value("token", "")).first;
        }
        body["token"] = it->second;
    } else if (target.protection == "puzzle") {
        const HttpResponse ch = http_post_json(target.base_url + "/challenge", "{}");
        if (ch.status != 200) return {false, "", ch.status == 503 ? "unreachable" : "challenge_failed"};
        const Json challenge = parse_json(ch.body);
        std::int64_t answer = 0;
        try {
            answer = solve_arithmetic_puzzle(challenge.at("challenge").get<std::string>());
        } catch (const Error&) {
            return {false, "", "puzzle_unsolvable"};
        }
        body["puzzle_id"] = challenge.value("puzzle_id", "");
        body["puzzle_answer"] = std::to_string(answer);
    }

    const HttpResponse res = http_post_json(target.base_url + "/edit", body.dump());
    if (res.connect_failed) return {false, "", "network_error"};
    if (res.status == 200) return {true, target.base_url + "/wiki/" + title, ""};
    if (res.status == 503) return {false, "", "unreachable"};
    if (res.status == 403) return {false, "", parse_json(res.body).value("refused", "refused")};
    return {false, "", "http_" + std::to_string(res.status)};
}

InProcessAdapter::InProcessAdapter(SiteHost& host, std::string base_prefix)
    : host_(host), prefix_(std::move(base_prefix)) {}

// Locations look like <prefix>/site/<id>/wiki/<title>.
static bool parse_site_location(const std::string& location, std::string& site_id,
                                std::string& title) {
    const std::size_t at = location.find("/site/");
    if (at == std::string::npos) return false;
    const std::size_t id_start = at + 6;
    const std::size_t id_end = location.find('/', id_start);
    if (id_end == std::string::npos) return false;
    if (location.compare(id_end, 6, "/wiki/") != 0) return false;
    site_id = location.substr(id_start, id_end - id_start);
    title = location.substr(id_end + 6);
    return !site_id.empty() && !title.empty();
}

static std::mutex g_inprocess_mutex;

SiteAdapter::Page InProcessAdapter::get_page(const std::string& location) {
    std::string site_id, title;
    if (!parse_site_location(location, site_id, title)) return {Page::Kind::network_error, ""};
    std::lock_guard<std::mutex> lock(g_inprocess_mutex);
    try {
        const GetResult r = host_.get_page(site_id, title);
        if (r.status == GetStatus::unreachable) return {Page::Kind::dead, ""};
        if (r.status == GetStatus::page_missing) return {Page::Kind::missing, ""};
        return {Page::Kind::ok, r.html};
    } catch (const Error&) {
        return {Page::Kind::network_error, ""};
    }
}

SiteAdapter::EditOutcome InProcessAdapter::create_page(const SiteTarget& target,
                                                       const std::string& title,
                                                       const std::string& content) {
    std::lock_guard<std::mutex> lock(g_inprocess_mutex);
    std::optional<std::string> token, puzzle_id, puzzle_answer;
    try {
        if (target.protection == "registration") {
            auto it = tokens_.find(target.site_id);
            if (it == tokens_.end())
                it = tokens_.emplace(target.site_id, host_.register_user(target.site_id, "mirrorbot"))
                         .first;
            token = it->second;
        } else if (target.protection == "puzzle") {
            const Challenge c = host_.issue_challenge(target.site_id);
            puzzle_id = c.puzzle_id;
            puzzle_answer = std::to_string(solve_arithmetic_puzzle(c.challenge));
        }
        const EditResult r =
            host_.edit_page(target.site_id, title, content, token, puzzle_id, puzzle_answer);
        if (r.status == EditStatus::accepted)
            return {true, prefix_ + "/site/" + target.site_id + "/wiki/" + title, ""};
        if (r.status == EditStatus::unreachable) return {false, "", "unreachable"};
        return {false, "", edit_status_name(r.status)};
    } catch (const Error& e) {
        return {false, "", errc_name(e.code())};
    }
}

std::unique_ptr<SiteAdapter> make_adapter(const std::string& name) {
    if (name == "mockwiki") return std::make_unique<MockWikiAdapter>();
    fail(Errc::usage, "unknown adapter: " + name);
}

} // namespace graffiti
