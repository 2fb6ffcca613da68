#include "graffiti/sitehost.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>

#include "graffiti/bytes.hpp"
#include "graffiti/error.hpp"
#include "graffiti/wordlist.hpp"

namespace graffiti {

int PopulationSpec::total() const {
    int n = 0;
    for (const auto& [p, c] : counts) n += c;
    return n;
}

std::map<DomainClass, double> PopulationSpec::default_domain_mix() {
    return {{DomainClass::com, 0.425},
            {DomainClass::edu, 0.032},
            {DomainClass::org, 0.241},
            {DomainClass::us_other, 0.140},
            {DomainClass::non_us_other, 0.161}};
}

Json PopulationSpec::to_json() const {
    Json counts_j = Json::object();
    for (const auto& [p, c] : counts) counts_j[protection_name(p)] = c;
    Json mix_j = Json::object();
    for (const auto& [d, w] : domain_mix) mix_j[domain_class_name(d)] = w;
    Json j{{"counts", counts_j},
           {"domain_mix", mix_j},
           {"recent_changes_window_days", recent_changes_window_days},
           {"owner_inactive_days_min", owner_inactive_days_min},
           {"owner_inactive_days_max", owner_inactive_days_max}};
    j["lockdown_after_days"] = lockdown_after_days ? Json(*lockdown_after_days) : Json(nullptr);
    return j;
}

PopulationSpec PopulationSpec::from_json(const Json& j) {
    PopulationSpec spec;
    spec.domain_mix = default_domain_mix();
    try {
        for (auto& [name, value] : j.at("counts").items()) {
            int n = value.get<int>();
            if (n < 0) fail(Errc::parse, "site counts must be non-negative");
            spec.counts[protection_from_name(name)] = n;
        }
        if (j.contains("domain_mix")) {
            spec.domain_mix.clear();
            for (auto& [name, value] : j["domain_mix"].items())
                spec.domain_mix[domain_class_from_name(name)] = value.get<double>();
        }
        spec.recent_changes_window_days = j.value("recent_changes_window_days", 7);
        if (j.contains("lockdown_after_days") && !j["lockdown_after_days"].is_null())
            spec.lockdown_after_days = j["lockdown_after_days"].get<int>();
        spec.owner_inactive_days_min = j.value("owner_inactive_days_min", 0);
        spec.owner_inactive_days_max = j.value("owner_inactive_days_max", 0);
    } catch (const Json::exception& e) {
        fail(Errc::parse, std::string("bad population spec: ") + e.what());
    }
    return spec;
}

static std::string domain_suffix(DomainClass d, Rng& rng) {
    static const std::vector<std::string> kStates = {"ca.us", "ny.us", "tx.us", "wa.us", "ma.us"};
    static const std::vector<std::string> kCountries = {"de", "fr", "jp", "nl", "se",
                                                        "ru", "br", "in", "pl", "uk"};
    switch (d) {
        case DomainClass::com: return "com";
        case DomainClass::edu: return "edu";
        case DomainClass::org: return "org";
        case DomainClass::us_other: return kStates[rng.uniform(kStates.size())];
        case DomainClass::non_us_other: return kCountries[rng.uniform(kCountries.size())];
    }
    return "com";
}

std::vector<SiteRecord> create_population(const PopulationSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    const auto& words = wordlist();

    std::vector<Protection> protections;
    for (Protection p : kProtections) {
        auto it = spec.counts.find(p);
        if (it == spec.counts.end()) continue;
        protections.insert(protections.end(), static_cast<std::size_t>(it->second), p);
    }
    rng.shuffle(protections);

    // Cumulative weights for domain draws.
    std::vector<std::pair<DomainClass, double>> cumulative;
    double acc = 0;
    for (DomainClass d : kDomainClasses) {
        auto it = spec.domain_mix.find(d);
        if (it == spec.domain_mix.end() || it->second <= 0) continue;
        acc += it->second;
        cumulative.emplace_back(d, acc);
    }
    if (cumulative.empty()) fail(Errc::parse, "domain mix is empty");

    std::vector<SiteRecord> sites;
    sites.reserve(protections.size());
    for (std::size_t i = 0; i < protections.size(); ++i) {
        SiteRecord s;
        std::string id = std::to_string(i);
        s.site_id = "s" + std::string(id.size() < 4 ? 4 - id.size() : 0, '0') + id;
        s.protection = protections[i];

        const double u = rng.uniform01() * acc;
        s.domain_class = cumulative.back().first;
        for (const auto& [d, edge] : cumulative)
            if (u < edge) {
                s.domain_class = d;
                break;
            }

        s.hostname = words[rng.uniform(words.size())] + "." + domain_suffix(s.domain_class, rng);
        s.policies.recent_changes_window_days = spec.recent_changes_window_days;
        s.policies.lockdown_after_days = spec.lockdown_after_days;

        const int span = spec.owner_inactive_days_max - spec.owner_inactive_days_min;
        const int inactive_days =
            spec.owner_inactive_days_min +
            (span > 0 ? static_cast<int>(rng.uniform(static_cast<std::uint64_t>(span) + 1)) : 0);
        s.last_owner_activity = -static_cast<std::int64_t>(inactive_days) * 86400;
        sites.push_back(std::move(s));
    }
    return sites;
}

const char* edit_status_name(EditStatus s) {
    switch (s) {
        case EditStatus::accepted: return "accepted";
        case EditStatus::needs_account: return "needs_account";
        case EditStatus::wrong_puzzle: return "wrong_puzzle";
        case EditStatus::captcha_required: return "captcha_required";
        case EditStatus::locked_down: return "locked_down";
        case EditStatus::closed: return "closed";
        case EditStatus::unreachable: return "unreachable";
    }
    return "unknown";
}

SiteHost::SiteHost(const PopulationSpec& spec, std::uint64_t seed)
    : sites_(create_population(spec, seed)), rng_(seed ^ 0x5173e0b7a9d2c4f1ull) {
    for (std::size_t i = 0; i < sites_.size(); ++i) index_[sites_[i].site_id] = i;
}

SiteRecord& SiteHost::site(const std::string& site_id) {
    auto it = index_.find(site_id);
    if (it == index_.end()) fail(Errc::site_unknown, "no such site: " + site_id);
    return sites_[it->second];
}

const SiteRecord& SiteHost::site(const std::string& site_id) const {
    auto it = index_.find(site_id);
    if (it == index_.end()) fail(Errc::site_unknown, "no such site: " + site_id);
    return sites_[it->second];
}

std::string SiteHost::register_user(const std::string& site_id, const std::string& username) {
    SiteRecord& s = site(site_id);
    if (!s.alive) fail(Errc::site_unreachable, site_id + " is gone");
    // Open registration, no CAPTCHA or email step.
    std::string token = to_hex(rng_.bytes(8));
    s.tokens[token] = username.empty() ? "user" : username;
    return token;
}

Challenge SiteHost::issue_challenge(const std::string& site_id) {
    SiteRecord& s = site(site_id);
    if (!s.alive) fail(Errc::site_unreachable, site_id + " is gone");

    const std::uint64_t kind = rng_.uniform(3);
    std::int64_t a, b, answer;
    std::string op;
    if (kind == 0) {
        a = 1 + static_cast<std::int64_t>(rng_.uniform(50));
        b = 1 + static_cast<std::int64_t>(rng_.uniform(50));
        op = "+";
        answer = a + b;
    } else if (kind == 1) {
        a = 1 + static_cast<std::int64_t>(rng_.uniform(50));
        b = 1 + static_cast<std::int64_t>(rng_.uniform(50));
        op = "\xe2\x88\x92"; // U+2212 minus sign
        answer = a - b;
    } else {
        a = 2 + static_cast<std::int64_t>(rng_.uniform(11));
        b = 2 + static_cast<std::int64_t>(rng_.uniform(11));
        op = "\xc3\x97"; // U+00D7 multiplication sign
        answer = a * b;
    }

    Challenge c;
    c.puzzle_id = "p" + std::to_string(puzzle_counter_++) + "-" + to_hex(rng_.bytes(4));
    c.challenge = "What is " + std::to_string(a) + " " + op + " " + std::to_string(b) + "?";
    s.puzzles[c.puzzle_id] = {answer, clock_.now()};
    return c;
}

EditResult SiteHost::edit_page(const std::string& site_id, const std::string& title,
                               const std::string& content, const std::optional<std::string>& token,
                               const std::optional<std::string>& puzzle_id,
                               const std::optional<std::string>& puzzle_answer) {
    SiteRecord& s = site(site_id);
    if (!s.alive) return {EditStatus::unreachable, 0};

    if (s.protection == Protection::closed) return {EditStatus::closed, 0};
    if (s.protection == Protection::captcha) return {EditStatus::captcha_required, 0};

    if (s.policies.lockdown_after_days) {
        const std::int64_t idle_days = (clock_.now() - s.last_owner_activity) / 86400;
        if (idle_days > *s.policies.lockdown_after_days) return {EditStatus::locked_down, 0};
    }

    std::string author = "anonymous";
    if (s.protection == Protection::registration) {
        if (!token) return {EditStatus::needs_account, 0};
        auto it = s.tokens.find(*token);
        if (it == s.tokens.end()) return {EditStatus::needs_account, 0};
        author = it->second;
    } else if (s.protection == Protection::puzzle) {
        if (!puzzle_id || !puzzle_answer) return {EditStatus::wrong_puzzle, 0};
        auto it = s.puzzles.find(*puzzle_id);
        if (it == s.puzzles.end()) return {EditStatus::wrong_puzzle, 0};
        const SiteRecord::Puzzle p = it->second;
        s.puzzles.erase(it); // single use
        if (clock_.now() - p.issued_at >= 600) return {EditStatus::wrong_puzzle, 0};
        errno = 0;
        char* end = nullptr;
        const long long given = std::strtoll(puzzle_answer->c_str(), &end, 10);
        if (end == puzzle_answer->c_str() || *end != '\0' || given != p.answer)
            return {EditStatus::wrong_puzzle, 0};
    }

    auto& revisions = s.pages[title];
    Revision r;
    r.revision_id = revisions.empty() ? 1 : revisions.back().revision_id + 1;
    r.timestamp = clock_.now();
    r.author = author;
    r.content = content;
    revisions.push_back(std::move(r));
    return {EditStatus::accepted, revisions.back().revision_id};
}

std::string wrap_page_html(const std::string& hostname, const std::string& title,
                           const std::string& content) {
    std::string html = "<!DOCTYPE html>\n<html>\n<head><title>";
    html += title + " - " + hostname;
    html += "</title></head>\n<body>\n<h1>" + title + "</h1>\n<div class=\"mw-content\"><pre>\n";
    html += content;
    html += "\n</pre></div>\n</body>\n</html>\n";
    return html;
}

GetResult SiteHost::get_page(const std::string& site_id, const std::string& title) const {
    const SiteRecord& s = site(site_id);
    if (!s.alive) return {GetStatus::unreachable, "", ""};

    auto it = s.pages.find(title);
    if (it == s.pages.end()) return {GetStatus::page_missing, "", ""};

    // Latest revision that has not been reverted by the owner.
    const std::vector<Revision>& revs = it->second;
    for (auto rit = revs.rbegin(); rit != revs.rend(); ++rit) {
        if (rit->is_reverted) continue;
        return {GetStatus::ok, wrap_page_html(s.hostname, title, rit->content), rit->content};
    }
    return {GetStatus::page_missing, "", ""};
}

std::vector<Revision> SiteHost::get_history(const std::string& site_id,
                                            const std::string& title) const {
    const SiteRecord& s = site(site_id);
    if (!s.alive) fail(Errc::site_unreachable, site_id + " is gone");
    auto it = s.pages.find(title);
    if (it == s.pages.end()) fail(Errc::page_missing, "no page " + title + " on " + site_id);
    return it->second;
}

std::vector<RecentChange> SiteHost::recent_changes(const std::string& site_id) const {
    const SiteRecord& s = site(site_id);
    if (!s.alive) fail(Errc::site_unreachable, site_id + " is gone");

    const std::int64_t window =
        static_cast<std::int64_t>(s.policies.recent_changes_window_days) * 86400;
    std::vector<RecentChange> out;
    for (const auto& [title, revs] : s.pages)
        for (const Revision& r : revs)
            if (clock_.now() - r.timestamp < window) out.push_back({title, r.revision_id, r.timestamp});

    std::sort(out.begin(), out.end(), [](const RecentChange& a, const RecentChange& b) {
        if (a.timestamp != b.timestamp) return a.timestamp > b.timestamp;
        if (a.title != b.title) return a.title < b.title;
        return a.revision_id > b.revision_id;
    });
    return out;
}

void SiteHost::revert_latest(const std::string& site_id, const std::string& title) {
    SiteRecord& s = site(site_id);
    auto it = s.pages.find(title);
    if (it == s.pages.end()) fail(Errc::page_missing, "no page " + title);
    for (auto rit = it->second.rbegin(); rit != it->second.rend(); ++rit) {
        if (!rit->is_reverted) {
            rit->is_reverted = true;
            s.last_owner_activity = clock_.now();
            return;
        }
    }
}

void SiteHost::delete_page(const std::string& site_id, const std::string& title) {
    SiteRecord& s = site(site_id);
    s.pages.erase(title);
    s.last_owner_activity = clock_.now();
}

void SiteHost::kill_site(const std::string& site_id) { site(site_id).alive = false; }

std::vector<ModerationEvent> SiteHost::moderate_site(SiteRecord& s, std::int64_t day) {
    std::vector<ModerationEvent> events;
    if (!s.alive) return events;

    if (rng_.bernoulli(hazards_.site_death_hazard(day))) {
        s.alive = false;
        events.push_back({ModerationEvent::Kind::site_died, day, s.site_id, ""});
        return events;
    }

    const std::int64_t window =
        static_cast<std::int64_t>(s.policies.recent_changes_window_days) * 86400;
    std::vector<std::string> removed;
    for (auto& [title, revs] : s.pages) {
        if (revs.empty()) continue;
        const std::int64_t age_days = day - revs.front().timestamp / 86400;
        const bool visible = clock_.now() - revs.back().timestamp < window;
        const double h = hazards_.removal_hazard(s.protection, age_days, visible);
        if (rng_.bernoulli(h)) {
            removed.push_back(title);
            continue;
        }
        if (hazards_.mutation_hazard > 0 && rng_.bernoulli(hazards_.mutation_hazard)) {
            // A vandal or bot scrambles the middle of the latest revision.
            Revision r = revs.back();
            r.revision_id += 1;
            r.timestamp = clock_.now();
            r.author = "anonymous";
            if (!r.content.empty()) {
                const std::size_t at = r.content.size() / 2;
                r.content[at] = r.content[at] == 'x' ? 'y' : 'x';
            }
            revs.push_back(std::move(r));
            events.push_back({ModerationEvent::Kind::page_changed, day, s.site_id, title});
        }
    }
    for (const std::string& title : removed) {
        s.pages.erase(title);
        events.push_back({ModerationEvent::Kind::page_removed, day, s.site_id, title});
    }
    return events;
}

std::vector<ModerationEvent> SiteHost::tick_days(int days) {
    std::vector<ModerationEvent> events;
    for (int i = 0; i < days; ++i) {
        clock_.advance(86400);
        const std::int64_t d = day();
        for (SiteRecord& s : sites_) {
            auto ev = moderate_site(s, d);
            events.insert(events.end(), ev.begin(), ev.end());
        }
    }
    return events;
}

Json SiteHost::admin_state() const {
    Json sites_j = Json::array();
    for (const SiteRecord& s : sites_) {
        sites_j.push_back({{"site_id", s.site_id},
                           {"hostname", s.hostname},
                           {"protection", protection_name(s.protection)},
                           {"domain_class", domain_class_name(s.domain_class)},
                           {"alive", s.alive},
                           {"pages", s.pages.size()}});
    }
    return Json{{"day", day()}, {"now", clock_.now()}, {"sites", sites_j}};
}

} // namespace graffiti
