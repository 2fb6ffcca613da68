#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graffiti/canonical_json.hpp"
#include "graffiti/clock.hpp"
#include "graffiti/hazards.hpp"
#include "graffiti/rng.hpp"

namespace graffiti {

struct Revision {
    std::uint64_t revision_id = 0;
    std::int64_t timestamp = 0;
    std::string author;
    std::string content;
    bool is_reverted = false;
};

struct SitePolicies {
    std::optional<int> lockdown_after_days;
    int recent_changes_window_days = 7;
};

struct SiteRecord {
    std::string site_id;
    std::string hostname;
    Protection protection = Protection::anonymous;
    DomainClass domain_class = DomainClass::com;
    std::int64_t last_owner_activity = 0;
    SitePolicies policies;
    std::map<std::string, std::vector<Revision>> pages;
    bool alive = true;

    std::map<std::string, std::string> tokens; // bearer token -> username
    struct Puzzle {
        std::int64_t answer = 0;
        std::int64_t issued_at = 0;
    };
    std::map<std::string, Puzzle> puzzles;
};

struct PopulationSpec {
    std::map<Protection, int> counts;
    std::map<DomainClass, double> domain_mix; // defaults to the measured shares
    int recent_changes_window_days = 7;
    std::optional<int> lockdown_after_days;
    int owner_inactive_days_min = 0;
    int owner_inactive_days_max = 0;

    int total() const;
    Json to_json() const;
    static PopulationSpec from_json(const Json& j);
    static std::map<DomainClass, double> default_domain_mix();
};

std::vector<SiteRecord> create_population(const PopulationSpec& spec, std::uint64_t seed);

enum class EditStatus {
    accepted,
    needs_account,
    wrong_puzzle,
    captcha_required,
    locked_down,
    closed,
    unreachable,
};
const char* edit_status_name(EditStatus s);

struct EditResult {
    EditStatus status = EditStatus::accepted;
    std::uint64_t revision_id = 0;
};

enum class GetStatus { ok, page_missing, unreachable };

struct GetResult {
    GetStatus status = GetStatus::ok;
    std::string html;    // minimal boilerplate around the raw content
    std::string content; // latest non-reverted revision content
};

struct RecentChange {
    std::string title;
    std::uint64_t revision_id = 0;
    std::int64_t timestamp = 0;
};

struct ModerationEvent {
    enum class Kind { page_removed, page_changed, site_died } kind;
    std::int64_t day = 0;
    std::string site_id;
    std::string title; // empty for site_died
};

struct Challenge {
    std::string puzzle_id;
    std::string challenge;
};

// In-memory population of MediaWiki-like storage sites, all multiplexed
// behind one service. Time only moves through tick_days().
class SiteHost {
public:
    SiteHost(const PopulationSpec& spec, std::uint64_t seed);

    EditResult edit_page(const std::string& site_id, const std::string& title,
                         const std::string& content, const std::optional<std::string>& token,
                         const std::optional<std::string>& puzzle_id,
                         const std::optional<std::string>& puzzle_answer);
    GetResult get_page(const std::string& site_id, const std::string& title) const;
    std::vector<Revision> get_history(const std::string& site_id, const std::string& title) const;
    std::vector<RecentChange> recent_changes(const std::string& site_id) const;
    std::string register_user(const std::string& site_id, const std::string& username);
    Challenge issue_challenge(const std::string& site_id);

    // Owner/test actions.
    void revert_latest(const std::string& site_id, const std::string& title);
    void delete_page(const std::string& site_id, const std::string& title);
    void kill_site(const std::string& site_id);

    // Advance the clock one day at a time, applying the configured hazards.
    std::vector<ModerationEvent> tick_days(int days);
    std::vector<ModerationEvent> moderate_site(SiteRecord& site, std::int64_t day);

    void set_hazards(const HazardModel& h) { hazards_ = h; }
    const HazardModel& hazards() const { return hazards_; }

    std::int64_t now() const { return clock_.now(); }
    std::int64_t day() const { return clock_.now() / 86400; }

    const std::vector<SiteRecord>& sites() const { return sites_; }
    SiteRecord& site(const std::string& site_id); // throws Errc::site_unknown
    const SiteRecord& site(const std::string& site_id) const;

    Json admin_state() const;

private:
    std::vector<SiteRecord> sites_;
    std::map<std::string, std::size_t> index_;
    SimClock clock_;
    Rng rng_;
    HazardModel hazards_ = HazardModel::zero();
    std::uint64_t puzzle_counter_ = 0;
};

std::string wrap_page_html(const std::string& hostname, const std::string& title,
                           const std::string& content);

} // namespace graffiti
