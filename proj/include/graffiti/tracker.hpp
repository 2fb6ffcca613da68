#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graffiti/bitfield.hpp"
#include "graffiti/canonical_json.hpp"
#include "graffiti/clock.hpp"
#include "graffiti/fileset.hpp"
#include "graffiti/hazards.hpp"
#include "graffiti/payload.hpp"
#include "graffiti/rng.hpp"

namespace graffiti {

enum class ReplicaStatus { unverified, available, removed, changed, not_found };
const char* replica_status_name(ReplicaStatus s);
ReplicaStatus replica_status_from_name(const std::string& s);

// Legal status transitions: unverified may resolve to anything, available
// can only degrade, a removed page's site can still die. No resurrection.
bool replica_transition_allowed(ReplicaStatus from, ReplicaStatus to);

struct ReplicaRecord {
    std::uint64_t replica_id = 0;
    std::uint64_t subpiece_ordinal = 0;
    std::string location;
    ReplicaKey key;
    std::string checksum;
    std::string start_marker;
    std::string end_marker;
    ReplicaStatus status = ReplicaStatus::unverified;
    std::int64_t created_at = 0;
    std::int64_t last_checked = 0;
    std::string reported_by;
    std::string site_id;

    bool live() const {
        return status == ReplicaStatus::unverified || status == ReplicaStatus::available;
    }
};

struct RequestPair {
    std::uint64_t pair_id = 0;
    std::string peer_id;
    std::uint64_t download_subpiece = 0; // ordinal
    std::uint64_t download_replica_id = 0;
    std::uint64_t upload_subpiece = 0; // ordinal
    std::string upload_target_site;
    std::int64_t issued_at = 0;
};

enum class Phase { initializing, normal };
const char* phase_name(Phase p);

struct TrackerConfig {
    int aps_capacity = 4;
    std::int64_t ips_window_seconds = 24 * 3600;
    double verify_prob = 0.2;
    double pair_rate_per_hour = 30.0;
    std::int64_t pair_expiry_seconds = 3600;
    int strike_ban_threshold = 3;
    bool site_reuse_allowed = false; // default: target each storage site only once
};

struct SiteInfo {
    std::string site_id;
    std::string base_url; // service prefix, e.g. http://127.0.0.1:8081/site/s0001
    std::string hostname;
    Protection protection = Protection::anonymous;
    DomainClass domain_class = DomainClass::com;
};

struct InitialPieceSet {
    std::uint64_t window_index = 0;
    std::int64_t window_start = 0;
    std::int64_t window_length = 0;
    std::vector<std::uint64_t> subpieces; // ordinals, sorted
};

struct PeerState {
    std::string peer_id;
    int strikes = 0;
    bool banned = false;
    double tokens = 0;
    std::int64_t tokens_updated = 0;

    bool has_session = false;
    Phase phase = Phase::initializing;
    std::set<std::uint64_t> claimed; // ordinals expanded from the announce bitfield
    std::set<std::uint64_t> validated_downloads;
    std::set<std::uint64_t> aps; // pair ids
    std::uint64_t ips_window_index = 0;
    std::map<std::uint64_t, int> ips_validated; // ordinal -> replicas credited this window
    std::set<std::uint64_t> window_download_ordinals;
    int window_validated_reports = 0;

    // Ledger counters for the tit-for-tat invariants.
    std::uint64_t pairs_minted = 0;
    std::uint64_t reports_validated = 0;
    std::uint64_t pairs_expired = 0;
};

// What a peer needs to act on one request pair.
struct PairView {
    std::uint64_t pair_id = 0;
    std::uint64_t download_subpiece = 0;
    std::uint64_t download_piece = 0;
    std::uint64_t download_index = 0;
    std::string location;
    std::string key_hex;
    std::string checksum;
    std::string start_marker;
    std::string end_marker;
    std::uint64_t upload_subpiece = 0;
    std::uint64_t upload_piece = 0;
    std::uint64_t upload_index = 0;
    std::string target_site;
    std::string target_url;
    std::string target_protection;

    Json to_json() const;
    static PairView from_json(const Json& j);
};

struct AnnounceResult {
    Phase phase = Phase::initializing;
    std::vector<PairView> pairs;
};

struct ReportResult {
    bool accepted = false;
    std::optional<PairView> next_pair;
    Phase phase = Phase::initializing;
};

// Outcome of fetching a replica location through the verification proxy.
struct ProxyFetch {
    enum class Kind { ok, page_missing, site_dead, proxy_unreachable } kind;
    std::string body;
};
using ProxyFetchFn = std::function<ProxyFetch(const std::string& location)>;

// Coordination service for one fileset: replica table, per-peer active
// piece sets, the rotating initial piece set, rarest-first scheduling,
// throttling and sampled verification. All mutations are deterministic
// given the event sequence, the seed and the injected clock.
class Tracker {
public:
    Tracker(FilesetManifest manifest, std::vector<SiteInfo> sites, TrackerConfig config,
            std::uint64_t seed, const Clock& clock);

    AnnounceResult announce(const std::string& peer_id, const std::string& info_hash,
                            const std::string& have_pieces_b64);
    ReportResult report(const std::string& peer_id, std::uint64_t pair_id,
                        const std::string& location, const std::string& key_hex,
                        const std::string& checksum, const std::string& start_marker,
                        const std::string& end_marker);

    // Installs a replica record directly, for pre-seeding. Status available.
    std::uint64_t seed_replica(std::uint64_t ordinal, const std::string& location,
                               const ReplicaKey& key, const std::string& checksum,
                               const std::string& start_marker, const std::string& end_marker,
                               const std::string& site_id);

    ReplicaStatus verify_replica(std::uint64_t replica_id);
    void set_proxy(ProxyFetchFn fn) { proxy_ = std::move(fn); }

    // Token-bucket decision for one pair issuance; refusal consumes nothing.
    bool throttle(const std::string& peer_id);

    const InitialPieceSet& current_ips();

    Json status_json();
    Json replicas_json() const;
    Json snapshot() const;
    static Tracker restore(const Json& snapshot, TrackerConfig config, std::uint64_t seed,
                           const Clock& clock, const FilesetManifest& manifest);

    const FilesetManifest& manifest() const { return manifest_; }
    const TrackerConfig& config() const { return config_; }
    const std::map<std::string, PeerState>& peers() const { return peers_; }
    const std::map<std::uint64_t, ReplicaRecord>& replicas() const { return replicas_; }
    const std::map<std::uint64_t, RequestPair>& pairs() const { return pairs_; }
    std::uint64_t live_count(std::uint64_t ordinal) const;
    std::vector<std::uint64_t> starved_ordinals() const; // live-replica-free sub-pieces

private:
    void rotate_if_due();
    void expire_pairs(PeerState& ps);
    void refresh_window_state(PeerState& ps);
    bool take_token(PeerState& ps);
    void give_back_token(PeerState& ps);
    void maybe_flip_phase(PeerState& ps);
    std::optional<RequestPair> next_ips_pair(PeerState& ps);
    std::optional<RequestPair> next_normal_pair(PeerState& ps);
    std::vector<PairView> fill_aps(PeerState& ps, std::size_t max_new);
    PairView view_of(const RequestPair& pair) const;
    std::optional<std::uint64_t> pick_download_source(std::uint64_t ordinal);
    std::optional<std::string> pick_upload_target(std::uint64_t ordinal);
    int outstanding_for_upload(const PeerState& ps, std::uint64_t ordinal) const;
    void remove_pair(RequestPair pair);
    ReplicaStatus classify_via_proxy(const ReplicaRecord& record, bool& proxy_ok);

    FilesetManifest manifest_;
    std::vector<SubPieceGeom> table_;
    std::map<std::string, SiteInfo> sites_;
    TrackerConfig config_;
    Rng rng_;
    const Clock& clock_;
    ProxyFetchFn proxy_;

    std::map<std::uint64_t, ReplicaRecord> replicas_;
    std::map<std::string, std::uint64_t> live_locations_; // location -> replica id
    std::map<std::uint64_t, std::vector<std::uint64_t>> live_by_ordinal_;
    std::map<std::string, int> site_live_or_reserved_; // site id -> live replicas + reservations
    std::map<std::pair<std::string, std::uint64_t>, int> site_ordinal_live_;

    std::map<std::uint64_t, RequestPair> pairs_;
    std::map<std::string, PeerState> peers_;

    InitialPieceSet ips_;
    std::vector<InitialPieceSet> ips_history_; // most recent windows, capped

    std::uint64_t next_replica_id_ = 1;
    std::uint64_t next_pair_id_ = 1;
};

} // namespace graffiti
