#include "graffiti/tracker.hpp"

#include <algorithm>

#include "graffiti/error.hpp"

namespace graffiti {

const char* replica_status_name(ReplicaStatus s) {
    switch (s) {
        case ReplicaStatus::unverified: return "unverified";
        case ReplicaStatus::available: return "available";
        case ReplicaStatus::removed: return "removed";
        case ReplicaStatus::changed: return "changed";
        case ReplicaStatus::not_found: return "not_found";
    }
    return "unknown";
}

ReplicaStatus replica_status_from_name(const std::string& s) {
    for (ReplicaStatus st : {ReplicaStatus::unverified, ReplicaStatus::available,
                             ReplicaStatus::removed, ReplicaStatus::changed,
                             ReplicaStatus::not_found})
        if (s == replica_status_name(st)) return st;
    fail(Errc::parse, "unknown replica status: " + s);
}

bool replica_transition_allowed(ReplicaStatus from, ReplicaStatus to) {
    if (from == to) return true;
    switch (from) {
        case ReplicaStatus::unverified: return true;
        case ReplicaStatus::available:
            return to == ReplicaStatus::removed || to == ReplicaStatus::changed ||
                   to == ReplicaStatus::not_found;
        case ReplicaStatus::removed:
        case ReplicaStatus::changed:
        case ReplicaStatus::not_found: return false;
    }
    return false;
}

const char* phase_name(Phase p) {
    return p == Phase::initializing ? "initializing" : "normal";
}

Json PairView::to_json() const {
    return Json{
        {"pair_id", pair_id},
        {"download",
         {{"subpiece", {{"piece", download_piece}, {"index", download_index}}},
          {"location", location},
          {"key", key_hex},
          {"checksum", checksum},
          {"start_marker", start_marker},
          {"end_marker", end_marker}}},
        {"upload",
         {{"subpiece", {{"piece", upload_piece}, {"index", upload_index}}},
          {"target_site", target_site},
          {"target_hints", {{"url", target_url}, {"protection", target_protection}}}}}};
}

PairView PairView::from_json(const Json& j) {
    PairView v;
    try {
        v.pair_id = j.at("pair_id").get<std::uint64_t>();
        const Json& d = j.at("download");
        v.download_piece = d.at("subpiece").at("piece").get<std::uint64_t>();
        v.download_index = d.at("subpiece").at("index").get<std::uint64_t>();
        v.location = d.at("location").get<std::string>();
        v.key_hex = d.at("key").get<std::string>();
        v.checksum = d.at("checksum").get<std::string>();
        v.start_marker = d.at("start_marker").get<std::string>();
        v.end_marker = d.at("end_marker").get<std::string>();
        const Json& u = j.at("upload");
        v.upload_piece = u.at("subpiece").at("piece").get<std::uint64_t>();
        v.upload_index = u.at("subpiece").at("index").get<std::uint64_t>();
        v.target_site = u.at("target_site").get<std::string>();
        v.target_url = u.at("target_hints").value("url", "");
        v.target_protection = u.at("target_hints").value("protection", "");
    } catch (const Json::exception& e) {
        fail(Errc::parse, std::string("bad pair: ") + e.what());
    }
    return v;
}

Tracker::Tracker(FilesetManifest manifest, std::vector<SiteInfo> sites, TrackerConfig config,
                 std::uint64_t seed, const Clock& clock)
    : manifest_(std::move(manifest)), table_(subpiece_table(manifest_)), config_(config),
      rng_(seed), clock_(clock) {
    for (SiteInfo& s : sites) sites_[s.site_id] = std::move(s);

    ips_.window_index = 0;
    ips_.window_start = clock_.now();
    ips_.window_length = config_.ips_window_seconds;
    const std::size_t k =
        std::min<std::size_t>(static_cast<std::size_t>(config_.aps_capacity), table_.size());
    std::vector<std::uint64_t> ordinals(table_.size());
    for (std::size_t i = 0; i < table_.size(); ++i) ordinals[i] = table_[i].ordinal;
    for (std::size_t i = 0; i < k; ++i)
        std::swap(ordinals[i], ordinals[i + rng_.uniform(ordinals.size() - i)]);
    ips_.subpieces.assign(ordinals.begin(), ordinals.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(ips_.subpieces.begin(), ips_.subpieces.end());
}

void Tracker::rotate_if_due() {
    while (clock_.now() >= ips_.window_start + ips_.window_length) {
        ips_history_.push_back(ips_);
        if (ips_history_.size() > 64) ips_history_.erase(ips_history_.begin());

        ips_.window_index += 1;
        ips_.window_start += ips_.window_length;
        const std::size_t k =
            std::min<std::size_t>(static_cast<std::size_t>(config_.aps_capacity), table_.size());
        std::vector<std::uint64_t> ordinals(table_.size());
        for (std::size_t i = 0; i < table_.size(); ++i) ordinals[i] = table_[i].ordinal;
        for (std::size_t i = 0; i < k; ++i)
            std::swap(ordinals[i], ordinals[i + rng_.uniform(ordinals.size() - i)]);
        ips_.subpieces.assign(ordinals.begin(), ordinals.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(ips_.subpieces.begin(), ips_.subpieces.end());
    }
}

const InitialPieceSet& Tracker::current_ips() {
    rotate_if_due();
    return ips_;
}

void Tracker::refresh_window_state(PeerState& ps) {
    if (ps.ips_window_index == ips_.window_index) return;
    ps.ips_window_index = ips_.window_index;
    ps.ips_validated.clear();
    ps.window_download_ordinals.clear();
    ps.window_validated_reports = 0;
}

bool Tracker::take_token(PeerState& ps) {
    const double rate = config_.pair_rate_per_hour;
    const std::int64_t now = clock_.now();
    ps.tokens = std::min(rate, ps.tokens + static_cast<double>(now - ps.tokens_updated) * rate / 3600.0);
    ps.tokens_updated = now;
    if (ps.tokens >= 1.0) {
        ps.tokens -= 1.0;
        return true;
    }
    return false;
}

void Tracker::give_back_token(PeerState& ps) {
    ps.tokens = std::min(config_.pair_rate_per_hour, ps.tokens + 1.0);
}

bool Tracker::throttle(const std::string& peer_id) {
    rotate_if_due();
    auto [it, fresh] = peers_.try_emplace(peer_id);
    PeerState& ps = it->second;
    if (fresh) {
        ps.peer_id = peer_id;
        ps.tokens = config_.pair_rate_per_hour;
        ps.tokens_updated = clock_.now();
    }
    return take_token(ps);
}

void Tracker::expire_pairs(PeerState& ps) {
    std::vector<std::uint64_t> expired;
    for (std::uint64_t id : ps.aps) {
        const RequestPair& p = pairs_.at(id);
        if (clock_.now() - p.issued_at > config_.pair_expiry_seconds) expired.push_back(id);
    }
    for (std::uint64_t id : expired) {
        remove_pair(pairs_.at(id));
        ps.pairs_expired += 1;
    }
}

void Tracker::remove_pair(RequestPair pair) {
    site_live_or_reserved_[pair.upload_target_site] -= 1;
    site_ordinal_live_[{pair.upload_target_site, pair.upload_subpiece}] -= 1;
    auto pit = peers_.find(pair.peer_id);
    if (pit != peers_.end()) pit->second.aps.erase(pair.pair_id);
    pairs_.erase(pair.pair_id);
}

std::uint64_t Tracker::live_count(std::uint64_t ordinal) const {
    auto it = live_by_ordinal_.find(ordinal);
    return it == live_by_ordinal_.end() ? 0 : it->second.size();
}

std::vector<std::uint64_t> Tracker::starved_ordinals() const {
    std::vector<std::uint64_t> out;
    for (const SubPieceGeom& g : table_)
        if (live_count(g.ordinal) == 0) out.push_back(g.ordinal);
    return out;
}

std::optional<std::uint64_t> Tracker::pick_download_source(std::uint64_t ordinal) {
    auto it = live_by_ordinal_.find(ordinal);
    if (it == live_by_ordinal_.end() || it->second.empty()) return std::nullopt;
    return it->second[rng_.uniform(it->second.size())];
}

static bool writable(Protection p) {
    return p == Protection::anonymous || p == Protection::registration || p == Protection::puzzle;
}

std::optional<std::string> Tracker::pick_upload_target(std::uint64_t ordinal) {
    std::vector<const std::string*> eligible;
    for (const auto& [id, info] : sites_) {
        if (!writable(info.protection)) continue;
        if (config_.site_reuse_allowed) {
            auto it = site_ordinal_live_.find({id, ordinal});
            if (it != site_ordinal_live_.end() && it->second > 0) continue;
        } else {
            auto it = site_live_or_reserved_.find(id);
            if (it != site_live_or_reserved_.end() && it->second > 0) continue;
        }
        eligible.push_back(&id);
    }
    if (eligible.empty()) return std::nullopt;
    return *eligible[rng_.uniform(eligible.size())];
}

int Tracker::outstanding_for_upload(const PeerState& ps, std::uint64_t ordinal) const {
    int n = 0;
    for (std::uint64_t id : ps.aps)
        if (pairs_.at(id).upload_subpiece == ordinal) ++n;
    return n;
}

void Tracker::maybe_flip_phase(PeerState& ps) {
    if (ps.phase != Phase::initializing) return;
    for (std::uint64_t sp : ips_.subpieces) {
        auto it = ps.ips_validated.find(sp);
        if (it == ps.ips_validated.end() || it->second < 2) return;
    }
    ps.phase = Phase::normal;
}

std::optional<RequestPair> Tracker::next_ips_pair(PeerState& ps) {
    // Spread obligations across the set: least-covered sub-piece first,
    // ties broken by the lowest ordinal.
    std::vector<std::pair<int, std::uint64_t>> order;
    for (std::uint64_t sp : ips_.subpieces) {
        int credit = outstanding_for_upload(ps, sp);
        auto it = ps.ips_validated.find(sp);
        if (it != ps.ips_validated.end()) credit += it->second;
        if (credit >= 2) continue;
        order.emplace_back(credit, sp);
    }
    std::sort(order.begin(), order.end());

    for (const auto& [credit, sp] : order) {
        auto src = pick_download_source(sp);
        if (!src) continue; // starved sub-piece in the IPS
        auto tgt = pick_upload_target(sp);
        if (!tgt) continue;
        RequestPair p;
        p.download_subpiece = sp;
        p.download_replica_id = *src;
        p.upload_subpiece = sp;
        p.upload_target_site = *tgt;
        return p;
    }
    return std::nullopt;
}

std::optional<RequestPair> Tracker::next_normal_pair(PeerState& ps) {
    std::set<std::uint64_t> in_flight;
    for (std::uint64_t id : ps.aps) in_flight.insert(pairs_.at(id).download_subpiece);

    std::vector<std::pair<std::uint64_t, std::uint64_t>> downloads; // (live count, ordinal)
    for (const SubPieceGeom& g : table_) {
        if (ps.claimed.count(g.ordinal) || ps.validated_downloads.count(g.ordinal) ||
            in_flight.count(g.ordinal))
            continue;
        const std::uint64_t live = live_count(g.ordinal);
        if (live == 0) continue; // starved; surfaces through /status
        downloads.emplace_back(live, g.ordinal);
    }
    if (downloads.empty()) return std::nullopt;
    std::sort(downloads.begin(), downloads.end());

    // Upload obligation: rarest among the sub-pieces this peer has downloaded.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> uploads;
    for (std::uint64_t sp : ps.claimed) uploads.emplace_back(live_count(sp), sp);
    for (std::uint64_t sp : ps.validated_downloads)
        if (!ps.claimed.count(sp)) uploads.emplace_back(live_count(sp), sp);
    if (uploads.empty()) return std::nullopt;
    std::sort(uploads.begin(), uploads.end());

    const auto [dl_live, dl] = downloads.front();
    auto src = pick_download_source(dl);
    if (!src) return std::nullopt;

    for (const auto& [ul_live, ul] : uploads) {
        auto tgt = pick_upload_target(ul);
        if (!tgt) continue;
        RequestPair p;
        p.download_subpiece = dl;
        p.download_replica_id = *src;
        p.upload_subpiece = ul;
        p.upload_target_site = *tgt;
        return p;
    }
    return std::nullopt; // target exhaustion
}

PairView Tracker::view_of(const RequestPair& pair) const {
    const ReplicaRecord& src = replicas_.at(pair.download_replica_id);
    const std::uint64_t spp = manifest_.subpieces_per_piece();

    PairView v;
    v.pair_id = pair.pair_id;
    v.download_subpiece = pair.download_subpiece;
    v.download_piece = pair.download_subpiece / spp;
    v.download_index = pair.download_subpiece % spp;
    v.location = src.location;
    v.key_hex = src.key.hex();
    v.checksum = src.checksum;
    v.start_marker = src.start_marker;
    v.end_marker = src.end_marker;
    v.upload_subpiece = pair.upload_subpiece;
    v.upload_piece = pair.upload_subpiece / spp;
    v.upload_index = pair.upload_subpiece % spp;
    v.target_site = pair.upload_target_site;
    auto sit = sites_.find(pair.upload_target_site);
    if (sit != sites_.end()) {
        v.target_url = sit->second.base_url;
        v.target_protection = protection_name(sit->second.protection);
    }
    return v;
}

std::vector<PairView> Tracker::fill_aps(PeerState& ps, std::size_t max_new) {
    std::vector<PairView> minted;
    while (ps.aps.size() < static_cast<std::size_t>(config_.aps_capacity) &&
           minted.size() < max_new) {
        if (!take_token(ps)) break;
        std::optional<RequestPair> p = ps.phase == Phase::initializing ? next_ips_pair(ps)
                                                                       : next_normal_pair(ps);
        if (!p) {
            give_back_token(ps);
            break;
        }
        p->pair_id = next_pair_id_++;
        p->peer_id = ps.peer_id;
        p->issued_at = clock_.now();
        site_live_or_reserved_[p->upload_target_site] += 1;
        site_ordinal_live_[{p->upload_target_site, p->upload_subpiece}] += 1;
        ps.aps.insert(p->pair_id);
        ps.pairs_minted += 1;
        ps.window_download_ordinals.insert(p->download_subpiece);
        pairs_[p->pair_id] = *p;
        minted.push_back(view_of(*p));
    }
    return minted;
}

AnnounceResult Tracker::announce(const std::string& peer_id, const std::string& info_hash,
                                 const std::string& have_pieces_b64) {
    rotate_if_due();
    if (info_hash != manifest_.info_hash)
        fail(Errc::not_tracked, "info hash " + info_hash + " is not tracked here");

    auto [it, fresh] = peers_.try_emplace(peer_id);
    PeerState& ps = it->second;
    if (fresh) {
        ps.peer_id = peer_id;
        ps.tokens = config_.pair_rate_per_hour;
        ps.tokens_updated = clock_.now();
        ps.ips_window_index = ips_.window_index;
    }
    if (ps.banned) fail(Errc::banned, peer_id + " is banned");

    refresh_window_state(ps);
    expire_pairs(ps);

    ps.has_session = true;
    ps.phase = Phase::initializing; // always, even for returning peers

    Bitfield have = Bitfield::from_base64(have_pieces_b64, manifest_.piece_count());
    ps.claimed.clear();
    for (const SubPieceGeom& g : table_)
        if (have.get(g.piece_index)) ps.claimed.insert(g.ordinal);

    // Obligations already met within this window carry over; a peer that
    // has paid its double-replica dues is not charged twice.
    maybe_flip_phase(ps);

    const std::size_t headroom = static_cast<std::size_t>(config_.aps_capacity) - ps.aps.size();
    const std::size_t before = ps.aps.size();
    fill_aps(ps, headroom);
    const bool throttled_everything = before == 0 && ps.aps.empty();

    AnnounceResult res;
    res.phase = ps.phase;
    for (std::uint64_t id : ps.aps) res.pairs.push_back(view_of(pairs_.at(id)));
    if (res.pairs.empty() && throttled_everything && ps.tokens < 1.0 &&
        !table_.empty() && live_by_ordinal_.size() > 0)
        fail(Errc::throttled, peer_id + " has no pair allowance left this hour");
    return res;
}

ReportResult Tracker::report(const std::string& peer_id, std::uint64_t pair_id,
                             const std::string& location, const std::string& key_hex,
                             const std::string& checksum, const std::string& start_marker,
                             const std::string& end_marker) {
    rotate_if_due();
    auto pit = peers_.find(peer_id);
    if (pit == peers_.end() || !pit->second.has_session)
        fail(Errc::stale_pair, "no session for peer " + peer_id);
    PeerState& ps = pit->second;
    if (ps.banned) fail(Errc::banned, peer_id + " is banned");

    refresh_window_state(ps);
    expire_pairs(ps);

    if (!ps.aps.count(pair_id))
        fail(Errc::stale_pair, "pair " + std::to_string(pair_id) + " is not in the APS");
    const RequestPair pair = pairs_.at(pair_id);

    if (live_locations_.count(location))
        fail(Errc::duplicate_location, location + " already hosts a live replica");

    ReplicaKey key = ReplicaKey::from_hex(key_hex);
    if (start_marker.size() != kMarkerLength || end_marker.size() != kMarkerLength)
        fail(Errc::parse, "markers must be 16 characters");
    if (checksum.size() != 64) fail(Errc::parse, "checksum must be 64 hex characters");

    // Replicas of one sub-piece share a plaintext, so their checksums must
    // agree; a conflicting report is provably false and costs a strike.
    bool provably_false = false;
    auto lit = live_by_ordinal_.find(pair.upload_subpiece);
    if (lit != live_by_ordinal_.end() && !lit->second.empty())
        provably_false = replicas_.at(lit->second.front()).checksum != checksum;

    bool verified = false;
    if (!provably_false && proxy_ && rng_.bernoulli(config_.verify_prob)) {
        ReplicaRecord probe;
        probe.location = location;
        probe.key = key;
        probe.checksum = checksum;
        probe.start_marker = start_marker;
        probe.end_marker = end_marker;
        bool proxy_ok = true;
        const ReplicaStatus observed = classify_via_proxy(probe, proxy_ok);
        if (proxy_ok && observed != ReplicaStatus::available) provably_false = true;
        if (proxy_ok && observed == ReplicaStatus::available) verified = true;
    }
    if (provably_false) {
        ps.strikes += 1;
        if (ps.strikes >= config_.strike_ban_threshold) ps.banned = true;
        return {false, std::nullopt, ps.phase}; // pair stays in the APS
    }

    ReplicaRecord rec;
    rec.replica_id = next_replica_id_++;
    rec.subpiece_ordinal = pair.upload_subpiece;
    rec.location = location;
    rec.key = key;
    rec.checksum = checksum;
    rec.start_marker = start_marker;
    rec.end_marker = end_marker;
    rec.status = verified ? ReplicaStatus::available : ReplicaStatus::unverified;
    rec.created_at = clock_.now();
    rec.last_checked = verified ? clock_.now() : 0;
    rec.reported_by = peer_id;
    rec.site_id = pair.upload_target_site;

    remove_pair(pair);

    live_locations_[rec.location] = rec.replica_id;
    live_by_ordinal_[rec.subpiece_ordinal].push_back(rec.replica_id);
    site_live_or_reserved_[rec.site_id] += 1;
    site_ordinal_live_[{rec.site_id, rec.subpiece_ordinal}] += 1;
    replicas_[rec.replica_id] = rec;

    ps.reports_validated += 1;
    ps.window_validated_reports += 1;
    ps.validated_downloads.insert(pair.download_subpiece);
    if (ps.phase == Phase::initializing &&
        std::count(ips_.subpieces.begin(), ips_.subpieces.end(), pair.upload_subpiece))
        ps.ips_validated[pair.upload_subpiece] += 1;
    maybe_flip_phase(ps);

    std::vector<PairView> minted = fill_aps(ps, 1);
    ReportResult res;
    res.accepted = true;
    if (!minted.empty()) res.next_pair = minted.front();
    res.phase = ps.phase;
    return res;
}

std::uint64_t Tracker::seed_replica(std::uint64_t ordinal, const std::string& location,
                                    const ReplicaKey& key, const std::string& checksum,
                                    const std::string& start_marker, const std::string& end_marker,
                                    const std::string& site_id) {
    if (live_locations_.count(location))
        fail(Errc::duplicate_location, location + " already hosts a live replica");
    ReplicaRecord rec;
    rec.replica_id = next_replica_id_++;
    rec.subpiece_ordinal = ordinal;
    rec.location = location;
    rec.key = key;
    rec.checksum = checksum;
    rec.start_marker = start_marker;
    rec.end_marker = end_marker;
    rec.status = ReplicaStatus::available;
    rec.created_at = clock_.now();
    rec.last_checked = clock_.now();
    rec.reported_by = "seed";
    rec.site_id = site_id;

    live_locations_[rec.location] = rec.replica_id;
    live_by_ordinal_[ordinal].push_back(rec.replica_id);
    site_live_or_reserved_[site_id] += 1;
    site_ordinal_live_[{site_id, ordinal}] += 1;
    replicas_[rec.replica_id] = rec;
    return rec.replica_id;
}

ReplicaStatus Tracker::classify_via_proxy(const ReplicaRecord& record, bool& proxy_ok) {
    proxy_ok = true;
    const ProxyFetch fetched = proxy_(record.location);
    switch (fetched.kind) {
        case ProxyFetch::Kind::proxy_unreachable: proxy_ok = false; return record.status;
        case ProxyFetch::Kind::site_dead: return ReplicaStatus::not_found;
        case ProxyFetch::Kind::page_missing: return ReplicaStatus::removed;
        case ProxyFetch::Kind::ok: break;
    }
    try {
        for (const std::string& span :
             extract_payload(fetched.body, record.start_marker, record.end_marker)) {
            try {
                decode_payload(span, record.key, record.checksum);
                return ReplicaStatus::available;
            } catch (const Error&) {
            }
        }
    } catch (const Error&) {
    }
    return ReplicaStatus::changed;
}

ReplicaStatus Tracker::verify_replica(std::uint64_t replica_id) {
    auto it = replicas_.find(replica_id);
    if (it == replicas_.end()) fail(Errc::parse, "no replica " + std::to_string(replica_id));
    ReplicaRecord& rec = it->second;
    if (!proxy_) return rec.status;

    bool proxy_ok = true;
    const ReplicaStatus observed = classify_via_proxy(rec, proxy_ok);
    if (!proxy_ok) return rec.status; // unreachable proxy: unchanged, recheck later

    if (replica_transition_allowed(rec.status, observed) && rec.status != observed) {
        const bool was_live = rec.live();
        rec.status = observed;
        if (was_live && !rec.live()) {
            live_locations_.erase(rec.location);
            auto& v = live_by_ordinal_[rec.subpiece_ordinal];
            v.erase(std::remove(v.begin(), v.end(), rec.replica_id), v.end());
            site_live_or_reserved_[rec.site_id] -= 1;
            site_ordinal_live_[{rec.site_id, rec.subpiece_ordinal}] -= 1;
        }
    }
    rec.last_checked = clock_.now();
    return rec.status;
}

Json Tracker::status_json() {
    rotate_if_due();
    Json counts = Json::array();
    for (const SubPieceGeom& g : table_) counts.push_back(live_count(g.ordinal));

    Json peers = Json::array();
    for (const auto& [id, ps] : peers_) {
        peers.push_back({{"peer_id", id},
                         {"phase", phase_name(ps.phase)},
                         {"strikes", ps.strikes},
                         {"banned", ps.banned},
                         {"aps", ps.aps.size()}});
    }
    return Json{{"fileset",
                 {{"info_hash", manifest_.info_hash},
                  {"name", manifest_.name},
                  {"pieces", manifest_.piece_count()},
                  {"subpieces", manifest_.subpiece_count()}}},
                {"replica_counts", counts},
                {"peers", peers},
                {"ips_window",
                 {{"index", ips_.window_index},
                  {"start", ips_.window_start},
                  {"length_seconds", ips_.window_length},
                  {"subpieces", ips_.subpieces}}}};
}

static Json replica_to_json(const ReplicaRecord& r, std::uint64_t spp) {
    return Json{{"replica_id", r.replica_id},
                {"subpiece", {{"piece", r.subpiece_ordinal / spp}, {"index", r.subpiece_ordinal % spp}}},
                {"location", r.location},
                {"key", r.key.hex()},
                {"checksum", r.checksum},
                {"start_marker", r.start_marker},
                {"end_marker", r.end_marker},
                {"status", replica_status_name(r.status)},
                {"created_at", r.created_at},
                {"last_checked", r.last_checked},
                {"reported_by", r.reported_by},
                {"site_id", r.site_id}};
}

Json Tracker::replicas_json() const {
    Json arr = Json::array();
    for (const auto& [id, r] : replicas_) arr.push_back(replica_to_json(r, manifest_.subpieces_per_piece()));
    return Json{{"replicas", arr}};
}

Json Tracker::snapshot() const {
    Json sites = Json::array();
    for (const auto& [id, s] : sites_) {
        sites.push_back({{"site_id", s.site_id},
                         {"base_url", s.base_url},
                         {"hostname", s.hostname},
                         {"protection", protection_name(s.protection)},
                         {"domain_class", domain_class_name(s.domain_class)}});
    }
    Json replicas = Json::array();
    for (const auto& [id, r] : replicas_) replicas.push_back(replica_to_json(r, manifest_.subpieces_per_piece()));

    Json history = Json::array();
    for (const InitialPieceSet& w : ips_history_)
        history.push_back({{"index", w.window_index}, {"start", w.window_start}, {"subpieces", w.subpieces}});

    return Json{{"version", 1},
                {"info_hash", manifest_.info_hash},
                {"now", clock_.now()},
                {"next_replica_id", next_replica_id_},
                {"next_pair_id", next_pair_id_},
                {"sites", sites},
                {"replicas", replicas},
                {"ips",
                 {{"index", ips_.window_index},
                  {"start", ips_.window_start},
                  {"length_seconds", ips_.window_length},
                  {"subpieces", ips_.subpieces},
                  {"history", history}}}};
}

Tracker Tracker::restore(const Json& snap, TrackerConfig config, std::uint64_t seed,
                         const Clock& clock, const FilesetManifest& manifest) {
    try {
        if (snap.at("info_hash").get<std::string>() != manifest.info_hash)
            fail(Errc::not_tracked, "state snapshot belongs to a different fileset");

        std::vector<SiteInfo> sites;
        for (const Json& s : snap.at("sites")) {
            SiteInfo info;
            info.site_id = s.at("site_id").get<std::string>();
            info.base_url = s.at("base_url").get<std::string>();
            info.hostname = s.value("hostname", "");
            info.protection = protection_from_name(s.at("protection").get<std::string>());
            info.domain_class = domain_class_from_name(s.value("domain_class", "com"));
            sites.push_back(std::move(info));
        }

        Tracker t(manifest, std::move(sites), config, seed, clock);
        const std::uint64_t spp = manifest.subpieces_per_piece();

        const Json& ips = snap.at("ips");
        t.ips_.window_index = ips.at("index").get<std::uint64_t>();
        t.ips_.window_start = ips.at("start").get<std::int64_t>();
        t.ips_.window_length = config.ips_window_seconds; // operator flag wins
        t.ips_.subpieces = ips.at("subpieces").get<std::vector<std::uint64_t>>();

        for (const Json& r : snap.at("replicas")) {
            ReplicaRecord rec;
            rec.replica_id = r.at("replica_id").get<std::uint64_t>();
            rec.subpiece_ordinal = r.at("subpiece").at("piece").get<std::uint64_t>() * spp +
                                   r.at("subpiece").at("index").get<std::uint64_t>();
            rec.location = r.at("location").get<std::string>();
            rec.key = ReplicaKey::from_hex(r.at("key").get<std::string>());
            rec.checksum = r.at("checksum").get<std::string>();
            rec.start_marker = r.at("start_marker").get<std::string>();
            rec.end_marker = r.at("end_marker").get<std::string>();
            rec.status = replica_status_from_name(r.at("status").get<std::string>());
            rec.created_at = r.value("created_at", 0);
            rec.last_checked = r.value("last_checked", 0);
            rec.reported_by = r.value("reported_by", "");
            rec.site_id = r.value("site_id", "");

            if (rec.live()) {
                t.live_locations_[rec.location] = rec.replica_id;
                t.live_by_ordinal_[rec.subpiece_ordinal].push_back(rec.replica_id);
                t.site_live_or_reserved_[rec.site_id] += 1;
                t.site_ordinal_live_[{rec.site_id, rec.subpiece_ordinal}] += 1;
            }
            t.replicas_[rec.replica_id] = rec;
        }
        t.next_replica_id_ = snap.value("next_replica_id", t.replicas_.size() + 1);
        t.next_pair_id_ = snap.value("next_pair_id", 1);
        return t;
    } catch (const Json::exception& e) {
        fail(Errc::parse, std::string("bad tracker snapshot: ") + e.what());
    }
}

} // namespace graffiti
