#include "graffiti/tracker_service.hpp"

#include <httplib.h>

#include <cstdio>

#include "graffiti/canonical_json.hpp"
#include "graffiti/error.hpp"
#include "graffiti/httpfetch.hpp"

namespace graffiti {

WireError wire_error_for(Errc c) {
    switch (c) {
        case Errc::not_tracked: return {404, "NOT_TRACKED"};
        case Errc::stale_pair: return {410, "STALE_PAIR"};
        case Errc::duplicate_location: return {409, "DUPLICATE_LOCATION"};
        case Errc::throttled: return {429, "THROTTLED"};
        case Errc::banned: return {403, "BANNED"};
        case Errc::parse:
        case Errc::base64_syntax: return {400, "BAD_REQUEST"};
        default: return {500, "INTERNAL"};
    }
}

Errc errc_for_wire_code(const std::string& code) {
    if (code == "NOT_TRACKED") return Errc::not_tracked;
    if (code == "STALE_PAIR") return Errc::stale_pair;
    if (code == "DUPLICATE_LOCATION") return Errc::duplicate_location;
    if (code == "THROTTLED") return Errc::throttled;
    if (code == "BANNED") return Errc::banned;
    if (code == "BAD_REQUEST") return Errc::parse;
    return Errc::http;
}

TrackerService::TrackerService(Tracker tracker, std::string state_path)
    : tracker_(std::move(tracker)), state_path_(std::move(state_path)),
      server_(std::make_unique<httplib::Server>()) {
    wire_routes();
}

TrackerService::~TrackerService() { stop(); }

void TrackerService::use_http_proxy_fetch() {
    tracker_.set_proxy([](const std::string& location) -> ProxyFetch {
        const HttpResponse res = http_get(location);
        if (res.connect_failed) return {ProxyFetch::Kind::proxy_unreachable, ""};
        if (res.status == 503) return {ProxyFetch::Kind::site_dead, ""};
        if (res.status == 404) return {ProxyFetch::Kind::page_missing, ""};
        if (res.status == 200) return {ProxyFetch::Kind::ok, res.body};
        return {ProxyFetch::Kind::proxy_unreachable, ""};
    });
}

void TrackerService::persist() {
    if (state_path_.empty()) return;
    const std::string tmp = state_path_ + ".tmp";
    write_file(tmp, canonical_dump(tracker_.snapshot()));
    if (std::rename(tmp.c_str(), state_path_.c_str()) != 0)
        fail(Errc::io, "cannot replace state file " + state_path_);
}

static void reply_json(httplib::Response& res, int status, const Json& j) {
    res.status = status;
    res.set_content(j.dump(), "application/json");
}

template <typename Fn>
static void guarded(httplib::Response& res, Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        const WireError w = wire_error_for(e.code());
        reply_json(res, w.http_status, Json{{"error_code", w.code}, {"message", e.what()}});
    } catch (const std::exception& e) {
        reply_json(res, 500, Json{{"error_code", "INTERNAL"}, {"message", e.what()}});
    }
}

void TrackerService::wire_routes() {
    server_->Post("/announce", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const Json body = parse_json(req.body);
            std::string info_hash, peer_id, have;
            try {
                info_hash = body.at("info_hash").get<std::string>();
                peer_id = body.at("peer_id").get<std::string>();
                have = body.at("have_pieces").get<std::string>();
            } catch (const Json::exception& e) {
                fail(Errc::parse, std::string("bad announce body: ") + e.what());
            }

            std::lock_guard<std::mutex> lock(mutex_);
            const AnnounceResult r = tracker_.announce(peer_id, info_hash, have);
            persist();
            Json pairs = Json::array();
            for (const PairView& p : r.pairs) pairs.push_back(p.to_json());
            reply_json(res, 200, Json{{"phase", phase_name(r.phase)}, {"pairs", pairs}});
        });
    });

    server_->Post("/report", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const Json body = parse_json(req.body);
            std::string peer_id, location, key, checksum, sm, em;
            std::uint64_t pair_id = 0;
            try {
                peer_id = body.at("peer_id").get<std::string>();
                pair_id = body.at("pair_id").get<std::uint64_t>();
                location = body.at("location").get<std::string>();
                key = body.at("key").get<std::string>();
                checksum = body.at("checksum").get<std::string>();
                sm = body.at("start_marker").get<std::string>();
                em = body.at("end_marker").get<std::string>();
            } catch (const Json::exception& e) {
                fail(Errc::parse, std::string("bad report body: ") + e.what());
            }

            std::lock_guard<std::mutex> lock(mutex_);
            const ReportResult r = tracker_.report(peer_id, pair_id, location, key, checksum, sm, em);
            persist();
            Json out{{"accepted", r.accepted}, {"phase", phase_name(r.phase)}};
            out["next_pair"] = r.next_pair ? r.next_pair->to_json() : Json(nullptr);
            reply_json(res, 200, out);
        });
    });

    server_->Get("/status", [this](const httplib::Request&, httplib::Response& res) {
        guarded(res, [&] {
            std::lock_guard<std::mutex> lock(mutex_);
            reply_json(res, 200, tracker_.status_json());
        });
    });

    server_->Get("/replicas", [this](const httplib::Request&, httplib::Response& res) {
        guarded(res, [&] {
            std::lock_guard<std::mutex> lock(mutex_);
            reply_json(res, 200, tracker_.replicas_json());
        });
    });
}

bool TrackerService::listen(const std::string& host, int port) {
    return server_->listen(host, port);
}

int TrackerService::start(const std::string& host) {
    const int port = server_->bind_to_any_port(host);
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
    return port;
}

void TrackerService::stop() {
    if (server_) server_->stop();
    if (thread_.joinable()) thread_.join();
}

} // namespace graffiti
