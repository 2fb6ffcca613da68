#include "graffiti/sitehost_service.hpp"

#include <httplib.h>

#include "graffiti/canonical_json.hpp"
#include "graffiti/error.hpp"

namespace graffiti {

SiteHostService::SiteHostService(PopulationSpec spec, std::uint64_t seed)
    : host_(std::make_unique<SiteHost>(spec, seed)), seed_(seed),
      server_(std::make_unique<httplib::Server>()) {
    wire_routes();
}

SiteHostService::~SiteHostService() { stop(); }

static void reply_json(httplib::Response& res, int status, const Json& j) {
    res.status = status;
    res.set_content(j.dump(), "application/json");
}

template <typename Fn>
static void guarded(httplib::Response& res, Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        switch (e.code()) {
            case Errc::site_unknown:
                reply_json(res, 404, Json{{"error", "site_unknown"}, {"message", e.what()}});
                return;
            case Errc::page_missing:
                reply_json(res, 404, Json{{"error", "page_missing"}, {"message", e.what()}});
                return;
            case Errc::site_unreachable:
                reply_json(res, 503, Json{{"error", "site_unreachable"}, {"message", e.what()}});
                return;
            case Errc::parse:
                reply_json(res, 400, Json{{"error", "bad_request"}, {"message", e.what()}});
                return;
            default:
                reply_json(res, 500, Json{{"error", "internal"}, {"message", e.what()}});
                return;
        }
    } catch (const std::exception& e) {
        reply_json(res, 500, Json{{"error", "internal"}, {"message", e.what()}});
    }
}

void SiteHostService::wire_routes() {
    server_->Get(R"(/site/([^/]+)/wiki/(.+))",
                 [this](const httplib::Request& req, httplib::Response& res) {
                     guarded(res, [&] {
                         std::lock_guard<std::mutex> lock(mutex_);
                         const GetResult r = host_->get_page(req.matches[1], req.matches[2]);
                         if (r.status == GetStatus::unreachable) {
                             res.status = 503;
                             res.set_content("503 site unreachable\n", "text/html");
                         } else if (r.status == GetStatus::page_missing) {
                             res.status = 404;
                             res.set_content("404 not found\n", "text/html");
                         } else {
                             res.status = 200;
                             res.set_content(r.html, "text/html");
                         }
                     });
                 });

    server_->Post(R"(/site/([^/]+)/edit)", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const Json body = parse_json(req.body);
            std::string title, content;
            std::optional<std::string> token, puzzle_id, puzzle_answer;
            try {
                title = body.at("title").get<std::string>();
                content = body.at("content").get<std::string>();
                if (body.contains("token") && !body["token"].is_null())
                    token = body["token"].get<std::string>();
                if (body.contains("puzzle_id") && !body["puzzle_id"].is_null())
                    puzzle_id = body["puzzle_id"].get<std::string>();
                if (body.contains("puzzle_answer") && !body["puzzle_answer"].is_null()) {
                    // Accept both string and integer answers.
                    puzzle_answer = body["puzzle_answer"].is_string()
                                        ? body["puzzle_answer"].get<std::string>()
                                        : body["puzzle_answer"].dump();
                }
            } catch (const Json::exception& e) {
                fail(Errc::parse, std::string("bad edit body: ") + e.what());
            }

            std::lock_guard<std::mutex> lock(mutex_);
            const EditResult r =
                host_->edit_page(req.matches[1], title, content, token, puzzle_id, puzzle_answer);
            if (r.status == EditStatus::accepted) {
                reply_json(res, 200, Json{{"revision_id", r.revision_id}});
            } else if (r.status == EditStatus::unreachable) {
                reply_json(res, 503, Json{{"error", "site_unreachable"}});
            } else {
                reply_json(res, 403, Json{{"refused", edit_status_name(r.status)}});
            }
        });
    });

    server_->Post(R"(/site/([^/]+)/challenge)",
                  [this](const httplib::Request& req, httplib::Response& res) {
                      guarded(res, [&] {
                          std::lock_guard<std::mutex> lock(mutex_);
                          const Challenge c = host_->issue_challenge(req.matches[1]);
                          reply_json(res, 200,
                                     Json{{"puzzle_id", c.puzzle_id}, {"challenge", c.challenge}});
                      });
                  });

    server_->Post(R"(/site/([^/]+)/register)",
                  [this](const httplib::Request& req, httplib::Response& res) {
                      guarded(res, [&] {
                          const Json body = req.body.empty() ? Json::object() : parse_json(req.body);
                          const std::string username = body.value("username", "user");
                          std::lock_guard<std::mutex> lock(mutex_);
                          reply_json(res, 200,
                                     Json{{"token", host_->register_user(req.matches[1], username)}});
                      });
                  });

    server_->Get(R"(/site/([^/]+)/history/(.+))",
                 [this](const httplib::Request& req, httplib::Response& res) {
                     guarded(res, [&] {
                         std::lock_guard<std::mutex> lock(mutex_);
                         const auto revisions = host_->get_history(req.matches[1], req.matches[2]);
                         Json arr = Json::array();
                         for (const Revision& r : revisions) {
                             arr.push_back({{"revision_id", r.revision_id},
                                            {"timestamp", r.timestamp},
                                            {"author", r.author},
                                            {"content", r.content},
                                            {"is_reverted", r.is_reverted}});
                         }
                         reply_json(res, 200,
                                    Json{{"title", std::string(req.matches[2])}, {"revisions", arr}});
                     });
                 });

    server_->Get(R"(/site/([^/]+)/recent)", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            std::lock_guard<std::mutex> lock(mutex_);
            Json arr = Json::array();
            for (const RecentChange& c : host_->recent_changes(req.matches[1]))
                arr.push_back({{"title", c.title},
                               {"revision_id", c.revision_id},
                               {"timestamp", c.timestamp}});
            reply_json(res, 200, Json{{"changes", arr}});
        });
    });

    server_->Post("/admin/population", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const Json body = parse_json(req.body);
            const PopulationSpec spec = PopulationSpec::from_json(body);
            const std::uint64_t seed = body.value("seed", seed_);
            std::lock_guard<std::mutex> lock(mutex_);
            const HazardModel hazards = host_->hazards();
            host_ = std::make_unique<SiteHost>(spec, seed);
            host_->set_hazards(hazards);
            reply_json(res, 200, Json{{"sites", host_->sites().size()}});
        });
    });

    server_->Post("/admin/tick", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const Json body = req.body.empty() ? Json::object() : parse_json(req.body);
            const int days = body.value("days", 1);
            std::lock_guard<std::mutex> lock(mutex_);
            const auto events = host_->tick_days(days);
            Json arr = Json::array();
            for (const ModerationEvent& e : events) {
                const char* kind = e.kind == ModerationEvent::Kind::page_removed  ? "page_removed"
                                   : e.kind == ModerationEvent::Kind::page_changed ? "page_changed"
                                                                                    : "site_died";
                arr.push_back(
                    {{"kind", kind}, {"day", e.day}, {"site_id", e.site_id}, {"title", e.title}});
            }
            reply_json(res, 200, Json{{"day", host_->day()}, {"events", arr}});
        });
    });

    server_->Get("/admin/state", [this](const httplib::Request&, httplib::Response& res) {
        guarded(res, [&] {
            std::lock_guard<std::mutex> lock(mutex_);
            reply_json(res, 200, host_->admin_state());
        });
    });
}

bool SiteHostService::listen(const std::string& host, int port) {
    return server_->listen(host, port);
}

int SiteHostService::start(const std::string& host) {
    const int port = server_->bind_to_any_port(host);
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
    return port;
}

void SiteHostService::stop() {
    if (server_) server_->stop();
    if (thread_.joinable()) thread_.join();
}

} // namespace graffiti
