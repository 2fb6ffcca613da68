#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "graffiti/tracker.hpp"

namespace httplib {
class Server;
}

namespace graffiti {

// HTTP front end for one Tracker. All mutations run under one lock, so
// state transitions form a single serialized command stream; when a state
// path is configured every mutation is persisted before the response is
// written.
class TrackerService {
public:
    TrackerService(Tracker tracker, std::string state_path);
    ~TrackerService();

    TrackerService(const TrackerService&) = delete;
    TrackerService& operator=(const TrackerService&) = delete;

    // Blocking serve (CLI path).
    bool listen(const std::string& host, int port);

    // Background serve on an OS-assigned port (test path). Returns the port.
    int start(const std::string& host);
    void stop();

    Tracker& tracker_unlocked() { return tracker_; } // callers must hold no requests
    std::mutex& mutex() { return mutex_; }

    // Installs the default proxy fetcher (plain HTTP GET of the location).
    void use_http_proxy_fetch();

private:
    void wire_routes();
    void persist();

    Tracker tracker_;
    std::string state_path_;
    std::mutex mutex_;
    std::unique_ptr<httplib::Server> server_;
    std::thread thread_;
};

// Reverse map of the wire error codes, shared with the client side.
struct WireError {
    int http_status = 500;
    std::string code;
};
WireError wire_error_for(Errc c);
Errc errc_for_wire_code(const std::string& code);

} // namespace graffiti
