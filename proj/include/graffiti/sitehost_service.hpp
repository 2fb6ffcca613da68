#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "graffiti/sitehost.hpp"

namespace httplib {
class Server;
}

namespace graffiti {

// HTTP front end multiplexing every mock site under /site/<id>/..., plus
// the /admin endpoints the harness and simulator use. Dead sites answer
// 503, which stands in for a connection that cannot be made.
class SiteHostService {
public:
    SiteHostService(PopulationSpec spec, std::uint64_t seed);
    ~SiteHostService();

    SiteHostService(const SiteHostService&) = delete;
    SiteHostService& operator=(const SiteHostService&) = delete;

    bool listen(const std::string& host, int port);
    int start(const std::string& host); // background thread; returns port
    void stop();

    SiteHost& host_unlocked() { return *host_; }
    std::mutex& mutex() { return mutex_; }

private:
    void wire_routes();

    std::unique_ptr<SiteHost> host_;
    std::uint64_t seed_;
    std::mutex mutex_;
    std::unique_ptr<httplib::Server> server_;
    std::thread thread_;
};

} // namespace graffiti
