#pragma once

#include <chrono>
#include <cstdint>

namespace graffiti {

// Seconds-resolution clock seam. Services take a Clock& so tests and the
// deterministic serve modes can drive time explicitly.
class Clock {
public:
    virtual ~Clock() = default;
    virtual std::int64_t now() const = 0;
};

class SystemClock final : public Clock {
public:
    std::int64_t now() const override {
        return std::chrono::duration_cast<std::chrono::seconds>(
                   std::chrono::system_clock::now().time_since_epoch())
            .count();
    }
};

// Manual clock; starts at zero. advance() is the only way time moves.
class SimClock final : public Clock {
public:
    explicit SimClock(std::int64_t start = 0) : now_(start) {}
    std::int64_t now() const override { return now_; }
    void advance(std::int64_t seconds) { now_ += seconds; }
    void set(std::int64_t t) { now_ = t; }

private:
    std::int64_t now_;
};

} // namespace graffiti
