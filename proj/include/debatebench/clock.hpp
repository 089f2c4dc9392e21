#pragma once

#include <chrono>
#include <mutex>
#include <thread>

namespace debatebench {

/// Time source shared by rate limiters, retry backoff, and run records.
/// Virtualized so tests can drive schedules without real sleeping.
class Clock {
public:
    using duration = std::chrono::nanoseconds;

    virtual ~Clock() = default;

    /// Nanoseconds since the clock's epoch.
    virtual duration now() = 0;

    /// Blocks until now() >= t.
    virtual void sleep_until(duration t) = 0;

    void sleep_for(duration d) { sleep_until(now() + d); }
};

class SystemClock final : public Clock {
public:
    duration now() override {
        return std::chrono::duration_cast<duration>(
            std::chrono::system_clock::now().time_since_epoch());
    }

    void sleep_until(duration t) override {
        std::this_thread::sleep_until(
            std::chrono::system_clock::time_point(std::chrono::duration_cast<std::chrono::system_clock::duration>(t)));
    }
};

/// Test clock: sleep_until advances virtual time and returns immediately,
/// so schedules resolve instantly but keep their exact spacing.
class ManualClock final : public Clock {
public:
    duration now() override {
        std::lock_guard<std::mutex> lock(mu_);
        return now_;
    }

    void sleep_until(duration t) override {
        std::lock_guard<std::mutex> lock(mu_);
        if (t > now_) now_ = t;
    }

    void advance(duration d) {
        std::lock_guard<std::mutex> lock(mu_);
        now_ += d;
    }

private:
    std::mutex mu_;
    duration now_{0};
};

}  // namespace debatebench
