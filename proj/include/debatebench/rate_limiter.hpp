#pragma once

#include <algorithm>
#include <mutex>

#include "debatebench/clock.hpp"

namespace debatebench {

/// Serializes call starts for one backend: any two acquired slots are at
/// least min_interval apart, no matter how many threads share the limiter.
class RateLimiter {
public:
    RateLimiter(Clock& clock, Clock::duration min_interval)
        : clock_(clock), interval_(min_interval) {}

    /// Reserves the next start slot, sleeps until it arrives, and returns it.
    Clock::duration acquire() {
        Clock::duration slot;
        {
            std::lock_guard<std::mutex> lock(mu_);
            slot = std::max(clock_.now(), next_);
            next_ = slot + interval_;
        }
        clock_.sleep_until(slot);
        return slot;
    }

    Clock::duration min_interval() const { return interval_; }

private:
    Clock& clock_;
    Clock::duration interval_;
    Clock::duration next_{0};
    std::mutex mu_;
};

}  // namespace debatebench
