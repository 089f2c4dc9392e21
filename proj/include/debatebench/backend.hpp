#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "debatebench/clock.hpp"
#include "debatebench/errors.hpp"
#include "debatebench/rate_limiter.hpp"

namespace debatebench {

enum class BackendKind { http, scripted, replay };

inline const char* to_string(BackendKind k) {
    switch (k) {
        case BackendKind::http: return "http";
        case BackendKind::scripted: return "scripted";
        case BackendKind::replay: return "replay";
    }
    return "?";
}

inline BackendKind backend_kind_from_string(const std::string& s) {
    if (s == "http") return BackendKind::http;
    if (s == "scripted") return BackendKind::scripted;
    if (s == "replay") return BackendKind::replay;
    throw Error("unknown backend kind \"" + s + "\"");
}

struct BackendConfig {
    std::string name;
    BackendKind kind = BackendKind::scripted;
    std::string endpoint;        // http only: full chat-completions URL
    std::string model;           // http only
    std::string credential_env;  // http only: env var holding the API key
    double temperature = 0.7;
    std::chrono::milliseconds timeout{60000};
    int max_retries = 3;
    std::chrono::milliseconds min_interval{1000};

    void validate() const {
        if (name.empty()) throw Error("backend config needs a name");
        if (min_interval.count() < 0) throw Error("backend \"" + name + "\": min_interval must be >= 0");
        if (max_retries < 0) throw Error("backend \"" + name + "\": max_retries must be >= 0");
        if (temperature < 0) throw Error("backend \"" + name + "\": temperature must be >= 0");
        if (kind == BackendKind::http) {
            if (endpoint.empty()) throw Error("backend \"" + name + "\": http kind requires endpoint");
            if (model.empty()) throw Error("backend \"" + name + "\": http kind requires model");
            if (credential_env.empty())
                throw Error("backend \"" + name + "\": http kind requires credential_env");
        }
    }
};

struct Completion {
    std::string text;
    std::string model;
    Clock::duration started{};
    Clock::duration finished{};
    int attempt_count = 1;

    Clock::duration latency() const { return finished - started; }
};

/// Uniform chat-completion interface. complete() paces through the
/// per-backend rate limiter, stamps timing from the shared clock, and
/// leaves transport details to subclasses.
class ChatBackend {
public:
    ChatBackend(BackendConfig cfg, std::shared_ptr<Clock> clock)
        : cfg_(std::move(cfg)),
          clock_(std::move(clock)),
          limiter_(*clock_, std::chrono::duration_cast<Clock::duration>(cfg_.min_interval)) {
        cfg_.validate();
    }

    virtual ~ChatBackend() = default;
    ChatBackend(const ChatBackend&) = delete;
    ChatBackend& operator=(const ChatBackend&) = delete;

    const BackendConfig& config() const { return cfg_; }
    const std::string& name() const { return cfg_.name; }
    const std::shared_ptr<Clock>& clock() const { return clock_; }

    Completion complete(const std::string& prompt) {
        Completion c;
        c.started = limiter_.acquire();
        c.model = cfg_.model.empty() ? cfg_.name : cfg_.model;
        c.text = do_complete(prompt, c);
        c.finished = clock_->now();
        return c;
    }

protected:
    /// Produces the response text; fills attempt_count / model on `meta`
    /// when the transport knows better.
    virtual std::string do_complete(const std::string& prompt, Completion& meta) = 0;

    BackendConfig cfg_;
    std::shared_ptr<Clock> clock_;
    RateLimiter limiter_;
};

/// Name-keyed backend collection shared by pipelines and the runner.
/// One instance per name means one rate limiter per name.
class BackendRegistry {
public:
    explicit BackendRegistry(std::shared_ptr<Clock> clock = std::make_shared<SystemClock>())
        : clock_(std::move(clock)) {}

    const std::shared_ptr<Clock>& clock() const { return clock_; }

    void add(std::shared_ptr<ChatBackend> backend) {
        std::lock_guard<std::mutex> lock(mu_);
        const std::string& name = backend->name();
        if (backends_.count(name) != 0) throw Error("backend \"" + name + "\" already registered");
        backends_[name] = std::move(backend);
    }

    /// Replaces an entry in place, e.g. when wrapping with a replay cache.
    void replace(std::shared_ptr<ChatBackend> backend) {
        std::lock_guard<std::mutex> lock(mu_);
        backends_[backend->name()] = std::move(backend);
    }

    std::shared_ptr<ChatBackend> get(const std::string& name) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = backends_.find(name);
        if (it == backends_.end()) throw BackendUnregisteredError(name);
        return it->second;
    }

    bool has(const std::string& name) const {
        std::lock_guard<std::mutex> lock(mu_);
        return backends_.count(name) != 0;
    }

    std::vector<std::string> names() const {
        std::lock_guard<std::mutex> lock(mu_);
        std::vector<std::string> out;
        out.reserve(backends_.size());
        for (const auto& [name, _] : backends_) out.push_back(name);
        return out;
    }

private:
    std::shared_ptr<Clock> clock_;
    std::map<std::string, std::shared_ptr<ChatBackend>> backends_;
    mutable std::mutex mu_;
};

}  // namespace debatebench
