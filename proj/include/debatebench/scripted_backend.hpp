#pragma once

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "debatebench/backend.hpp"
#include "debatebench/fingerprint.hpp"

namespace debatebench {

/// Deterministic stand-in model for tests and offline runs. Queue mode pops
/// canned responses in call order; map mode serves by request fingerprint,
/// which stays stable across thread counts and repetitions.
class ScriptedBackend final : public ChatBackend {
public:
    enum class Mode { queue, map };

    static std::shared_ptr<ScriptedBackend> with_queue(BackendConfig cfg, std::shared_ptr<Clock> clock,
                                                       std::vector<std::string> responses) {
        auto b = std::make_shared<ScriptedBackend>(std::move(cfg), std::move(clock), Mode::queue);
        for (auto& r : responses) b->push_response(std::move(r));
        return b;
    }

    static std::shared_ptr<ScriptedBackend> with_map(BackendConfig cfg, std::shared_ptr<Clock> clock) {
        return std::make_shared<ScriptedBackend>(std::move(cfg), std::move(clock), Mode::map);
    }

    ScriptedBackend(BackendConfig cfg, std::shared_ptr<Clock> clock, Mode mode)
        : ChatBackend(std::move(cfg), std::move(clock)), mode_(mode) {}

    Mode mode() const { return mode_; }

    /// Queue mode: appends one canned response.
    void push_response(std::string response) {
        std::lock_guard<std::mutex> lock(mu_);
        queue_.push_back(std::move(response));
    }

    /// Map mode: registers the response served when `prompt` arrives.
    void respond_to(const std::string& prompt, std::string response) {
        std::lock_guard<std::mutex> lock(mu_);
        by_fingerprint_[request_fingerprint(cfg_.name, prompt, cfg_.temperature)] = std::move(response);
    }

    /// Map mode: registers a response under a precomputed fingerprint.
    void respond_to_fingerprint(std::string fingerprint, std::string response) {
        std::lock_guard<std::mutex> lock(mu_);
        by_fingerprint_[std::move(fingerprint)] = std::move(response);
    }

    std::size_t calls() const {
        std::lock_guard<std::mutex> lock(mu_);
        return calls_;
    }

    std::size_t remaining() const {
        std::lock_guard<std::mutex> lock(mu_);
        return queue_.size();
    }

protected:
    std::string do_complete(const std::string& prompt, Completion& meta) override {
        meta.attempt_count = 1;
        std::lock_guard<std::mutex> lock(mu_);
        ++calls_;
        if (mode_ == Mode::queue) {
            if (queue_.empty()) throw ExhaustedError(cfg_.name);
            std::string text = std::move(queue_.front());
            queue_.pop_front();
            return text;
        }
        std::string fp = request_fingerprint(cfg_.name, prompt, cfg_.temperature);
        auto it = by_fingerprint_.find(fp);
        if (it == by_fingerprint_.end()) throw UnknownFingerprintError(cfg_.name, fp);
        return it->second;
    }

private:
    Mode mode_;
    std::deque<std::string> queue_;
    std::map<std::string, std::string> by_fingerprint_;
    std::size_t calls_ = 0;
    mutable std::mutex mu_;
};

}  // namespace debatebench
