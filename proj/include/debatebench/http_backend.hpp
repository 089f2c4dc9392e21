#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <memory>
#include <string>

#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <nlohmann/json.hpp>

#include "debatebench/backend.hpp"

namespace debatebench {

/// Chat-completions client for OpenAI-compatible endpoints. Sends one user
/// message per call, reads the first choice, and retries transport faults,
/// 429s, and 5xx with exponential backoff through the shared clock.
class HttpBackend final : public ChatBackend {
public:
    HttpBackend(BackendConfig cfg, std::shared_ptr<Clock> clock)
        : ChatBackend(std::move(cfg), std::move(clock)) {
        split_endpoint(cfg_.endpoint, base_url_, path_);
    }

    const std::string& base_url() const { return base_url_; }
    const std::string& path() const { return path_; }

protected:
    std::string do_complete(const std::string& prompt, Completion& meta) override {
        const char* key = cfg_.credential_env.empty() ? nullptr : std::getenv(cfg_.credential_env.c_str());
        if (key == nullptr || *key == '\0') throw AuthMissingError(cfg_.credential_env);

        const nlohmann::json body = {
            {"model", cfg_.model},
            {"messages", nlohmann::json::array({{{"role", "user"}, {"content", prompt}}})},
            {"temperature", cfg_.temperature},
        };
        const std::string payload = body.dump();

        std::string last_error;
        bool last_was_429 = false;
        bool last_was_timeout = false;

        for (int attempt = 1; attempt <= cfg_.max_retries + 1; ++attempt) {
            meta.attempt_count = attempt;
            if (attempt > 1) {
                clock_->sleep_for(backoff_after(attempt - 1));
                limiter_.acquire();
            }

            httplib::Client client(base_url_);
            const auto timeout_s = std::chrono::duration_cast<std::chrono::seconds>(cfg_.timeout);
            client.set_connection_timeout(std::max<long>(1, timeout_s.count()), 0);
            client.set_read_timeout(std::max<long>(1, timeout_s.count()), 0);
            client.set_bearer_token_auth(key);

            auto result = client.Post(path_, payload, "application/json");
            if (!result) {
                last_was_timeout = result.error() == httplib::Error::ConnectionTimeout ||
                                   result.error() == httplib::Error::Read;
                last_was_429 = false;
                last_error = httplib::to_string(result.error());
                continue;
            }
            if (result->status == 200) {
                return extract_text(result->body, meta);
            }
            if (result->status == 429 || result->status >= 500) {
                last_was_429 = result->status == 429;
                last_was_timeout = false;
                last_error = "HTTP " + std::to_string(result->status);
                continue;
            }
            throw Error("backend \"" + cfg_.name + "\": HTTP " + std::to_string(result->status) + " from " +
                        cfg_.endpoint);
        }

        const std::string detail =
            "backend \"" + cfg_.name + "\" failed after " + std::to_string(cfg_.max_retries + 1) +
            " attempts (" + last_error + ")";
        if (last_was_429) throw RateLimitedError(detail);
        if (last_was_timeout) throw TimeoutError(detail);
        throw Error(detail);
    }

private:
    /// Backoff before retry k (1-based): min_interval * 2^k, capped at 30 s.
    Clock::duration backoff_after(int failed_attempts) const {
        auto base = std::chrono::duration_cast<Clock::duration>(cfg_.min_interval);
        if (base.count() <= 0) base = std::chrono::duration_cast<Clock::duration>(std::chrono::milliseconds(100));
        Clock::duration backoff = base;
        for (int i = 0; i < failed_attempts && backoff < std::chrono::seconds(30); ++i) backoff *= 2;
        return std::min<Clock::duration>(backoff, std::chrono::seconds(30));
    }

    std::string extract_text(const std::string& body, Completion& meta) const {
        try {
            const nlohmann::json doc = nlohmann::json::parse(body);
            if (doc.contains("model") && doc["model"].is_string()) meta.model = doc["model"].get<std::string>();
            const auto& choices = doc.at("choices");
            if (!choices.is_array() || choices.empty()) throw Error("empty choices");
            const auto& message = choices.at(0).at("message");
            return message.at("content").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw Error("backend \"" + cfg_.name + "\": unreadable completion body: " + e.what());
        }
    }

    static void split_endpoint(const std::string& endpoint, std::string& base, std::string& path) {
        const auto scheme_end = endpoint.find("://");
        const std::size_t host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
        const auto path_start = endpoint.find('/', host_start);
        if (path_start == std::string::npos) {
            base = endpoint;
            path = "/v1/chat/completions";
        } else {
            base = endpoint.substr(0, path_start);
            path = endpoint.substr(path_start);
        }
    }

    std::string base_url_;
    std::string path_;
};

}  // namespace debatebench
