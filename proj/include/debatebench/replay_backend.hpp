#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "debatebench/backend.hpp"
#include "debatebench/fingerprint.hpp"

namespace debatebench {

/// Record/replay cache over another backend. Hits are served straight from
/// disk with zero delegate calls; misses delegate once and persist the
/// result as cache/<backend-name>/<fingerprint>.json.
class ReplayBackend final : public ChatBackend {
public:
    ReplayBackend(std::shared_ptr<ChatBackend> inner, std::filesystem::path cache_dir)
        : ChatBackend(wrapper_config(inner->config()), inner->clock()),
          inner_(std::move(inner)),
          dir_(std::move(cache_dir)) {
        std::filesystem::create_directories(entry_dir());
    }

    std::size_t delegate_calls() const {
        std::lock_guard<std::mutex> lock(mu_);
        return delegate_calls_;
    }

    std::filesystem::path entry_dir() const { return dir_ / inner_->name(); }

protected:
    std::string do_complete(const std::string& prompt, Completion& meta) override {
        const std::string fp = request_fingerprint(inner_->name(), prompt, inner_->config().temperature);
        const std::filesystem::path file = entry_dir() / (fp + ".json");

        {
            std::lock_guard<std::mutex> lock(mu_);
            if (std::filesystem::exists(file)) {
                meta.attempt_count = 1;
                return read_entry(file);
            }
        }

        {
            std::lock_guard<std::mutex> lock(mu_);
            ++delegate_calls_;
        }
        Completion fresh = inner_->complete(prompt);
        meta.attempt_count = fresh.attempt_count;
        meta.model = fresh.model;

        std::lock_guard<std::mutex> lock(mu_);
        if (!std::filesystem::exists(file)) write_entry(file, fp, prompt, fresh);
        return fresh.text;
    }

private:
    static BackendConfig wrapper_config(BackendConfig inner_cfg) {
        // The wrapper answers under the inner backend's name; pacing stays
        // with the inner backend so cache hits cost nothing.
        inner_cfg.kind = BackendKind::replay;
        inner_cfg.min_interval = std::chrono::milliseconds(0);
        return inner_cfg;
    }

    std::string read_entry(const std::filesystem::path& file) const {
        std::ifstream in(file);
        nlohmann::json entry;
        try {
            in >> entry;
            return entry.at("response").get<std::string>();
        } catch (const nlohmann::json::exception&) {
            throw CacheCorruptError(file.string());
        }
    }

    void write_entry(const std::filesystem::path& file, const std::string& fp, const std::string& prompt,
                     const Completion& completion) const {
        nlohmann::json entry = {
            {"fingerprint", fp},
            {"prompt", prompt},
            {"temperature", inner_->config().temperature},
            {"response", completion.text},
            {"model", completion.model},
        };
        const std::filesystem::path tmp = file.string() + ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) throw IoError("cannot write replay cache entry " + tmp.string());
            out << entry.dump(2) << '\n';
        }
        std::filesystem::rename(tmp, file);
    }

    std::shared_ptr<ChatBackend> inner_;
    std::filesystem::path dir_;
    std::size_t delegate_calls_ = 0;
    mutable std::mutex mu_;
};

}  // namespace debatebench
