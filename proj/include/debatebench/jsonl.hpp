#pragma once

#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "debatebench/errors.hpp"

namespace debatebench {

/// Append-only JSONL sink. Each append writes one line and flushes so a
/// crashed run loses at most the line being written.
class JsonlWriter {
public:
    explicit JsonlWriter(const std::filesystem::path& path)
        : path_(path), out_(path, std::ios::app) {
        if (!out_) throw IoError("cannot open for append: " + path.string());
    }

    void append(const nlohmann::json& value) {
        std::lock_guard<std::mutex> lock(mutex_);
        out_ << value.dump() << '\n';
        out_.flush();
        if (!out_) throw IoError("write failed: " + path_.string());
    }

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::mutex mutex_;
};

/// Reads every parseable line of a JSONL file. A trailing line cut short by
/// a crash is skipped; a malformed line elsewhere is skipped too, since the
/// reader's job is salvaging progress, not validation.
inline std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path.string());
    std::vector<nlohmann::json> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto parsed = nlohmann::json::parse(line, nullptr, false);
        if (parsed.is_discarded()) continue;
        lines.push_back(std::move(parsed));
    }
    return lines;
}

}  // namespace debatebench
