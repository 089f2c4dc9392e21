#pragma once

#include <stdexcept>
#include <string>

namespace debatebench {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- dataset ----

class DatasetParseError : public Error {
public:
    explicit DatasetParseError(const std::string& msg) : Error("dataset parse error: " + msg) {}
};

class MissingFieldError : public Error {
public:
    MissingFieldError(std::string key, std::string field)
        : Error("entry \"" + key + "\" is missing required field \"" + field + "\""),
          key_(std::move(key)),
          field_(std::move(field)) {}
    const std::string& key() const { return key_; }
    const std::string& field() const { return field_; }

private:
    std::string key_;
    std::string field_;
};

class EmptyGoldError : public Error {
public:
    explicit EmptyGoldError(std::string key = {})
        : Error(key.empty() ? std::string("gold keyword set is empty")
                            : "entry \"" + key + "\" has an empty gold keyword set"),
          key_(std::move(key)) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

// ---- backends ----

class AuthMissingError : public Error {
public:
    explicit AuthMissingError(const std::string& env_var)
        : Error("credential environment variable \"" + env_var + "\" is not set") {}
};

class TimeoutError : public Error {
public:
    explicit TimeoutError(const std::string& msg) : Error("timeout: " + msg) {}
};

class RateLimitedError : public Error {
public:
    explicit RateLimitedError(const std::string& msg) : Error("rate limited: " + msg) {}
};

/// Scripted queue ran out of canned responses.
class ExhaustedError : public Error {
public:
    explicit ExhaustedError(const std::string& backend)
        : Error("scripted backend \"" + backend + "\": response queue exhausted") {}
};

/// Scripted map has no entry for the request fingerprint.
class UnknownFingerprintError : public Error {
public:
    UnknownFingerprintError(const std::string& backend, const std::string& fingerprint)
        : Error("scripted backend \"" + backend + "\" has no response for fingerprint " + fingerprint) {}
};

class CacheCorruptError : public Error {
public:
    explicit CacheCorruptError(std::string file)
        : Error("replay cache entry is corrupt: " + file), file_(std::move(file)) {}
    const std::string& file() const { return file_; }

private:
    std::string file_;
};

class BackendUnregisteredError : public Error {
public:
    explicit BackendUnregisteredError(const std::string& name)
        : Error("no backend registered under name \"" + name + "\"") {}
};

// ---- prompts & pipelines ----

class TemplateError : public Error {
public:
    explicit TemplateError(const std::string& msg) : Error("template error: " + msg) {}
};

class DecompositionEmptyError : public Error {
public:
    explicit DecompositionEmptyError(const std::string& question_id)
        : Error("decomposition for \"" + question_id + "\" produced zero sub-tasks") {}
};

/// Backend failure re-raised with the stage coordinates it occurred at.
class PipelineStageError : public Error {
public:
    PipelineStageError(std::string stage, const std::string& backend, const std::string& cause)
        : Error("stage " + stage + " via \"" + backend + "\": " + cause), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

// ---- metrics ----

class EmptyResultsError : public Error {
public:
    EmptyResultsError() : Error("metric requires a non-empty result list") {}
};

class UnknownQuestionError : public Error {
public:
    explicit UnknownQuestionError(const std::string& id)
        : Error("match result refers to unknown question \"" + id + "\"") {}
};

// ---- runner ----

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error("io error: " + msg) {}
};

class DigestMismatchError : public Error {
public:
    DigestMismatchError(const std::string& expected, const std::string& actual)
        : Error("dataset digest mismatch: manifest has " + expected + ", file has " + actual) {}
};

class ManifestMissingError : public Error {
public:
    explicit ManifestMissingError(const std::string& path)
        : Error("run manifest not found: " + path) {}
};

class SolutionsMissingError : public Error {
public:
    explicit SolutionsMissingError(const std::string& path)
        : Error("final solutions file not found: " + path) {}
};

/// Raised inside a worker when a cooperative stop was requested.
class CanceledError : public Error {
public:
    CanceledError() : Error("run canceled") {}
};

// ---- report ----

class SeriesMismatchError : public Error {
public:
    explicit SeriesMismatchError(const std::string& msg) : Error("radar series mismatch: " + msg) {}
};

class TooManySeriesError : public Error {
public:
    explicit TooManySeriesError(std::size_t n)
        : Error("radar chart supports at most 4 series, got " + std::to_string(n)) {}
};

}  // namespace debatebench
