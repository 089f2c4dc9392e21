#pragma once

#include <atomic>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "debatebench/backend.hpp"
#include "debatebench/corpus.hpp"
#include "debatebench/digest.hpp"
#include "debatebench/errors.hpp"
#include "debatebench/jsonl.hpp"
#include "debatebench/metrics.hpp"
#include "debatebench/parallel.hpp"
#include "debatebench/pipelines.hpp"
#include "debatebench/prompts.hpp"

namespace debatebench {

/// Cooperative interruption. Workers check the stop flag when starting a
/// question, and the record sink raises CanceledError right after a record is
/// written once the flag is up, so runs can be cut mid-question with every
/// completed call persisted.
class RunController {
public:
    void request_stop() { stop_.store(true); }
    bool stop_requested() const { return stop_.load(); }

    /// Arms the stop flag to trip after n more records have been written.
    void stop_after_records(long n) {
        budget_.store(n);
        armed_.store(true);
    }

    void on_record() {
        if (!armed_.load()) return;
        if (budget_.fetch_sub(1) <= 1) stop_.store(true);
    }

private:
    std::atomic<bool> stop_{false};
    std::atomic<bool> armed_{false};
    std::atomic<long> budget_{0};
};

struct RunManifest {
    std::string run_id;
    std::string pipeline;  // baseline | regular | hierarchical
    std::string dataset_path;
    std::string dataset_digest;
    int worker_count = 16;
    std::size_t subtask_parallelism = 1;
    DebateConfig debate;
    nlohmann::json backends = nlohmann::json::array();  // redacted snapshot
    nlohmann::json config;                              // raw experiment config, for resume
    std::string replay_cache;                           // empty = none

    nlohmann::json to_json() const {
        return {
            {"run_id", run_id},
            {"pipeline", pipeline},
            {"dataset_path", dataset_path},
            {"dataset_digest", dataset_digest},
            {"worker_count", worker_count},
            {"subtask_parallelism", subtask_parallelism},
            {"debate", debate.to_json()},
            {"backends", backends},
            {"config", config},
            {"replay_cache", replay_cache},
        };
    }

    static RunManifest from_json(const nlohmann::json& j) {
        RunManifest m;
        m.run_id = j.at("run_id").get<std::string>();
        m.pipeline = j.at("pipeline").get<std::string>();
        m.dataset_path = j.at("dataset_path").get<std::string>();
        m.dataset_digest = j.at("dataset_digest").get<std::string>();
        m.worker_count = j.value("worker_count", 16);
        m.subtask_parallelism = j.value("subtask_parallelism", std::size_t{1});
        m.debate = DebateConfig::from_json(j.at("debate"));
        m.backends = j.value("backends", nlohmann::json::array());
        m.config = j.value("config", nlohmann::json());
        m.replay_cache = j.value("replay_cache", std::string{});
        return m;
    }
};

namespace detail {

/// Redacted per-backend snapshot for the manifest. Credentials are referenced
/// by environment variable name only; values never leave the process.
inline nlohmann::json backend_snapshot(const BackendRegistry& registry) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& name : registry.names()) {
        const auto& cfg = registry.get(name)->config();
        out.push_back({
            {"name", cfg.name},
            {"kind", to_string(cfg.kind)},
            {"endpoint", cfg.endpoint},
            {"model", cfg.model},
            {"credential_env", cfg.credential_env},
            {"temperature", cfg.temperature},
            {"min_interval_ms",
             std::chrono::duration_cast<std::chrono::milliseconds>(cfg.min_interval).count()},
            {"timeout_ms", std::chrono::duration_cast<std::chrono::milliseconds>(cfg.timeout).count()},
            {"max_retries", cfg.max_retries},
        });
    }
    return out;
}

inline std::string new_run_id() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y%m%dT%H%M%S", &tm);
    std::random_device rd;
    char suffix[8];
    std::snprintf(suffix, sizeof(suffix), "%06x", rd() & 0xffffff);
    return std::string(stamp) + "-" + suffix;
}

inline nlohmann::json record_json(const std::string& run_id, const std::string& question_id,
                                  const StageRecord& rec) {
    return {
        {"run_id", run_id},
        {"question", question_id},
        {"stage", rec.stage.to_json()},
        {"backend", rec.backend},
        {"prompt", rec.prompt},
        {"response", rec.response},
        {"started_ns", rec.completion.started.count()},
        {"finished_ns", rec.completion.finished.count()},
        {"attempt_count", rec.completion.attempt_count},
    };
}

}  // namespace detail

class Runner {
public:
    Runner(BackendRegistry& backends, const PromptLibrary& prompts) : backends_(backends), prompts_(prompts) {}

    /// Runs the whole dataset and writes out_dir/<run_id>/{manifest.json,
    /// records.jsonl,final_solutions.jsonl}. The manifest lands before the
    /// first backend call; a question failure is logged and skipped.
    /// Interruption through the controller raises CanceledError after the
    /// on-disk log is current; resume() picks such a run back up.
    RunManifest execute(const std::string& dataset_path, const std::string& pipeline, const DebateConfig& debate,
                        const std::filesystem::path& out_dir, int workers = 16,
                        const nlohmann::json& config_snapshot = nlohmann::json(),
                        RunController* controller = nullptr, std::size_t subtask_parallelism = 1,
                        const std::string& replay_cache = {}) {
        check_setup(pipeline, debate, workers);
        const auto dataset = load_dataset(dataset_path);

        RunManifest m;
        m.run_id = detail::new_run_id();
        m.pipeline = pipeline;
        m.dataset_path = dataset_path;
        m.dataset_digest = sha256_file_hex(dataset_path);
        m.worker_count = workers;
        m.subtask_parallelism = subtask_parallelism;
        m.debate = debate;
        m.backends = detail::backend_snapshot(backends_);
        m.config = config_snapshot;
        m.replay_cache = replay_cache;

        const auto dir = out_dir / m.run_id;
        std::filesystem::create_directories(dir);
        write_json_file(dir / "manifest.json", m.to_json());

        JsonlWriter writer(dir / "records.jsonl");
        run_questions(dataset, m, dir, writer, {}, controller);
        return m;
    }

    /// Re-opens a run: completed questions are kept, partially completed ones
    /// are tombstoned and redone from scratch, pending ones run normally.
    RunManifest resume(const std::filesystem::path& out_dir, const std::string& run_id,
                       RunController* controller = nullptr) {
        const auto dir = out_dir / run_id;
        const auto manifest_path = dir / "manifest.json";
        if (!std::filesystem::exists(manifest_path)) throw ManifestMissingError(manifest_path.string());
        const RunManifest m = RunManifest::from_json(read_json_file(manifest_path));

        const std::string digest = sha256_file_hex(m.dataset_path);
        if (digest != m.dataset_digest) throw DigestMismatchError(m.dataset_digest, digest);
        const auto dataset = load_dataset(m.dataset_path);

        // Replay the log: per-question stage->response maps, reset on tombstone.
        std::unordered_map<std::string, std::unordered_map<std::string, std::string>> stages;
        const auto records_path = dir / "records.jsonl";
        if (std::filesystem::exists(records_path)) {
            for (const auto& line : read_jsonl(records_path)) {
                if (line.contains("tombstone")) {
                    stages.erase(line["tombstone"].get<std::string>());
                    continue;
                }
                if (!line.contains("question") || !line.contains("stage")) continue;
                const auto qid = line["question"].get<std::string>();
                stages[qid][StageLabel::from_json(line["stage"]).str()] = line.value("response", std::string{});
            }
        }

        std::unordered_map<std::string, std::string> completed;
        std::vector<std::string> partial;
        for (const auto& q : dataset) {
            const auto it = stages.find(q.id);
            if (it == stages.end()) continue;
            if (auto final_text = reconstruct_final(m, it->second)) completed.emplace(q.id, *final_text);
            else partial.push_back(q.id);
        }

        JsonlWriter writer(records_path);
        for (const auto& qid : partial) writer.append({{"tombstone", qid}});
        run_questions(dataset, m, dir, writer, completed, controller);
        return m;
    }

    /// Scores a completed run against the dataset's gold keywords and writes
    /// metrics.json next to the run log. Questions without a final solution
    /// score zero.
    static MetricsReport score(const std::filesystem::path& out_dir, const std::string& run_id,
                               const std::string& dataset_path) {
        const auto dir = out_dir / run_id;
        const auto solutions_path = dir / "final_solutions.jsonl";
        if (!std::filesystem::exists(solutions_path)) throw SolutionsMissingError(solutions_path.string());
        const auto dataset = load_dataset(dataset_path);

        std::unordered_map<std::string, std::string> texts;
        for (const auto& line : read_jsonl(solutions_path))
            if (line.contains("question")) texts[line["question"].get<std::string>()] = line.value("text", std::string{});

        std::vector<MatchResult> results;
        results.reserve(dataset.size());
        for (const auto& q : dataset) {
            const auto it = texts.find(q.id);
            results.push_back(match_keywords(q.id, it == texts.end() ? std::string{} : it->second, q.gold));
        }

        MetricsReport rep = compute_metrics(results, dataset);
        nlohmann::json j = rep.to_json();
        j["run_id"] = run_id;
        write_json_file(dir / "metrics.json", j);
        return rep;
    }

private:
    void check_setup(const std::string& pipeline, const DebateConfig& debate, int workers) const {
        if (pipeline != "baseline" && pipeline != "regular" && pipeline != "hierarchical")
            throw Error("unknown pipeline \"" + pipeline + "\"");
        debate.validate();
        if (workers < 1) throw Error("workers must be >= 1");
        for (const auto& d : debate.debaters)
            if (!backends_.has(d)) throw BackendUnregisteredError(d);
    }

    PipelineOutput run_one(const QuestionRecord& q, PipelineContext& ctx, const RunManifest& m) const {
        if (m.pipeline == "baseline") return run_baseline(q, ctx, m.debate.debaters.front());
        if (m.pipeline == "regular") return run_regular_debate(q, ctx, m.debate);
        return run_hierarchical(q, ctx, m.debate);
    }

    void run_questions(const std::vector<QuestionRecord>& dataset, const RunManifest& m,
                       const std::filesystem::path& dir, JsonlWriter& writer,
                       const std::unordered_map<std::string, std::string>& already_final,
                       RunController* controller) {
        std::vector<std::optional<std::string>> finals(dataset.size());

        PipelineContext ctx{
            backends_,
            prompts_,
            [&](const QuestionRecord& q, const StageRecord& rec) {
                writer.append(detail::record_json(m.run_id, q.id, rec));
                if (controller) {
                    controller->on_record();
                    if (controller->stop_requested()) throw CanceledError();
                }
            },
            m.subtask_parallelism,
        };

        parallel_for(dataset.size(), static_cast<std::size_t>(m.worker_count), [&](std::size_t i) {
            const auto& q = dataset[i];
            const auto done = already_final.find(q.id);
            if (done != already_final.end()) {
                finals[i] = done->second;
                return;
            }
            if (controller && controller->stop_requested()) throw CanceledError();
            try {
                finals[i] = run_one(q, ctx, m).final_text;
            } catch (const CanceledError&) {
                throw;
            } catch (const std::exception& e) {
                writer.append({{"failure", q.id}, {"error", e.what()}});
            }
        });

        std::ofstream out(dir / "final_solutions.jsonl", std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write final solutions: " + (dir / "final_solutions.jsonl").string());
        for (std::size_t i = 0; i < dataset.size(); ++i) {
            if (!finals[i]) continue;
            out << nlohmann::json{{"question", dataset[i].id}, {"text", *finals[i]}}.dump() << '\n';
        }
        out.flush();
        if (!out) throw IoError("write failed: " + (dir / "final_solutions.jsonl").string());
    }

    /// Final text of a question if its post-tombstone records form a complete
    /// pipeline execution, reconstructed exactly as the live run would have
    /// concatenated it.
    static std::optional<std::string> reconstruct_final(
        const RunManifest& m, const std::unordered_map<std::string, std::string>& by_stage) {
        const int M = static_cast<int>(m.debate.debaters.size());
        auto find = [&](const StageLabel& s) -> const std::string* {
            const auto it = by_stage.find(s.str());
            return it == by_stage.end() ? nullptr : &it->second;
        };

        if (m.pipeline == "baseline") {
            const auto* r = find(StageLabel{StageLabel::Kind::baseline, 0, 0, 0});
            return r ? std::optional<std::string>(*r) : std::nullopt;
        }
        if (m.pipeline == "regular") {
            const auto* r = find(StageLabel{StageLabel::Kind::regular, m.debate.regular_rounds, M, 0});
            return r ? std::optional<std::string>(*r) : std::nullopt;
        }

        const auto* decomp = find(StageLabel{StageLabel::Kind::decomp, m.debate.decomp_rounds, M, 0});
        if (!decomp) return std::nullopt;
        auto subtasks = parse_subtasks(*decomp);
        if (m.debate.max_subtasks && subtasks.size() > static_cast<std::size_t>(*m.debate.max_subtasks))
            subtasks.resize(static_cast<std::size_t>(*m.debate.max_subtasks));
        if (subtasks.empty()) return std::nullopt;

        std::vector<std::string> solutions;
        solutions.reserve(subtasks.size());
        for (const auto& st : subtasks) {
            const auto* r = find(StageLabel{StageLabel::Kind::subtask, m.debate.subtask_rounds, M,
                                            static_cast<int>(st.index)});
            if (!r) return std::nullopt;
            solutions.push_back(*r);
        }
        return concat_subtask_solutions(subtasks, solutions);
    }

    static void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for writing: " + path.string());
        out << j.dump(2) << '\n';
        out.flush();
        if (!out) throw IoError("write failed: " + path.string());
    }

    static nlohmann::json read_json_file(const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open: " + path.string());
        auto doc = nlohmann::json::parse(in, nullptr, false);
        if (doc.is_discarded()) throw Error("malformed JSON in " + path.string());
        return doc;
    }

    BackendRegistry& backends_;
    const PromptLibrary& prompts_;
};

}  // namespace debatebench
