#pragma once

#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "debatebench/backend.hpp"
#include "debatebench/corpus.hpp"
#include "debatebench/errors.hpp"
#include "debatebench/parallel.hpp"
#include "debatebench/prompts.hpp"
#include "debatebench/subtasks.hpp"

namespace debatebench {

struct DebateConfig {
    std::vector<std::string> debaters;  // ordered roster, length M >= 1
    int regular_rounds = 1;
    int decomp_rounds = 1;
    int subtask_rounds = 1;
    std::optional<int> max_subtasks;
    std::string seed_steps;  // initial decomposition; empty = start from scratch

    void validate() const {
        if (debaters.empty()) throw Error("debate config: debaters must not be empty");
        for (const auto& d : debaters)
            if (d.empty()) throw Error("debate config: debater names must not be empty");
        if (regular_rounds < 1 || decomp_rounds < 1 || subtask_rounds < 1)
            throw Error("debate config: round counts must be >= 1");
        if (max_subtasks && *max_subtasks < 1) throw Error("debate config: max_subtasks must be >= 1");
    }

    nlohmann::json to_json() const {
        nlohmann::json j = {
            {"debaters", debaters},
            {"regular_rounds", regular_rounds},
            {"decomp_rounds", decomp_rounds},
            {"subtask_rounds", subtask_rounds},
            {"seed_steps", seed_steps},
        };
        j["max_subtasks"] = max_subtasks ? nlohmann::json(*max_subtasks) : nlohmann::json(nullptr);
        return j;
    }

    static DebateConfig from_json(const nlohmann::json& j) {
        DebateConfig cfg;
        cfg.debaters = j.value("debaters", std::vector<std::string>{});
        cfg.regular_rounds = j.value("regular_rounds", 1);
        cfg.decomp_rounds = j.value("decomp_rounds", 1);
        cfg.subtask_rounds = j.value("subtask_rounds", 1);
        if (j.contains("max_subtasks") && !j["max_subtasks"].is_null())
            cfg.max_subtasks = j["max_subtasks"].get<int>();
        cfg.seed_steps = j.value("seed_steps", std::string{});
        return cfg;
    }
};

struct StageLabel {
    enum class Kind { baseline, regular, decomp, subtask, concat };

    Kind kind = Kind::baseline;
    int round = 0;          // 1-based for debate stages
    int debater = 0;        // 1-based roster position
    int subtask_index = 0;  // 1-based, subtask stages only

    static const char* kind_name(Kind k) {
        switch (k) {
            case Kind::baseline: return "baseline";
            case Kind::regular: return "regular";
            case Kind::decomp: return "decomp";
            case Kind::subtask: return "subtask";
            case Kind::concat: return "concat";
        }
        return "?";
    }

    std::string str() const {
        char buf[64];
        switch (kind) {
            case Kind::baseline:
            case Kind::concat:
                return kind_name(kind);
            case Kind::subtask:
                std::snprintf(buf, sizeof(buf), "subtask(s%d,r%d,d%d)", subtask_index, round, debater);
                return buf;
            default:
                std::snprintf(buf, sizeof(buf), "%s(r%d,d%d)", kind_name(kind), round, debater);
                return buf;
        }
    }

    nlohmann::json to_json() const {
        nlohmann::json j = {{"kind", kind_name(kind)}};
        if (kind == Kind::regular || kind == Kind::decomp || kind == Kind::subtask) {
            j["round"] = round;
            j["debater"] = debater;
        }
        if (kind == Kind::subtask) j["subtask"] = subtask_index;
        return j;
    }

    static StageLabel from_json(const nlohmann::json& j) {
        StageLabel s;
        const std::string k = j.at("kind").get<std::string>();
        if (k == "baseline") s.kind = Kind::baseline;
        else if (k == "regular") s.kind = Kind::regular;
        else if (k == "decomp") s.kind = Kind::decomp;
        else if (k == "subtask") s.kind = Kind::subtask;
        else if (k == "concat") s.kind = Kind::concat;
        else throw Error("unknown stage kind \"" + k + "\"");
        s.round = j.value("round", 0);
        s.debater = j.value("debater", 0);
        s.subtask_index = j.value("subtask", 0);
        return s;
    }

    bool operator==(const StageLabel& o) const {
        return kind == o.kind && round == o.round && debater == o.debater && subtask_index == o.subtask_index;
    }
};

struct StageRecord {
    StageLabel stage;
    std::string backend;
    std::string prompt;
    std::string response;
    Completion completion;
};

struct PipelineOutput {
    std::string final_text;
    std::vector<StageRecord> stage_log;
    std::optional<std::vector<SubTask>> subtasks;  // hierarchical only
};

struct PipelineContext {
    BackendRegistry& backends;
    const PromptLibrary& prompts;
    /// Called after every completed backend call, in true emission order.
    /// Must be thread-safe when subtask_parallelism > 1.
    std::function<void(const QuestionRecord&, const StageRecord&)> observer;
    std::size_t subtask_parallelism = 1;
};

namespace detail {

/// Runs one sequential debate over `rounds` full passes of the roster and
/// returns the records. Template choice: call 1 with no prior solution uses
/// the initial template; odd roster positions refine with the Debater-1
/// phrasing, even ones with the Debater-2 phrasing; decomposition sequences
/// use review templates once a solution exists.
inline std::vector<StageRecord> debate_sequence(const QuestionRecord& q, PipelineContext& ctx,
                                                const std::vector<std::string>& debaters, int rounds,
                                                StageLabel::Kind kind, int subtask_index,
                                                const std::string& subtask_text, const std::string& seed) {
    const int M = static_cast<int>(debaters.size());
    std::vector<StageRecord> log;
    log.reserve(static_cast<std::size_t>(rounds) * M);

    std::string sol = seed;
    bool have_sol = !seed.empty();
    int reviews = 0;
    int t = 0;

    for (int r = 1; r <= rounds; ++r) {
        for (int j = 1; j <= M; ++j) {
            ++t;
            std::string tmpl;
            switch (kind) {
                case StageLabel::Kind::regular:
                    if (j % 2 == 1) tmpl = t == 1 ? "regular.initial" : "regular.refine.odd";
                    else tmpl = t == 2 ? "regular.enrich" : "regular.refine.even";
                    break;
                case StageLabel::Kind::decomp:
                    if (!have_sol) tmpl = "decomp.initial";
                    else tmpl = reviews++ == 0 ? "decomp.review_initial" : "decomp.review_later";
                    break;
                case StageLabel::Kind::subtask:
                    if (j % 2 == 1) tmpl = t == 1 ? "subtask.initial" : "subtask.refine.odd";
                    else tmpl = t == 2 ? "subtask.enrich" : "subtask.refine.even";
                    break;
                default:
                    tmpl = "baseline";
                    break;
            }

            std::map<std::string, std::string> vars = {{"category", q.category}, {"question", q.question}};
            if (have_sol) vars.emplace("sol", sol);
            if (kind == StageLabel::Kind::subtask) vars.emplace("st", subtask_text);

            StageRecord rec;
            rec.stage = StageLabel{kind, r, j, subtask_index};
            rec.backend = debaters[static_cast<std::size_t>(j) - 1];
            rec.prompt = ctx.prompts.get(tmpl).render(vars);
            try {
                rec.completion = ctx.backends.get(rec.backend)->complete(rec.prompt);
            } catch (const std::exception& e) {
                throw PipelineStageError(rec.stage.str(), rec.backend, e.what());
            }
            rec.response = rec.completion.text;

            sol = rec.response;
            have_sol = true;
            log.push_back(rec);
            if (ctx.observer) ctx.observer(q, log.back());
        }
    }
    return log;
}

inline std::vector<SubTask> finish_decomposition(const QuestionRecord& q, const DebateConfig& cfg,
                                                 const std::string& final_response) {
    auto subtasks = parse_subtasks(final_response);
    if (cfg.max_subtasks && subtasks.size() > static_cast<std::size_t>(*cfg.max_subtasks))
        subtasks.resize(static_cast<std::size_t>(*cfg.max_subtasks));
    if (subtasks.empty()) throw DecompositionEmptyError(q.id);
    return subtasks;
}

}  // namespace detail

inline PipelineOutput run_baseline(const QuestionRecord& q, PipelineContext& ctx, const std::string& backend) {
    StageRecord rec;
    rec.stage = StageLabel{StageLabel::Kind::baseline, 0, 0, 0};
    rec.backend = backend;
    rec.prompt = ctx.prompts.get("baseline").render({{"category", q.category}, {"question", q.question}});
    try {
        rec.completion = ctx.backends.get(backend)->complete(rec.prompt);
    } catch (const std::exception& e) {
        throw PipelineStageError("baseline", backend, e.what());
    }
    rec.response = rec.completion.text;

    PipelineOutput out;
    out.final_text = rec.response;
    out.stage_log.push_back(std::move(rec));
    if (ctx.observer) ctx.observer(q, out.stage_log.back());
    return out;
}

inline PipelineOutput run_regular_debate(const QuestionRecord& q, PipelineContext& ctx, const DebateConfig& cfg) {
    cfg.validate();
    PipelineOutput out;
    out.stage_log = detail::debate_sequence(q, ctx, cfg.debaters, cfg.regular_rounds, StageLabel::Kind::regular,
                                            0, {}, {});
    out.final_text = out.stage_log.back().response;
    return out;
}

/// Phase 1 of the hierarchical pipeline, usable on its own. The decomposition
/// is parsed once, from the last response of the debate.
inline std::vector<SubTask> run_decomposition_debate(const QuestionRecord& q, PipelineContext& ctx,
                                                     const DebateConfig& cfg,
                                                     std::vector<StageRecord>* log_out = nullptr) {
    cfg.validate();
    auto log = detail::debate_sequence(q, ctx, cfg.debaters, cfg.decomp_rounds, StageLabel::Kind::decomp, 0, {},
                                       cfg.seed_steps);
    auto subtasks = detail::finish_decomposition(q, cfg, log.back().response);
    if (log_out)
        for (auto& rec : log) log_out->push_back(std::move(rec));
    return subtasks;
}

inline std::string run_subtask_debate(const QuestionRecord& q, const SubTask& st, PipelineContext& ctx,
                                      const DebateConfig& cfg, std::vector<StageRecord>* log_out = nullptr) {
    cfg.validate();
    auto log = detail::debate_sequence(q, ctx, cfg.debaters, cfg.subtask_rounds, StageLabel::Kind::subtask,
                                       static_cast<int>(st.index), st.text, {});
    std::string final_text = log.back().response;
    if (log_out)
        for (auto& rec : log) log_out->push_back(std::move(rec));
    return final_text;
}

inline std::string concat_subtask_solutions(const std::vector<SubTask>& subtasks,
                                            const std::vector<std::string>& solutions) {
    std::string out;
    for (std::size_t n = 0; n < subtasks.size(); ++n) {
        if (n > 0) out += "\n\n";
        out += "## Sub-task " + std::to_string(subtasks[n].index) + ": " + subtasks[n].text + "\n";
        out += solutions[n];
    }
    return out;
}

/// Algorithm: decomposition debate, then an independent debate per sub-task
/// (concurrently when ctx.subtask_parallelism > 1), concatenated in sub-task
/// index order. Any sub-task failure aborts the question; calls already made
/// were still reported through the observer.
inline PipelineOutput run_hierarchical(const QuestionRecord& q, PipelineContext& ctx, const DebateConfig& cfg) {
    cfg.validate();
    PipelineOutput out;
    auto subtasks = run_decomposition_debate(q, ctx, cfg, &out.stage_log);

    const std::size_t k = subtasks.size();
    std::vector<std::string> solutions(k);
    std::vector<std::vector<StageRecord>> sublogs(k);
    parallel_for(k, ctx.subtask_parallelism, [&](std::size_t n) {
        solutions[n] = run_subtask_debate(q, subtasks[n], ctx, cfg, &sublogs[n]);
    });

    for (auto& sublog : sublogs)
        for (auto& rec : sublog) out.stage_log.push_back(std::move(rec));

    out.final_text = concat_subtask_solutions(subtasks, solutions);
    out.subtasks = std::move(subtasks);
    return out;
}

}  // namespace debatebench
