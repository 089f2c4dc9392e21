#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "debatebench/backend.hpp"
#include "debatebench/errors.hpp"
#include "debatebench/http_backend.hpp"
#include "debatebench/pipelines.hpp"
#include "debatebench/prompts.hpp"
#include "debatebench/replay_backend.hpp"
#include "debatebench/scripted_backend.hpp"

namespace debatebench {

/// Everything a run needs, built from one declarative config document.
struct Experiment {
    std::shared_ptr<BackendRegistry> backends;
    PromptLibrary prompts;
    DebateConfig debate;
    nlohmann::json raw;  // normalized config document, stored in run manifests
};

/// Builds an experiment from a config document:
///   {"backends": [{name, kind: http|scripted, ...}, ...],
///    "debate": {debaters, regular_rounds, ...},
///    "templates_file": optional path}
/// http backends take endpoint/model/credential_env/temperature/
/// min_interval_ms/timeout_ms/max_retries; scripted ones take mode "queue"
/// with "responses" or mode "map" with "responses_by_prompt". A replay cache
/// directory, when given, wraps every backend after construction.
inline Experiment load_experiment(nlohmann::json doc, std::shared_ptr<Clock> clock,
                                  const std::optional<std::filesystem::path>& replay_cache = std::nullopt,
                                  const std::filesystem::path& base_dir = {}) {
    if (!doc.is_object()) throw Error("config: document must be a JSON object");

    Experiment ex;
    ex.backends = std::make_shared<BackendRegistry>(clock);

    if (!doc.contains("backends") || !doc["backends"].is_array() || doc["backends"].empty())
        throw Error("config: \"backends\" must be a non-empty array");
    for (const auto& b : doc["backends"]) {
        if (!b.is_object() || !b.contains("name"))
            throw Error("config: each backend needs at least a \"name\"");
        BackendConfig cfg;
        cfg.name = b["name"].get<std::string>();
        cfg.kind = backend_kind_from_string(b.value("kind", std::string{"scripted"}));
        cfg.endpoint = b.value("endpoint", std::string{});
        cfg.model = b.value("model", std::string{});
        cfg.credential_env = b.value("credential_env", std::string{});
        cfg.temperature = b.value("temperature", 0.7);
        cfg.min_interval = std::chrono::milliseconds(b.value("min_interval_ms", 1000));
        cfg.timeout = std::chrono::milliseconds(b.value("timeout_ms", 60000));
        cfg.max_retries = b.value("max_retries", 3);
        cfg.validate();

        std::shared_ptr<ChatBackend> backend;
        switch (cfg.kind) {
            case BackendKind::http:
                backend = std::make_shared<HttpBackend>(cfg, clock);
                break;
            case BackendKind::scripted: {
                const std::string mode = b.value("mode", std::string{"queue"});
                if (mode == "queue") {
                    backend = ScriptedBackend::with_queue(cfg, clock,
                                                          b.value("responses", std::vector<std::string>{}));
                } else if (mode == "map") {
                    auto scripted = ScriptedBackend::with_map(cfg, clock);
                    // items() must run on a named object, not the value() temporary.
                    const nlohmann::json by_prompt = b.value("responses_by_prompt", nlohmann::json::object());
                    for (const auto& [prompt, response] : by_prompt.items())
                        scripted->respond_to(prompt, response.get<std::string>());
                    backend = scripted;
                } else {
                    throw Error("config: backend \"" + cfg.name + "\": unknown scripted mode \"" + mode + "\"");
                }
                break;
            }
            case BackendKind::replay:
                throw Error("config: backend \"" + cfg.name +
                            "\": replay is applied via a replay cache directory, not as a config kind");
        }
        ex.backends->add(std::move(backend));
    }

    if (replay_cache)
        for (const auto& name : ex.backends->names())
            ex.backends->replace(std::make_shared<ReplayBackend>(ex.backends->get(name), *replay_cache));

    if (!doc.contains("debate")) throw Error("config: missing \"debate\" section");
    ex.debate = DebateConfig::from_json(doc["debate"]);
    ex.debate.validate();

    std::string templates_file = doc.value("templates_file", std::string{});
    if (templates_file.empty()) {
        ex.prompts = PromptLibrary::builtin();
    } else {
        std::filesystem::path p = templates_file;
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        ex.prompts = PromptLibrary::from_file(p.string());
        doc["templates_file"] = std::filesystem::absolute(p).string();
    }

    ex.raw = std::move(doc);
    return ex;
}

inline Experiment load_experiment_file(const std::filesystem::path& path, std::shared_ptr<Clock> clock,
                                       const std::optional<std::filesystem::path>& replay_cache = std::nullopt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file: " + path.string());
    auto doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw Error("config: malformed JSON in " + path.string());
    return load_experiment(std::move(doc), std::move(clock), replay_cache, path.parent_path());
}

}  // namespace debatebench
