#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "debatebench/debatebench.hpp"

namespace {

namespace db = debatebench;
namespace fs = std::filesystem;

std::string capitalize(std::string s) {
    if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s;
}

/// "gpt-4o+gpt-4o-mini" style label from the manifest's debater roster,
/// using each backend's model name when one is configured.
std::string models_label(const db::RunManifest& m) {
    std::map<std::string, std::string> model_of;
    for (const auto& b : m.backends)
        model_of[b.value("name", std::string{})] = b.value("model", std::string{});

    auto label_of = [&](const std::string& name) {
        const auto it = model_of.find(name);
        return it != model_of.end() && !it->second.empty() ? it->second : name;
    };

    if (m.pipeline == "baseline") return label_of(m.debate.debaters.front());
    std::string out;
    for (std::size_t i = 0; i < m.debate.debaters.size(); ++i) {
        if (i > 0) out += "+";
        out += label_of(m.debate.debaters[i]);
    }
    return out;
}

db::RunManifest load_manifest(const fs::path& out_dir, const std::string& run_id) {
    const auto path = out_dir / run_id / "manifest.json";
    std::ifstream in(path, std::ios::binary);
    if (!in) throw db::ManifestMissingError(path.string());
    auto doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw db::Error("malformed manifest: " + path.string());
    return db::RunManifest::from_json(doc);
}

nlohmann::json load_metrics(const fs::path& out_dir, const std::string& run_id) {
    const auto path = out_dir / run_id / "metrics.json";
    std::ifstream in(path, std::ios::binary);
    if (!in) throw db::Error("no metrics.json for run " + run_id + "; run `score` first");
    auto doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw db::Error("malformed metrics.json for run " + run_id);
    return doc;
}

void print_metrics(const db::MetricsReport& rep) {
    std::printf("questions: %zu\n", rep.n_questions);
    std::printf("MCR: %.2f\nKHC: %.2f\nGRR: %.2f\n", rep.mcr_percent, rep.khc, rep.grr_percent);
    for (const auto& [cat, v] : rep.per_category_mcr) std::printf("MCR[%s]: %.2f\n", cat.c_str(), v);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"debatebench: multi-LLM debate benchmark harness"};
    app.require_subcommand(1);

    std::string dataset_path, pipeline, config_path, run_id, radar_path, table_path;
    std::string out_dir, replay_cache;
    std::vector<std::string> run_ids;
    int workers = 16;

    auto* run_cmd = app.add_subcommand("run", "Execute a pipeline over the dataset");
    run_cmd->add_option("--dataset", dataset_path, "Dataset JSON file")->required();
    run_cmd->add_option("--pipeline", pipeline, "Pipeline to run")
        ->required()
        ->check(CLI::IsMember({"baseline", "regular", "hierarchical"}));
    run_cmd->add_option("--config", config_path, "Experiment config JSON file")->required();
    run_cmd->add_option("--out", out_dir, "Output directory")->required();
    run_cmd->add_option("--workers", workers, "Concurrent questions")->check(CLI::PositiveNumber);
    run_cmd->add_option("--replay-cache", replay_cache, "Record/replay cache directory");

    auto* resume_cmd = app.add_subcommand("resume", "Resume an interrupted run");
    resume_cmd->add_option("--out", out_dir, "Output directory of the run")->required();
    resume_cmd->add_option("--run", run_id, "Run id")->required();

    auto* score_cmd = app.add_subcommand("score", "Score a completed run");
    score_cmd->add_option("--out", out_dir, "Output directory of the run")->required();
    score_cmd->add_option("--run", run_id, "Run id")->required();
    score_cmd->add_option("--dataset", dataset_path, "Dataset JSON file")->required();

    auto* report_cmd = app.add_subcommand("report", "Render table/radar reports from scored runs");
    report_cmd->add_option("--out", out_dir, "Output directory of the runs")->required();
    report_cmd->add_option("--runs", run_ids, "Comma-separated run ids")->required()->delimiter(',');
    report_cmd->add_option("--radar", radar_path, "Write a radar chart SVG here");
    report_cmd->add_option("--table", table_path, "Write the metrics CSV here");

    auto* validate_cmd = app.add_subcommand("validate-dataset", "Check a dataset file and print statistics");
    validate_cmd->add_option("--dataset", dataset_path, "Dataset JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(run_cmd)) {
            auto clock = std::make_shared<db::SystemClock>();
            std::optional<fs::path> cache;
            if (!replay_cache.empty()) cache = fs::path(replay_cache);
            auto ex = db::load_experiment_file(config_path, clock, cache);
            db::Runner runner(*ex.backends, ex.prompts);
            const auto manifest = runner.execute(dataset_path, pipeline, ex.debate, out_dir, workers, ex.raw,
                                                 nullptr, 1, replay_cache);
            std::printf("run %s complete\n", manifest.run_id.c_str());
            std::printf("records: %s\n", (fs::path(out_dir) / manifest.run_id / "records.jsonl").c_str());
        } else if (app.got_subcommand(resume_cmd)) {
            const auto manifest = load_manifest(out_dir, run_id);
            auto clock = std::make_shared<db::SystemClock>();
            std::optional<fs::path> cache;
            if (!manifest.replay_cache.empty()) cache = fs::path(manifest.replay_cache);
            auto ex = db::load_experiment(manifest.config, clock, cache);
            db::Runner runner(*ex.backends, ex.prompts);
            runner.resume(out_dir, run_id);
            std::printf("run %s complete\n", run_id.c_str());
        } else if (app.got_subcommand(score_cmd)) {
            const auto rep = db::Runner::score(out_dir, run_id, dataset_path);
            print_metrics(rep);
        } else if (app.got_subcommand(report_cmd)) {
            std::vector<db::TableRow> rows;
            std::vector<db::RadarSeries> series;
            std::vector<std::string> axes;
            for (const auto& id : run_ids) {
                const auto manifest = load_manifest(out_dir, id);
                const auto metrics = load_metrics(out_dir, id);
                rows.push_back(db::TableRow{capitalize(manifest.pipeline), models_label(manifest),
                                            metrics.at("mcr_percent").get<double>(),
                                            metrics.at("khc").get<double>(),
                                            metrics.at("grr_percent").get<double>()});
                const auto& per_cat = metrics.at("per_category_mcr");
                std::vector<std::string> cats;
                std::vector<double> values;
                for (const auto& [cat, v] : per_cat.items()) {
                    cats.push_back(cat);
                    values.push_back(v.get<double>());
                }
                if (axes.empty()) axes = cats;
                else if (axes != cats) throw db::SeriesMismatchError("runs cover different category sets");
                series.push_back(db::RadarSeries{capitalize(manifest.pipeline), std::move(values)});
            }
            if (!table_path.empty()) db::emit_table(rows, table_path);
            else std::fputs(db::render_table_csv(rows).c_str(), stdout);
            if (!radar_path.empty()) db::emit_radar(series, axes, radar_path);
        } else if (app.got_subcommand(validate_cmd)) {
            const auto dataset = db::load_dataset(dataset_path);
            const auto stats = db::dataset_stats(dataset);
            std::printf("questions: %zu\n", stats.question_count);
            std::printf("categories: %zu\n", stats.category_counts.size());
            for (const auto& [cat, n] : stats.category_counts) std::printf("  %s: %zu\n", cat.c_str(), n);
            std::printf("raw keywords: %zu\n", stats.total_raw_keywords);
            std::printf("gold keywords (deduplicated): %zu\n", stats.total_gold_keywords);
            std::printf("mean gold keywords per question: %.2f\n", stats.mean_gold_per_question);
            std::printf("ok\n");
        }
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
