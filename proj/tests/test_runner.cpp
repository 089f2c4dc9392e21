#include <catch2/catch_amalgamated.hpp>

#include <debatebench/config.hpp>
#include <debatebench/digest.hpp>
#include <debatebench/jsonl.hpp>
#include <debatebench/runner.hpp>
#include <debatebench/scripted_backend.hpp>

#include <cstdlib>
#include <fstream>
#include <set>

#include "support/temp_dir.hpp"

using namespace debatebench;

namespace {

const char* kMiniDataset = R"({
 "q0": {"question": "sweep?", "Answer": "beam sweeping, initial access, codebook design, sync signals.", "Category": "Access"},
 "q1": {"question": "pilots?", "Answer": "pilot assignment, contamination mitigation, sequence reuse, channel estimation.", "Category": "Access"},
 "q2": {"question": "relays?", "Answer": "relay placement, backhaul resilience, topology design, link budget.", "Category": "Topology"},
 "q3": {"question": "steering?", "Answer": "traffic steering, load balancing, handover thresholds, cell ranking.", "Category": "Topology"}
})";

std::filesystem::path write_file(const std::filesystem::path& p, const std::string& body) {
    std::ofstream f(p, std::ios::binary);
    f << body;
    return p;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

struct RunnerRig {
    testsupport::TempDir dir;
    std::filesystem::path dataset;
    std::shared_ptr<ManualClock> clock = std::make_shared<ManualClock>();
    BackendRegistry registry{clock};
    PromptLibrary prompts = PromptLibrary::builtin();
    Runner runner{registry, prompts};

    RunnerRig() { dataset = write_file(dir / "mini.json", kMiniDataset); }

    std::shared_ptr<ScriptedBackend> add_queue(const std::string& name, std::vector<std::string> responses) {
        BackendConfig cfg;
        cfg.name = name;
        cfg.min_interval = std::chrono::milliseconds(0);
        auto b = ScriptedBackend::with_queue(cfg, clock, std::move(responses));
        registry.add(b);
        return b;
    }

    std::shared_ptr<ScriptedBackend> add_map(const std::string& name) {
        BackendConfig cfg;
        cfg.name = name;
        cfg.min_interval = std::chrono::milliseconds(0);
        auto b = ScriptedBackend::with_map(cfg, clock);
        registry.add(b);
        return b;
    }

    DebateConfig solo_debate(const std::string& name) {
        DebateConfig d;
        d.debaters = {name};
        return d;
    }
};

}  // namespace

TEST_CASE("execute writes manifest, records, and final solutions") {
    RunnerRig rig;
    rig.add_queue("m", {"beam sweeping initial access codebook design sync signals",
                        "pilot assignment contamination mitigation sequence reuse channel estimation",
                        "relay placement backhaul resilience",
                        "nothing useful"});

    auto m = rig.runner.execute(rig.dataset.string(), "baseline", rig.solo_debate("m"), rig.dir.path(), 1);

    const auto run_dir = rig.dir / m.run_id;
    REQUIRE(std::filesystem::exists(run_dir / "manifest.json"));
    REQUIRE(std::filesystem::exists(run_dir / "records.jsonl"));
    REQUIRE(std::filesystem::exists(run_dir / "final_solutions.jsonl"));

    CHECK(m.pipeline == "baseline");
    CHECK(m.dataset_digest == sha256_file_hex(rig.dataset));
    CHECK(m.worker_count == 1);

    auto manifest = nlohmann::json::parse(slurp(run_dir / "manifest.json"));
    CHECK(manifest["run_id"] == m.run_id);
    CHECK(manifest["backends"].size() == 1);
    CHECK(manifest["backends"][0]["name"] == "m");
    CHECK(manifest["debate"]["debaters"] == nlohmann::json::array({"m"}));

    auto records = read_jsonl(run_dir / "records.jsonl");
    REQUIRE(records.size() == 4);
    std::set<std::string> qids;
    for (const auto& r : records) {
        CHECK(r["run_id"] == m.run_id);
        CHECK(r["stage"]["kind"] == "baseline");
        CHECK(r["backend"] == "m");
        CHECK(r["prompt"].get<std::string>().find("Question:") != std::string::npos);
        qids.insert(r["question"].get<std::string>());
    }
    CHECK(qids == std::set<std::string>{"q0", "q1", "q2", "q3"});

    auto finals = read_jsonl(run_dir / "final_solutions.jsonl");
    REQUIRE(finals.size() == 4);
    CHECK(finals[0]["question"] == "q0");
    CHECK(finals[3]["question"] == "q3");
    CHECK(finals[2]["text"] == "relay placement backhaul resilience");
}

TEST_CASE("score computes the metric family and writes metrics.json") {
    RunnerRig rig;
    rig.add_queue("m", {"beam sweeping initial access codebook design sync signals",
                        "pilot assignment contamination mitigation sequence reuse channel estimation",
                        "relay placement backhaul resilience",
                        "nothing useful"});
    auto m = rig.runner.execute(rig.dataset.string(), "baseline", rig.solo_debate("m"), rig.dir.path(), 1);

    auto rep = Runner::score(rig.dir.path(), m.run_id, rig.dataset.string());
    CHECK(rep.n_questions == 4);
    CHECK(rep.mcr_percent == Catch::Approx(62.5).margin(1e-9));
    CHECK(rep.khc == Catch::Approx(2.5).margin(1e-9));
    CHECK(rep.grr_percent == Catch::Approx(62.5).margin(1e-9));
    CHECK(rep.per_category_mcr.at("Access") == Catch::Approx(100.0).margin(1e-9));
    CHECK(rep.per_category_mcr.at("Topology") == Catch::Approx(25.0).margin(1e-9));

    auto stored = nlohmann::json::parse(slurp(rig.dir / m.run_id / "metrics.json"));
    CHECK(stored["run_id"] == m.run_id);
    CHECK(stored["mcr_percent"].get<double>() == Catch::Approx(62.5));
}

TEST_CASE("score requires final solutions") {
    RunnerRig rig;
    CHECK_THROWS_AS(Runner::score(rig.dir.path(), "no-such-run", rig.dataset.string()), SolutionsMissingError);
}

TEST_CASE("a failing question is skipped, logged, and scored zero") {
    RunnerRig rig;
    // Three responses for four questions: the last question exhausts the queue.
    rig.add_queue("m", {"beam sweeping initial access codebook design sync signals",
                        "pilot assignment contamination mitigation sequence reuse channel estimation",
                        "relay placement backhaul resilience topology design link budget"});
    auto m = rig.runner.execute(rig.dataset.string(), "baseline", rig.solo_debate("m"), rig.dir.path(), 1);

    auto records = read_jsonl(rig.dir / m.run_id / "records.jsonl");
    REQUIRE(records.size() == 4);  // 3 calls + 1 failure line
    const auto& failure = records.back();
    CHECK(failure["failure"] == "q3");
    CHECK(failure["error"].get<std::string>().find("exhausted") != std::string::npos);

    auto finals = read_jsonl(rig.dir / m.run_id / "final_solutions.jsonl");
    CHECK(finals.size() == 3);

    auto rep = Runner::score(rig.dir.path(), m.run_id, rig.dataset.string());
    CHECK(rep.n_questions == 4);
    CHECK(rep.mcr_percent == Catch::Approx(75.0).margin(1e-9));
}

TEST_CASE("setup validation rejects bad requests up front") {
    RunnerRig rig;
    rig.add_queue("m", {});
    CHECK_THROWS_AS(rig.runner.execute(rig.dataset.string(), "psychic", rig.solo_debate("m"), rig.dir.path(), 1),
                    Error);
    CHECK_THROWS_AS(rig.runner.execute(rig.dataset.string(), "baseline", rig.solo_debate("m"), rig.dir.path(), 0),
                    Error);
    CHECK_THROWS_AS(
        rig.runner.execute(rig.dataset.string(), "baseline", rig.solo_debate("ghost"), rig.dir.path(), 1),
        BackendUnregisteredError);
    DebateConfig empty;
    CHECK_THROWS_AS(rig.runner.execute(rig.dataset.string(), "baseline", empty, rig.dir.path(), 1), Error);
}

TEST_CASE("resume after completion re-reads the log instead of calling backends") {
    RunnerRig rig;
    auto backend = rig.add_queue("m", {"a1", "a2", "a3", "a4"});
    auto m = rig.runner.execute(rig.dataset.string(), "baseline", rig.solo_debate("m"), rig.dir.path(), 1);
    const auto before = slurp(rig.dir / m.run_id / "final_solutions.jsonl");
    CHECK(backend->calls() == 4);

    auto resumed = rig.runner.resume(rig.dir.path(), m.run_id);
    CHECK(resumed.run_id == m.run_id);
    CHECK(backend->calls() == 4);  // queue is empty; any new call would throw
    CHECK(slurp(rig.dir / m.run_id / "final_solutions.jsonl") == before);
}

TEST_CASE("interrupted run resumes to the same final solutions") {
    // Map-mode backends answer by prompt, so the interrupted and resumed legs
    // see identical responses for identical requests.
    RunnerRig rig;
    auto backend = rig.add_map("m");
    DebateConfig debate = rig.solo_debate("m");
    debate.regular_rounds = 2;

    const auto dataset = load_dataset(rig.dataset);
    for (const auto& q : dataset) {
        const std::string first =
            rig.prompts.get("regular.initial").render({{"category", q.category}, {"question", q.question}});
        const std::string r1 = "draft for " + q.id;
        backend->respond_to(first, r1);
        const std::string second = rig.prompts.get("regular.refine.odd").render(
            {{"category", q.category}, {"question", q.question}, {"sol", r1}});
        backend->respond_to(second, "final for " + q.id);
    }

    // Uninterrupted oracle run.
    auto oracle = rig.runner.execute(rig.dataset.string(), "regular", debate, rig.dir.path(), 1);
    const auto oracle_finals = slurp(rig.dir / oracle.run_id / "final_solutions.jsonl");
    auto oracle_records = read_jsonl(rig.dir / oracle.run_id / "records.jsonl");
    CHECK(oracle_records.size() == 8);

    // Interrupted leg: stop after 3 records, mid-question.
    RunController controller;
    controller.stop_after_records(3);
    CHECK_THROWS_AS(
        rig.runner.execute(rig.dataset.string(), "regular", debate, rig.dir.path(), 1, nlohmann::json(),
                           &controller),
        CanceledError);

    // Find the interrupted run directory (the one without final solutions).
    std::string interrupted_id;
    for (const auto& entry : std::filesystem::directory_iterator(rig.dir.path())) {
        if (!entry.is_directory()) continue;
        const auto id = entry.path().filename().string();
        if (id != oracle.run_id && std::filesystem::exists(entry.path() / "manifest.json")) interrupted_id = id;
    }
    REQUIRE_FALSE(interrupted_id.empty());
    CHECK_FALSE(std::filesystem::exists(rig.dir / interrupted_id / "final_solutions.jsonl"));
    CHECK(read_jsonl(rig.dir / interrupted_id / "records.jsonl").size() == 3);

    auto resumed = rig.runner.resume(rig.dir.path(), interrupted_id);
    CHECK(resumed.run_id == interrupted_id);
    CHECK(slurp(rig.dir / interrupted_id / "final_solutions.jsonl") == oracle_finals);

    // The mid-flight question was tombstoned and redone from scratch.
    auto records = read_jsonl(rig.dir / interrupted_id / "records.jsonl");
    bool saw_tombstone = false;
    for (const auto& r : records) saw_tombstone = saw_tombstone || r.contains("tombstone");
    CHECK(saw_tombstone);
    CHECK(backend->calls() > 8);  // the redone question cost extra calls
}

TEST_CASE("resume refuses missing manifests and changed datasets") {
    RunnerRig rig;
    rig.add_queue("m", {"a1", "a2", "a3", "a4"});
    CHECK_THROWS_AS(rig.runner.resume(rig.dir.path(), "never-ran"), ManifestMissingError);

    auto m = rig.runner.execute(rig.dataset.string(), "baseline", rig.solo_debate("m"), rig.dir.path(), 1);
    write_file(rig.dataset, "{\"q0\": {\"question\": \"changed?\", \"Answer\": \"x.\", \"Category\": \"C\"}}");
    CHECK_THROWS_AS(rig.runner.resume(rig.dir.path(), m.run_id), DigestMismatchError);
}

TEST_CASE("credential values never reach run artifacts") {
    RunnerRig rig;
    setenv("DEBATEBENCH_SECRET_FOR_TEST", "hunter2-do-not-leak", 1);
    {
        BackendConfig cfg;
        cfg.name = "api";
        cfg.kind = BackendKind::http;
        cfg.endpoint = "http://127.0.0.1:9/v1/chat/completions";
        cfg.model = "remote";
        cfg.credential_env = "DEBATEBENCH_SECRET_FOR_TEST";
        rig.registry.add(std::make_shared<HttpBackend>(cfg, rig.clock));
    }
    rig.add_queue("m", {"a1", "a2", "a3", "a4"});

    nlohmann::json config_snapshot = {{"backends", {{{"name", "api"}, {"credential_env", "DEBATEBENCH_SECRET_FOR_TEST"}}}}};
    auto m = rig.runner.execute(rig.dataset.string(), "baseline", rig.solo_debate("m"), rig.dir.path(), 1,
                                config_snapshot);
    Runner::score(rig.dir.path(), m.run_id, rig.dataset.string());

    for (const auto* leaf : {"manifest.json", "records.jsonl", "final_solutions.jsonl", "metrics.json"}) {
        const auto body = slurp(rig.dir / m.run_id / leaf);
        INFO(leaf);
        CHECK(body.find("hunter2-do-not-leak") == std::string::npos);
    }
    const auto manifest = slurp(rig.dir / m.run_id / "manifest.json");
    CHECK(manifest.find("DEBATEBENCH_SECRET_FOR_TEST") != std::string::npos);
    unsetenv("DEBATEBENCH_SECRET_FOR_TEST");
}

TEST_CASE("run controller trips after its record budget") {
    RunController c;
    CHECK_FALSE(c.stop_requested());
    c.stop_after_records(2);
    c.on_record();
    CHECK_FALSE(c.stop_requested());
    c.on_record();
    CHECK(c.stop_requested());

    RunController manual;
    manual.request_stop();
    CHECK(manual.stop_requested());

    RunController unarmed;
    unarmed.on_record();
    CHECK_FALSE(unarmed.stop_requested());
}

TEST_CASE("experiment configs build scripted backends") {
    auto clock = std::make_shared<ManualClock>();
    nlohmann::json doc = {
        {"backends",
         {{{"name", "q"}, {"kind", "scripted"}, {"responses", {"r1", "r2"}}, {"min_interval_ms", 0}},
          {{"name", "p"},
           {"kind", "scripted"},
           {"mode", "map"},
           {"responses_by_prompt", {{"hello", "world"}}},
           {"min_interval_ms", 0}}}},
        {"debate", {{"debaters", {"q", "p"}}, {"regular_rounds", 2}}},
    };

    auto ex = load_experiment(doc, clock);
    CHECK(ex.debate.debaters == std::vector<std::string>{"q", "p"});
    CHECK(ex.debate.regular_rounds == 2);
    CHECK(ex.backends->get("q")->complete("x").text == "r1");
    CHECK(ex.backends->get("p")->complete("hello").text == "world");
    CHECK(ex.prompts.has("baseline"));
}

TEST_CASE("experiment configs validate their shape") {
    auto clock = std::make_shared<ManualClock>();
    CHECK_THROWS_AS(load_experiment(nlohmann::json{{"debate", {{"debaters", {"x"}}}}}, clock), Error);
    CHECK_THROWS_AS(load_experiment(nlohmann::json{{"backends", nlohmann::json::array()}}, clock), Error);
    nlohmann::json no_debate = {{"backends", {{{"name", "q"}, {"kind", "scripted"}}}}};
    CHECK_THROWS_AS(load_experiment(no_debate, clock), Error);
    nlohmann::json replay_kind = {
        {"backends", {{{"name", "q"}, {"kind", "replay"}}}},
        {"debate", {{"debaters", {"q"}}}},
    };
    CHECK_THROWS_AS(load_experiment(replay_kind, clock), Error);
}

TEST_CASE("a replay cache directory wraps every configured backend") {
    testsupport::TempDir cache;
    auto clock = std::make_shared<ManualClock>();
    nlohmann::json doc = {
        {"backends", {{{"name", "q"}, {"kind", "scripted"}, {"responses", {"only"}}, {"min_interval_ms", 0}}}},
        {"debate", {{"debaters", {"q"}}}},
    };
    auto ex = load_experiment(doc, clock, cache.path().string());
    CHECK(ex.backends->get("q")->config().kind == BackendKind::replay);
    CHECK(ex.backends->get("q")->complete("p").text == "only");
    // Second call hits the cache; the exhausted queue would otherwise throw.
    CHECK(ex.backends->get("q")->complete("p").text == "only");
}

TEST_CASE("experiment configs load template files relative to their own directory") {
    testsupport::TempDir dir;
    write_file(dir / "tpl.txt", "[baseline]\ncustom {category} {question}\n");
    nlohmann::json doc = {
        {"backends", {{{"name", "q"}, {"kind", "scripted"}, {"responses", {"r"}}, {"min_interval_ms", 0}}}},
        {"debate", {{"debaters", {"q"}}}},
        {"templates_file", "tpl.txt"},
    };
    auto ex = load_experiment(doc, std::make_shared<ManualClock>(), std::nullopt, dir.path());
    CHECK(ex.prompts.size() == 1);
    CHECK(ex.prompts.get("baseline").body == "custom {category} {question}");
    CHECK(ex.raw["templates_file"].get<std::string>().front() == '/');
}
