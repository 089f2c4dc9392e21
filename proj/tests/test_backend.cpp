#include <catch2/catch_amalgamated.hpp>

#include <debatebench/backend.hpp>
#include <debatebench/clock.hpp>
#include <debatebench/errors.hpp>
#include <debatebench/fingerprint.hpp>
#include <debatebench/rate_limiter.hpp>
#include <debatebench/replay_backend.hpp>
#include <debatebench/scripted_backend.hpp>

#include <algorithm>
#include <fstream>
#include <thread>
#include <vector>

#include "support/temp_dir.hpp"

using namespace debatebench;
using namespace std::chrono_literals;

namespace {

BackendConfig scripted_cfg(const std::string& name, std::chrono::milliseconds interval = 0ms) {
    BackendConfig cfg;
    cfg.name = name;
    cfg.kind = BackendKind::scripted;
    cfg.min_interval = interval;
    return cfg;
}

}  // namespace

TEST_CASE("fingerprints are stable and sensitive to every input") {
    const std::string base = request_fingerprint("m1", "hello", 0.7);
    CHECK(base == request_fingerprint("m1", "hello", 0.7));
    CHECK(base.size() == 16);
    CHECK(base.find_first_not_of("0123456789abcdef") == std::string::npos);
    CHECK(base != request_fingerprint("m2", "hello", 0.7));
    CHECK(base != request_fingerprint("m1", "hello!", 0.7));
    CHECK(base != request_fingerprint("m1", "hello", 0.700001));
    // Field boundaries matter: shifting a byte across the separator changes the hash.
    CHECK(request_fingerprint("ab", "c", 0.0) != request_fingerprint("a", "bc", 0.0));
}

TEST_CASE("rate limiter spaces sequential acquisitions") {
    ManualClock clock;
    RateLimiter limiter(clock, 1s);
    auto a = limiter.acquire();
    auto b = limiter.acquire();
    auto c = limiter.acquire();
    CHECK(b - a >= Clock::duration(1s));
    CHECK(c - b >= Clock::duration(1s));
    CHECK(clock.now() >= c);
}

TEST_CASE("rate limiter with zero interval does not space") {
    ManualClock clock;
    RateLimiter limiter(clock, 0s);
    auto a = limiter.acquire();
    auto b = limiter.acquire();
    CHECK(b >= a);
    CHECK(clock.now() == Clock::duration(0));
}

TEST_CASE("rate limiter keeps spacing across competing threads") {
    ManualClock clock;
    RateLimiter limiter(clock, 100ms);
    std::vector<Clock::duration> slots(24);
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&, t] {
            for (int i = 0; i < 3; ++i) slots[static_cast<std::size_t>(t * 3 + i)] = limiter.acquire();
        });
    }
    for (auto& th : threads) th.join();
    std::sort(slots.begin(), slots.end());
    for (std::size_t i = 1; i < slots.size(); ++i) CHECK(slots[i] - slots[i - 1] >= Clock::duration(100ms));
}

TEST_CASE("queue mode serves responses in call order then exhausts") {
    auto clock = std::make_shared<ManualClock>();
    auto backend = ScriptedBackend::with_queue(scripted_cfg("q"), clock, {"one", "two"});
    CHECK(backend->remaining() == 2);
    CHECK(backend->complete("p1").text == "one");
    CHECK(backend->complete("p2").text == "two");
    CHECK(backend->calls() == 2);
    CHECK(backend->remaining() == 0);
    CHECK_THROWS_AS(backend->complete("p3"), ExhaustedError);
}

TEST_CASE("map mode serves by prompt fingerprint regardless of order") {
    auto clock = std::make_shared<ManualClock>();
    auto backend = ScriptedBackend::with_map(scripted_cfg("m"), clock);
    backend->respond_to("alpha", "A");
    backend->respond_to("beta", "B");
    CHECK(backend->complete("beta").text == "B");
    CHECK(backend->complete("alpha").text == "A");
    CHECK(backend->complete("alpha").text == "A");
    CHECK_THROWS_AS(backend->complete("gamma"), UnknownFingerprintError);
}

TEST_CASE("completions carry model name and clock timestamps") {
    auto clock = std::make_shared<ManualClock>();
    auto cfg = scripted_cfg("s");
    cfg.model = "stub-1";
    auto backend = ScriptedBackend::with_queue(cfg, clock, {"x"});
    clock->advance(5s);
    auto c = backend->complete("p");
    CHECK(c.model == "stub-1");
    CHECK(c.attempt_count == 1);
    CHECK(c.started == Clock::duration(5s));
    CHECK(c.finished >= c.started);
}

TEST_CASE("model falls back to the backend name when unset") {
    auto clock = std::make_shared<ManualClock>();
    auto backend = ScriptedBackend::with_queue(scripted_cfg("plain"), clock, {"x"});
    CHECK(backend->complete("p").model == "plain");
}

TEST_CASE("replay caches the first response and then stops delegating") {
    testsupport::TempDir dir;
    auto clock = std::make_shared<ManualClock>();
    auto inner = ScriptedBackend::with_queue(scripted_cfg("inner"), clock, {"fresh"});
    ReplayBackend replayed(inner, dir.path());

    CHECK(replayed.complete("the prompt").text == "fresh");
    CHECK(replayed.delegate_calls() == 1);
    CHECK(inner->calls() == 1);

    // Queue is empty now; only the cache can answer.
    CHECK(replayed.complete("the prompt").text == "fresh");
    CHECK(replayed.delegate_calls() == 1);
    CHECK(inner->calls() == 1);

    const std::string fp = request_fingerprint("inner", "the prompt", inner->config().temperature);
    CHECK(std::filesystem::exists(replayed.entry_dir() / (fp + ".json")));
}

TEST_CASE("replay entries persist across instances") {
    testsupport::TempDir dir;
    auto clock = std::make_shared<ManualClock>();
    {
        auto inner = ScriptedBackend::with_queue(scripted_cfg("b"), clock, {"stored"});
        ReplayBackend first(inner, dir.path());
        first.complete("p");
    }
    auto empty_inner = ScriptedBackend::with_queue(scripted_cfg("b"), clock, {});
    ReplayBackend second(empty_inner, dir.path());
    CHECK(second.complete("p").text == "stored");
    CHECK(second.delegate_calls() == 0);
}

TEST_CASE("replay misses still raise the inner error") {
    testsupport::TempDir dir;
    auto clock = std::make_shared<ManualClock>();
    auto inner = ScriptedBackend::with_queue(scripted_cfg("b"), clock, {});
    ReplayBackend replayed(inner, dir.path());
    CHECK_THROWS_AS(replayed.complete("nope"), ExhaustedError);
}

TEST_CASE("corrupt cache entries are reported, not served") {
    testsupport::TempDir dir;
    auto clock = std::make_shared<ManualClock>();
    auto inner = ScriptedBackend::with_queue(scripted_cfg("b"), clock, {});
    ReplayBackend replayed(inner, dir.path());
    const std::string fp = request_fingerprint("b", "p", inner->config().temperature);
    std::ofstream(replayed.entry_dir() / (fp + ".json")) << "{ broken";
    CHECK_THROWS_AS(replayed.complete("p"), CacheCorruptError);
}

TEST_CASE("backend config validation") {
    BackendConfig cfg;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.name = "b";
    CHECK_NOTHROW(cfg.validate());
    cfg.max_retries = -1;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.max_retries = 3;
    cfg.kind = BackendKind::http;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.endpoint = "http://localhost:1/v1/chat/completions";
    cfg.model = "m";
    cfg.credential_env = "KEY";
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("kind names round-trip") {
    for (auto k : {BackendKind::http, BackendKind::scripted, BackendKind::replay})
        CHECK(backend_kind_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(backend_kind_from_string("carrier-pigeon"), Error);
}

TEST_CASE("registry stores, lists, and replaces by name") {
    auto clock = std::make_shared<ManualClock>();
    BackendRegistry registry(clock);
    registry.add(ScriptedBackend::with_queue(scripted_cfg("a"), clock, {}));
    registry.add(ScriptedBackend::with_queue(scripted_cfg("b"), clock, {}));
    CHECK(registry.has("a"));
    CHECK_FALSE(registry.has("c"));
    CHECK(registry.names() == std::vector<std::string>{"a", "b"});
    CHECK_THROWS_AS(registry.get("c"), BackendUnregisteredError);
    CHECK_THROWS_AS(registry.add(ScriptedBackend::with_queue(scripted_cfg("a"), clock, {})), Error);

    auto replacement = ScriptedBackend::with_queue(scripted_cfg("a"), clock, {"r"});
    registry.replace(replacement);
    CHECK(registry.get("a") == replacement);
}
