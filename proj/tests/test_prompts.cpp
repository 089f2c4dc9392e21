#include <catch2/catch_amalgamated.hpp>

#include <debatebench/errors.hpp>
#include <debatebench/prompts.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace debatebench;

TEST_CASE("render substitutes placeholders") {
    PromptTemplate t{"t", "Category: {category}; Question: {question}"};
    auto out = t.render({{"category", "RIS"}, {"question", "why?"}});
    CHECK(out == "Category: RIS; Question: why?");
}

TEST_CASE("render handles escapes and rejects malformed bodies") {
    CHECK(PromptTemplate{"t", "a {{b}} c"}.render({}) == "a {b} c");
    CHECK(PromptTemplate{"t", "set {x} to {x}"}.render({{"x", "1"}}) == "set 1 to 1");
    CHECK_THROWS_AS((PromptTemplate{"t", "open {x"}.render({{"x", "1"}})), TemplateError);
    CHECK_THROWS_AS((PromptTemplate{"t", "{bad name}"}.render({{"bad name", "v"}})), TemplateError);
    CHECK_THROWS_AS((PromptTemplate{"t", "{unbound}"}.render({})), TemplateError);
    CHECK_THROWS_AS((PromptTemplate{"t", "stray } here"}.render({})), TemplateError);
}

TEST_CASE("library parses sections with trimmed bodies") {
    auto lib = PromptLibrary::parse(
        "# comment\n"
        "\n"
        "[one]\n"
        "\n"
        "first body\n"
        "second line\n"
        "\n"
        "[two.sub]\n"
        "only line\n");
    REQUIRE(lib.size() == 2);
    CHECK(lib.get("one").body == "first body\nsecond line");
    CHECK(lib.get("two.sub").body == "only line");
    CHECK(lib.has("one"));
    CHECK_FALSE(lib.has("three"));
    CHECK_THROWS_AS(lib.get("three"), TemplateError);
}

TEST_CASE("library rejects structural errors") {
    CHECK_THROWS_AS(PromptLibrary::parse("loose text\n[a]\nbody\n"), TemplateError);
    CHECK_THROWS_AS(PromptLibrary::parse("[a]\nbody\n[a]\nagain\n"), TemplateError);
    CHECK_THROWS_AS(PromptLibrary::parse("[a]\n\n[b]\nbody\n"), TemplateError);
    CHECK_THROWS_AS(PromptLibrary::parse("[bad id]\nbody\n"), TemplateError);
}

TEST_CASE("builtin library carries the full pipeline set") {
    auto lib = PromptLibrary::builtin();
    for (const char* id : {"baseline", "regular.initial", "regular.enrich", "regular.refine.odd",
                           "regular.refine.even", "decomp.initial", "decomp.review_initial",
                           "decomp.review_later", "subtask.initial", "subtask.enrich",
                           "subtask.refine.odd", "subtask.refine.even"}) {
        INFO(id);
        CHECK(lib.has(id));
    }
    CHECK(lib.size() == 12);

    auto rendered = lib.get("baseline").render({{"category", "C"}, {"question", "Q"}});
    CHECK(rendered.find("Category: C") != std::string::npos);
    CHECK(rendered.find("Question: Q") != std::string::npos);

    auto sub = lib.get("subtask.initial").render(
        {{"category", "C"}, {"question", "Q"}, {"st", "S"}});
    CHECK(sub.find("S") != std::string::npos);
}

TEST_CASE("bundled prompts file matches the builtin text byte for byte") {
    auto path = std::filesystem::path(DEBATEBENCH_SOURCE_DIR) / "data" / "prompts.txt";
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == PromptLibrary::builtin_text());

    auto lib = PromptLibrary::from_file(path);
    CHECK(lib.size() == PromptLibrary::builtin().size());
}
