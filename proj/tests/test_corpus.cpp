#include <doctest.h>

#include "support.hpp"

#include <lud/corpus.hpp>
#include <lud/diagnostic.hpp>

#include <filesystem>
#include <fstream>
#include <unistd.h>

using namespace lud;
using namespace test_support;

namespace
{
    struct TempDir
    {
        std::filesystem::path path;

        TempDir()
        {
            path = std::filesystem::temp_directory_path()
                / ("lud-test-" + std::to_string(::getpid()) + "-"
                    + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
            std::filesystem::create_directories(path);
        }

        ~TempDir() { std::filesystem::remove_all(path); }
    };

    void write_file(const std::filesystem::path & p, const std::string & content)
    {
        std::ofstream out(p, std::ios::binary);
        out << content;
    }
}

TEST_CASE("corpus entries load with their header fields")
{
    auto entry = load_corpus_entry(corpus_dir() / "f1.lud");
    CHECK(entry.id == "f1");
    CHECK(entry.transliteration.size() == 7);
    CHECK(entry.transliteration.front() == "getsuyoubi-wa");
    CHECK(entry.gloss.find("monday-top") != std::string::npos);
    CHECK(entry.surface.position.size() == 3);
    CHECK(entry.surface.position.at(label(4)) == 6);
    CHECK(entry.expected_count == 6);
    REQUIRE(entry.expected_rank1_terms.size() == 1);
    CHECK(entry.lud_text.rfind("index:(l1,h0)\n", 0) == 0);
}

TEST_CASE("the shipped corpus passes end to end")
{
    auto report = run_corpus(corpus_dir());
    CHECK(report.ok());
    CHECK(report.entries == 8);
    CHECK(report.failed == 0);
    CHECK(report.text.find("f1: PASS pluggings=6 rank1=1") != std::string::npos);
    CHECK(report.text.find("f7: PASS pluggings=2 rank1=2") != std::string::npos);
    CHECK(report.text.find("corpus: 8 entries, 0 failures") != std::string::npos);

    // byte-stable across runs
    CHECK(run_corpus(corpus_dir()).text == report.text);
}

TEST_CASE("a wrong expectation is reported as a failure")
{
    TempDir tmp;
    auto text = read_file(corpus_dir() / "f1.lud");
    auto pos = text.find("# expected-count: 6");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 19, "# expected-count: 4");
    write_file(tmp.path / "f1.lud", text);

    auto report = run_corpus(tmp.path);
    CHECK(! report.ok());
    CHECK(report.failed == 1);
    CHECK(report.text.find("expected 4 pluggings, got 6") != std::string::npos);
}

TEST_CASE("an empty directory passes with a warning")
{
    TempDir tmp;
    auto report = run_corpus(tmp.path);
    CHECK(report.ok());
    CHECK(report.entries == 0);
    CHECK(report.text.find("warning: no entries") != std::string::npos);
}

TEST_CASE("surface metadata naming a non-relation label fails the entry")
{
    TempDir tmp;
    auto text = read_file(corpus_dir() / "t1.lud");
    auto pos = text.find("# surface: l2=0");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 15, "# surface: l6=0");
    write_file(tmp.path / "t1.lud", text);

    auto report = run_corpus(tmp.path);
    CHECK(! report.ok());
    CHECK(report.text.find("not a discourse relation") != std::string::npos);
}

TEST_CASE("missing headers are load errors")
{
    TempDir tmp;
    write_file(tmp.path / "x.lud", "# id: x\nindex:(l1,h0)\nlud_preds: l1-mood(decl,h0)\n");
    CHECK_THROWS_WITH_AS((void)load_corpus_entry(tmp.path / "x.lud"),
        doctest::Contains("expected-count"), LudError);
}
