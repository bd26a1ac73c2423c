#include <doctest.h>

#include "support.hpp"

#include <lud/parser.hpp>
#include <lud/validate.hpp>

using namespace lud;
using namespace test_support;

namespace
{
    auto error_codes(const std::vector<Diagnostic> & diags) -> std::set<std::string>
    {
        std::set<std::string> codes;
        for (const auto & d : diags)
            if (d.severity == Severity::error)
                codes.insert(d.code);
        return codes;
    }
}

TEST_CASE("canonical f1 parses with the documented section counts")
{
    auto rep = load_rep("f1");

    CHECK(rep.all_holes().size() == 9);
    CHECK(rep.groupings.size() == 5);
    CHECK(rep.alfa.size() == 2);
    CHECK(rep.leq.size() == 12);

    // labeled entries: condition-bearing labels plus group roots
    std::set<Ident> labels;
    for (const auto & lc : rep.conditions)
        labels.insert(lc.label);
    for (const auto & g : rep.groupings)
        labels.insert(g.root);
    CHECK(labels.size() == 23);

    CHECK(rep.top_label == label(1));
    CHECK(rep.top_hole == hole(0));
}

TEST_CASE("smallest legal input parses but fails arity validation")
{
    auto result = parse("index:(l1,h0)\nlud_preds: l1-mood(decl,h0)");
    REQUIRE(result.ok());
    CHECK(result.rep->all_holes().size() == 1);
    CHECK(result.rep->conditions.size() == 1);

    auto diags = validate(*result.rep);
    CHECK(error_codes(diags).count("arity-mismatch"));
}

TEST_CASE("leq with a label upper bound is rejected at parse time")
{
    auto text = read_file(corpus_dir() / "f1.lud") + "lud_scoping:\nleq(l5,l8)\n";
    auto result = parse(text);
    REQUIRE(! result.ok());

    bool found = false;
    for (const auto & d : result.diagnostics)
        if (d.code == "label-upper-leq") {
            found = true;
            REQUIRE(d.span.has_value());
            CHECK(d.span->line > 1);
        }
    CHECK(found);
}

TEST_CASE("three-field index is tolerated with a warning and dropped on output")
{
    auto result = parse("index:(i8,l1,h0)\nlud_preds: l1-mood(decl,h0)");
    REQUIRE(result.ok());
    CHECK(result.rep->index_instance == instance(8));

    bool warned = false;
    for (const auto & d : result.diagnostics)
        if (d.code == "index-instance" && d.severity == Severity::warning)
            warned = true;
    CHECK(warned);

    auto text = serialize(*result.rep);
    CHECK(text.rfind("index:(l1,h0)\n", 0) == 0);

    // the stored instance takes no part in equality
    auto reparsed = parse(text);
    REQUIRE(reparsed.ok());
    CHECK(*reparsed.rep == *result.rep);
}

TEST_CASE("malformed lines produce positioned diagnostics")
{
    SUBCASE("unknown predform")
    {
        auto result = parse("index:(l1,h0)\nlud_preds:\nl1-mood(decl,h0)\nl2-frobnicate(h1)");
        REQUIRE(! result.ok());
        CHECK(error_codes(result.diagnostics).count("unknown-condition"));
        CHECK(result.diagnostics.front().span->line == 4);
    }
    SUBCASE("entry before any section")
    {
        auto result = parse("index:(l1,h0)\nl1-mood(decl,h0)");
        REQUIRE(! result.ok());
        CHECK(error_codes(result.diagnostics).count("syntax"));
    }
    SUBCASE("missing index")
    {
        auto result = parse("lud_preds: l1-mood(decl,h0)");
        REQUIRE(! result.ok());
        CHECK(error_codes(result.diagnostics).count("bad-index"));
    }
    SUBCASE("garbage arguments")
    {
        auto result = parse("index:(l1,h0)\nlud_preds: l1-mood(whenever,h0)");
        REQUIRE(! result.ok());
        CHECK(error_codes(result.diagnostics).count("syntax"));
    }
}

TEST_CASE("duplicate leq lines are deduplicated with a warning")
{
    auto result = parse(
        "index:(l1,h0)\nlud_preds: l1-mood(decl,h0)\nlud_scoping:\nleq(l1,h0)\nleq(l1,h0)");
    REQUIRE(result.ok());
    CHECK(result.rep->leq.size() == 1);

    bool warned = false;
    for (const auto & d : result.diagnostics)
        if (d.code == "duplicate-leq")
            warned = true;
    CHECK(warned);
}

TEST_CASE("serialization is canonical and round-trips every corpus entry")
{
    for (const auto & id : {"f1", "f3", "f4", "f5", "f6a", "f6b", "f7", "t1"}) {
        CAPTURE(id);
        auto text = read_file(corpus_dir() / (std::string(id) + ".lud"));
        auto result = parse(text);
        REQUIRE(result.ok());

        auto canonical = serialize(*result.rep);
        CHECK(canonical == payload_of(text));

        auto reparsed = parse(canonical);
        REQUIRE(reparsed.ok());
        CHECK(*reparsed.rep == *result.rep);
        CHECK(serialize(*reparsed.rep) == canonical);
    }
}

TEST_CASE("a representation built in code serializes to the shipped t1 payload")
{
    LudRepresentation rep;
    rep.top_label = label(1);
    rep.top_hole = hole(0);
    rep.conditions = {
        {label(8), {PredCond{"daijoubu", instance(2)}}},
        {label(2), {DiscRelCond{"topic", hole(1), hole(2)}}},
        {label(1), {MoodCond{MoodKind::declarative, hole(0)}}},
        {label(4), {DmCond{instance(1)}}},
        {label(5), {PredCond{"getsuyoubi", instance(1)}}},
        {label(7), {DmCond{instance(2)}}},
    };
    rep.groupings = {{label(6), {label(7), label(8)}}, {label(3), {label(4), label(5)}}};
    rep.leq = {{label(6), hole(2)}, {label(2), hole(0)}, {label(3), hole(1)}};
    rep.normalize();

    auto text = serialize(rep);
    CHECK(text == payload_of(read_file(corpus_dir() / "t1.lud")));

    // exactly one discourse relation line
    CHECK(text.find("l2-discrel(topic,h1,h2)\n") != std::string::npos);
    CHECK(text.find("discrel") == text.rfind("discrel"));
}

TEST_CASE("serialization does not depend on construction order")
{
    // same sections permuted, entry sharing the header line
    auto a = parse("index:(l1,h0)\n"
                   "lud_scoping:\nleq(l3,h1)\nleq(l2,h0)\n"
                   "lud_preds:\nl2-discrel(topic,h1,h2)\nl1-mood(decl,h0)\nl3-dm(i1)\nl4-dm(i2)\n");
    auto b = parse("index:(l1,h0)\n"
                   "lud_preds: l1-mood(decl,h0)\n"
                   "l2-discrel(topic,h1,h2)\n"
                   "l3-dm(i1)\n"
                   "l4-dm(i2)\n"
                   "lud_scoping: leq(l2,h0)\n"
                   "leq(l3,h1)\n");
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(*a.rep == *b.rep);
    CHECK(serialize(*a.rep) == serialize(*b.rep));
}

TEST_CASE("every diagnostic span stays inside the input")
{
    auto text = std::string("index:(l1,h0)\nlud_preds: l1-mood(decl,h0)\nbroken ???\nleq(l5,l8)");
    auto result = parse(text);
    REQUIRE(! result.ok());
    int lines = 1;
    for (char c : text)
        if (c == '\n')
            ++lines;
    for (const auto & d : result.diagnostics) {
        REQUIRE(d.span.has_value());
        CHECK(d.span->line >= 1);
        CHECK(d.span->line <= lines);
        CHECK(d.span->col_start >= 1);
        CHECK(d.span->col_start <= d.span->col_end);
    }
}
