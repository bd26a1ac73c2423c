#include <doctest.h>

#include "support.hpp"

#include <lud/diagnostic.hpp>
#include <lud/drs.hpp>
#include <lud/enumerate.hpp>

#include <regex>

using namespace lud;
using namespace test_support;

namespace
{
    auto f1_resolved_reading() -> Plugging
    {
        return make_plugging(
            {{0, 4}, {1, 5}, {2, 3}, {3, 8}, {4, 17}, {5, 2}, {6, 16}, {7, 21}, {8, 24}});
    }

    // every instance mentioned by a condition must be declared in the same box
    // or one of its ancestors
    auto referents_accessible(const DrsBox & box, std::set<std::string> declared) -> bool
    {
        for (const auto & r : box.referents)
            declared.insert(to_string(r));
        static const std::regex instance_token("i[0-9]+");
        for (const auto & c : box.conditions) {
            for (auto it = std::sregex_iterator(c.begin(), c.end(), instance_token);
                 it != std::sregex_iterator(); ++it)
                if (! declared.count(it->str()))
                    return false;
        }
        for (const auto & [conn, kids] : box.children)
            for (const auto & kid : kids)
                if (! referents_accessible(kid, declared))
                    return false;
        return true;
    }
}

TEST_CASE("the f1 reading builds the nested noda > topic > node structure")
{
    auto rep = load_rep("f1");
    auto box = build_drs(rep, f1_resolved_reading());

    REQUIRE(box.children.size() == 1);
    const auto & [root_conn, root_kids] = box.children.front();
    CHECK(root_conn.kind == ConnectiveKind::discrel);
    CHECK(root_conn.rel_type == "explanation-noda");
    REQUIRE(root_kids.size() == 2);

    const auto & restriction = root_kids[0];
    REQUIRE(! restriction.children.empty());
    CHECK(restriction.children.front().first.rel_type == "topic");

    const auto & topic_scope = restriction.children.front().second.at(1);
    REQUIRE(! topic_scope.children.empty());
    CHECK(topic_scope.children.front().first.rel_type == "explanation-node");

    // the anaphoric placeholder box: a bare referent
    const auto & conclusion = root_kids[1];
    CHECK(conclusion.referents == std::vector<Ident>{instance(7)});
    CHECK(conclusion.conditions.empty());
    CHECK(conclusion.children.empty());
}

TEST_CASE("f7 readings contain a negated box with the ike predicate")
{
    auto rep = load_rep("f7");
    for (const auto & p : enumerate(rep)) {
        auto rendered = render_box(build_drs(rep, p));
        CHECK(rendered.find("neg:") != std::string::npos);
        CHECK(rendered.find("ike(i4)") != std::string::npos);
    }
}

TEST_CASE("box renders match the golden files")
{
    auto rep_t1 = load_rep("t1");
    auto t1 = enumerate(rep_t1);
    REQUIRE(t1.size() == 1);
    CHECK(render_box(build_drs(rep_t1, t1.front())) == read_file(golden_dir() / "t1.box.txt"));

    auto rep_f1 = load_rep("f1");
    CHECK(render_box(build_drs(rep_f1, f1_resolved_reading()))
        == read_file(golden_dir() / "f1.box.txt"));
}

TEST_CASE("an empty box is a two-line frame")
{
    CHECK(render_box(DrsBox{}) == "+--+\n+--+\n");
}

TEST_CASE("terms for the corpus readings")
{
    auto rep = load_rep("f1");
    CHECK(render_term(rep, f1_resolved_reading())
        == "explanation-noda(topic(getsuyoubi, explanation-node(haitte, neg(zikan))), anaph)");

    // the wa-outermost shape of the same constraint set
    auto wa_top = make_plugging(
        {{0, 2}, {1, 5}, {2, 4}, {3, 8}, {4, 17}, {5, 3}, {6, 16}, {7, 21}, {8, 24}});
    CHECK(render_term(rep, wa_top)
        == "topic(getsuyoubi, explanation-noda(explanation-node(haitte, neg(zikan)), anaph))");

    auto rep_t1 = load_rep("t1");
    CHECK(render_term(rep_t1, enumerate(rep_t1).front()) == "topic(getsuyoubi, daijoubu)");
}

TEST_CASE("term golden files and injectivity over the corpus")
{
    for (const auto & id : {"f1", "f3", "f4", "f5", "f6a", "f6b", "f7", "t1"}) {
        CAPTURE(id);
        auto rep = load_rep(id);
        auto pluggings = enumerate(rep);

        std::set<std::string> terms;
        for (const auto & p : pluggings)
            terms.insert(render_term(rep, p));
        CHECK(terms.size() == pluggings.size()); // distinct readings, distinct terms

        auto golden = read_file(golden_dir() / (std::string(id) + ".term.txt"));
        if (! golden.empty() && golden.back() == '\n')
            golden.pop_back();
        CHECK(terms.count(golden));
    }
}

TEST_CASE("no hole identifier survives rendering")
{
    static const std::regex hole_token("\\bh[0-9]+\\b");
    for (const auto & id : {"f1", "f7", "t1"}) {
        auto rep = load_rep(id);
        for (const auto & p : enumerate(rep)) {
            auto term = render_term(rep, p);
            CHECK(! std::regex_search(term, hole_token));
            auto boxes = render_box(build_drs(rep, p));
            CHECK(! std::regex_search(boxes, hole_token));
        }
    }
}

TEST_CASE("rendered referents are always accessible")
{
    for (const auto & id : {"f1", "f3", "f4", "f5", "f6a", "f6b", "f7", "t1"}) {
        CAPTURE(id);
        auto rep = load_rep(id);
        for (const auto & p : enumerate(rep))
            CHECK(referents_accessible(build_drs(rep, p), {}));
    }
}

TEST_CASE("inadmissible pluggings are rejected")
{
    auto rep = load_rep("f1");
    auto p = f1_resolved_reading();
    p.assignment[hole(0)] = label(2);
    p.assignment[hole(5)] = label(4); // noda into its own restriction hole
    if (is_admissible(rep, p).admissible)
        FAIL("test setup expected an inadmissible plugging");
    CHECK_THROWS_AS((void)build_drs(rep, p), LudError);
    CHECK_THROWS_AS((void)render_term(rep, p), LudError);
}
