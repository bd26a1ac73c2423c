#pragma once

#include <lud/parser.hpp>
#include <lud/plugging.hpp>
#include <lud/resolve.hpp>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace test_support
{
    inline auto corpus_dir() -> std::filesystem::path { return LUD_CORPUS_DIR; }
    inline auto golden_dir() -> std::filesystem::path { return LUD_GOLDEN_DIR; }

    inline auto read_file(const std::filesystem::path & p) -> std::string
    {
        std::ifstream in(p, std::ios::binary);
        if (! in)
            throw std::runtime_error("cannot read " + p.string());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    // the LUD payload of a corpus file: everything from the first line that is
    // neither blank nor a comment
    inline auto payload_of(const std::string & text) -> std::string
    {
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto eol = text.find('\n', pos);
            auto line_end = eol == std::string::npos ? text.size() : eol;
            auto line = text.substr(pos, line_end - pos);
            auto first = line.find_first_not_of(" \t\r");
            if (first != std::string::npos && line[first] != '#')
                return text.substr(pos);
            if (eol == std::string::npos)
                break;
            pos = eol + 1;
        }
        return {};
    }

    inline auto load_rep(const std::string & id) -> lud::LudRepresentation
    {
        auto result = lud::parse(read_file(corpus_dir() / (id + ".lud")));
        if (! result.ok())
            throw std::runtime_error("corpus entry " + id + " failed to parse");
        return *result.rep;
    }

    inline auto make_plugging(std::initializer_list<std::pair<int, int>> hole_to_label)
        -> lud::Plugging
    {
        lud::Plugging p;
        for (const auto & [h, l] : hole_to_label)
            p.assignment.emplace(lud::hole(h), lud::label(l));
        return p;
    }

    // whole-token ident renaming via the textual form
    inline auto rename_idents(const lud::LudRepresentation & rep,
        const std::map<std::string, std::string> & renames) -> lud::LudRepresentation
    {
        auto text = lud::serialize(rep);
        for (const auto & [from, to] : renames)
            text = std::regex_replace(text, std::regex("\\b" + from + "\\b"), to);
        auto result = lud::parse(text);
        if (! result.ok())
            throw std::runtime_error("rename produced unparseable text");
        return *result.rep;
    }

    // Independent structural view of a resolved plugging, built directly from
    // the representation and the assignment rather than through the library's
    // admissibility machinery.
    struct TreeView
    {
        const lud::LudRepresentation & rep;
        const lud::Plugging & p;

        auto subtree_labels(const lud::Ident & h) const -> std::set<lud::Ident>
        {
            std::set<lud::Ident> out;
            collect(p.assignment.at(h), out);
            return out;
        }

        void collect(const lud::Ident & fragment, std::set<lud::Ident> & out) const
        {
            if (! out.insert(fragment).second)
                throw std::runtime_error("revisited " + lud::to_string(fragment));
            for (const auto & h : rep.fragment_holes(fragment))
                collect(p.assignment.at(h), out);
        }

        auto is_tree_rooted_at_top() const -> bool
        {
            std::set<lud::Ident> seen;
            seen.insert(rep.top_label);
            for (const auto & h : rep.fragment_holes(rep.top_label))
                collect(p.assignment.at(h), seen);
            return seen.size() == lud::pluggable_labels(rep).size() + 1;
        }

        auto leq_holds(const lud::LeqConstraint & c) const -> bool
        {
            auto below = subtree_labels(c.upper);
            return below.count(rep.enclosing_fragment(c.lower)) > 0;
        }

        auto discrel_subtrees_disjoint() const -> bool
        {
            for (const auto & [l, d] : rep.discrels()) {
                auto left = subtree_labels(d->restriction);
                auto right = subtree_labels(d->scope);
                for (const auto & x : left)
                    if (right.count(x))
                        return false;
            }
            return true;
        }
    };

    // total order of discourse relations implied by a plugging, outermost first;
    // empty when the relations do not form a chain
    inline auto chain_of(const lud::LudRepresentation & rep, const lud::Plugging & p)
        -> std::vector<lud::Ident>
    {
        auto order = lud::discrel_order(rep, p);
        std::vector<std::pair<int, lud::Ident>> keyed;
        for (const auto & [l, d] : rep.discrels()) {
            int below = 0;
            for (const auto & pair : order)
                if (pair.first == l)
                    ++below;
            keyed.emplace_back(-below, l);
        }
        std::sort(keyed.begin(), keyed.end());

        std::vector<lud::Ident> chain;
        for (const auto & [k, l] : keyed)
            chain.push_back(l);
        for (std::size_t i = 0; i < chain.size(); ++i)
            for (std::size_t j = i + 1; j < chain.size(); ++j)
                if (! order.count({chain[i], chain[j]}))
                    return {};
        return chain;
    }
}
