#include <lud/validate.hpp>

#include <lud/plugging.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace lud
{
    namespace
    {
        struct Checker
        {
            const LudRepresentation & rep;
            std::vector<Diagnostic> diags;

            void error(const std::string & code, const Ident & subject, const std::string & message)
            {
                diags.push_back({Severity::error, code, std::nullopt, subject, message});
            }

            void warning(const std::string & code, const Ident & subject, const std::string & message)
            {
                diags.push_back({Severity::warning, code, std::nullopt, subject, message});
            }

            void check_hole_ownership()
            {
                std::map<Ident, int> owners;
                for (const auto & lc : rep.conditions)
                    for (const auto & c : lc.conditions)
                        for (const auto & h : holes_of(c))
                            ++owners[h];
                for (const auto & [h, count] : owners)
                    if (count > 1)
                        error("duplicate-hole-owner", h,
                            "hole is an argument of " + std::to_string(count) + " conditions");

                for (const auto & [l, d] : rep.discrels())
                    if (d->restriction == d->scope)
                        error("discrel-holes-equal", l, "discourse relation reuses one hole twice");
            }

            void check_mood()
            {
                int moods = 0;
                bool top_has_mood = false;
                for (const auto & lc : rep.conditions)
                    for (const auto & c : lc.conditions)
                        if (const auto * m = std::get_if<MoodCond>(&c)) {
                            ++moods;
                            if (lc.label == rep.top_label) {
                                top_has_mood = true;
                                if (m->scope != rep.top_hole)
                                    error("top-hole-mismatch", m->scope,
                                        "mood scope differs from the index hole "
                                            + to_string(rep.top_hole));
                            }
                        }
                if (moods > 1)
                    error("duplicate-mood", rep.top_label,
                        std::to_string(moods) + " mood conditions present");
                if (! top_has_mood)
                    error("missing-mood", rep.top_label, "top label carries no mood condition");
            }

            void check_groupings()
            {
                std::set<Ident> roots;
                std::set<Ident> members;
                for (const auto & g : rep.groupings) {
                    if (! roots.insert(g.root).second)
                        error("duplicate-group-root", g.root, "two groupings share this root");
                    for (const auto & m : g.members) {
                        if (! members.insert(m).second)
                            error("group-member-overlap", m, "label is a member of two groups");
                        if (rep.conditions_of(m) == nullptr)
                            error("member-no-conditions", m, "group member carries no condition");
                    }
                }
                for (const auto & g : rep.groupings)
                    if (members.count(g.root))
                        error("group-root-is-member", g.root, "group root is itself a member");
            }

            void check_defined_idents()
            {
                std::set<Ident> holes;
                for (const auto & h : rep.all_holes())
                    holes.insert(h);

                auto require_label = [&](const Ident & l, const char * where) {
                    if (! rep.is_defined_label(l))
                        error("undefined-ident", l, std::string("undefined label in ") + where);
                };
                auto require_hole = [&](const Ident & h, const char * where) {
                    if (! holes.count(h))
                        error("undefined-ident", h, std::string("undefined hole in ") + where);
                };

                require_label(rep.top_label, "index");
                require_hole(rep.top_hole, "index");
                for (const auto & c : rep.leq) {
                    require_label(c.lower, "leq");
                    require_hole(c.upper, "leq");
                }
                for (const auto & a : rep.alfa) {
                    require_label(a.anchor, "alfa");
                    require_label(a.content, "alfa");
                }
                for (const auto & m : rep.meta) {
                    require_label(m.host, "modifies");
                    require_label(m.modifier, "modifies");
                }
            }

            void check_arity()
            {
                auto pluggable = pluggable_labels(rep);
                auto holes = rep.all_holes();
                if (pluggable.size() != holes.size())
                    error("arity-mismatch", rep.top_hole,
                        std::to_string(pluggable.size()) + " pluggable labels for "
                            + std::to_string(holes.size()) + " holes");
            }

            void check_partition()
            {
                std::map<Ident, std::set<Ident>> uppers; // lower -> holes it sits under
                for (const auto & c : rep.leq)
                    uppers[c.lower].insert(c.upper);
                for (const auto & [l, d] : rep.discrels())
                    for (const auto & [lower, hs] : uppers)
                        if (hs.count(d->restriction) && hs.count(d->scope))
                            error("partition-conflict", l,
                                to_string(lower) + " is leq-constrained under both holes of "
                                    + to_string(l));
            }

            void check_modifies_markers()
            {
                for (const auto & m : rep.meta) {
                    std::set<Ident> host_markers;
                    for (const auto & [l, c] : rep.fragment_conditions(rep.enclosing_fragment(m.host)))
                        for (const auto & i : instances_of(*c))
                            host_markers.insert(i);
                    bool shares = false;
                    if (const auto * cs = rep.conditions_of(m.modifier))
                        for (const auto & c : *cs)
                            for (const auto & i : instances_of(c))
                                if (host_markers.count(i))
                                    shares = true;
                    if (! shares)
                        warning("modifies-marker-mismatch", m.modifier,
                            "modifier shares no instance with its host " + to_string(m.host));
                }
            }

            void check_unused_instances()
            {
                // referents introduced next to other material but referenced nowhere
                std::set<Ident> used;
                for (const auto & lc : rep.conditions)
                    for (const auto & c : lc.conditions) {
                        if (std::holds_alternative<DmCond>(c))
                            continue;
                        for (const auto & i : instances_of(c))
                            used.insert(i);
                    }
                for (const auto & a : rep.alfa)
                    used.insert(a.marker);

                for (const auto & lc : rep.conditions)
                    for (const auto & c : lc.conditions)
                        if (const auto * dm = std::get_if<DmCond>(&c)) {
                            auto fragment = rep.enclosing_fragment(lc.label);
                            if (rep.fragment_conditions(fragment).size() <= 1)
                                continue; // a bare placeholder referent is fine
                            if (! used.count(dm->marker))
                                warning("unused-instance", dm->marker,
                                    "referent introduced but never used");
                        }
            }
        };
    }

    auto validate(const LudRepresentation & rep) -> std::vector<Diagnostic>
    {
        LudRepresentation sorted = rep;
        sorted.normalize();

        Checker checker{sorted, {}};
        checker.check_hole_ownership();
        checker.check_mood();
        checker.check_groupings();
        checker.check_defined_idents();
        checker.check_arity();
        checker.check_partition();
        checker.check_modifies_markers();
        checker.check_unused_instances();
        return std::move(checker.diags);
    }
}
