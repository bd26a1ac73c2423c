#include <lud/resolve.hpp>

#include <lud/enumerate.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace lud
{
    auto to_text(AnaphoricityClass c) -> std::string_view
    {
        switch (c) {
        case AnaphoricityClass::both_internal: return "both-internal";
        case AnaphoricityClass::antecedent_external: return "antecedent-external";
        case AnaphoricityClass::conclusion_external: return "conclusion-external";
        }
        return "?";
    }

    auto to_text(FixedSide s) -> std::string_view
    {
        switch (s) {
        case FixedSide::restriction: return "restriction";
        case FixedSide::scope: return "scope";
        case FixedSide::none: return "none";
        }
        return "?";
    }

    auto Lexicon::find(std::string_view rel_type) const -> const LexiconEntry *
    {
        for (const auto & e : entries)
            if (e.rel_type == rel_type)
                return &e;
        return nullptr;
    }

    auto default_lexicon() -> Lexicon
    {
        return Lexicon{{
            {"topic", AnaphoricityClass::both_internal, FixedSide::restriction},
            {"explanation-node", AnaphoricityClass::both_internal, FixedSide::restriction},
            {"conditional-nara", AnaphoricityClass::both_internal, FixedSide::restriction},
            {"explanation-noda", AnaphoricityClass::conclusion_external, FixedSide::none},
            {"dakara", AnaphoricityClass::antecedent_external, FixedSide::none},
        }};
    }

    namespace
    {
        auto class_from_text(std::string_view t) -> std::optional<AnaphoricityClass>
        {
            if (t == "both-internal")
                return AnaphoricityClass::both_internal;
            if (t == "antecedent-external")
                return AnaphoricityClass::antecedent_external;
            if (t == "conclusion-external")
                return AnaphoricityClass::conclusion_external;
            return std::nullopt;
        }

        auto side_from_text(std::string_view t) -> std::optional<FixedSide>
        {
            if (t == "restriction")
                return FixedSide::restriction;
            if (t == "scope")
                return FixedSide::scope;
            if (t == "none")
                return FixedSide::none;
            return std::nullopt;
        }

        auto external_side(AnaphoricityClass c) -> FixedSide
        {
            switch (c) {
            case AnaphoricityClass::antecedent_external: return FixedSide::restriction;
            case AnaphoricityClass::conclusion_external: return FixedSide::scope;
            case AnaphoricityClass::both_internal: break;
            }
            return FixedSide::none;
        }
    }

    auto parse_lexicon(const std::string & text) -> Lexicon
    {
        Lexicon lex;
        std::istringstream in(text);
        std::string raw;
        int line_no = 0;
        while (std::getline(in, raw)) {
            ++line_no;
            auto hash = raw.find('#');
            if (hash != std::string::npos)
                raw = raw.substr(0, hash);
            std::istringstream line(raw);
            std::string keyword, name, class_field, fixed_field;
            if (! (line >> keyword))
                continue;
            auto fail = [&](const std::string & what) {
                throw LudError("lexicon-syntax", "line " + std::to_string(line_no) + ": " + what);
            };
            if (keyword != "rel")
                fail("expected 'rel <name> class=... fixed=...'");
            if (! (line >> name >> class_field >> fixed_field))
                fail("incomplete entry");
            if (class_field.rfind("class=", 0) != 0 || fixed_field.rfind("fixed=", 0) != 0)
                fail("expected class= and fixed= fields");
            auto cls = class_from_text(std::string_view(class_field).substr(6));
            auto fixed = side_from_text(std::string_view(fixed_field).substr(6));
            if (! cls || ! fixed)
                fail("unknown class or fixed value");
            if (*cls != AnaphoricityClass::both_internal && *fixed == external_side(*cls))
                fail("the externally bound side cannot be the fixed side");
            lex.entries.push_back({name, *cls, *fixed});
        }
        return lex;
    }

    auto to_text(const Lexicon & lex) -> std::string
    {
        std::string out;
        for (const auto & e : lex.entries)
            out += "rel " + e.rel_type + " class=" + std::string(to_text(e.anaph_class))
                + " fixed=" + std::string(to_text(e.fixed)) + "\n";
        return out;
    }

    auto classify(const Lexicon & lex, const std::string & rel_type) -> AnaphoricityClass
    {
        if (const auto * e = lex.find(rel_type))
            return e->anaph_class;
        throw LudError("unknown-relation", rel_type + " has no lexicon entry");
    }

    auto parse_surface_meta(const std::string & text) -> SurfaceMeta
    {
        SurfaceMeta meta;
        std::istringstream in(text);
        std::string raw;
        while (std::getline(in, raw)) {
            auto hash = raw.find('#');
            if (hash != std::string::npos)
                raw = raw.substr(0, hash);
            std::istringstream line(raw);
            std::string item;
            while (line >> item) {
                auto eq = item.find('=');
                std::optional<Ident> l;
                if (eq != std::string::npos)
                    l = parse_ident(std::string_view(item).substr(0, eq));
                if (! l || l->kind != IdentKind::label)
                    throw LudError("surface-meta", "expected <label>=<position>, got '" + item + "'");
                int pos = -1;
                try {
                    pos = std::stoi(item.substr(eq + 1));
                }
                catch (const std::exception &) {
                    throw LudError("surface-meta", "bad position in '" + item + "'");
                }
                if (pos < 0 || ! meta.position.emplace(*l, pos).second)
                    throw LudError("surface-meta", "bad or duplicate position for " + to_string(*l));
            }
        }
        std::set<int> seen;
        for (const auto & [l, pos] : meta.position)
            if (! seen.insert(pos).second)
                throw LudError("surface-meta", "two relations share position " + std::to_string(pos));
        return meta;
    }

    auto discrel_order(const LudRepresentation & rep, const Plugging & p)
        -> std::set<std::pair<Ident, Ident>>
    {
        std::map<Ident, Ident> plugged_at; // fragment label -> hole it plugs
        for (const auto & [h, l] : p.assignment)
            plugged_at.emplace(l, h);

        auto discrels = rep.discrels();
        const int step_limit = static_cast<int>(p.assignment.size()) * 2 + 2;

        // climb from a fragment to the root, collecting the holes passed through
        auto holes_above = [&](Ident fragment) {
            std::set<Ident> result;
            int steps = 0;
            while (fragment != rep.top_label) {
                auto at = plugged_at.find(fragment);
                if (at == plugged_at.end() || ++steps > step_limit)
                    throw LudError("inadmissible-plugging",
                        to_string(fragment) + " does not reach the top label");
                result.insert(at->second);
                auto owner = rep.hole_owner(at->second);
                if (! owner)
                    throw LudError("inadmissible-plugging", "unowned hole on the path");
                fragment = *owner;
            }
            return result;
        };

        std::set<std::pair<Ident, Ident>> order;
        for (const auto & [inner_label, inner_cond] : discrels) {
            auto above = holes_above(rep.enclosing_fragment(inner_label));
            for (const auto & [outer_label, outer_cond] : discrels) {
                if (outer_label == inner_label)
                    continue;
                if (above.count(outer_cond->restriction) || above.count(outer_cond->scope))
                    order.emplace(outer_label, inner_label);
            }
        }
        return order;
    }

    auto resolve(const LudRepresentation & rep, const SurfaceMeta & meta, const Lexicon & lex)
        -> RankedPluggings
    {
        auto pluggings = enumerate(rep);

        struct Rel
        {
            Ident label;
            AnaphoricityClass cls;
            int position;
        };
        std::vector<Rel> rels;
        for (const auto & [label, cond] : rep.discrels()) {
            auto cls = classify(lex, cond->rel_type);
            auto pos = meta.position.find(label);
            if (pos == meta.position.end())
                throw LudError("missing-surface-position",
                    to_string(label) + " has no surface position");
            rels.push_back({label, cls, pos->second});
        }

        std::vector<std::set<std::pair<Ident, Ident>>> orders;
        orders.reserve(pluggings.size());
        for (const auto & p : pluggings)
            orders.push_back(discrel_order(rep, p));

        auto outscopes = [&](std::size_t pi, const Ident & a, const Ident & b) {
            return orders[pi].count({a, b}) > 0;
        };

        // offending ordered pairs, rule by rule
        std::vector<std::pair<Ident, Ident>> r1_pairs, r2_pairs;
        for (const auto & internal : rels) {
            if (internal.cls != AnaphoricityClass::both_internal)
                continue;
            for (const auto & external : rels)
                if (external.cls != AnaphoricityClass::both_internal)
                    r1_pairs.emplace_back(internal.label, external.label);
            for (const auto & other : rels)
                if (other.cls == AnaphoricityClass::both_internal && other.label != internal.label
                    && other.position < internal.position)
                    r2_pairs.emplace_back(internal.label, other.label); // later over earlier
        }
        std::sort(r1_pairs.begin(), r1_pairs.end());
        std::sort(r2_pairs.begin(), r2_pairs.end());

        RankedPluggings result;

        std::vector<std::size_t> survivors(pluggings.size());
        std::iota(survivors.begin(), survivors.end(), 0);

        auto apply_filter = [&](const std::pair<Ident, Ident> & pair, const char * rule) {
            std::vector<std::size_t> kept;
            for (auto pi : survivors)
                if (! outscopes(pi, pair.first, pair.second))
                    kept.push_back(pi);
            if (kept.empty()) {
                result.warnings.push_back({Severity::warning, "rule-skipped", std::nullopt,
                    pair.first,
                    std::string(rule) + " would discard every plugging for pair ("
                        + to_string(pair.first) + "," + to_string(pair.second) + "); skipped"});
                return;
            }
            survivors = std::move(kept);
        };

        for (const auto & pair : r1_pairs)
            apply_filter(pair, "R1");
        for (const auto & pair : r2_pairs)
            apply_filter(pair, "R2");

        std::vector<int> violation_count(pluggings.size(), 0);
        for (std::size_t pi = 0; pi < pluggings.size(); ++pi) {
            for (const auto & pair : r1_pairs)
                if (outscopes(pi, pair.first, pair.second))
                    ++violation_count[pi];
            for (const auto & pair : r2_pairs)
                if (outscopes(pi, pair.first, pair.second))
                    ++violation_count[pi];
        }

        std::set<std::size_t> surviving(survivors.begin(), survivors.end());
        result.groups.emplace_back();
        for (auto pi : survivors)
            result.groups.back().push_back(pluggings[pi]);

        std::map<int, std::vector<Plugging>> lower;
        for (std::size_t pi = 0; pi < pluggings.size(); ++pi)
            if (! surviving.count(pi))
                lower[violation_count[pi]].push_back(pluggings[pi]);
        for (auto & [count, group] : lower)
            result.groups.push_back(std::move(group));

        return result;
    }

    auto insert_mode(const LudRepresentation & rep, ModeInsertion policy) -> LudRepresentation
    {
        for (const auto & lc : rep.conditions)
            for (const auto & c : lc.conditions)
                if (std::holds_alternative<ModeCond>(c))
                    throw LudError("already-moded", to_string(lc.label) + " already carries mode");

        LudRepresentation out = rep;

        std::set<Ident> pinned; // holes some label is already constrained under
        for (const auto & c : rep.leq)
            pinned.insert(c.upper);

        auto discrels = rep.discrels();
        std::set<Ident> discrel_labels;
        std::set<Ident> discrel_holes;
        for (const auto & [l, d] : discrels) {
            discrel_labels.insert(l);
            discrel_holes.insert(d->restriction);
            discrel_holes.insert(d->scope);
        }

        // matrix material: everything not lexically attached to a relation hole.
        // That includes fragments anchored inside the matrix itself (under a
        // negation hole, say), which get the extra mode edge just like the rest.
        std::set<Ident> pinned_to_discrel;
        for (const auto & c : rep.leq)
            if (discrel_holes.count(c.upper) || c.upper == rep.top_hole)
                pinned_to_discrel.insert(c.lower);

        std::vector<Ident> matrix_roots;
        for (const auto & l : pluggable_labels(rep))
            if (! pinned_to_discrel.count(l) && ! discrel_labels.count(l))
                matrix_roots.push_back(l);

        const bool want_mode =
            discrels.size() >= 2 || (policy == ModeInsertion::always && ! discrels.empty());

        if (want_mode) {
            int max_label = rep.top_label.num;
            int max_hole = rep.top_hole.num;
            for (const auto & lc : rep.conditions)
                max_label = std::max(max_label, lc.label.num);
            for (const auto & g : rep.groupings) {
                max_label = std::max(max_label, g.root.num);
                for (const auto & m : g.members)
                    max_label = std::max(max_label, m.num);
            }
            for (const auto & a : rep.alfa)
                max_label = std::max({max_label, a.anchor.num, a.content.num});
            for (const auto & c : rep.leq)
                max_label = std::max(max_label, c.lower.num);
            for (const auto & h : rep.all_holes())
                max_hole = std::max(max_hole, h.num);
            for (const auto & c : rep.leq)
                max_hole = std::max(max_hole, c.upper.num);

            Ident mode_label = label(max_label + 1);
            Ident mode_hole = hole(max_hole + 1);

            out.conditions.push_back({mode_label, {ModeCond{mode_hole}}});
            for (const auto & [l, d] : discrels)
                for (const auto & h : {d->restriction, d->scope})
                    if (! pinned.count(h))
                        out.leq.push_back({mode_label, h});
            for (const auto & r : matrix_roots)
                out.leq.push_back({r, mode_hole});
            for (const auto & [l, d] : discrels) {
                LeqConstraint top_edge{l, rep.top_hole};
                if (std::find(rep.leq.begin(), rep.leq.end(), top_edge) == rep.leq.end())
                    out.leq.push_back(top_edge);
            }
        }
        else {
            for (const auto & r : matrix_roots)
                out.leq.push_back({r, rep.top_hole});
        }

        out.normalize();
        return out;
    }
}
