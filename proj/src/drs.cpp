#include <lud/drs.hpp>

#include <lud/diagnostic.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace lud
{
    namespace
    {
        struct Builder
        {
            const LudRepresentation & rep;
            const Plugging & p;

            auto plugged(const Ident & h) const -> const Ident &
            {
                auto it = p.assignment.find(h);
                if (it == p.assignment.end())
                    throw LudError("inadmissible-plugging", to_string(h) + " is unplugged");
                return it->second;
            }

            void merge(DrsBox & into, DrsBox && from) const
            {
                for (const auto & r : from.referents)
                    if (std::find(into.referents.begin(), into.referents.end(), r)
                        == into.referents.end())
                        into.referents.push_back(r);
                for (auto & c : from.conditions)
                    into.conditions.push_back(std::move(c));
                for (auto & ch : from.children)
                    into.children.push_back(std::move(ch));
            }

            void add_referent(DrsBox & box, const Ident & i) const
            {
                if (std::find(box.referents.begin(), box.referents.end(), i) == box.referents.end())
                    box.referents.push_back(i);
            }

            // mode and mood never reach this: mode is inlined by the caller and
            // the walk starts below the mood condition
            void render_condition(DrsBox & box, const Condition & c) const
            {
                if (const auto * dm = std::get_if<DmCond>(&c))
                    add_referent(box, dm->marker);
                else if (const auto * pred = std::get_if<PredCond>(&c))
                    box.conditions.push_back(pred->pred_name + "(" + to_string(pred->marker) + ")");
                else if (const auto * role = std::get_if<RoleCond>(&c))
                    box.conditions.push_back(
                        role->role_name + "(" + to_string(role->event) + "," + to_string(role->filler) + ")");
                else if (const auto * neg = std::get_if<NegCond>(&c))
                    box.children.emplace_back(
                        Connective{ConnectiveKind::neg, {}}, std::vector<DrsBox>{box_at(neg->scope)});
                else if (const auto * rel = std::get_if<DiscRelCond>(&c))
                    box.children.emplace_back(Connective{ConnectiveKind::discrel, rel->rel_type},
                        std::vector<DrsBox>{box_at(rel->restriction), box_at(rel->scope)});
            }

            auto box_at(const Ident & h) const -> DrsBox { return box_of(plugged(h)); }

            auto box_of(const Ident & fragment) const -> DrsBox
            {
                DrsBox box;
                for (const auto & [l, c] : rep.fragment_conditions(fragment)) {
                    if (const auto * mode = std::get_if<ModeCond>(c))
                        merge(box, box_at(mode->scope));
                    else
                        render_condition(box, *c);
                }

                // presupposed or anaphoric material lands where its anchor did
                for (const auto & a : rep.alfa) {
                    if (rep.enclosing_fragment(a.anchor) != fragment)
                        continue;
                    merge(box, box_of(a.content));
                    if (a.sort == AlfaSort::pron)
                        box.conditions.push_back("anaph(" + to_string(a.marker) + ")");
                    else if (a.sort == AlfaSort::definite)
                        box.conditions.push_back("def(" + to_string(a.marker) + ")");
                }

                // a modifier outside the host's group still renders inside it
                for (const auto & m : rep.meta) {
                    if (rep.enclosing_fragment(m.host) != fragment)
                        continue;
                    if (rep.enclosing_fragment(m.modifier) == fragment)
                        continue;
                    if (const auto * cs = rep.conditions_of(m.modifier))
                        for (const auto & c : *cs)
                            render_condition(box, c);
                }
                return box;
            }
        };
    }

    auto build_drs(const LudRepresentation & rep, const Plugging & p) -> DrsBox
    {
        auto verdict = is_admissible(rep, p);
        if (! verdict.admissible)
            throw LudError("inadmissible-plugging",
                "cannot build a DRS from an inadmissible plugging ("
                    + std::string(to_text(verdict.violations.front().kind)) + ")");
        return Builder{rep, p}.box_at(rep.top_hole);
    }

    namespace
    {
        auto header_text(const Connective & c) -> std::string
        {
            switch (c.kind) {
            case ConnectiveKind::discrel: return c.rel_type;
            case ConnectiveKind::neg: return "neg";
            case ConnectiveKind::mode_transparent: return "mode";
            }
            return "?";
        }

        // marker for the horizontal rule between referents and conditions
        const std::string rule_marker = "\x01";

        auto frame(const std::vector<std::string> & interior) -> std::vector<std::string>;

        void interior_lines(const DrsBox & box, std::vector<std::string> & out)
        {
            if (! box.referents.empty()) {
                std::string refs;
                for (const auto & r : box.referents) {
                    if (! refs.empty())
                        refs += " ";
                    refs += to_string(r);
                }
                out.push_back(refs);
                if (! box.conditions.empty() || ! box.children.empty())
                    out.push_back(rule_marker);
            }
            for (const auto & c : box.conditions)
                out.push_back(c);
            for (const auto & [conn, kids] : box.children) {
                out.push_back(header_text(conn) + ":");
                for (const auto & kid : kids) {
                    std::vector<std::string> sub;
                    interior_lines(kid, sub);
                    for (const auto & line : frame(sub))
                        out.push_back("  " + line);
                }
            }
        }

        auto frame(const std::vector<std::string> & interior) -> std::vector<std::string>
        {
            std::size_t width = 0;
            for (const auto & line : interior)
                if (line != rule_marker)
                    width = std::max(width, line.size());

            std::vector<std::string> out;
            std::string border = "+" + std::string(width + 2, '-') + "+";
            out.push_back(border);
            for (const auto & line : interior) {
                if (line == rule_marker)
                    out.push_back("|" + std::string(width + 2, '-') + "|");
                else
                    out.push_back("| " + line + std::string(width - line.size(), ' ') + " |");
            }
            out.push_back(border);
            return out;
        }
    }

    auto render_box(const DrsBox & box) -> std::string
    {
        std::vector<std::string> interior;
        interior_lines(box, interior);
        std::string out;
        for (const auto & line : frame(interior))
            out += line + "\n";
        return out;
    }

    namespace
    {
        struct TermPrinter
        {
            const LudRepresentation & rep;
            const Plugging & p;

            auto term_at(const Ident & h) const -> std::string
            {
                auto it = p.assignment.find(h);
                if (it == p.assignment.end())
                    throw LudError("inadmissible-plugging", to_string(h) + " is unplugged");
                return term_of(it->second);
            }

            auto term_of(const Ident & fragment) const -> std::string
            {
                auto conds = rep.fragment_conditions(fragment);

                for (const auto & [l, c] : conds)
                    if (const auto * rel = std::get_if<DiscRelCond>(c))
                        return rel->rel_type + "(" + term_at(rel->restriction) + ", "
                            + term_at(rel->scope) + ")";
                for (const auto & [l, c] : conds)
                    if (const auto * mode = std::get_if<ModeCond>(c))
                        return term_at(mode->scope);
                for (const auto & [l, c] : conds)
                    if (const auto * neg = std::get_if<NegCond>(c))
                        return "neg(" + term_at(neg->scope) + ")";
                for (const auto & [l, c] : conds)
                    if (const auto * pred = std::get_if<PredCond>(c))
                        return pred->pred_name;
                if (conds.size() == 1 && std::holds_alternative<DmCond>(*conds.front().second))
                    return "anaph";
                return to_string(fragment);
            }
        };
    }

    auto render_term(const LudRepresentation & rep, const Plugging & p) -> std::string
    {
        auto verdict = is_admissible(rep, p);
        if (! verdict.admissible)
            throw LudError("inadmissible-plugging",
                "cannot render a term for an inadmissible plugging");
        return TermPrinter{rep, p}.term_at(rep.top_hole);
    }
}
