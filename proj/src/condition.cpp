#include <lud/condition.hpp>

namespace lud
{
    auto to_text(MoodKind m) -> std::string_view
    {
        switch (m) {
        case MoodKind::declarative: return "decl";
        case MoodKind::interrogative: return "int";
        case MoodKind::imperative: return "imp";
        }
        return "?";
    }

    auto mood_from_text(std::string_view t) -> std::optional<MoodKind>
    {
        if (t == "decl")
            return MoodKind::declarative;
        if (t == "int")
            return MoodKind::interrogative;
        if (t == "imp")
            return MoodKind::imperative;
        return std::nullopt;
    }

    auto holes_of(const Condition & c) -> std::vector<Ident>
    {
        std::vector<Ident> result;
        if (const auto * m = std::get_if<MoodCond>(&c))
            result.push_back(m->scope);
        else if (const auto * d = std::get_if<DiscRelCond>(&c)) {
            result.push_back(d->restriction);
            result.push_back(d->scope);
        }
        else if (const auto * mo = std::get_if<ModeCond>(&c))
            result.push_back(mo->scope);
        else if (const auto * n = std::get_if<NegCond>(&c))
            result.push_back(n->scope);
        return result;
    }

    auto instances_of(const Condition & c) -> std::vector<Ident>
    {
        std::vector<Ident> result;
        if (const auto * n = std::get_if<NegCond>(&c))
            result.push_back(n->marker);
        else if (const auto * dm = std::get_if<DmCond>(&c))
            result.push_back(dm->marker);
        else if (const auto * p = std::get_if<PredCond>(&c))
            result.push_back(p->marker);
        else if (const auto * r = std::get_if<RoleCond>(&c)) {
            result.push_back(r->event);
            result.push_back(r->filler);
        }
        return result;
    }

    auto to_string(const Condition & c) -> std::string
    {
        struct Printer
        {
            auto operator()(const MoodCond & m) const -> std::string
            {
                return "mood(" + std::string(to_text(m.mood)) + "," + to_string_id(m.scope) + ")";
            }
            auto operator()(const DiscRelCond & d) const -> std::string
            {
                return "discrel(" + d.rel_type + "," + to_string_id(d.restriction) + ","
                    + to_string_id(d.scope) + ")";
            }
            auto operator()(const ModeCond & m) const -> std::string
            {
                return "mode(" + to_string_id(m.scope) + ")";
            }
            auto operator()(const NegCond & n) const -> std::string
            {
                return "neg(" + to_string_id(n.marker) + "," + to_string_id(n.scope) + ")";
            }
            auto operator()(const DmCond & d) const -> std::string
            {
                return "dm(" + to_string_id(d.marker) + ")";
            }
            auto operator()(const PredCond & p) const -> std::string
            {
                return "predicate(" + p.pred_name + "," + to_string_id(p.marker) + ")";
            }
            auto operator()(const RoleCond & r) const -> std::string
            {
                return "role(" + to_string_id(r.event) + "," + r.role_name + ","
                    + to_string_id(r.filler) + ")";
            }

            static auto to_string_id(const Ident & id) -> std::string { return lud::to_string(id); }
        };
        return std::visit(Printer{}, c);
    }
}
