#include <lud/representation.hpp>

#include <algorithm>

namespace lud
{
    auto to_text(AlfaSort s) -> std::string_view
    {
        switch (s) {
        case AlfaSort::undef: return "undef";
        case AlfaSort::pron: return "pron";
        case AlfaSort::definite: return "def";
        }
        return "?";
    }

    auto alfa_sort_from_text(std::string_view t) -> std::optional<AlfaSort>
    {
        if (t == "undef")
            return AlfaSort::undef;
        if (t == "pron")
            return AlfaSort::pron;
        if (t == "def")
            return AlfaSort::definite;
        return std::nullopt;
    }

    void LudRepresentation::normalize()
    {
        std::sort(conditions.begin(), conditions.end(),
            [](const LabeledConditions & a, const LabeledConditions & b) { return a.label < b.label; });
        std::sort(groupings.begin(), groupings.end(),
            [](const Grouping & a, const Grouping & b) { return a.root < b.root; });
        std::sort(meta.begin(), meta.end());
        std::sort(alfa.begin(), alfa.end(), [](const AlfaConstraint & a, const AlfaConstraint & b) {
            return std::tie(a.anchor, a.content, a.marker) < std::tie(b.anchor, b.content, b.marker);
        });
        std::sort(leq.begin(), leq.end());
        leq.erase(std::unique(leq.begin(), leq.end()), leq.end());
    }

    auto LudRepresentation::operator==(const LudRepresentation & other) const -> bool
    {
        // index_instance is deliberately ignored
        return top_label == other.top_label && top_hole == other.top_hole
            && conditions == other.conditions && groupings == other.groupings
            && meta == other.meta && alfa == other.alfa && leq == other.leq;
    }

    auto LudRepresentation::conditions_of(const Ident & label) const -> const std::vector<Condition> *
    {
        for (const auto & lc : conditions)
            if (lc.label == label)
                return &lc.conditions;
        return nullptr;
    }

    auto LudRepresentation::group_of(const Ident & root) const -> const Grouping *
    {
        for (const auto & g : groupings)
            if (g.root == root)
                return &g;
        return nullptr;
    }

    auto LudRepresentation::member_root(const Ident & label) const -> std::optional<Ident>
    {
        for (const auto & g : groupings)
            for (const auto & m : g.members)
                if (m == label)
                    return g.root;
        return std::nullopt;
    }

    auto LudRepresentation::is_defined_label(const Ident & label) const -> bool
    {
        return conditions_of(label) != nullptr || group_of(label) != nullptr;
    }

    auto LudRepresentation::enclosing_fragment(const Ident & label) const -> Ident
    {
        if (auto root = member_root(label))
            return *root;
        return label;
    }

    auto LudRepresentation::fragment_conditions(const Ident & fragment) const
        -> std::vector<std::pair<Ident, const Condition *>>
    {
        std::vector<std::pair<Ident, const Condition *>> result;
        auto push_label = [&](const Ident & l) {
            if (const auto * cs = conditions_of(l))
                for (const auto & c : *cs)
                    result.emplace_back(l, &c);
        };
        push_label(fragment);
        if (const auto * g = group_of(fragment))
            for (const auto & m : g->members)
                push_label(m);
        return result;
    }

    auto LudRepresentation::fragment_holes(const Ident & fragment) const -> std::vector<Ident>
    {
        std::vector<Ident> result;
        for (const auto & [l, c] : fragment_conditions(fragment))
            for (const auto & h : holes_of(*c))
                result.push_back(h);
        return result;
    }

    auto LudRepresentation::all_holes() const -> std::vector<Ident>
    {
        std::vector<Ident> result;
        for (const auto & lc : conditions)
            for (const auto & c : lc.conditions)
                for (const auto & h : holes_of(c))
                    result.push_back(h);
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    auto LudRepresentation::hole_owner(const Ident & h) const -> std::optional<Ident>
    {
        for (const auto & lc : conditions)
            for (const auto & c : lc.conditions)
                for (const auto & ch : holes_of(c))
                    if (ch == h)
                        return enclosing_fragment(lc.label);
        return std::nullopt;
    }

    auto LudRepresentation::discrels() const -> std::vector<std::pair<Ident, const DiscRelCond *>>
    {
        std::vector<std::pair<Ident, const DiscRelCond *>> result;
        for (const auto & lc : conditions)
            for (const auto & c : lc.conditions)
                if (const auto * d = std::get_if<DiscRelCond>(&c))
                    result.emplace_back(lc.label, d);
        return result;
    }

    auto LudRepresentation::alfa_contents() const -> std::vector<Ident>
    {
        std::vector<Ident> result;
        for (const auto & a : alfa)
            result.push_back(a.content);
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }
}
