#pragma once

#include <lud/condition.hpp>
#include <lud/ident.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lud
{
    enum class AlfaSort
    {
        undef,
        pron,
        definite
    };

    auto to_text(AlfaSort s) -> std::string_view;
    auto alfa_sort_from_text(std::string_view t) -> std::optional<AlfaSort>;

    // A depth-one box grouping: the root label stands for the DRS built from
    // the members' conditions.
    struct Grouping
    {
        Ident root;
        std::vector<Ident> members; // order is the box-internal condition order
        friend auto operator<=>(const Grouping &, const Grouping &) = default;
    };

    // alfa(marker, sort, anchor, content): the content DRS is presupposed or
    // anaphoric material that stands outside scope competition and is attached
    // to wherever the anchor ends up.
    struct AlfaConstraint
    {
        Ident marker;
        AlfaSort sort;
        Ident anchor;
        Ident content;
        friend auto operator<=>(const AlfaConstraint &, const AlfaConstraint &) = default;
    };

    // leq(lower, upper): the lower label must end up at or below the upper hole.
    struct LeqConstraint
    {
        Ident lower;
        Ident upper;
        friend auto operator<=>(const LeqConstraint &, const LeqConstraint &) = default;
    };

    // modifies(host, modifier): the modifier shares its instance with the host
    // DRS and shows no scopal behaviour of its own.
    struct MetaModifies
    {
        Ident host;
        Ident modifier;
        friend auto operator<=>(const MetaModifies &, const MetaModifies &) = default;
    };

    struct LabeledConditions
    {
        Ident label;
        std::vector<Condition> conditions; // order is semantic (first Pred is the head)
        friend auto operator<=>(const LabeledConditions &, const LabeledConditions &) = default;
    };

    // The whole underspecified representation: labeled conditions, groupings,
    // meta statements and the alfa/leq constraint sets, addressed from an index
    // (top label, top hole).
    struct LudRepresentation
    {
        Ident top_label{IdentKind::label, 0};
        Ident top_hole{IdentKind::hole, 0};

        // A three-field index carries a leading instance; it is tolerated and
        // kept for inspection but takes no part in equality or serialization.
        std::optional<Ident> index_instance;

        std::vector<LabeledConditions> conditions; // sorted by label after normalize()
        std::vector<Grouping> groupings;           // sorted by root
        std::vector<MetaModifies> meta;            // sorted
        std::vector<AlfaConstraint> alfa;          // sorted
        std::vector<LeqConstraint> leq;            // sorted, duplicate-free

        // Sorts all sections into canonical order and deduplicates leq.
        // The parser and the generator always return normalized values;
        // programmatic construction should call this once at the end.
        void normalize();

        auto operator==(const LudRepresentation & other) const -> bool;

        // -- lookup helpers ------------------------------------------------

        auto conditions_of(const Ident & label) const -> const std::vector<Condition> *;

        auto group_of(const Ident & root) const -> const Grouping *;

        // Root of the group a label is a member of, if any.
        auto member_root(const Ident & label) const -> std::optional<Ident>;

        // A label is defined if it carries conditions or is a group root.
        auto is_defined_label(const Ident & label) const -> bool;

        // The fragment a label belongs to: its group root if it is a member,
        // otherwise the label itself.
        auto enclosing_fragment(const Ident & label) const -> Ident;

        // Conditions of a fragment: the root's own conditions followed by the
        // members' conditions in member order. Each pairs the carrying label
        // with the condition.
        auto fragment_conditions(const Ident & fragment) const
            -> std::vector<std::pair<Ident, const Condition *>>;

        // Holes owned by a fragment (arguments of its fragment_conditions).
        auto fragment_holes(const Ident & fragment) const -> std::vector<Ident>;

        // All holes appearing as condition arguments, sorted, duplicate-free.
        auto all_holes() const -> std::vector<Ident>;

        // The fragment owning a hole, if the hole is owned at all.
        auto hole_owner(const Ident & h) const -> std::optional<Ident>;

        // All discourse relation conditions with their carrying labels.
        auto discrels() const -> std::vector<std::pair<Ident, const DiscRelCond *>>;

        // Content labels of alfa constraints (excluded from scope competition).
        auto alfa_contents() const -> std::vector<Ident>;
    };
}
