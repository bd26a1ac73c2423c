#pragma once

#include <lud/representation.hpp>

#include <map>
#include <string>
#include <vector>

namespace lud
{
    // An injective, total assignment of holes to pluggable labels; one fully
    // scoped reading of a representation.
    struct Plugging
    {
        std::map<Ident, Ident> assignment; // hole -> label, hole-sorted

        friend auto operator<=>(const Plugging &, const Plugging &) = default;
    };

    enum class ViolationKind
    {
        not_injective,
        not_total,
        cyclic,
        leq_unsatisfied,
        bad_codomain
    };

    auto to_text(ViolationKind k) -> std::string_view;

    struct Violation
    {
        ViolationKind kind;
        std::string detail;
    };

    struct Verdict
    {
        bool admissible{false};
        std::vector<Violation> violations;
    };

    // The labels a hole may be plugged with: group roots and ungrouped
    // condition-bearing labels, minus the top label, group members and alfa
    // contents. Sorted. Requires a representation that validated cleanly.
    auto pluggable_labels(const LudRepresentation & rep) -> std::vector<Ident>;

    // Checks a plugging: bijection onto the pluggable labels, acyclic dominance
    // graph (hence a tree rooted at the top label) and every leq constraint
    // satisfied in the reflexive-transitive dominance closure.
    // Throws LudError("unknown-ident") when the plugging mentions idents the
    // representation does not define.
    auto is_admissible(const LudRepresentation & rep, const Plugging & p) -> Verdict;

    // Plugging text form: one "plug_into(<label>,<hole>)" line per binding,
    // sorted by hole.
    auto to_text(const Plugging & p) -> std::string;

    // Parses the text form back. Throws LudError("syntax") on malformed input.
    auto plugging_from_text(const std::string & text) -> Plugging;
}
