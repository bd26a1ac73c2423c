#pragma once

#include <lud/ident.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lud
{
    enum class MoodKind
    {
        declarative,
        interrogative,
        imperative
    };

    auto to_text(MoodKind m) -> std::string_view;
    auto mood_from_text(std::string_view t) -> std::optional<MoodKind>;

    struct MoodCond
    {
        MoodKind mood;
        Ident scope;
        friend auto operator<=>(const MoodCond &, const MoodCond &) = default;
    };

    struct DiscRelCond
    {
        std::string rel_type;
        Ident restriction;
        Ident scope;
        friend auto operator<=>(const DiscRelCond &, const DiscRelCond &) = default;
    };

    struct ModeCond
    {
        Ident scope;
        friend auto operator<=>(const ModeCond &, const ModeCond &) = default;
    };

    struct NegCond
    {
        Ident marker;
        Ident scope;
        friend auto operator<=>(const NegCond &, const NegCond &) = default;
    };

    struct DmCond
    {
        Ident marker;
        friend auto operator<=>(const DmCond &, const DmCond &) = default;
    };

    struct PredCond
    {
        std::string pred_name;
        Ident marker;
        friend auto operator<=>(const PredCond &, const PredCond &) = default;
    };

    struct RoleCond
    {
        Ident event;
        std::string role_name;
        Ident filler;
        friend auto operator<=>(const RoleCond &, const RoleCond &) = default;
    };

    using Condition = std::variant<MoodCond, DiscRelCond, ModeCond, NegCond, DmCond, PredCond, RoleCond>;

    // Hole arguments of a condition, in argument order.
    auto holes_of(const Condition & c) -> std::vector<Ident>;

    // Instance arguments of a condition, in argument order.
    auto instances_of(const Condition & c) -> std::vector<Ident>;

    // Predform text without the label prefix, e.g. "discrel(topic,h1,h2)".
    auto to_string(const Condition & c) -> std::string;
}
