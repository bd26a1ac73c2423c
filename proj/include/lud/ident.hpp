#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lud
{
    enum class IdentKind : std::uint8_t
    {
        label,
        hole,
        instance
    };

    // An identifier in canonical form: l<digits>, h<digits> or i<digits>.
    // Holes are a special kind of label, but the namespaces never collide
    // because the prefix encodes the kind.
    struct Ident
    {
        IdentKind kind{IdentKind::label};
        int num{0};

        friend auto operator<=>(const Ident &, const Ident &) = default;
    };

    inline auto label(int n) -> Ident { return Ident{IdentKind::label, n}; }
    inline auto hole(int n) -> Ident { return Ident{IdentKind::hole, n}; }
    inline auto instance(int n) -> Ident { return Ident{IdentKind::instance, n}; }

    auto kind_prefix(IdentKind kind) -> char;

    auto to_string(const Ident & id) -> std::string;

    // Accepts exactly the canonical forms; anything else is nullopt.
    auto parse_ident(std::string_view token) -> std::optional<Ident>;
}
