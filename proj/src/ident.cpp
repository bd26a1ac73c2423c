#include <lud/ident.hpp>

#include <cctype>

namespace lud
{
    auto kind_prefix(IdentKind kind) -> char
    {
        switch (kind) {
        case IdentKind::label: return 'l';
        case IdentKind::hole: return 'h';
        case IdentKind::instance: return 'i';
        }
        return '?';
    }

    auto to_string(const Ident & id) -> std::string
    {
        return kind_prefix(id.kind) + std::to_string(id.num);
    }

    auto parse_ident(std::string_view token) -> std::optional<Ident>
    {
        if (token.size() < 2)
            return std::nullopt;

        IdentKind kind;
        switch (token[0]) {
        case 'l': kind = IdentKind::label; break;
        case 'h': kind = IdentKind::hole; break;
        case 'i': kind = IdentKind::instance; break;
        default: return std::nullopt;
        }

        // canonical form only: no leading zeros except "0" itself
        if (token[1] == '0' && token.size() > 2)
            return std::nullopt;

        int num = 0;
        for (std::size_t i = 1; i < token.size(); ++i) {
            if (! std::isdigit(static_cast<unsigned char>(token[i])))
                return std::nullopt;
            if (num > 100000000)
                return std::nullopt;
            num = num * 10 + (token[i] - '0');
        }
        return Ident{kind, num};
    }
}
