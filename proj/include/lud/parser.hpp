#pragma once

#include <lud/diagnostic.hpp>
#include <lud/representation.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lud
{
    struct ParseResult
    {
        std::optional<LudRepresentation> rep; // engaged iff no error diagnostics
        std::vector<Diagnostic> diagnostics;  // warnings may accompany success

        auto ok() const -> bool { return rep.has_value(); }
    };

    // Parses the textual LUD format:
    //
    //   index:(l1,h0)                      (a 3-field "(i8,l1,h0)" is tolerated)
    //   lud_preds:     <label>-<predform>
    //   lud_grouping:  <label>-inc([<label>,...])
    //   lud_meta:      modifies(<label>,<label>)
    //   lud_scoping:   alfa(<i>,<sort>,<label>,<label>) | leq(<label>,<hole>)
    //
    // Lines are whitespace-insensitive; '#' starts a comment; the index line
    // comes first; sections may appear in any order and an entry may share the
    // section header's line.
    auto parse(const std::string & text) -> ParseResult;

    // Canonical serialization: fixed section order, entries sorted by numeric
    // ident, one entry per line, LF endings, no comments, empty sections
    // omitted. parse(serialize(x)) == x, and serialize is a fixed point over
    // already-canonical text.
    auto serialize(const LudRepresentation & rep) -> std::string;
}
