#pragma once

#include <lud/plugging.hpp>
#include <lud/representation.hpp>

#include <string>
#include <utility>
#include <vector>

namespace lud
{
    enum class ConnectiveKind
    {
        discrel,
        neg,
        mode_transparent // never materializes: mode boxes are inlined
    };

    struct Connective
    {
        ConnectiveKind kind{ConnectiveKind::discrel};
        std::string rel_type; // for discrel connectives
    };

    // A resolved DRS: referents, rendered conditions, and sub-DRSs reached
    // through a connective.
    struct DrsBox
    {
        std::vector<Ident> referents;
        std::vector<std::string> conditions;
        std::vector<std::pair<Connective, std::vector<DrsBox>>> children;
    };

    // Instantiates an admissible plugging from the top hole down. Group members
    // merge into the root's box, mode is transparent, alfa content material
    // lands in the box of its anchor, and a pron/def alfa leaves an anaphoric
    // annotation behind. Throws LudError("inadmissible-plugging") otherwise.
    auto build_drs(const LudRepresentation & rep, const Plugging & p) -> DrsBox;

    // Deterministic ASCII box drawing: referent row, rule, condition rows, and
    // child boxes indented under a connective header.
    auto render_box(const DrsBox & box) -> std::string;

    // Compact scope term, e.g.
    //   explanation-noda(topic(getsuyoubi, explanation-node(haitte, neg(zikan))), anaph)
    // Discourse relations nest their two parts, neg wraps its scope, mode is
    // skipped, fragments print as their head predicate ("anaph" for a bare
    // placeholder referent, the label name as last resort).
    auto render_term(const LudRepresentation & rep, const Plugging & p) -> std::string;
}
