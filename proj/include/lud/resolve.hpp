#pragma once

#include <lud/diagnostic.hpp>
#include <lud/plugging.hpp>
#include <lud/representation.hpp>

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lud
{
    // Whether a relation's antecedent part, conclusion part, or neither is
    // bound outside the sentence. Externally bound parts confer wider scope.
    enum class AnaphoricityClass
    {
        both_internal,
        antecedent_external,
        conclusion_external
    };

    enum class FixedSide
    {
        restriction,
        scope,
        none
    };

    auto to_text(AnaphoricityClass c) -> std::string_view;
    auto to_text(FixedSide s) -> std::string_view;

    struct LexiconEntry
    {
        std::string rel_type;
        AnaphoricityClass anaph_class{AnaphoricityClass::both_internal};
        // Which hole is lexically pinned to sentence material (the topic
        // phrase, the subordinate clause). Never the externally bound side.
        FixedSide fixed{FixedSide::none};
    };

    struct Lexicon
    {
        std::vector<LexiconEntry> entries;

        auto find(std::string_view rel_type) const -> const LexiconEntry *;
    };

    // topic, explanation-node and conditional-nara are sentence-internal with a
    // pinned restriction; explanation-noda binds its conclusion outside the
    // sentence, dakara its antecedent.
    auto default_lexicon() -> Lexicon;

    // One entry per line:
    //   rel <name> class={both-internal|antecedent-external|conclusion-external} fixed={restriction|scope|none}
    auto parse_lexicon(const std::string & text) -> Lexicon;
    auto to_text(const Lexicon & lex) -> std::string;

    auto classify(const Lexicon & lex, const std::string & rel_type) -> AnaphoricityClass;

    // Surface position of each discourse relation morpheme: 0-based token index
    // into the transliteration. Stands in for c-command.
    struct SurfaceMeta
    {
        std::map<Ident, int> position;
    };

    // Lines or space-separated items of the form <label>=<position>.
    auto parse_surface_meta(const std::string & text) -> SurfaceMeta;

    // Relative scope among discourse relations under a plugging: (A,B) present
    // iff B's label lies in the subtree under one of A's holes. A strict
    // partial order.
    auto discrel_order(const LudRepresentation & rep, const Plugging & p)
        -> std::set<std::pair<Ident, Ident>>;

    struct RankedPluggings
    {
        // groups.front() holds the preferred readings; later groups are the
        // filtered-out pluggings bucketed by how many preferences they violate.
        std::vector<std::vector<Plugging>> groups;
        std::vector<Diagnostic> warnings;
    };

    // Preference-based resolution over the admissible set:
    //   R1  a relation with sentence-internal parts never outscopes one with an
    //       externally bound part;
    //   R2  among sentence-internal relations, the earlier morpheme outscopes
    //       the later;
    //   R3  no order is imposed among externally bound relations.
    // A filter that would empty the candidate set is skipped for the offending
    // pair, with a warning. The concatenation of all groups is a permutation of
    // the admissible set.
    auto resolve(const LudRepresentation & rep, const SurfaceMeta & meta, const Lexicon & lex)
        -> RankedPluggings;

    enum class ModeInsertion
    {
        when_multiple, // insert only for two or more discourse relations
        always         // insert whenever at least one is present
    };

    // Inserts the scope-floor mode predicate: a fresh label carrying mode(h)
    // with leq edges to every discourse-relation hole that is not already
    // pinned, and the former matrix roots (labels without any leq) re-anchored
    // under the fresh hole. Without any discourse relation (or with one, under
    // when_multiple), matrix roots are anchored under the top hole instead.
    // Throws LudError("already-moded") if a mode condition is present.
    auto insert_mode(const LudRepresentation & rep,
        ModeInsertion policy = ModeInsertion::when_multiple) -> LudRepresentation;
}
