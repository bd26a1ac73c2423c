#pragma once

#include <lud/plugging.hpp>
#include <lud/representation.hpp>

#include <optional>
#include <vector>

namespace lud
{
    enum class EngineMode
    {
        propagating,
        oracle
    };

    struct EnumerationOptions
    {
        std::optional<int> max_solutions; // nullopt = unbounded
        EngineMode mode{EngineMode::propagating};
    };

    // All admissible pluggings in canonical order (lexicographic by hole, then
    // by plugged label). max_solutions keeps the canonical-order prefix.
    // Throws LudError("invalid-input") when validation reports errors.
    auto enumerate(const LudRepresentation & rep, const EnumerationOptions & opts = {})
        -> std::vector<Plugging>;

    // Independent brute-force route: every injective total assignment is
    // generated and filtered through the admissibility check, with none of the
    // propagating search's candidate pruning. Guarded to at most 10 holes;
    // throws LudError("too-large") above that.
    auto enumerate_oracle(const LudRepresentation & rep) -> std::vector<Plugging>;

    auto oracle_hole_limit() -> int;

    // True iff the propagating search and the oracle return equal lists.
    auto verify_equivalence(const LudRepresentation & rep) -> bool;
}
