#pragma once

#include <lud/plugging.hpp>
#include <lud/representation.hpp>

#include <vector>

namespace lud
{
    // Index-compiled dominance structure. Node numbering: pluggable fragments
    // come first in canonical label order, then holes in canonical order, then
    // the top fragment as the last node. The hole->owner edges are static; a
    // plugging only adds the hole->label edges.
    struct DominanceModel
    {
        std::vector<Ident> pluggables; // sorted
        std::vector<Ident> holes;      // sorted

        // per hole index: node id of the owning fragment
        std::vector<int> hole_owner_node;
        // per fragment node id (pluggables + top): owned hole indices
        std::vector<std::vector<int>> fragment_holes;
        // leq constraints as (fragment node of lower, hole index of upper)
        std::vector<std::pair<int, int>> leq;

        auto pluggable_count() const -> int { return static_cast<int>(pluggables.size()); }
        auto hole_count() const -> int { return static_cast<int>(holes.size()); }
        auto top_node() const -> int { return pluggable_count() + hole_count(); }
        auto node_count() const -> int { return top_node() + 1; }

        auto hole_node(int hole_index) const -> int { return pluggable_count() + hole_index; }

        auto index_of_hole(const Ident & h) const -> int;
        auto index_of_pluggable(const Ident & l) const -> int;
    };

    // Requires unique hole ownership and defined leq idents (validation-clean
    // input); throws LudError("invalid-input") otherwise.
    auto compile_dominance(const LudRepresentation & rep) -> DominanceModel;

    // Allocation-free admissibility kernel for a complete assignment,
    // reusable across millions of candidate pluggings.
    class DominanceCheck
    {
    public:
        explicit DominanceCheck(const DominanceModel & model);

        // label_of_hole[i] = pluggable index assigned to hole i. Returns true
        // iff the assignment yields a tree satisfying every leq constraint.
        // On failure, failed_leq() is the violated constraint index or -1 when
        // the graph was cyclic.
        auto admissible(const int * label_of_hole) -> bool;

        auto failed_leq() const -> int { return failed_leq_; }

    private:
        const DominanceModel & model_;
        std::vector<int> parent_;  // node -> parent node, top has -1
        std::vector<int> stamp_;   // round id when node was confirmed rooted
        std::vector<int> on_path_; // round id when node was on the current climb
        std::vector<int> path_;
        int round_{0};
        int failed_leq_{0};
    };
}
