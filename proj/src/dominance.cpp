#include <lud/dominance.hpp>

#include <lud/diagnostic.hpp>

#include <algorithm>

namespace lud
{
    auto DominanceModel::index_of_hole(const Ident & h) const -> int
    {
        auto it = std::lower_bound(holes.begin(), holes.end(), h);
        if (it != holes.end() && *it == h)
            return static_cast<int>(it - holes.begin());
        return -1;
    }

    auto DominanceModel::index_of_pluggable(const Ident & l) const -> int
    {
        auto it = std::lower_bound(pluggables.begin(), pluggables.end(), l);
        if (it != pluggables.end() && *it == l)
            return static_cast<int>(it - pluggables.begin());
        return -1;
    }

    auto compile_dominance(const LudRepresentation & rep) -> DominanceModel
    {
        DominanceModel m;
        m.pluggables = pluggable_labels(rep);
        m.holes = rep.all_holes();

        const int p = m.pluggable_count();
        m.fragment_holes.assign(p + 1, {});

        auto fragment_node = [&](const Ident & label) -> int {
            auto fragment = rep.enclosing_fragment(label);
            if (fragment == rep.top_label)
                return m.top_node();
            return m.index_of_pluggable(fragment);
        };

        m.hole_owner_node.assign(m.holes.size(), -1);
        for (const auto & lc : rep.conditions)
            for (const auto & c : lc.conditions)
                for (const auto & h : holes_of(c)) {
                    int hi = m.index_of_hole(h);
                    int owner = fragment_node(lc.label);
                    if (hi < 0 || owner < 0 || m.hole_owner_node[hi] != -1)
                        throw LudError("invalid-input",
                            "dominance model requires unique, defined hole owners");
                    m.hole_owner_node[hi] = owner;
                    m.fragment_holes[owner == m.top_node() ? p : owner].push_back(hi);
                }

        for (int hi = 0; hi < m.hole_count(); ++hi)
            if (m.hole_owner_node[hi] == -1)
                throw LudError("invalid-input", "hole without an owner");

        for (const auto & c : rep.leq) {
            auto fragment = rep.enclosing_fragment(c.lower);
            int node = fragment == rep.top_label ? m.top_node() : m.index_of_pluggable(fragment);
            int hi = m.index_of_hole(c.upper);
            if (hi < 0)
                throw LudError("invalid-input", "leq mentions an undefined hole");
            // a lower bound outside scope competition (an alfa content, say) can
            // never sit inside any subtree; keep the constraint as unsatisfiable
            m.leq.emplace_back(node, hi);
        }
        return m;
    }

    DominanceCheck::DominanceCheck(const DominanceModel & model) :
        model_(model),
        parent_(model.node_count(), -1),
        stamp_(model.node_count(), 0),
        on_path_(model.node_count(), 0),
        path_(model.node_count(), 0)
    {
        // hole parents are static
        for (int hi = 0; hi < model_.hole_count(); ++hi)
            parent_[model_.hole_node(hi)] = model_.hole_owner_node[hi];
    }

    auto DominanceCheck::admissible(const int * label_of_hole) -> bool
    {
        const int p = model_.pluggable_count();
        const int h = model_.hole_count();
        const int top = model_.top_node();
        ++round_;

        for (int hi = 0; hi < h; ++hi)
            parent_[label_of_hole[hi]] = model_.hole_node(hi);

        // every node must climb to the top without revisiting itself
        stamp_[top] = round_;
        for (int start = 0; start < top; ++start) {
            if (stamp_[start] == round_)
                continue;
            int depth = 0;
            int v = start;
            while (stamp_[v] != round_) {
                if (on_path_[v] == round_) {
                    failed_leq_ = -1;
                    return false; // cycle
                }
                on_path_[v] = round_;
                path_[depth++] = v;
                v = parent_[v];
            }
            for (int i = 0; i < depth; ++i)
                stamp_[path_[i]] = round_;
        }

        // leq(lower, upper): the upper hole must be an ancestor of lower
        for (std::size_t k = 0; k < model_.leq.size(); ++k) {
            const auto [node, hi] = model_.leq[k];
            const int target = p + hi;
            int v = node;
            bool found = v == target;
            while (v >= 0 && ! found && v != top) {
                v = parent_[v];
                found = v == target;
            }
            if (! found) {
                failed_leq_ = static_cast<int>(k);
                return false;
            }
        }
        return true;
    }
}
