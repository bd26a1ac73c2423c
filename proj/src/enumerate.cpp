#include <lud/enumerate.hpp>

#include <lud/diagnostic.hpp>
#include <lud/dominance.hpp>
#include <lud/validate.hpp>

#include <algorithm>
#include <numeric>

namespace lud
{
    namespace
    {
        constexpr int hole_guard = 10;

        auto make_plugging(const DominanceModel & model, const std::vector<int> & label_of_hole)
            -> Plugging
        {
            Plugging p;
            for (int hi = 0; hi < model.hole_count(); ++hi)
                p.assignment.emplace(model.holes[hi], model.pluggables[label_of_hole[hi]]);
            return p;
        }

        // Backtracking over holes with three propagation rules: candidates that
        // close a cycle go, candidates that starve a leq constraint under
        // optimistic reachability go, and singleton domains are committed up
        // front. Branching picks the smallest domain, lowest hole first.
        class Searcher
        {
        public:
            explicit Searcher(const DominanceModel & model) :
                model_(model),
                check_(model),
                assigned_hole_(model.hole_count(), -1),
                hole_of_label_(model.pluggable_count(), -1),
                reach_(model.node_count(), 0)
            {
            }

            auto run() -> std::vector<Plugging>
            {
                std::vector<std::vector<int>> domains(model_.hole_count());
                for (int hi = 0; hi < model_.hole_count(); ++hi) {
                    domains[hi].resize(model_.pluggable_count());
                    std::iota(domains[hi].begin(), domains[hi].end(), 0);
                }
                search(std::move(domains));
                return std::move(found_);
            }

        private:
            auto creates_cycle(int hole_index, int label_index) const -> bool
            {
                // would label's fragment reach the hole it is to be plugged into?
                return reaches_hole(label_index, hole_index);
            }

            auto reaches_hole(int from_label, int target_hole) const -> bool
            {
                for (int hi : model_.fragment_holes[from_label]) {
                    if (hi == target_hole)
                        return true;
                    int below = assigned_hole_[hi];
                    if (below >= 0 && reaches_hole(below, target_hole))
                        return true;
                }
                return false;
            }

            // Optimistic downward closure from a hole: through assignments where
            // fixed, through every remaining candidate where not.
            void mark_reachable(int hole_index, const std::vector<std::vector<int>> & domains,
                int tentative_hole, int tentative_label, int round) const
            {
                int node = model_.hole_node(hole_index);
                if (reach_[node] == round)
                    return;
                reach_[node] = round;

                auto descend = [&](int label_index) {
                    if (reach_[label_index] == round)
                        return;
                    reach_[label_index] = round;
                    for (int below : model_.fragment_holes[label_index])
                        mark_reachable(below, domains, tentative_hole, tentative_label, round);
                };

                if (assigned_hole_[hole_index] >= 0)
                    descend(assigned_hole_[hole_index]);
                else if (hole_index == tentative_hole)
                    descend(tentative_label);
                else
                    for (int c : domains[hole_index])
                        if (hole_of_label_[c] < 0 && c != tentative_label)
                            descend(c);
            }

            auto leq_feasible(const std::vector<std::vector<int>> & domains, int tentative_hole,
                int tentative_label) -> bool
            {
                for (const auto & [node, hi] : model_.leq) {
                    ++reach_round_;
                    mark_reachable(hi, domains, tentative_hole, tentative_label, reach_round_);
                    if (node < 0 || reach_[node] != reach_round_)
                        return false;
                }
                return true;
            }

            void assign(int hole_index, int label_index)
            {
                assigned_hole_[hole_index] = label_index;
                hole_of_label_[label_index] = hole_index;
            }

            void unassign(int hole_index, int label_index)
            {
                assigned_hole_[hole_index] = -1;
                hole_of_label_[label_index] = -1;
            }

            // Filters every open domain and commits singletons to fixpoint.
            // Returns false when some domain empties; trail records commitments.
            auto propagate(std::vector<std::vector<int>> & domains, std::vector<int> & trail) -> bool
            {
                for (bool changed = true; changed;) {
                    changed = false;
                    for (int hi = 0; hi < model_.hole_count(); ++hi) {
                        if (assigned_hole_[hi] >= 0)
                            continue;
                        auto & dom = domains[hi];
                        auto keep = [&](int c) {
                            return hole_of_label_[c] < 0 && ! creates_cycle(hi, c)
                                && leq_feasible(domains, hi, c);
                        };
                        auto removed = std::remove_if(dom.begin(), dom.end(),
                            [&](int c) { return ! keep(c); });
                        if (removed != dom.end()) {
                            dom.erase(removed, dom.end());
                            changed = true;
                        }
                        if (dom.empty())
                            return false;
                        if (dom.size() == 1) {
                            assign(hi, dom.front());
                            trail.push_back(hi);
                            changed = true;
                        }
                    }
                }
                return true;
            }

            void search(std::vector<std::vector<int>> domains)
            {
                std::vector<int> trail;
                if (! propagate(domains, trail)) {
                    for (int hi : trail)
                        unassign(hi, assigned_hole_[hi]);
                    return;
                }

                int branch = -1;
                for (int hi = 0; hi < model_.hole_count(); ++hi) {
                    if (assigned_hole_[hi] >= 0)
                        continue;
                    if (branch < 0 || domains[hi].size() < domains[branch].size())
                        branch = hi;
                }

                if (branch < 0) {
                    std::vector<int> label_of_hole(assigned_hole_);
                    if (check_.admissible(label_of_hole.data()))
                        found_.push_back(make_plugging(model_, label_of_hole));
                }
                else {
                    for (int c : domains[branch]) {
                        assign(branch, c);
                        search(domains);
                        unassign(branch, c);
                    }
                }

                for (int hi : trail)
                    unassign(hi, assigned_hole_[hi]);
            }

            const DominanceModel & model_;
            DominanceCheck check_;
            std::vector<int> assigned_hole_;  // hole index -> label index
            std::vector<int> hole_of_label_;  // label index -> hole index
            mutable std::vector<int> reach_;
            int reach_round_{0};
            std::vector<Plugging> found_;
        };

        void require_valid(const LudRepresentation & rep)
        {
            auto diags = validate(rep);
            if (has_errors(diags))
                throw LudError("invalid-input",
                    "representation has validation errors; first: " + format_diagnostic(diags.front()));
        }
    }

    auto oracle_hole_limit() -> int { return hole_guard; }

    auto enumerate(const LudRepresentation & rep, const EnumerationOptions & opts) -> std::vector<Plugging>
    {
        if (opts.max_solutions && *opts.max_solutions < 1)
            throw LudError("invalid-input", "max_solutions must be at least 1 when bounded");

        if (opts.mode == EngineMode::oracle) {
            auto all = enumerate_oracle(rep);
            if (opts.max_solutions && static_cast<int>(all.size()) > *opts.max_solutions)
                all.resize(*opts.max_solutions);
            return all;
        }

        require_valid(rep);
        auto model = compile_dominance(rep);

        Searcher searcher(model);
        auto result = searcher.run();
        std::sort(result.begin(), result.end());

        if (opts.max_solutions && static_cast<int>(result.size()) > *opts.max_solutions)
            result.resize(*opts.max_solutions);
        return result;
    }

    auto enumerate_oracle(const LudRepresentation & rep) -> std::vector<Plugging>
    {
        require_valid(rep);
        auto model = compile_dominance(rep);

        if (model.hole_count() > hole_guard)
            throw LudError("too-large",
                std::to_string(model.hole_count()) + " holes exceed the oracle guard of "
                    + std::to_string(hole_guard));

        // plain generate-and-test over every injective total assignment
        std::vector<int> perm(model.hole_count());
        std::iota(perm.begin(), perm.end(), 0);

        DominanceCheck check(model);
        std::vector<Plugging> result;
        do {
            if (check.admissible(perm.data()))
                result.push_back(make_plugging(model, perm));
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::sort(result.begin(), result.end());
        return result;
    }

    auto verify_equivalence(const LudRepresentation & rep) -> bool
    {
        return enumerate(rep) == enumerate_oracle(rep);
    }
}
