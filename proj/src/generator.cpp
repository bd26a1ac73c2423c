#include <lud/generator.hpp>

#include <algorithm>
#include <random>

namespace lud
{
    namespace
    {
        struct Pool
        {
            const char * rel_type;
            AnaphoricityClass cls;
        };

        constexpr Pool rel_pool[] = {
            {"topic", AnaphoricityClass::both_internal},
            {"explanation-node", AnaphoricityClass::both_internal},
            {"conditional-nara", AnaphoricityClass::both_internal},
            {"contrast-kedo", AnaphoricityClass::both_internal},
            {"explanation-noda", AnaphoricityClass::conclusion_external},
            {"evidential-rashii", AnaphoricityClass::conclusion_external},
            {"dakara", AnaphoricityClass::antecedent_external},
            {"purpose-tame", AnaphoricityClass::antecedent_external},
        };

        constexpr const char * word_pool[] = {
            "getsuyoubi", "gogo", "zikan", "seminaa", "kaigi", "heya",
            "yamada", "haitte", "iru", "daijoubu", "ike", "aite",
        };

        struct Rng
        {
            std::mt19937_64 engine;

            explicit Rng(std::uint64_t seed) : engine(seed * 0x9e3779b97f4a7c15ull + 1) {}

            // avoids std::uniform_int_distribution, whose output is
            // implementation-defined; results must be stable across platforms
            auto pick(int n) -> int { return static_cast<int>(engine() % static_cast<unsigned>(n)); }

            auto chance(int percent) -> bool { return pick(100) < percent; }
        };
    }

    auto random_instance(const GeneratorOptions & opts) -> GeneratedInstance
    {
        Rng rng(opts.seed);
        GeneratedInstance out;
        LudRepresentation & rep = out.rep;

        // weights lean small so the oracle stays fast on bulk runs
        int span = opts.max_discrels - opts.min_discrels;
        int d = opts.min_discrels;
        if (span > 0) {
            int roll = rng.pick(100);
            if (roll < 30)
                d = opts.min_discrels;
            else if (roll < 60)
                d = std::min(opts.min_discrels + 1, opts.max_discrels);
            else if (roll < 85)
                d = std::min(opts.min_discrels + 2, opts.max_discrels);
            else
                d = std::min(opts.min_discrels + 3, opts.max_discrels);
        }

        // holes: mood + 2 per relation + mode + an optional negation
        bool with_neg = opts.allow_neg && 2 + 2 * d + 1 <= opts.max_holes && rng.chance(40);
        bool with_alfa = opts.allow_alfa && rng.chance(40);

        int next_label = 1;
        int next_hole = 0;
        int next_instance = 1;
        auto new_label = [&] { return label(next_label++); };
        auto new_hole = [&] { return hole(next_hole++); };
        auto new_instance = [&] { return instance(next_instance++); };

        auto word = [&] { return std::string(word_pool[rng.pick(std::size(word_pool))]); };

        // leaf fragment: a grouped referent plus predicate
        auto add_leaf = [&](const Ident & under) {
            Ident root = new_label();
            Ident dm_label = new_label();
            Ident pred_label = new_label();
            Ident i = new_instance();
            rep.conditions.push_back({dm_label, {DmCond{i}}});
            rep.conditions.push_back({pred_label, {PredCond{word(), i}}});
            rep.groupings.push_back({root, {dm_label, pred_label}});
            rep.leq.push_back({root, under});
            return root;
        };

        // bare placeholder referent for an externally bound side
        auto add_placeholder = [&](const Ident & under) {
            Ident l = new_label();
            rep.conditions.push_back({l, {DmCond{new_instance()}}});
            rep.leq.push_back({l, under});
            return l;
        };

        rep.top_label = new_label();
        rep.top_hole = new_hole();
        rep.conditions.push_back({rep.top_label, {MoodCond{MoodKind::declarative, rep.top_hole}}});

        // pick distinct relation types
        std::vector<int> type_indices(std::size(rel_pool));
        for (std::size_t i = 0; i < type_indices.size(); ++i)
            type_indices[i] = static_cast<int>(i);
        for (int i = static_cast<int>(type_indices.size()) - 1; i > 0; --i)
            std::swap(type_indices[i], type_indices[rng.pick(i + 1)]);

        std::vector<Ident> mode_targets;
        std::vector<Ident> rel_labels;
        for (int k = 0; k < d; ++k) {
            const auto & pool = rel_pool[type_indices[k]];
            Ident rel_label = new_label();
            Ident restriction = new_hole();
            Ident scope = new_hole();
            rep.conditions.push_back({rel_label, {DiscRelCond{pool.rel_type, restriction, scope}}});
            rep.leq.push_back({rel_label, rep.top_hole});
            rel_labels.push_back(rel_label);

            if (! out.lexicon.find(pool.rel_type)) {
                FixedSide fixed = pool.cls == AnaphoricityClass::both_internal
                    ? FixedSide::restriction
                    : FixedSide::none;
                out.lexicon.entries.push_back({pool.rel_type, pool.cls, fixed});
            }

            switch (pool.cls) {
            case AnaphoricityClass::both_internal:
                add_leaf(restriction);
                mode_targets.push_back(scope);
                break;
            case AnaphoricityClass::conclusion_external:
                add_placeholder(scope);
                mode_targets.push_back(restriction);
                break;
            case AnaphoricityClass::antecedent_external:
                add_placeholder(restriction);
                mode_targets.push_back(scope);
                break;
            }
        }

        Ident mode_label = new_label();
        Ident mode_hole = new_hole();
        rep.conditions.push_back({mode_label, {ModeCond{mode_hole}}});
        for (const auto & h : mode_targets)
            rep.leq.push_back({mode_label, h});

        Ident matrix_leaf;
        if (with_neg) {
            Ident neg_root = new_label();
            Ident neg_dm = new_label();
            Ident neg_label = new_label();
            Ident i = new_instance();
            Ident neg_hole = new_hole();
            rep.conditions.push_back({neg_dm, {DmCond{i}}});
            rep.conditions.push_back({neg_label, {NegCond{i, neg_hole}}});
            rep.groupings.push_back({neg_root, {neg_dm, neg_label}});
            rep.leq.push_back({neg_root, mode_hole});
            matrix_leaf = add_leaf(neg_hole);
            // matrix material inside the negation is pinned under the mode hole
            // as well, the way the corpus writes it
            rep.leq.push_back({matrix_leaf, mode_hole});
        }
        else
            matrix_leaf = add_leaf(mode_hole);

        if (with_alfa) {
            // presupposed NP hanging off the matrix predicate, corpus style
            Ident content_root = new_label();
            Ident content_dm = new_label();
            Ident content_pred = new_label();
            Ident i = new_instance();
            rep.conditions.push_back({content_dm, {DmCond{i}}});
            rep.conditions.push_back({content_pred, {PredCond{word(), i}}});
            rep.groupings.push_back({content_root, {content_dm, content_pred}});

            for (auto & lc : rep.conditions)
                if (lc.label != content_pred && ! lc.conditions.empty())
                    if (const auto * pred = std::get_if<PredCond>(&lc.conditions.front());
                        pred != nullptr && rep.member_root(lc.label) == matrix_leaf) {
                        lc.conditions.push_back(RoleCond{pred->marker, "arg1", i});
                        break;
                    }
            rep.alfa.push_back(
                {i, rng.chance(50) ? AlfaSort::undef : AlfaSort::pron, matrix_leaf, content_root});
        }

        // surface order: a random permutation of token slots
        std::vector<int> positions(rel_labels.size());
        for (std::size_t i = 0; i < positions.size(); ++i)
            positions[i] = static_cast<int>(i);
        for (int i = static_cast<int>(positions.size()) - 1; i > 0; --i)
            std::swap(positions[i], positions[rng.pick(i + 1)]);
        for (std::size_t i = 0; i < rel_labels.size(); ++i)
            out.surface.position[rel_labels[i]] = positions[i];

        rep.normalize();
        return out;
    }
}
