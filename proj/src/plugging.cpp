#include <lud/plugging.hpp>

#include <lud/diagnostic.hpp>
#include <lud/dominance.hpp>

#include <algorithm>
#include <set>

namespace lud
{
    auto to_text(ViolationKind k) -> std::string_view
    {
        switch (k) {
        case ViolationKind::not_injective: return "not-injective";
        case ViolationKind::not_total: return "not-total";
        case ViolationKind::cyclic: return "cyclic";
        case ViolationKind::leq_unsatisfied: return "leq-unsatisfied";
        case ViolationKind::bad_codomain: return "bad-codomain";
        }
        return "?";
    }

    auto pluggable_labels(const LudRepresentation & rep) -> std::vector<Ident>
    {
        std::set<Ident> members;
        for (const auto & g : rep.groupings)
            for (const auto & m : g.members)
                members.insert(m);
        std::set<Ident> contents;
        for (const auto & a : rep.alfa)
            contents.insert(a.content);

        std::set<Ident> result;
        for (const auto & lc : rep.conditions)
            if (! members.count(lc.label))
                result.insert(lc.label);
        for (const auto & g : rep.groupings)
            result.insert(g.root);
        result.erase(rep.top_label);
        for (const auto & c : contents)
            result.erase(c);

        return {result.begin(), result.end()};
    }

    auto is_admissible(const LudRepresentation & rep, const Plugging & p) -> Verdict
    {
        auto model = compile_dominance(rep);

        for (const auto & [h, l] : p.assignment) {
            if (h.kind != IdentKind::hole || model.index_of_hole(h) < 0)
                throw LudError("unknown-ident", to_string(h) + " is not a hole of this representation");
            if (l.kind != IdentKind::label || ! rep.is_defined_label(l))
                throw LudError("unknown-ident", to_string(l) + " is not defined in this representation");
        }

        Verdict verdict;
        auto violate = [&](ViolationKind kind, std::string detail) {
            verdict.violations.push_back({kind, std::move(detail)});
        };

        for (const auto & [h, l] : p.assignment)
            if (model.index_of_pluggable(l) < 0)
                violate(ViolationKind::bad_codomain, to_string(h) + "<-" + to_string(l));

        for (const auto & h : model.holes)
            if (! p.assignment.count(h))
                violate(ViolationKind::not_total, to_string(h) + " unplugged");

        std::map<Ident, std::vector<Ident>> reused;
        for (const auto & [h, l] : p.assignment)
            reused[l].push_back(h);
        for (const auto & [l, hs] : reused)
            if (hs.size() > 1) {
                std::string detail = to_string(l) + " plugs";
                for (const auto & h : hs)
                    detail += " " + to_string(h);
                violate(ViolationKind::not_injective, detail);
            }

        if (! verdict.violations.empty())
            return verdict;

        std::vector<int> label_of_hole(model.hole_count());
        for (int hi = 0; hi < model.hole_count(); ++hi)
            label_of_hole[hi] = model.index_of_pluggable(p.assignment.at(model.holes[hi]));

        DominanceCheck check(model);
        if (check.admissible(label_of_hole.data())) {
            verdict.admissible = true;
            return verdict;
        }

        // collect every failure, not just the first
        if (check.failed_leq() == -1) {
            violate(ViolationKind::cyclic, "dominance graph has a cycle");
            return verdict;
        }

        std::vector<int> parent(model.node_count(), -1);
        for (int hi = 0; hi < model.hole_count(); ++hi) {
            parent[model.hole_node(hi)] = model.hole_owner_node[hi];
            parent[label_of_hole[hi]] = model.hole_node(hi);
        }
        auto under = [&](int node, int target) {
            int v = node;
            while (v >= 0) {
                if (v == target)
                    return true;
                if (v == model.top_node())
                    return false;
                v = parent[v];
            }
            return false;
        };
        for (std::size_t k = 0; k < model.leq.size(); ++k) {
            const auto [node, hi] = model.leq[k];
            if (! under(node, model.pluggable_count() + hi))
                violate(ViolationKind::leq_unsatisfied,
                    "leq(" + to_string(rep.leq[k].lower) + "," + to_string(rep.leq[k].upper) + ")");
        }
        return verdict;
    }

    auto to_text(const Plugging & p) -> std::string
    {
        std::string out;
        for (const auto & [h, l] : p.assignment)
            out += "plug_into(" + to_string(l) + "," + to_string(h) + ")\n";
        return out;
    }

    auto plugging_from_text(const std::string & text) -> Plugging
    {
        Plugging p;
        std::size_t pos = 0;
        int line_no = 0;
        while (pos <= text.size()) {
            auto eol = text.find('\n', pos);
            auto raw = text.substr(pos, eol == std::string::npos ? eol : eol - pos);
            ++line_no;
            pos = eol == std::string::npos ? text.size() + 1 : eol + 1;

            auto hash = raw.find('#');
            if (hash != std::string::npos)
                raw = raw.substr(0, hash);
            std::string line;
            for (char c : raw)
                if (c != ' ' && c != '\t' && c != '\r')
                    line += c;
            if (line.empty())
                continue;

            auto fail = [&] {
                throw LudError("syntax",
                    "line " + std::to_string(line_no) + ": expected plug_into(<label>,<hole>)");
            };
            if (line.rfind("plug_into(", 0) != 0 || line.back() != ')')
                fail();
            auto inner = line.substr(10, line.size() - 11);
            auto comma = inner.find(',');
            if (comma == std::string::npos)
                fail();
            auto l = parse_ident(inner.substr(0, comma));
            auto h = parse_ident(inner.substr(comma + 1));
            if (! l || ! h || l->kind != IdentKind::label || h->kind != IdentKind::hole)
                fail();
            if (! p.assignment.emplace(*h, *l).second)
                fail();
        }
        return p;
    }
}
