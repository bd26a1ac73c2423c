#include <lud/parser.hpp>

#include <algorithm>
#include <cctype>

namespace lud
{
    namespace
    {
        enum class Section
        {
            none,
            preds,
            grouping,
            meta,
            scoping
        };

        auto is_name(std::string_view t) -> bool
        {
            if (t.empty() || ! std::isalpha(static_cast<unsigned char>(t[0])))
                return false;
            return std::all_of(t.begin(), t.end(), [](char c) {
                return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
            });
        }

        auto strip_ws(std::string_view s) -> std::string
        {
            std::string out;
            out.reserve(s.size());
            for (char c : s)
                if (c != ' ' && c != '\t' && c != '\r')
                    out += c;
            return out;
        }

        // "name(arg,arg,...)" -> (name, args); nullopt when the shape is off.
        struct Call
        {
            std::string name;
            std::vector<std::string> args;
        };

        auto parse_call(std::string_view text) -> std::optional<Call>
        {
            auto open = text.find('(');
            if (open == std::string_view::npos || text.back() != ')')
                return std::nullopt;
            Call call;
            call.name = std::string(text.substr(0, open));
            auto inner = text.substr(open + 1, text.size() - open - 2);
            if (! inner.empty()) {
                int depth = 0;
                std::string current;
                for (char c : inner) {
                    if (c == '[')
                        ++depth;
                    else if (c == ']')
                        --depth;
                    if (c == ',' && depth == 0) {
                        call.args.push_back(current);
                        current.clear();
                    }
                    else
                        current += c;
                }
                call.args.push_back(current);
            }
            return call;
        }

        auto parse_kind(std::string_view token, IdentKind kind) -> std::optional<Ident>
        {
            auto id = parse_ident(token);
            if (id && id->kind == kind)
                return id;
            return std::nullopt;
        }

        struct LineParser
        {
            LudRepresentation rep;
            std::vector<Diagnostic> diags;
            Section section = Section::none;
            bool saw_index = false;
            SourceSpan span{1, 1, 1};

            void error(const std::string & code, const std::string & message)
            {
                diags.push_back({Severity::error, code, span, std::nullopt, message});
            }

            void warning(const std::string & code, const std::string & message)
            {
                diags.push_back({Severity::warning, code, span, std::nullopt, message});
            }

            void add_condition(const Ident & label, Condition c)
            {
                for (auto & lc : rep.conditions)
                    if (lc.label == label) {
                        lc.conditions.push_back(std::move(c));
                        return;
                    }
                rep.conditions.push_back({label, {std::move(c)}});
            }

            void parse_index(const std::string & entry)
            {
                if (saw_index) {
                    error("bad-index", "duplicate index line");
                    return;
                }
                saw_index = true;
                auto call = parse_call("x" + entry); // reuse the call shape for "(...)"
                if (! call || (call->args.size() != 2 && call->args.size() != 3)) {
                    error("bad-index", "expected index:(<label>,<hole>)");
                    return;
                }
                std::size_t base = 0;
                if (call->args.size() == 3) {
                    auto inst = parse_kind(call->args[0], IdentKind::instance);
                    if (! inst) {
                        error("bad-index", "leading index field is not an instance");
                        return;
                    }
                    rep.index_instance = *inst;
                    warning("index-instance", "leading index instance is tolerated but unused");
                    base = 1;
                }
                auto l = parse_kind(call->args[base], IdentKind::label);
                auto h = parse_kind(call->args[base + 1], IdentKind::hole);
                if (! l || ! h) {
                    error("bad-index", "index arguments must be a label and a hole");
                    return;
                }
                rep.top_label = *l;
                rep.top_hole = *h;
            }

            void parse_pred_entry(const std::string & entry)
            {
                auto dash = entry.find('-');
                if (dash == std::string::npos) {
                    error("syntax", "expected <label>-<predform>");
                    return;
                }
                auto label = parse_kind(entry.substr(0, dash), IdentKind::label);
                if (! label) {
                    error("syntax", "entry does not start with a label");
                    return;
                }
                auto call = parse_call(std::string_view(entry).substr(dash + 1));
                if (! call) {
                    error("syntax", "malformed predform");
                    return;
                }
                const auto & a = call->args;
                if (call->name == "mood") {
                    auto mood = a.size() == 2 ? mood_from_text(a[0]) : std::nullopt;
                    auto h = a.size() == 2 ? parse_kind(a[1], IdentKind::hole) : std::nullopt;
                    if (! mood || ! h)
                        return error("syntax", "expected mood(decl|int|imp,<hole>)");
                    add_condition(*label, MoodCond{*mood, *h});
                }
                else if (call->name == "discrel") {
                    auto r = a.size() == 3 ? parse_kind(a[1], IdentKind::hole) : std::nullopt;
                    auto s = a.size() == 3 ? parse_kind(a[2], IdentKind::hole) : std::nullopt;
                    if (a.size() != 3 || ! is_name(a[0]) || ! r || ! s)
                        return error("syntax", "expected discrel(<name>,<hole>,<hole>)");
                    add_condition(*label, DiscRelCond{a[0], *r, *s});
                }
                else if (call->name == "mode") {
                    auto h = a.size() == 1 ? parse_kind(a[0], IdentKind::hole) : std::nullopt;
                    if (! h)
                        return error("syntax", "expected mode(<hole>)");
                    add_condition(*label, ModeCond{*h});
                }
                else if (call->name == "neg") {
                    auto i = a.size() == 2 ? parse_kind(a[0], IdentKind::instance) : std::nullopt;
                    auto h = a.size() == 2 ? parse_kind(a[1], IdentKind::hole) : std::nullopt;
                    if (! i || ! h)
                        return error("syntax", "expected neg(<instance>,<hole>)");
                    add_condition(*label, NegCond{*i, *h});
                }
                else if (call->name == "dm") {
                    auto i = a.size() == 1 ? parse_kind(a[0], IdentKind::instance) : std::nullopt;
                    if (! i)
                        return error("syntax", "expected dm(<instance>)");
                    add_condition(*label, DmCond{*i});
                }
                else if (call->name == "predicate") {
                    auto i = a.size() == 2 ? parse_kind(a[1], IdentKind::instance) : std::nullopt;
                    if (a.size() != 2 || ! is_name(a[0]) || ! i)
                        return error("syntax", "expected predicate(<name>,<instance>)");
                    add_condition(*label, PredCond{a[0], *i});
                }
                else if (call->name == "role") {
                    auto e = a.size() == 3 ? parse_kind(a[0], IdentKind::instance) : std::nullopt;
                    auto f = a.size() == 3 ? parse_kind(a[2], IdentKind::instance) : std::nullopt;
                    if (a.size() != 3 || ! e || ! is_name(a[1]) || ! f)
                        return error("syntax", "expected role(<instance>,<name>,<instance>)");
                    add_condition(*label, RoleCond{*e, a[1], *f});
                }
                else
                    error("unknown-condition", "unrecognized predform '" + call->name + "'");
            }

            void parse_grouping_entry(const std::string & entry)
            {
                auto dash = entry.find('-');
                if (dash == std::string::npos)
                    return error("syntax", "expected <label>-inc([<label>,...])");
                auto root = parse_kind(entry.substr(0, dash), IdentKind::label);
                auto rest = std::string_view(entry).substr(dash + 1);
                if (! root || rest.size() < 7 || rest.substr(0, 5) != "inc([" || rest.substr(rest.size() - 2) != "])")
                    return error("syntax", "expected <label>-inc([<label>,...])");
                auto inner = rest.substr(5, rest.size() - 7);
                Grouping g{*root, {}};
                std::size_t start = 0;
                while (start <= inner.size()) {
                    auto comma = inner.find(',', start);
                    auto token = inner.substr(start, comma == std::string_view::npos ? comma : comma - start);
                    auto m = parse_kind(token, IdentKind::label);
                    if (! m)
                        return error("syntax", "group member is not a label");
                    g.members.push_back(*m);
                    if (comma == std::string_view::npos)
                        break;
                    start = comma + 1;
                }
                rep.groupings.push_back(std::move(g));
            }

            void parse_meta_entry(const std::string & entry)
            {
                auto call = parse_call(entry);
                if (! call || call->name != "modifies" || call->args.size() != 2)
                    return error("syntax", "expected modifies(<label>,<label>)");
                auto host = parse_kind(call->args[0], IdentKind::label);
                auto mod = parse_kind(call->args[1], IdentKind::label);
                if (! host || ! mod)
                    return error("syntax", "modifies arguments must be labels");
                rep.meta.push_back({*host, *mod});
            }

            void parse_scoping_entry(const std::string & entry)
            {
                auto call = parse_call(entry);
                if (! call)
                    return error("syntax", "malformed constraint");
                if (call->name == "alfa") {
                    const auto & a = call->args;
                    auto i = a.size() == 4 ? parse_kind(a[0], IdentKind::instance) : std::nullopt;
                    auto sort = a.size() == 4 ? alfa_sort_from_text(a[1]) : std::nullopt;
                    auto anchor = a.size() == 4 ? parse_kind(a[2], IdentKind::label) : std::nullopt;
                    auto content = a.size() == 4 ? parse_kind(a[3], IdentKind::label) : std::nullopt;
                    if (! i || ! sort || ! anchor || ! content)
                        return error("syntax", "expected alfa(<instance>,undef|pron|def,<label>,<label>)");
                    rep.alfa.push_back({*i, *sort, *anchor, *content});
                }
                else if (call->name == "leq") {
                    const auto & a = call->args;
                    auto lower = a.size() == 2 ? parse_kind(a[0], IdentKind::label) : std::nullopt;
                    if (a.size() != 2 || ! lower)
                        return error("syntax", "expected leq(<label>,<hole>)");
                    if (auto upper_label = parse_kind(a[1], IdentKind::label))
                        return error("label-upper-leq",
                            "leq upper bound must be a hole, got label " + to_string(*upper_label));
                    auto upper = parse_kind(a[1], IdentKind::hole);
                    if (! upper)
                        return error("syntax", "leq upper bound must be a hole");
                    LeqConstraint c{*lower, *upper};
                    if (std::find(rep.leq.begin(), rep.leq.end(), c) != rep.leq.end())
                        return warning("duplicate-leq", "duplicate leq line dropped");
                    rep.leq.push_back(c);
                }
                else
                    error("unknown-condition", "unrecognized constraint '" + call->name + "'");
            }

            void parse_entry(const std::string & entry)
            {
                switch (section) {
                case Section::none:
                    error("syntax", "entry before any section header");
                    break;
                case Section::preds: parse_pred_entry(entry); break;
                case Section::grouping: parse_grouping_entry(entry); break;
                case Section::meta: parse_meta_entry(entry); break;
                case Section::scoping: parse_scoping_entry(entry); break;
                }
            }

            void parse_line(const std::string & content)
            {
                if (content.rfind("index:", 0) == 0) {
                    if (section != Section::none)
                        return error("bad-index", "index line must precede the sections");
                    return parse_index(content.substr(6));
                }

                static constexpr std::pair<const char *, Section> headers[] = {
                    {"lud_preds:", Section::preds},
                    {"lud_grouping:", Section::grouping},
                    {"lud_meta:", Section::meta},
                    {"lud_scoping:", Section::scoping},
                };
                for (const auto & [prefix, sec] : headers)
                    if (content.rfind(prefix, 0) == 0) {
                        section = sec;
                        auto rest = content.substr(std::string_view(prefix).size());
                        if (! rest.empty())
                            parse_entry(rest);
                        return;
                    }

                parse_entry(content);
            }
        };
    }

    auto parse(const std::string & text) -> ParseResult
    {
        LineParser p;

        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto eol = text.find('\n', pos);
            auto raw = text.substr(pos, eol == std::string::npos ? eol : eol - pos);
            ++line_no;

            auto hash = raw.find('#');
            auto visible = hash == std::string::npos ? raw : raw.substr(0, hash);

            auto first = visible.find_first_not_of(" \t\r");
            if (first != std::string::npos) {
                auto last = visible.find_last_not_of(" \t\r");
                p.span = {line_no, static_cast<int>(first) + 1, static_cast<int>(last) + 1};
                p.parse_line(strip_ws(visible));
            }

            if (eol == std::string::npos)
                break;
            pos = eol + 1;
        }

        if (! p.saw_index) {
            p.span = {1, 1, 1};
            p.error("bad-index", "missing index line");
        }

        ParseResult result;
        result.diagnostics = std::move(p.diags);
        if (! has_errors(result.diagnostics)) {
            p.rep.normalize();
            result.rep = std::move(p.rep);
        }
        return result;
    }

    auto serialize(const LudRepresentation & rep) -> std::string
    {
        LudRepresentation r = rep;
        r.normalize();

        std::string out;
        out += "index:(" + to_string(r.top_label) + "," + to_string(r.top_hole) + ")\n";

        if (! r.conditions.empty()) {
            out += "lud_preds:\n";
            for (const auto & lc : r.conditions)
                for (const auto & c : lc.conditions)
                    out += to_string(lc.label) + "-" + to_string(c) + "\n";
        }
        if (! r.groupings.empty()) {
            out += "lud_grouping:\n";
            for (const auto & g : r.groupings) {
                out += to_string(g.root) + "-inc([";
                for (std::size_t i = 0; i < g.members.size(); ++i) {
                    if (i)
                        out += ",";
                    out += to_string(g.members[i]);
                }
                out += "])\n";
            }
        }
        if (! r.meta.empty()) {
            out += "lud_meta:\n";
            for (const auto & m : r.meta)
                out += "modifies(" + to_string(m.host) + "," + to_string(m.modifier) + ")\n";
        }
        if (! r.alfa.empty() || ! r.leq.empty()) {
            out += "lud_scoping:\n";
            for (const auto & a : r.alfa)
                out += "alfa(" + to_string(a.marker) + "," + std::string(to_text(a.sort)) + ","
                    + to_string(a.anchor) + "," + to_string(a.content) + ")\n";
            for (const auto & c : r.leq)
                out += "leq(" + to_string(c.lower) + "," + to_string(c.upper) + ")\n";
        }
        return out;
    }
}
