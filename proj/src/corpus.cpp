#include <lud/corpus.hpp>

#include <lud/diagnostic.hpp>
#include <lud/drs.hpp>
#include <lud/enumerate.hpp>
#include <lud/parser.hpp>
#include <lud/validate.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace lud
{
    namespace
    {
        auto read_file(const std::filesystem::path & file) -> std::string
        {
            std::ifstream in(file, std::ios::binary);
            if (! in)
                throw LudError("io", "cannot read " + file.string());
            std::ostringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }

        auto trim(std::string_view s) -> std::string
        {
            auto first = s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
                return {};
            auto last = s.find_last_not_of(" \t\r");
            return std::string(s.substr(first, last - first + 1));
        }

        auto split_tokens(const std::string & s) -> std::vector<std::string>
        {
            std::vector<std::string> out;
            std::istringstream in(s);
            std::string token;
            while (in >> token)
                out.push_back(token);
            return out;
        }
    }

    auto load_corpus_entry(const std::filesystem::path & file) -> CorpusEntry
    {
        CorpusEntry entry;
        entry.lud_file = file;
        entry.full_text = read_file(file);

        bool have_count = false;
        std::size_t pos = 0;
        while (pos < entry.full_text.size()) {
            auto eol = entry.full_text.find('\n', pos);
            auto line_end = eol == std::string::npos ? entry.full_text.size() : eol;
            auto raw = entry.full_text.substr(pos, line_end - pos);
            auto stripped = trim(raw);

            if (! stripped.empty() && stripped[0] != '#') {
                // the LUD payload starts here, verbatim to the end of file
                entry.lud_text = entry.full_text.substr(pos);
                break;
            }

            if (! stripped.empty()) {
                auto body = trim(std::string_view(stripped).substr(1));
                auto colon = body.find(':');
                if (colon != std::string::npos) {
                    auto key = trim(std::string_view(body).substr(0, colon));
                    auto value = trim(std::string_view(body).substr(colon + 1));
                    if (key == "id")
                        entry.id = value;
                    else if (key == "transliteration")
                        entry.transliteration = split_tokens(value);
                    else if (key == "gloss")
                        entry.gloss = value;
                    else if (key == "translation")
                        entry.translation = value;
                    else if (key == "surface")
                        entry.surface = parse_surface_meta(value);
                    else if (key == "expected-count") {
                        try {
                            entry.expected_count = std::stoi(value);
                            have_count = true;
                        }
                        catch (const std::exception &) {
                            throw LudError("corpus-format",
                                file.string() + ": bad expected-count '" + value + "'");
                        }
                    }
                    else if (key == "expected-rank1")
                        entry.expected_rank1_terms.push_back(value);
                }
            }

            if (eol == std::string::npos)
                break;
            pos = eol + 1;
        }

        if (entry.id.empty())
            throw LudError("corpus-format", file.string() + ": missing '# id:' header");
        if (! have_count)
            throw LudError("corpus-format", file.string() + ": missing '# expected-count:' header");
        if (entry.expected_rank1_terms.empty())
            throw LudError("corpus-format", file.string() + ": missing '# expected-rank1:' header");
        if (entry.lud_text.empty())
            throw LudError("corpus-format", file.string() + ": no LUD payload after the header");
        return entry;
    }

    auto run_corpus(const std::filesystem::path & dir) -> CorpusReport
    {
        CorpusReport report;
        std::ostringstream out;

        if (! std::filesystem::is_directory(dir)) {
            report.text = "corpus: not a directory: " + dir.string() + "\n";
            report.failed = 1;
            return report;
        }

        std::vector<std::filesystem::path> files;
        for (const auto & e : std::filesystem::directory_iterator(dir))
            if (e.is_regular_file() && e.path().extension() == ".lud")
                files.push_back(e.path());
        std::sort(files.begin(), files.end());

        Lexicon lexicon = default_lexicon();
        auto lexicon_file = dir / "lexicon.lex";
        if (std::filesystem::exists(lexicon_file))
            lexicon = parse_lexicon(read_file(lexicon_file));

        for (const auto & file : files) {
            ++report.entries;
            std::string id = file.stem().string();
            try {
                auto entry = load_corpus_entry(file);
                id = entry.id;

                auto parsed = parse(entry.full_text);
                if (! parsed.ok()) {
                    out << id << ": FAIL parse: "
                        << format_diagnostic(parsed.diagnostics.front()) << "\n";
                    ++report.failed;
                    continue;
                }
                const auto & rep = *parsed.rep;

                auto diags = validate(rep);
                if (has_errors(diags)) {
                    out << id << ": FAIL validate: " << format_diagnostic(diags.front()) << "\n";
                    ++report.failed;
                    continue;
                }

                std::set<Ident> rel_labels;
                for (const auto & [l, cond] : rep.discrels())
                    rel_labels.insert(l);
                bool surface_ok = true;
                for (const auto & [l, position] : entry.surface.position)
                    if (! rel_labels.count(l)) {
                        out << id << ": FAIL surface position names " << to_string(l)
                            << " which is not a discourse relation\n";
                        surface_ok = false;
                    }
                if (! surface_ok) {
                    ++report.failed;
                    continue;
                }

                if (! verify_equivalence(rep)) {
                    out << id << ": FAIL search and oracle disagree\n";
                    ++report.failed;
                    continue;
                }

                auto pluggings = enumerate(rep);
                if (static_cast<int>(pluggings.size()) != entry.expected_count) {
                    out << id << ": FAIL expected " << entry.expected_count << " pluggings, got "
                        << pluggings.size() << "\n";
                    ++report.failed;
                    continue;
                }

                auto ranked = resolve(rep, entry.surface, lexicon);
                std::vector<std::string> terms;
                for (const auto & p : ranked.groups.front())
                    terms.push_back(render_term(rep, p));
                std::sort(terms.begin(), terms.end());
                auto expected = entry.expected_rank1_terms;
                std::sort(expected.begin(), expected.end());
                if (terms != expected) {
                    out << id << ": FAIL rank-1 terms differ; got";
                    for (const auto & t : terms)
                        out << " '" << t << "'";
                    out << "\n";
                    ++report.failed;
                    continue;
                }

                out << id << ": PASS pluggings=" << pluggings.size()
                    << " rank1=" << ranked.groups.front().size() << "\n";
            }
            catch (const LudError & e) {
                out << id << ": FAIL " << e.what() << "\n";
                ++report.failed;
            }
        }

        if (report.entries == 0)
            out << "corpus: warning: no entries found in " << dir.string() << "\n";
        out << "corpus: " << report.entries << " entries, " << report.failed << " failures\n";
        report.text = out.str();
        return report;
    }
}
