#include <lud/corpus.hpp>
#include <lud/diagnostic.hpp>
#include <lud/drs.hpp>
#include <lud/enumerate.hpp>
#include <lud/parser.hpp>
#include <lud/resolve.hpp>
#include <lud/validate.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_semantic = 1;
    constexpr int exit_usage = 2;

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw lud::LudError("io", "cannot read " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto parse_or_fail(const std::string & path, int & exit_code)
        -> std::optional<lud::LudRepresentation>
    {
        auto result = lud::parse(read_file(path));
        for (const auto & d : result.diagnostics)
            std::cerr << path << ": " << lud::format_diagnostic(d) << "\n";
        if (! result.ok()) {
            exit_code = exit_usage;
            return std::nullopt;
        }
        return std::move(result.rep);
    }

    auto validated_or_fail(const std::string & path, int & exit_code)
        -> std::optional<lud::LudRepresentation>
    {
        auto rep = parse_or_fail(path, exit_code);
        if (! rep)
            return std::nullopt;
        auto diags = lud::validate(*rep);
        for (const auto & d : diags)
            std::cerr << path << ": " << lud::format_diagnostic(d) << "\n";
        if (lud::has_errors(diags)) {
            exit_code = exit_semantic;
            return std::nullopt;
        }
        return rep;
    }

    // "# surface: l2=0 l3=3" comment header, if the file carries one
    auto embedded_surface(const std::string & text) -> std::optional<lud::SurfaceMeta>
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash == std::string::npos)
                continue;
            auto body = line.substr(hash + 1);
            auto key = body.find("surface:");
            if (key != std::string::npos)
                return lud::parse_surface_meta(body.substr(key + 8));
        }
        return std::nullopt;
    }

    auto error_exit_code(const lud::LudError & e) -> int
    {
        const auto & code = e.code();
        if (code == "syntax" || code == "lexicon-syntax" || code == "surface-meta"
            || code == "corpus-format")
            return exit_usage;
        return exit_semantic;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"LUD scope underspecification toolkit"};
    app.require_subcommand(1);

    std::string input, meta_path, lexicon_path, plugging_path;
    bool use_oracle = false, term_output = false, box_output = false;
    int max_solutions = 0;

    auto * cmd_parse = app.add_subcommand("parse", "parse a LUD file and print its canonical form");
    cmd_parse->add_option("file", input)->required();

    auto * cmd_validate = app.add_subcommand("validate", "report well-formedness diagnostics");
    cmd_validate->add_option("file", input)->required();

    auto * cmd_enumerate = app.add_subcommand("enumerate", "list all admissible pluggings");
    cmd_enumerate->add_option("file", input)->required();
    cmd_enumerate->add_flag("--oracle", use_oracle, "use the brute-force oracle route");
    cmd_enumerate->add_option("--max", max_solutions, "keep only the first N pluggings");

    auto * cmd_resolve = app.add_subcommand("resolve", "rank pluggings by the resolution heuristics");
    cmd_resolve->add_option("file", input)->required();
    cmd_resolve->add_option("--meta", meta_path, "surface position file (default: file's header)");
    cmd_resolve->add_option("--lexicon", lexicon_path, "lexicon file (default: built-in)");

    auto * cmd_render = app.add_subcommand("render", "instantiate a plugging and draw the DRS");
    cmd_render->add_option("file", input)->required();
    cmd_render->add_option("--plugging", plugging_path)->required();
    cmd_render->add_flag("--term", term_output, "print the compact scope term");
    cmd_render->add_flag("--box", box_output, "print the box diagram (default)");

    auto * cmd_corpus = app.add_subcommand("corpus", "run a corpus directory against expectations");
    cmd_corpus->add_option("dir", input)->required();

    CLI11_PARSE(app, argc, argv);

    int exit_code = exit_ok;
    try {
        if (cmd_parse->parsed()) {
            if (auto rep = parse_or_fail(input, exit_code))
                std::cout << lud::serialize(*rep);
        }
        else if (cmd_validate->parsed()) {
            auto result = lud::parse(read_file(input));
            for (const auto & d : result.diagnostics)
                std::cout << lud::format_diagnostic(d) << "\n";
            if (! result.ok())
                return exit_usage;
            auto diags = lud::validate(*result.rep);
            for (const auto & d : diags)
                std::cout << lud::format_diagnostic(d) << "\n";
            if (lud::has_errors(diags))
                return exit_semantic;
            std::cout << "ok\n";
        }
        else if (cmd_enumerate->parsed()) {
            auto rep = validated_or_fail(input, exit_code);
            if (! rep)
                return exit_code;
            lud::EnumerationOptions opts;
            if (max_solutions > 0)
                opts.max_solutions = max_solutions;
            opts.mode = use_oracle ? lud::EngineMode::oracle : lud::EngineMode::propagating;
            auto pluggings = lud::enumerate(*rep, opts);
            for (std::size_t i = 0; i < pluggings.size(); ++i) {
                if (i)
                    std::cout << "\n";
                std::cout << lud::to_text(pluggings[i]);
            }
            std::cerr << pluggings.size() << " admissible plugging(s)\n";
        }
        else if (cmd_resolve->parsed()) {
            auto rep = validated_or_fail(input, exit_code);
            if (! rep)
                return exit_code;
            std::optional<lud::SurfaceMeta> meta;
            if (! meta_path.empty())
                meta = lud::parse_surface_meta(read_file(meta_path));
            else
                meta = embedded_surface(read_file(input));
            if (! meta)
                throw lud::LudError("surface-meta",
                    "no --meta file and no '# surface:' header in " + input);
            auto lexicon =
                lexicon_path.empty() ? lud::default_lexicon() : lud::parse_lexicon(read_file(lexicon_path));
            auto ranked = lud::resolve(*rep, *meta, lexicon);
            for (const auto & w : ranked.warnings)
                std::cerr << lud::format_diagnostic(w) << "\n";
            for (std::size_t g = 0; g < ranked.groups.size(); ++g) {
                std::cout << "rank " << g + 1 << ":\n";
                for (const auto & p : ranked.groups[g]) {
                    std::cout << lud::to_text(p);
                    std::cout << "term: " << lud::render_term(*rep, p) << "\n";
                }
            }
        }
        else if (cmd_render->parsed()) {
            if (term_output && box_output) {
                std::cerr << "choose one of --term / --box\n";
                return exit_usage;
            }
            auto rep = validated_or_fail(input, exit_code);
            if (! rep)
                return exit_code;
            auto plugging = lud::plugging_from_text(read_file(plugging_path));
            if (term_output)
                std::cout << lud::render_term(*rep, plugging) << "\n";
            else
                std::cout << lud::render_box(lud::build_drs(*rep, plugging));
        }
        else if (cmd_corpus->parsed()) {
            auto report = lud::run_corpus(input);
            std::cout << report.text;
            if (! report.ok())
                return exit_semantic;
        }
    }
    catch (const lud::LudError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return error_exit_code(e);
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_semantic;
    }
    return exit_code;
}
