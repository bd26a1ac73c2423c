#pragma once

#include <lud/representation.hpp>
#include <lud/resolve.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace lud
{
    // One example sentence: a comment header block ("# key: value" lines for
    // id, transliteration, gloss, translation, surface positions and expected
    // outputs) followed by canonical LUD text.
    struct CorpusEntry
    {
        std::string id;
        std::vector<std::string> transliteration;
        std::string gloss;
        std::string translation;
        std::filesystem::path lud_file;
        SurfaceMeta surface;
        int expected_count{0};
        std::vector<std::string> expected_rank1_terms;

        std::string full_text; // entire file
        std::string lud_text;  // payload from the first non-comment line on
    };

    // Throws LudError("io") / LudError("corpus-format").
    auto load_corpus_entry(const std::filesystem::path & file) -> CorpusEntry;

    struct CorpusReport
    {
        std::string text;
        int entries{0};
        int failed{0};

        auto ok() const -> bool { return failed == 0; }
    };

    // Runs every <id>.lud entry of the directory in id order: parse, validate,
    // verify enumeration against the oracle, compare the admissible count and
    // the rank-1 term set with the entry's expectations. Uses dir/lexicon.lex
    // when present, the built-in default lexicon otherwise. The report is
    // byte-stable for identical inputs.
    auto run_corpus(const std::filesystem::path & dir) -> CorpusReport;
}
