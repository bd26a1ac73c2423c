#pragma once

#include <lud/ident.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lud
{
    enum class Severity
    {
        error,
        warning
    };

    // Line/column region of an input text, 1-based, end inclusive.
    struct SourceSpan
    {
        int line{1};
        int col_start{1};
        int col_end{1};

        friend auto operator<=>(const SourceSpan &, const SourceSpan &) = default;
    };

    struct Diagnostic
    {
        Severity severity{Severity::error};
        std::string code;
        std::optional<SourceSpan> span; // set for parser diagnostics
        std::optional<Ident> subject;   // set for validation diagnostics tied to an ident
        std::string message;
    };

    auto has_errors(const std::vector<Diagnostic> & diags) -> bool;

    auto format_diagnostic(const Diagnostic & d) -> std::string;

    // Thrown when an operation is invoked outside its contract, e.g. enumerating
    // a representation that failed validation.
    class LudError : public std::runtime_error
    {
    public:
        LudError(std::string code, const std::string & message);

        auto code() const -> const std::string & { return code_; }

    private:
        std::string code_;
    };
}
