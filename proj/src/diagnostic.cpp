#include <lud/diagnostic.hpp>

#include <algorithm>

namespace lud
{
    auto has_errors(const std::vector<Diagnostic> & diags) -> bool
    {
        return std::any_of(diags.begin(), diags.end(),
            [](const Diagnostic & d) { return d.severity == Severity::error; });
    }

    auto format_diagnostic(const Diagnostic & d) -> std::string
    {
        std::string out = d.severity == Severity::error ? "error" : "warning";
        out += "[" + d.code + "]";
        if (d.span)
            out += " line " + std::to_string(d.span->line) + ":"
                + std::to_string(d.span->col_start) + "-" + std::to_string(d.span->col_end);
        if (d.subject)
            out += " at " + to_string(*d.subject);
        out += ": " + d.message;
        return out;
    }

    LudError::LudError(std::string code, const std::string & message) :
        std::runtime_error(code + ": " + message),
        code_(std::move(code))
    {
    }
}
