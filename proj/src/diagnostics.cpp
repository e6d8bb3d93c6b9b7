// SPDX-License-Identifier: Apache-2.0
#include "oasforge/diagnostics.hpp"

#include <algorithm>
#include <cctype>

namespace oasforge {

std::string_view to_string(Severity severity) noexcept
{
    switch (severity) {
    case Severity::error: return "error";
    case Severity::warning: return "warn";
    case Severity::info: return "info";
    case Severity::debug: return "debug";
    }
    return "warn";
}

std::string Diagnostic::render() const
{
    std::string out = code;
    out += ": ";
    out += message;
    if (!file.empty()) {
        out += " (";
        out += file;
        if (line > 0) {
            out += ':';
            out += std::to_string(line);
        }
        out += ')';
    }
    return out;
}

Severity parse_severity(std::string_view name, Severity fallback) noexcept
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "error")
        return Severity::error;
    if (lower == "warn" || lower == "warning")
        return Severity::warning;
    if (lower == "info")
        return Severity::info;
    if (lower == "debug")
        return Severity::debug;
    return fallback;
}

} // namespace oasforge
