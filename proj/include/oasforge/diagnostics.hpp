// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace oasforge {

enum class Severity : std::uint8_t { error, warning, info, debug };

std::string_view to_string(Severity severity) noexcept;

/// A recoverable finding reported while analyzing a project.
///
/// Rendered as `CODE: message (file:line)`; the code is a stable identifier
/// meant for grepping in CI logs.
struct Diagnostic {
    std::string code;
    Severity severity = Severity::warning;
    std::string message;
    std::string file;
    int line = 0;

    std::string render() const;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

// Codes emitted by the analyzer.
namespace diag {
inline constexpr std::string_view parse_error = "PARSE_ERROR";
inline constexpr std::string_view duplicate_class = "DUPLICATE_CLASS";
inline constexpr std::string_view supertype_cycle = "SUPERTYPE_CYCLE";
inline constexpr std::string_view unresolved_constant = "UNRESOLVED_CONSTANT";
inline constexpr std::string_view profile_expression = "PROFILE_EXPRESSION";
inline constexpr std::string_view unbalanced_path = "UNBALANCED_PATH_BRACES";
inline constexpr std::string_view servlet_parameter = "SERVLET_PARAMETER";
inline constexpr std::string_view unannotated_parameter = "UNANNOTATED_PARAMETER";
inline constexpr std::string_view unsupported_parameter = "UNSUPPORTED_PARAMETER";
inline constexpr std::string_view unschematizable_parameter = "UNSCHEMATIZABLE_PARAMETER";
inline constexpr std::string_view unknown_path_variable = "UNKNOWN_PATH_VARIABLE";
inline constexpr std::string_view duplicate_parameter = "DUPLICATE_PARAMETER";
inline constexpr std::string_view unresolved_model_attribute = "UNRESOLVED_MODEL_ATTRIBUTE";
inline constexpr std::string_view computed_status = "COMPUTED_STATUS";
inline constexpr std::string_view unresolved_exception = "UNRESOLVED_EXCEPTION";
inline constexpr std::string_view unreadable_exception_status = "UNREADABLE_EXCEPTION_STATUS";
inline constexpr std::string_view duplicate_method = "DUPLICATE_METHOD";
} // namespace diag

/// Parses an `OAS_FORGE_LOG` style level name; unknown names yield `fallback`.
Severity parse_severity(std::string_view name, Severity fallback) noexcept;

} // namespace oasforge
